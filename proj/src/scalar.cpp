#include "qskein/scalar.hpp"

#include <cctype>
#include <sstream>

namespace qskein {

Scalar::Scalar(const Laurent& num, const Laurent& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw domain_error("scalar with zero denominator");
    normalize();
}

Scalar Scalar::rational(const Rat& r) {
    return Scalar(Laurent::from_int(Int(r.get_num())),
                  Laurent::from_int(Int(r.get_den())));
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = Laurent::from_int(1);
        return;
    }
    Laurent g = laurent_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = laurent_divexact(num_, g);
        den_ = laurent_divexact(den_, g);
    }
    Int cn = num_.content(), cd = den_.content();
    Int c;
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (c != 1) {
        num_ = num_.divided_by_int(c);
        den_ = den_.divided_by_int(c);
    }
    // push the denominator's monomial factor into the numerator
    Rat m = den_.min_exp();
    if (m != 0) {
        den_ = den_.shifted(-m);
        num_ = num_.shifted(-m);
    }
    if (den_.leading_coeff() < 0) {
        den_ = -den_;
        num_ = -num_;
    }
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw domain_error("inverse of zero");
    return Scalar(den_, num_);
}

Scalar Scalar::bar() const { return Scalar(num_.bar(), den_.bar()); }

Rat Scalar::eval_at_one() const {
    Int d = den_.eval_at_one();
    if (d == 0) throw pole_error("denominator vanishes at q = 1");
    return make_rat(num_.eval_at_one(), d);
}

Rat Scalar::eval_at(const Rat& r) const {
    Rat d = den_.eval_at(r);
    if (d == 0)
        throw pole_error("denominator vanishes at q = " + Rat(r).get_str());
    return Rat(num_.eval_at(r) / d);
}

std::optional<Scalar> Scalar::sqrt() const {
    if (is_zero()) return Scalar();
    // sqrt(n/d) = sqrt(n*d)/d keeps the root integral when it exists
    auto root = laurent_sqrt(num_ * den_);
    if (root) return Scalar(*root, den_);
    auto neg = laurent_sqrt(-(num_ * den_));
    if (neg) return std::nullopt;  // square root of a negative value
    return std::nullopt;
}

std::string Scalar::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Scalar quantum_int(long n) {
    if (n == 0) return Scalar();
    if (n < 0) return -quantum_int(-n);
    Laurent p;
    for (long k = 0; k < n; ++k)
        p.add_term(make_rat(n - 1 - 2 * k, 2), Int(1));
    return Scalar(p);
}

// ---------------------------------------------------------------------------
// Parser for the canonical rendering:
//   scalar  := poly | '(' poly ')' '/' '(' poly ')'
//   poly    := term (('+'|'-') term)*   with optional leading '-'
//   term    := integer | [integer] 'q' ['^' exponent]
//   exponent:= integer | '(' integer '/' integer ')'
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool peek(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    [[noreturn]] void fail(const std::string& what) {
        throw parse_error("scalar parse error at position " +
                          std::to_string(i) + ": " + what + " in \"" + s +
                          "\"");
    }
};

Int parse_int(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
    std::size_t digits = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        ++c.i;
    if (c.i == digits) c.fail("expected integer");
    return Int(c.s.substr(start, c.i - start));
}

Rat parse_exponent(Cursor& c) {
    if (c.eat('(')) {
        Int num = parse_int(c);
        if (!c.eat('/')) c.fail("expected '/' in exponent");
        Int den = parse_int(c);
        if (!c.eat(')')) c.fail("expected ')' after exponent");
        return make_rat(num, den);
    }
    return Rat(parse_int(c));
}

Laurent parse_poly(Cursor& c) {
    Laurent p;
    bool first = true;
    while (true) {
        c.skip_ws();
        int sign = 1;
        if (c.eat('-')) {
            sign = -1;
        } else if (c.eat('+')) {
            if (first) c.fail("unexpected leading '+'");
        } else if (!first) {
            break;
        }
        Int coeff = 1;
        bool saw_digits = false;
        c.skip_ws();
        if (c.i < c.s.size() &&
            std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
            coeff = parse_int(c);
            saw_digits = true;
        }
        Rat exp(0);
        c.skip_ws();
        if (c.i < c.s.size() && c.s[c.i] == 'q') {
            ++c.i;
            exp = 1;
            if (c.eat('^')) exp = parse_exponent(c);
        } else if (!saw_digits) {
            c.fail("expected term");
        }
        p.add_term(exp, sign * coeff);
        first = false;
    }
    return p;
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
    Cursor c{text};
    if (c.peek('(')) {
        c.eat('(');
        Laurent num = parse_poly(c);
        if (!c.eat(')')) c.fail("expected ')'");
        if (!c.eat('/')) c.fail("expected '/'");
        if (!c.eat('(')) c.fail("expected '('");
        Laurent den = parse_poly(c);
        if (!c.eat(')')) c.fail("expected ')'");
        if (!c.done()) c.fail("trailing characters");
        return Scalar(num, den);
    }
    Laurent p = parse_poly(c);
    if (!c.done()) c.fail("trailing characters");
    return Scalar(p);
}

}  // namespace qskein
