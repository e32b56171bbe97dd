#include "qskein/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace qskein {

Laurent Laurent::from_int(long v) { return from_int(Int(v)); }

Laurent Laurent::from_int(const Int& v) {
    Laurent p;
    if (v != 0) p.t_[Rat(0)] = v;
    return p;
}

Laurent Laurent::monomial(const Int& coeff, const Rat& exp) {
    Laurent p;
    if (coeff != 0) p.t_[exp] = coeff;
    return p;
}

Laurent Laurent::q_power(const Rat& exp) { return monomial(Int(1), exp); }

bool Laurent::is_one() const {
    return t_.size() == 1 && t_.begin()->first == 0 && t_.begin()->second == 1;
}

void Laurent::add_term(const Rat& exp, const Int& coeff) {
    if (coeff == 0) return;
    auto it = t_.find(exp);
    if (it == t_.end()) {
        t_[exp] = coeff;
    } else {
        it->second += coeff;
        if (it->second == 0) t_.erase(it);
    }
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, c);
    return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, Int(-c));
    return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : t_) r.t_[e] = -c;
    return r;
}

Laurent Laurent::bar() const {
    Laurent r;
    for (const auto& [e, c] : t_) r.t_[Rat(-e)] = c;
    return r;
}

Int Laurent::content() const {
    Int g = 0;
    for (const auto& [e, c] : t_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

const Rat& Laurent::min_exp() const {
    if (t_.empty()) throw internal_error("min_exp of zero polynomial");
    return t_.begin()->first;
}

const Rat& Laurent::max_exp() const {
    if (t_.empty()) throw internal_error("max_exp of zero polynomial");
    return t_.rbegin()->first;
}

const Int& Laurent::leading_coeff() const {
    if (t_.empty()) throw internal_error("leading_coeff of zero polynomial");
    return t_.rbegin()->second;
}

Laurent Laurent::shifted(const Rat& dexp) const {
    Laurent r;
    for (const auto& [e, c] : t_) r.t_[e + dexp] = c;
    return r;
}

Laurent Laurent::divided_by_int(const Int& k) const {
    if (k == 0) throw internal_error("division by zero integer");
    Laurent r;
    for (const auto& [e, c] : t_) {
        if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t()))
            throw internal_error("coefficient not divisible");
        r.t_[e] = c / k;
    }
    return r;
}

Int Laurent::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : t_) s += c;
    return s;
}

Int Laurent::exponent_lattice() const {
    Int l = 1;
    for (const auto& [e, c] : t_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den().get_mpz_t());
    return l;
}

namespace {

// Exact k-th root of a rational, if it exists.
std::optional<Rat> rat_root(const Rat& r, unsigned long k) {
    if (k == 1) return r;
    if (r < 0 && k % 2 == 0) return std::nullopt;
    Int num = r.get_num(), den = r.get_den();
    Int rn, rd;
    bool exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) != 0;
    bool exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) != 0;
    if (!exact_n || !exact_d) return std::nullopt;
    return make_rat(rn, rd);
}

Rat rat_pow(const Rat& base, const Int& e) {
    if (base == 0) {
        if (e <= 0) throw pole_error("0 raised to nonpositive power");
        return Rat(0);
    }
    Rat b = e < 0 ? Rat(base.get_den(), base.get_num()) : base;
    if (e < 0) b.canonicalize();
    Int n = abs(e);
    Rat acc(1);
    Rat cur = b;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) acc *= cur;
        cur *= cur;
        n /= 2;
    }
    return acc;
}

}  // namespace

Rat Laurent::eval_at(const Rat& r) const {
    Int lattice = exponent_lattice();
    Rat root = r;
    if (lattice != 1) {
        auto rt = rat_root(r, lattice.get_ui());
        if (!rt)
            throw domain_error("no exact rational q^(1/" + lattice.get_str() +
                               ") at q = " + Rat(r).get_str());
        root = *rt;
    }
    Rat s(0);
    for (const auto& [e, c] : t_) {
        Int ie = e.get_num() * (lattice / e.get_den());
        s += Rat(c) * rat_pow(root, ie);
    }
    return s;
}

std::string Laurent::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending exponent order
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const Rat& e = it->first;
        const Int& c = it->second;
        bool neg = c < 0;
        Int mag = abs(c);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool print_coeff = (mag != 1) || e == 0;
        if (print_coeff) os << mag.get_str();
        if (e != 0) {
            if (e == 1) {
                os << "q";
            } else if (e.get_den() == 1) {
                os << "q^" << e.get_num().get_str();
            } else {
                os << "q^(" << e.get_num().get_str() << "/"
                   << e.get_den().get_str() << ")";
            }
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Dense rational polynomial helpers for gcd / exact division / square root.
// Laurent polynomials are mapped onto Z-exponent polynomials by scaling the
// exponent lattice and shifting the minimal exponent to zero.
// ---------------------------------------------------------------------------

namespace {

struct QPoly {
    std::vector<Rat> c;  // c[i] multiplies x^i; no trailing zeros

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
};

QPoly qp_rem(QPoly a, const QPoly& b) {
    while (!a.zero() && a.deg() >= b.deg()) {
        Rat f = a.c.back() / b.c.back();
        int shift = a.deg() - b.deg();
        for (int i = 0; i <= b.deg(); ++i) a.c[i + shift] -= f * b.c[i];
        a.trim();
    }
    return a;
}

bool qp_divmod(const QPoly& a, const QPoly& b, QPoly& quot) {
    QPoly r = a;
    quot.c.assign(a.zero() || a.deg() < b.deg() ? 0 : a.deg() - b.deg() + 1,
                  Rat(0));
    while (!r.zero() && r.deg() >= b.deg()) {
        Rat f = r.c.back() / b.c.back();
        int shift = r.deg() - b.deg();
        quot.c[shift] = f;
        for (int i = 0; i <= b.deg(); ++i) r.c[i + shift] -= f * b.c[i];
        r.trim();
    }
    quot.trim();
    return r.zero();
}

QPoly qp_gcd(QPoly a, QPoly b) {
    while (!b.zero()) {
        QPoly r = qp_rem(a, b);
        // keep coefficients small: make monic
        if (!r.zero()) {
            Rat lead = r.c.back();
            for (auto& x : r.c) x /= lead;
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

struct Lattice {
    Int scale;  // exponent multiplier
    Rat shift;  // subtracted before scaling
};

QPoly to_dense(const Laurent& p, const Lattice& lat) {
    QPoly out;
    if (p.is_zero()) return out;
    Rat span = (p.max_exp() - lat.shift) * Rat(lat.scale);
    if (span.get_den() != 1) throw internal_error("lattice scale mismatch");
    out.c.assign(span.get_num().get_ui() + 1, Rat(0));
    for (const auto& [e, c] : p.terms()) {
        Rat idx = (e - lat.shift) * Rat(lat.scale);
        if (idx.get_den() != 1 || idx < 0)
            throw internal_error("lattice scale mismatch");
        out.c[idx.get_num().get_ui()] = Rat(c);
    }
    return out;
}

Laurent from_dense(const QPoly& p, const Lattice& lat) {
    // Clears rational content: result is primitive integer with the sign of
    // the leading coefficient preserved.
    Laurent out;
    if (p.zero()) return out;
    Int den_lcm = 1;
    for (const auto& x : p.c)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                x.get_den().get_mpz_t());
    Int num_gcd = 0;
    for (const auto& x : p.c) {
        Int scaled = x.get_num() * (den_lcm / x.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i] == 0) continue;
        Int coeff = p.c[i].get_num() * (den_lcm / p.c[i].get_den()) / num_gcd;
        out.add_term(Rat(long(i)) / Rat(lat.scale) + lat.shift, coeff);
    }
    return out;
}

Lattice common_lattice(const Laurent& a, const Laurent& b) {
    Int l = a.exponent_lattice();
    Int lb = b.exponent_lattice();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), lb.get_mpz_t());
    Rat shift(0);
    if (!a.is_zero() && !b.is_zero())
        shift = std::min(a.min_exp(), b.min_exp());
    else if (!a.is_zero())
        shift = a.min_exp();
    else if (!b.is_zero())
        shift = b.min_exp();
    return Lattice{l, shift};
}

}  // namespace

Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
    auto primitive = [](const Laurent& p) {
        if (p.is_zero()) return p;
        Laurent q = p.shifted(-p.min_exp()).divided_by_int(p.content());
        if (q.leading_coeff() < 0) q = -q;
        return q;
    };
    if (a.is_zero()) return primitive(b);
    if (b.is_zero()) return primitive(a);
    Lattice lat = common_lattice(a, b);
    QPoly g = qp_gcd(to_dense(a, lat), to_dense(b, lat));
    Lattice out_lat{lat.scale, Rat(0)};
    Laurent gl = from_dense(g, out_lat);
    Laurent r = primitive(gl);
    return r;
}

Laurent laurent_divexact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw internal_error("division by zero polynomial");
    if (a.is_zero()) return Laurent();
    // Shift each factor to start at exponent 0; the quotient exponent is
    // corrected by the difference of the shifts afterwards.
    Int scale = a.exponent_lattice();
    Int lb = b.exponent_lattice();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), lb.get_mpz_t());
    QPoly quot;
    if (!qp_divmod(to_dense(a, Lattice{scale, a.min_exp()}),
                   to_dense(b, Lattice{scale, b.min_exp()}), quot))
        throw internal_error("laurent_divexact: not divisible");
    Rat shift = a.min_exp() - b.min_exp();
    Laurent out;
    for (std::size_t i = 0; i < quot.c.size(); ++i) {
        if (quot.c[i] == 0) continue;
        if (quot.c[i].get_den() != 1)
            throw internal_error("laurent_divexact: non-integer quotient");
        out.add_term(Rat(long(i)) / Rat(scale) + shift,
                     Int(quot.c[i].get_num()));
    }
    return out;
}

std::optional<Laurent> laurent_sqrt(const Laurent& a) {
    if (a.is_zero()) return Laurent();
    // factor out q^min so the dense part starts at x^0
    Rat m = a.min_exp();
    Laurent body = a.shifted(-m);
    Lattice lat{body.exponent_lattice(), Rat(0)};
    QPoly p = to_dense(body, lat);
    if (p.deg() % 2 != 0) return std::nullopt;
    int hd = p.deg() / 2;
    QPoly root;
    root.c.assign(hd + 1, Rat(0));
    // long square root from the top coefficient down
    if (p.c.back() < 0) return std::nullopt;
    Int lead_num, lead_den;
    if (mpz_root(lead_num.get_mpz_t(), p.c.back().get_num().get_mpz_t(), 2) ==
        0)
        return std::nullopt;
    if (mpz_root(lead_den.get_mpz_t(), p.c.back().get_den().get_mpz_t(), 2) ==
        0)
        return std::nullopt;
    root.c[hd] = make_rat(lead_num, lead_den);
    for (int k = hd - 1; k >= 0; --k) {
        // coefficient of x^(k+hd) in root^2: 2*root[hd]*root[k] plus the
        // ordered pairs with both indices in (k, hd]
        Rat rem = (k + hd <= p.deg()) ? p.c[k + hd] : Rat(0);
        for (int i = k + 1; i <= hd; ++i) {
            int j = k + hd - i;
            if (j < k + 1 || j > hd) continue;
            rem -= root.c[i] * root.c[j];
        }
        root.c[k] = rem / (2 * root.c[hd]);
    }
    // verify
    QPoly sq;
    sq.c.assign(p.c.size(), Rat(0));
    for (int i = 0; i <= hd; ++i)
        for (int j = 0; j <= hd; ++j)
            if (root.c[i] != 0 && root.c[j] != 0) sq.c[i + j] += root.c[i] * root.c[j];
    sq.trim();
    QPoly diff = p;
    for (std::size_t i = 0; i < diff.c.size(); ++i) {
        if (i < sq.c.size()) diff.c[i] -= sq.c[i];
    }
    diff.trim();
    if (!diff.zero()) return std::nullopt;
    Laurent out;
    for (std::size_t i = 0; i < root.c.size(); ++i) {
        if (root.c[i] == 0) continue;
        if (root.c[i].get_den() != 1) return std::nullopt;
        out.add_term(Rat(long(i)) / Rat(lat.scale) + m / 2,
                     Int(root.c[i].get_num()));
    }
    return out;
}

}  // namespace qskein
