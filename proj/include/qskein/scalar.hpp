#pragma once

#include <optional>
#include <string>

#include "qskein/laurent.hpp"

namespace qskein {

/// Element of Q(q^(1/D)): a quotient of integer-coefficient Laurent
/// polynomials, kept normalized. Normal form: gcd(num, den) = 1 over the
/// rationals, gcd(content(num), content(den)) = 1, den has minimal
/// exponent 0 and positive leading coefficient.
class Scalar {
public:
    Scalar() : num_(), den_(Laurent::from_int(1)) {}
    Scalar(long v) : num_(Laurent::from_int(v)), den_(Laurent::from_int(1)) {}
    Scalar(const Laurent& p) : num_(p), den_(Laurent::from_int(1)) {}
    Scalar(const Laurent& num, const Laurent& den);

    static Scalar q_power(const Rat& exp) {
        return Scalar(Laurent::q_power(exp));
    }
    static Scalar q() { return q_power(Rat(1)); }
    static Scalar rational(const Rat& r);

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    bool operator==(const Scalar&) const = default;

    /// Multiplicative inverse; throws domain_error on zero.
    Scalar inv() const;

    /// The Galois symmetry q -> q^-1.
    Scalar bar() const;

    /// Exact rational value at q = 1; throws pole_error if the normalized
    /// denominator vanishes there.
    Rat eval_at_one() const;

    /// Exact rational value at q = r (roots of r taken exactly).
    Rat eval_at(const Rat& r) const;

    /// True iff den is a single term, i.e. the value is a Laurent
    /// polynomial up to a monomial and rational factor.
    bool is_unit_denominator() const { return den_.is_monomial(); }

    /// Exact square root within the field, if one exists.
    std::optional<Scalar> sqrt() const;

    std::string to_string() const;
    static Scalar parse(const std::string& text);

private:
    Laurent num_, den_;
    void normalize();
};

/// [n] = (q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2)), fully expanded.
Scalar quantum_int(long n);

}  // namespace qskein
