#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

#include "qskein/errors.hpp"

namespace qskein {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class does not canonicalize (num, den) constructor arguments.
inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Integer-coefficient Laurent polynomial in q, exponents rational.
/// Term map stores no zero coefficients; equality is structural.
class Laurent {
public:
    Laurent() = default;

    static Laurent from_int(long v);
    static Laurent from_int(const Int& v);
    static Laurent monomial(const Int& coeff, const Rat& exp);
    static Laurent q_power(const Rat& exp);

    bool is_zero() const { return t_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return t_.size() == 1; }
    const std::map<Rat, Int>& terms() const { return t_; }
    std::size_t term_count() const { return t_.size(); }

    void add_term(const Rat& exp, const Int& coeff);

    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent operator-() const;
    bool operator==(const Laurent&) const = default;

    /// Substitute q -> q^-1.
    Laurent bar() const;

    /// gcd of coefficient magnitudes; 0 for the zero polynomial.
    Int content() const;

    // pre: nonzero
    const Rat& min_exp() const;
    const Rat& max_exp() const;
    const Int& leading_coeff() const;

    Laurent shifted(const Rat& dexp) const;
    Laurent divided_by_int(const Int& k) const;

    /// Sum of coefficients.
    Int eval_at_one() const;

    /// Exact value at q = r, with r^(1/L) taken over the exponent
    /// denominator lattice. Fails if the needed root is irrational.
    Rat eval_at(const Rat& r) const;

    /// lcm of exponent denominators (1 for the zero polynomial).
    Int exponent_lattice() const;

    std::string to_string() const;

private:
    std::map<Rat, Int> t_;
};

/// gcd over Q, returned as a primitive integer polynomial with positive
/// leading coefficient and minimal exponent 0. gcd with 0 is defined as
/// the primitive part of the other argument.
Laurent laurent_gcd(const Laurent& a, const Laurent& b);

/// Exact division; throws internal_error if not divisible.
Laurent laurent_divexact(const Laurent& a, const Laurent& b);

/// Exact square root if one exists (exponents may be halved).
std::optional<Laurent> laurent_sqrt(const Laurent& a);

}  // namespace qskein
