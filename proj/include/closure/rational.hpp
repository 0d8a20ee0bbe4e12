#pragma once

#include <gmpxx.h>

#include <string>

#include "closure/errors.hpp"

namespace closure {

// Exact rational coefficients. mpq_class keeps values canonical: lowest
// terms, positive denominator, zero stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class does not canonicalize two-argument construction; this does.
inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw DomainError("invalid rational literal: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

inline Rational rational_pow(const Rational& q, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    return r;
}

}  // namespace closure
