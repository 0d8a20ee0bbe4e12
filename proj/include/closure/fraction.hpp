#pragma once

#include <vector>

#include "closure/ideal.hpp"

namespace closure {

// Element of the total ring of fractions, stored reduced: gcd(num, den)
// constant and den monic.
struct Fraction {
    Polynomial num;
    Polynomial den;

    bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
};

inline Fraction reduce_fraction(Polynomial num, Polynomial den) {
    require_same_ring(num.ring(), den.ring());
    if (den.is_zero()) throw DomainError("fraction with zero denominator");
    if (num.is_zero())
        return {Polynomial::zero(num.ring()),
                Polynomial::constant(num.ring(), Rational(1))};
    Polynomial g = poly_gcd(num, den);
    if (!g.is_constant()) {
        num = *exact_divide(num, g);
        den = *exact_divide(den, g);
    }
    Rational scale = 1 / den.lc();
    return {num * scale, den * scale};
}

inline Fraction make_fraction(const Polynomial& num, const Polynomial& den) {
    return reduce_fraction(num, den);
}

inline Fraction trivial_fraction(const Polynomial& p) {
    return {p, Polynomial::constant(p.ring(), Rational(1))};
}

// Equality in the total fraction ring of ring/I: cross-multiplication
// modulo the defining ideal.
inline bool cross_equal(const Fraction& a, const Fraction& b, const Ideal& defining) {
    return contains(defining, a.num * b.den - b.num * a.den);
}

inline Fraction fraction_add(const Fraction& a, const Fraction& b) {
    return reduce_fraction(a.num * b.den + b.num * a.den, a.den * b.den);
}

inline Fraction fraction_mul(const Fraction& a, const Fraction& b) {
    return reduce_fraction(a.num * b.num, a.den * b.den);
}

// Evaluate f (in some presentation ring) at one fraction per variable; the
// fractions live in a common base ring, which is also the result's ring.
inline Fraction evaluate_at_fractions(const Polynomial& f,
                                      const std::vector<Fraction>& images) {
    if (images.size() != f.ring().nvars())
        throw DomainError("need one fraction per variable");
    const PolyRing& base = images.empty() ? f.ring() : images.front().num.ring();
    Fraction acc = trivial_fraction(Polynomial::zero(base));
    std::vector<std::vector<Polynomial>> num_pow(images.size()), den_pow(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        num_pow[i].push_back(Polynomial::constant(base, Rational(1)));
        den_pow[i].push_back(Polynomial::constant(base, Rational(1)));
    }
    for (const auto& t : f.terms()) {
        Polynomial n = Polynomial::constant(base, t.c);
        Polynomial d = Polynomial::constant(base, Rational(1));
        for (std::size_t i = 0; i < images.size(); ++i) {
            int32_t e = t.m.exps[i];
            if (e == 0) continue;
            while (static_cast<int32_t>(num_pow[i].size()) <= e) {
                num_pow[i].push_back(num_pow[i].back() * images[i].num);
                den_pow[i].push_back(den_pow[i].back() * images[i].den);
            }
            n = n * num_pow[i][e];
            d = d * den_pow[i][e];
        }
        acc = fraction_add(acc, reduce_fraction(std::move(n), std::move(d)));
    }
    return acc;
}

}  // namespace closure
