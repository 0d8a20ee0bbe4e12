#pragma once

#include <vector>

#include "closure/ideal.hpp"

namespace closure {

namespace detail {

inline constexpr int kRadicalDepthCap = 64;

// Ring with the rest variables first and a product order (rest | u), so that
// Groebner bases behave like bases over k(u) with coefficients in k[u].
inline PolyRing contraction_ring(const PolyRing& R, const std::vector<int>& u,
                                 const std::vector<int>& rest) {
    std::vector<std::string> names;
    std::vector<std::vector<int64_t>> degs;
    for (int i : rest) {
        names.push_back(R.var_name(i));
        degs.push_back(R.degrees()[i]);
    }
    for (int i : u) {
        names.push_back(R.var_name(i));
        degs.push_back(R.degrees()[i]);
    }
    MonomialOrder ord = u.empty()
                            ? MonomialOrder::Grevlex()
                            : MonomialOrder::Product({static_cast<int>(rest.size()),
                                                      static_cast<int>(u.size())});
    return PolyRing::make(std::move(names), std::move(ord), std::move(degs));
}

// Lead coefficient of g in k[u]: the sum of terms sharing the lead's
// rest-part, divided by that rest monomial. g lives in a contraction ring
// whose first `nrest` variables are the rest block.
inline Polynomial lead_coefficient_u(const Polynomial& g, std::size_t nrest) {
    const PolyRing& W = g.ring();
    const Monomial& lead = g.lm();
    std::vector<Term> out;
    for (const auto& t : g.terms()) {
        bool same_rest = true;
        for (std::size_t i = 0; i < nrest && same_rest; ++i)
            if (t.m.exps[i] != lead.exps[i]) same_rest = false;
        if (!same_rest) continue;
        Monomial m = t.m;
        for (std::size_t i = 0; i < nrest; ++i) m.exps[i] = 0;
        out.push_back({std::move(m), t.c});
    }
    return Polynomial::from_terms(W, std::move(out));
}

inline Ideal radical_impl(const Ideal& I, const GroebnerOptions& opts, int depth) {
    if (depth > kRadicalDepthCap)
        throw CapExceededError("radical: recursion depth cap exceeded");
    const PolyRing& R = I.ring();
    const GroebnerBasis& gb = I.groebner(opts);
    if (gb.is_zero_ideal() || gb.is_unit()) return Ideal::from_groebner(gb);
    if (gb.elements.size() == 1) {
        Polynomial s = squarefree_part(gb.elements[0]);
        return Ideal::from_groebner(reduced_groebner(R, {s}, opts));
    }

    std::vector<int> u = maximal_independent_set(I);
    std::vector<bool> in_u(R.nvars(), false);
    for (int i : u) in_u[i] = true;
    std::vector<int> rest;
    for (std::size_t i = 0; i < R.nvars(); ++i)
        if (!in_u[i]) rest.push_back(static_cast<int>(i));
    if (rest.empty()) return Ideal::from_groebner(gb);  // the zero ideal case is handled above

    // Zero-dimensional over k(u): adjoin the squarefree part of each rest
    // variable's eliminant. With u empty this is the plain Seidenberg step.
    std::vector<Polynomial> bigger = gb.elements;
    for (int j : rest) {
        std::vector<int> drop;
        for (int r : rest)
            if (r != j) drop.push_back(r);
        PolyRing T = elimination_target_ring(R, drop);
        std::vector<Polynomial> ej = eliminate(gb.elements, drop, T, opts);
        if (ej.empty())
            throw InvariantViolationError("radical: missing eliminant for independent set");
        Polynomial m = ej[0];
        for (std::size_t k = 1; k < ej.size() && !m.is_constant(); ++k)
            m = poly_gcd(m, ej[k]);
        bigger.push_back(embed_by_names(squarefree_part(m), R));
    }
    Ideal Jp(R, bigger);

    // Contract from k(u)[rest] by saturating at the product of the lead
    // coefficients of a product-order basis.
    PolyRing W = contraction_ring(R, u, rest);
    GroebnerBasis wgb = reduced_groebner(W, embed_by_names(Jp.generators(), W), opts);
    if (wgb.is_unit()) return Ideal::from_groebner(reduced_groebner(R, {wgb.elements[0]}, opts));
    Polynomial h = Polynomial::constant(W, Rational(1));
    std::vector<Polynomial> seen;
    for (const auto& g : wgb.elements) {
        Polynomial lc = lead_coefficient_u(g, rest.size()).monic();
        if (lc.is_constant()) continue;
        bool dup = false;
        for (const auto& s : seen)
            if (s == lc) dup = true;
        if (dup) continue;
        seen.push_back(lc);
        h = h * lc;
    }
    if (h.is_constant()) {
        // contraction is trivial and I + (h) is the unit ideal
        return Ideal::from_groebner(reduced_groebner(R, Jp.generators(), opts));
    }
    Polynomial hred = embed_by_names(squarefree_part(h), R);
    Ideal contraction = saturate(Jp, hred, opts);
    Ideal rec = radical_impl(ideal_sum(I, Ideal::principal(hred)), opts, depth + 1);
    Ideal out = intersect(contraction, rec, opts);
    return Ideal::from_groebner(out.groebner(opts));
}

}  // namespace detail

// sqrt(I): principal ideals via the squarefree part, zero-dimensional ideals
// via Seidenberg's lemma, positive dimension by reduction to the
// zero-dimensional case over k(u) for a maximal independent set u followed
// by contraction and recursion on I + (h).
inline Ideal radical(const Ideal& I, const GroebnerOptions& opts = {}) {
    return detail::radical_impl(I, opts, 0);
}

}  // namespace closure
