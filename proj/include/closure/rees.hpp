#pragma once

#include <string>
#include <vector>

#include "closure/normalize.hpp"

namespace closure {

// Presentation of the Rees algebra R[tI]: a bigraded polynomial ring on the
// base variables (degree (d, 0)) and one Y per generator (degree (deg g, 1))
// with the defining ideal obtained by eliminating t from (Y_i - t g_i).
struct ReesPresentation {
    PolyRing base;
    PolyRing ambient;
    Ideal defining;
    std::vector<Polynomial> generator_images;  // g_i, in the base ring
    std::vector<std::string> y_names;
};

namespace detail {

inline int64_t weighted_total_degree(const Polynomial& f, std::size_t comp) {
    int64_t d = 0;
    for (const auto& t : f.terms())
        d = std::max(d, f.ring().weighted_degree(t.m, comp));
    return d;
}

}  // namespace detail

inline ReesPresentation blowup(const Ideal& I, const GroebnerOptions& opts = {}) {
    const PolyRing& R = I.ring();
    if (is_zero_ideal(I)) throw DomainError("blowup of the zero ideal");
    const auto& gens = I.generators();
    const std::size_t n = gens.size();

    std::string tname = detail::fresh_name(R, "@t");
    std::vector<std::string> ynames;
    {
        long next = 1;
        while (ynames.size() < n) {
            std::string cand = "Y" + std::to_string(next++);
            if (R.var_index(cand) < 0) ynames.push_back(cand);
        }
    }

    // elimination ring k[t, x_1.., Y_1..] with weights t:1, x_j: deg x_j,
    // Y_i: 1 + deg g_i
    std::vector<std::string> evars = {tname};
    std::vector<std::vector<int64_t>> edegs = {{1}};
    for (std::size_t j = 0; j < R.nvars(); ++j) {
        evars.push_back(R.var_name(j));
        edegs.push_back({R.degrees()[j][0]});
    }
    std::vector<int64_t> gdeg(n);
    for (std::size_t i = 0; i < n; ++i) {
        gdeg[i] = detail::weighted_total_degree(gens[i], 0);
        evars.push_back(ynames[i]);
        edegs.push_back({1 + gdeg[i]});
    }
    PolyRing E = PolyRing::make(std::move(evars), MonomialOrder::Eliminate(1), std::move(edegs));

    Polynomial t = Polynomial::variable(E, 0);
    std::vector<Polynomial> rels;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial Yi = Polynomial::variable(E, 1 + R.nvars() + i);
        rels.push_back(Yi - t * embed_by_names(gens[i], E));
    }

    // bigraded target ring with a product order (base block, Y block)
    std::vector<std::string> bvars = R.vars();
    std::vector<std::vector<int64_t>> bdegs;
    for (std::size_t j = 0; j < R.nvars(); ++j) bdegs.push_back({R.degrees()[j][0], 0});
    for (std::size_t i = 0; i < n; ++i) {
        bvars.push_back(ynames[i]);
        bdegs.push_back({gdeg[i], 1});
    }
    PolyRing Sb = PolyRing::make(std::move(bvars),
                                 MonomialOrder::Product({static_cast<int>(R.nvars()),
                                                         static_cast<int>(n)}),
                                 std::move(bdegs));

    auto kept = eliminate(rels, {0}, Sb, opts);
    Ideal defining = minimal_generators(Ideal(Sb, kept));
    for (const auto& g : defining.generators())
        if (!g.component_degree(1))
            throw InvariantViolationError("Rees ideal generator not homogeneous in t-degree");
    return ReesPresentation{R, Sb, std::move(defining), gens, std::move(ynames)};
}

// Integral closure of an ideal: normalize the Rees algebra, keep the
// fraction generators of t-degree one, lift them to the base ring through
// Y_i -> g_i, and adjoin.
inline Ideal ideal_integral_closure(const Ideal& I, const NormalizeOptions& opts = {}) {
    const PolyRing& R = I.ring();
    ReesPresentation B = blowup(I, opts.gb);

    NormalizeOptions nopts = opts;
    nopts.assume_reduced = true;  // R[tI] is a subring of R[t], hence a domain

    QuotientRing A(B.ambient, B.defining);
    NormalizationResult res = normalize_ring(A, nopts);

    std::vector<Polynomial> images;
    for (std::size_t j = 0; j < R.nvars(); ++j) images.push_back(Polynomial::variable(R, j));
    for (const auto& g : B.generator_images) images.push_back(g);
    RingMap lift(B.ambient, R, std::move(images));

    std::vector<Polynomial> newgens = I.generators();
    for (const auto& comp : res.components) {
        for (std::size_t i = 0; i < comp.fresh_vars.size(); ++i) {
            const Fraction& fr = comp.fractions[i];
            auto tn = fr.num.component_degree(1);
            auto td = fr.den.component_degree(1);
            if (!tn || !td)
                throw InvariantViolationError("normalization fraction lost t-homogeneity");
            if (*tn - *td != 1) continue;
            Polynomial N = lift.apply(fr.num);
            Polynomial D = lift.apply(fr.den);
            if (D.is_zero())
                throw InvariantViolationError("fraction denominator lifts to zero");
            auto q = exact_divide(N, D);
            if (!q)
                throw InvariantViolationError("degree-one fraction does not lift to the base ring");
            if (!q->is_zero()) newgens.push_back(std::move(*q));
        }
    }
    return minimal_generators(Ideal(R, newgens));
}

}  // namespace closure
