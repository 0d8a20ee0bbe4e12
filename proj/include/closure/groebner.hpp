#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "closure/polynomial.hpp"

namespace closure {

// ---------------------------------------------------------------------------
// Cross-ring transport
// ---------------------------------------------------------------------------

// Re-express f in ring r2, matching variables by name. Fails if f uses a
// variable r2 does not have.
inline Polynomial embed_by_names(const Polynomial& f, const PolyRing& r2) {
    const PolyRing& r1 = f.ring();
    if (r1.same(r2)) return f;
    std::vector<int> map(r1.nvars());
    for (std::size_t i = 0; i < r1.nvars(); ++i) map[i] = r2.var_index(r1.var_name(i));
    std::vector<Term> out;
    out.reserve(f.nterms());
    for (const auto& t : f.terms()) {
        Monomial m(r2.nvars());
        for (std::size_t i = 0; i < r1.nvars(); ++i) {
            if (t.m.exps[i] == 0) continue;
            if (map[i] < 0)
                throw RingMismatchError("variable " + r1.var_name(i) + " not present in target ring");
            m.exps[map[i]] = t.m.exps[i];
        }
        out.push_back({std::move(m), t.c});
    }
    return Polynomial::from_terms(r2, std::move(out));
}

inline std::vector<Polynomial> embed_by_names(const std::vector<Polynomial>& fs,
                                              const PolyRing& r2) {
    std::vector<Polynomial> out;
    out.reserve(fs.size());
    for (const auto& f : fs) out.push_back(embed_by_names(f, r2));
    return out;
}

// ---------------------------------------------------------------------------
// Options
// ---------------------------------------------------------------------------

struct GroebnerOptions {
    std::optional<int64_t> degree_cap;  // abort if a basis element exceeds this
};

namespace detail {
inline std::optional<int64_t>& tls_degree_cap() {
    thread_local std::optional<int64_t> cap;
    return cap;
}
}  // namespace detail

// Scoped default degree cap consulted by every basis computation on this
// thread that is not given an explicit option.
class ScopedDegreeCap {
  public:
    explicit ScopedDegreeCap(std::optional<int64_t> cap)
        : prev_(detail::tls_degree_cap()) {
        detail::tls_degree_cap() = cap;
    }
    ~ScopedDegreeCap() { detail::tls_degree_cap() = prev_; }

  private:
    std::optional<int64_t> prev_;
};

inline std::optional<int64_t> effective_degree_cap(const GroebnerOptions& opts) {
    return opts.degree_cap ? opts.degree_cap : detail::tls_degree_cap();
}

// ---------------------------------------------------------------------------
// Division
// ---------------------------------------------------------------------------

struct LiftRecord {
    Polynomial remainder;
    std::vector<Polynomial> quotients;  // one per divisor
};

// Multivariate division, divisors tried in list order. The remainder has no
// term divisible by any divisor's lead monomial, and
// input = sum_i quotients[i]*divisors[i] + remainder.
inline LiftRecord normal_form_with_lift(const Polynomial& f,
                                        const std::vector<Polynomial>& divisors) {
    const PolyRing& R = f.ring();
    for (const auto& d : divisors) require_same_ring(R, d.ring());
    LiftRecord rec{Polynomial::zero(R), {}};
    rec.quotients.assign(divisors.size(), Polynomial::zero(R));
    std::vector<Term> rem;
    Polynomial p = f;
    while (!p.is_zero()) {
        const Term& t = p.lt();
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const Polynomial& d = divisors[i];
            if (d.is_zero() || !monomial_divides(d.lm(), t.m)) continue;
            Rational q = t.c / d.lc();
            Monomial qm = monomial_div(t.m, d.lm());
            rec.quotients[i] = rec.quotients[i] + Polynomial::term(R, qm, q);
            p = p.add_scaled(-q, qm, d);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.push_back(t);
            p = p.drop_lead();
        }
    }
    rec.remainder = Polynomial::from_sorted_terms(R, std::move(rem));
    return rec;
}

// Division without quotient tracking.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
    const PolyRing& R = f.ring();
    std::vector<Term> rem;
    Polynomial p = f;
    while (!p.is_zero()) {
        const Term& t = p.lt();
        bool reduced = false;
        for (const Polynomial& d : divisors) {
            if (d.is_zero() || !monomial_divides(d.lm(), t.m)) continue;
            Rational q = t.c / d.lc();
            p = p.add_scaled(-q, monomial_div(t.m, d.lm()), d);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.push_back(t);
            p = p.drop_lead();
        }
    }
    return Polynomial::from_sorted_terms(R, std::move(rem));
}

inline Polynomial spoly(const Polynomial& f, const Polynomial& g) {
    const Monomial L = monomial_lcm(f.lm(), g.lm());
    Polynomial s = Polynomial::zero(f.ring());
    s = s.add_scaled(1 / f.lc(), monomial_div(L, f.lm()), f);
    s = s.add_scaled(-(1 / g.lc()), monomial_div(L, g.lm()), g);
    return s;
}

// ---------------------------------------------------------------------------
// Buchberger
// ---------------------------------------------------------------------------

struct GroebnerBasis {
    PolyRing ring;
    std::vector<Polynomial> elements;  // monic, inter-reduced, ascending leads

    bool is_unit() const {
        return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
    }
    bool is_zero_ideal() const { return elements.empty(); }
};

namespace detail {

struct Pair {
    std::size_t i, j;  // i < j
    Monomial lcm;
    bool alive = true;
};

// Pop index of the alive pair minimal under (lcm in ring order, i, j).
inline std::size_t pop_best_pair(const PolyRing& R, std::vector<Pair>& pairs) {
    std::size_t best = pairs.size();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (!pairs[k].alive) continue;
        if (best == pairs.size()) {
            best = k;
            continue;
        }
        int c = R.compare(pairs[k].lcm, pairs[best].lcm);
        if (c < 0 || (c == 0 && (pairs[k].i < pairs[best].i ||
                                 (pairs[k].i == pairs[best].i && pairs[k].j < pairs[best].j))))
            best = k;
    }
    return best;
}

// Gebauer-Moeller pair update for the element with index t.
inline void install_pairs(const PolyRing& R, const std::vector<Polynomial>& G,
                          std::vector<Pair>& pairs, std::size_t t, bool use_coprime) {
    const Monomial& lt = G[t].lm();
    std::vector<Pair> fresh;
    fresh.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
        if (G[i].is_zero()) continue;
        fresh.push_back({i, t, monomial_lcm(G[i].lm(), lt), true});
    }
    // M rule: drop (i,t) when lcm(j,t) properly divides lcm(i,t)
    for (auto& p : fresh) {
        for (const auto& q : fresh) {
            if (&p == &q || !q.alive) continue;
            if (q.lcm != p.lcm && monomial_divides(q.lcm, p.lcm)) {
                p.alive = false;
                break;
            }
        }
    }
    // F rule: among equal lcms keep one, preferring a coprime pair
    for (std::size_t a = 0; a < fresh.size(); ++a) {
        if (!fresh[a].alive) continue;
        for (std::size_t b = a + 1; b < fresh.size(); ++b) {
            if (!fresh[b].alive || fresh[b].lcm != fresh[a].lcm) continue;
            bool b_coprime = use_coprime && monomial_coprime(G[fresh[b].i].lm(), lt);
            if (b_coprime) {
                fresh[a].alive = false;
            } else {
                fresh[b].alive = false;
            }
            if (!fresh[a].alive) break;
        }
    }
    // B rule: coprime leads reduce to zero
    if (use_coprime)
        for (auto& p : fresh)
            if (p.alive && monomial_coprime(G[p.i].lm(), lt)) p.alive = false;
    // Prune old pairs strictly covered by the new element
    for (auto& p : pairs) {
        if (!p.alive) continue;
        if (!monomial_divides(lt, p.lcm)) continue;
        if (monomial_lcm(G[p.i].lm(), lt) != p.lcm && monomial_lcm(G[p.j].lm(), lt) != p.lcm)
            p.alive = false;
    }
    for (auto& p : fresh)
        if (p.alive) pairs.push_back(std::move(p));
}

inline void check_cap(const Polynomial& p, const std::optional<int64_t>& cap) {
    if (cap && p.total_degree() > *cap)
        throw CapExceededError("degree cap " + std::to_string(*cap) +
                               " exceeded during basis computation");
}

}  // namespace detail

// Reduced Groebner basis of <gens> under the ring's order: canonical for the
// ideal. Pair selection is the normal strategy (minimal lcm, ties by index).
inline GroebnerBasis reduced_groebner(const PolyRing& R, const std::vector<Polynomial>& gens,
                                      const GroebnerOptions& opts = {}) {
    auto cap = effective_degree_cap(opts);
    std::vector<Polynomial> G;
    for (const auto& g : gens) {
        require_same_ring(R, g.ring());
        if (!g.is_zero()) G.push_back(g.primitive());
    }
    std::vector<detail::Pair> pairs;
    for (std::size_t t = 0; t < G.size(); ++t) detail::install_pairs(R, G, pairs, t, true);
    while (true) {
        std::size_t k = detail::pop_best_pair(R, pairs);
        if (k == pairs.size()) break;
        detail::Pair p = pairs[k];
        pairs[k].alive = false;
        Polynomial s = spoly(G[p.i], G[p.j]);
        Polynomial r = normal_form(s, G);
        if (r.is_zero()) continue;
        detail::check_cap(r, cap);
        G.push_back(r.primitive());
        detail::install_pairs(R, G, pairs, G.size() - 1, true);
    }
    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            if (!monomial_divides(G[j].lm(), G[i].lm())) continue;
            if (G[j].lm() != G[i].lm() || j < i) redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    // tail-reduce and normalize
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = normal_form(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        int c = R.compare(a.lm(), b.lm());
        return c < 0;
    });
    return GroebnerBasis{R, std::move(reduced)};
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    require_same_ring(f.ring(), gb.ring);
    return normal_form(f, gb.elements);
}

// ---------------------------------------------------------------------------
// Elimination
// ---------------------------------------------------------------------------

// Ring on the kept variables (original relative order, degrees inherited).
inline PolyRing elimination_target_ring(const PolyRing& R, const std::vector<int>& drop,
                                        MonomialOrder order = MonomialOrder::Grevlex()) {
    std::vector<bool> dropped(R.nvars(), false);
    for (int i : drop) {
        if (i < 0 || static_cast<std::size_t>(i) >= R.nvars())
            throw DomainError("eliminate: variable index out of range");
        dropped[i] = true;
    }
    std::vector<std::string> keep_names;
    std::vector<std::vector<int64_t>> keep_degs;
    for (std::size_t i = 0; i < R.nvars(); ++i) {
        if (dropped[i]) continue;
        keep_names.push_back(R.var_name(i));
        keep_degs.push_back(R.degrees()[i]);
    }
    return PolyRing::make(std::move(keep_names), std::move(order), std::move(keep_degs));
}

// Generators of <gens> ∩ k[kept variables], expressed in target (a ring on
// exactly the kept variable names). Computed with a block order that puts
// the dropped variables first.
inline std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens,
                                         const std::vector<int>& drop, const PolyRing& target,
                                         const GroebnerOptions& opts = {}) {
    if (gens.empty()) return {};
    const PolyRing& R = gens.front().ring();
    std::vector<bool> dropped(R.nvars(), false);
    for (int i : drop) {
        if (i < 0 || static_cast<std::size_t>(i) >= R.nvars())
            throw DomainError("eliminate: variable index out of range");
        if (dropped[i]) throw DomainError("eliminate: duplicate variable in drop set");
        dropped[i] = true;
    }
    std::vector<std::string> names;
    std::vector<std::vector<int64_t>> degs;
    for (std::size_t i = 0; i < R.nvars(); ++i)
        if (dropped[i]) {
            names.push_back(R.var_name(i));
            degs.push_back(R.degrees()[i]);
        }
    std::size_t k = names.size();
    for (std::size_t i = 0; i < R.nvars(); ++i)
        if (!dropped[i]) {
            names.push_back(R.var_name(i));
            degs.push_back(R.degrees()[i]);
        }
    PolyRing W = PolyRing::make(std::move(names), MonomialOrder::Eliminate(static_cast<int>(k)),
                                std::move(degs));
    GroebnerBasis gb = reduced_groebner(W, embed_by_names(gens, W), opts);
    std::vector<Polynomial> kept;
    for (const auto& g : gb.elements) {
        bool free_of_dropped = true;
        for (const auto& t : g.terms()) {
            for (std::size_t i = 0; i < k && free_of_dropped; ++i)
                if (t.m.exps[i] != 0) free_of_dropped = false;
            if (!free_of_dropped) break;
        }
        if (free_of_dropped) kept.push_back(embed_by_names(g, target));
    }
    return reduced_groebner(target, kept, opts).elements;
}

// ---------------------------------------------------------------------------
// Module layer: position-over-term Groebner bases, syzygies, tracked lifts
// ---------------------------------------------------------------------------

namespace modgb {

struct MTerm {
    int32_t comp;
    Monomial m;
    Rational c;
};

// Position-over-term: lower component index wins, ring order inside.
inline int compare_keys(const PolyRing& R, int32_t c1, const Monomial& m1, int32_t c2,
                        const Monomial& m2) {
    if (c1 != c2) return c1 < c2 ? 1 : -1;
    return R.compare(m1, m2);
}

class ModPoly {
  public:
    ModPoly() = default;
    ModPoly(PolyRing r, std::vector<MTerm> t) : ring_(std::move(r)), terms_(std::move(t)) {}

    static ModPoly zero(const PolyRing& r) { return ModPoly(r, {}); }

    static ModPoly from_terms(const PolyRing& r, std::vector<MTerm> terms) {
        std::sort(terms.begin(), terms.end(), [&](const MTerm& a, const MTerm& b) {
            return compare_keys(r, a.comp, a.m, b.comp, b.m) > 0;
        });
        std::size_t w = 0;
        for (std::size_t i = 0; i < terms.size();) {
            MTerm t = terms[i];
            std::size_t j = i + 1;
            while (j < terms.size() && terms[j].comp == t.comp && terms[j].m == t.m)
                t.c += terms[j++].c;
            if (!closure::is_zero(t.c)) terms[w++] = std::move(t);
            i = j;
        }
        terms.resize(w);
        return ModPoly(r, std::move(terms));
    }

    const PolyRing& ring() const { return ring_; }
    const std::vector<MTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const MTerm& lt() const {
        if (terms_.empty()) throw DomainError("leading term of zero module element");
        return terms_.front();
    }

    // this + c * x^m * g
    ModPoly add_scaled(const Rational& c, const Monomial& m, const ModPoly& g) const {
        if (closure::is_zero(c) || g.is_zero()) return *this;
        std::vector<MTerm> out;
        out.reserve(terms_.size() + g.terms_.size());
        std::size_t i = 0, j = 0;
        const bool shift = !m.is_one();
        MTerm tb;
        bool tb_valid = false;
        while (i < terms_.size() || j < g.terms_.size()) {
            if (j < g.terms_.size() && !tb_valid) {
                tb = g.terms_[j];
                if (shift) tb.m = monomial_mul(tb.m, m);
                tb.c *= c;
                tb_valid = true;
            }
            if (i >= terms_.size()) {
                out.push_back(std::move(tb));
                tb_valid = false;
                ++j;
            } else if (j >= g.terms_.size()) {
                out.push_back(terms_[i++]);
            } else {
                int cmp = compare_keys(ring_, terms_[i].comp, terms_[i].m, tb.comp, tb.m);
                if (cmp > 0) {
                    out.push_back(terms_[i++]);
                } else if (cmp < 0) {
                    out.push_back(std::move(tb));
                    tb_valid = false;
                    ++j;
                } else {
                    Rational s = terms_[i].c + tb.c;
                    if (!closure::is_zero(s)) out.push_back({terms_[i].comp, terms_[i].m, std::move(s)});
                    ++i;
                    ++j;
                    tb_valid = false;
                }
            }
        }
        return ModPoly(ring_, std::move(out));
    }

    ModPoly drop_lead() const {
        return ModPoly(ring_, std::vector<MTerm>(terms_.begin() + 1, terms_.end()));
    }

    ModPoly monic() const {
        if (is_zero()) return *this;
        ModPoly r = *this;
        Rational inv = 1 / terms_.front().c;
        for (auto& t : r.terms_) t.c *= inv;
        return r;
    }

    // Extract one component as a scalar polynomial.
    Polynomial component(int32_t comp) const {
        std::vector<Term> t;
        for (const auto& x : terms_)
            if (x.comp == comp) t.push_back({x.m, x.c});
        return Polynomial::from_terms(ring_, std::move(t));
    }

  private:
    PolyRing ring_;
    std::vector<MTerm> terms_;
};

inline ModPoly normal_form(const ModPoly& f, const std::vector<ModPoly>& basis) {
    std::vector<MTerm> rem;
    ModPoly p = f;
    while (!p.is_zero()) {
        const MTerm& t = p.lt();
        bool reduced = false;
        for (const ModPoly& d : basis) {
            if (d.is_zero()) continue;
            const MTerm& dl = d.lt();
            if (dl.comp != t.comp || !monomial_divides(dl.m, t.m)) continue;
            Rational q = t.c / dl.c;
            p = p.add_scaled(-q, monomial_div(t.m, dl.m), d);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.push_back(t);
            p = p.drop_lead();
        }
    }
    // remainder terms were collected in strictly descending key order
    return ModPoly(f.ring(), std::move(rem));
}

// Buchberger over a free module with the POT order. The coprime criterion is
// not valid for modules; the chain criterion is.
inline std::vector<ModPoly> module_groebner(const PolyRing& R, std::vector<ModPoly> rows,
                                            const GroebnerOptions& opts = {}) {
    auto cap = effective_degree_cap(opts);
    std::vector<ModPoly> G;
    for (auto& r : rows)
        if (!r.is_zero()) G.push_back(std::move(r));

    struct MPair {
        std::size_t i, j;
        int32_t comp;
        Monomial lcm;
        bool alive = true;
    };
    std::vector<MPair> pairs;
    auto install = [&](std::size_t t) {
        const MTerm& lt = G[t].lt();
        std::vector<MPair> fresh;
        for (std::size_t i = 0; i < t; ++i) {
            if (G[i].is_zero() || G[i].lt().comp != lt.comp) continue;
            fresh.push_back({i, t, lt.comp, monomial_lcm(G[i].lt().m, lt.m), true});
        }
        for (auto& p : fresh) {
            for (const auto& q : fresh) {
                if (&p == &q || !q.alive) continue;
                if (q.lcm != p.lcm && monomial_divides(q.lcm, p.lcm)) {
                    p.alive = false;
                    break;
                }
            }
        }
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            if (!fresh[a].alive) continue;
            for (std::size_t b = a + 1; b < fresh.size(); ++b)
                if (fresh[b].alive && fresh[b].lcm == fresh[a].lcm) fresh[b].alive = false;
        }
        for (auto& p : pairs) {
            if (!p.alive || p.comp != lt.comp) continue;
            if (!monomial_divides(lt.m, p.lcm)) continue;
            if (monomial_lcm(G[p.i].lt().m, lt.m) != p.lcm &&
                monomial_lcm(G[p.j].lt().m, lt.m) != p.lcm)
                p.alive = false;
        }
        for (auto& p : fresh)
            if (p.alive) pairs.push_back(std::move(p));
    };
    for (std::size_t t = 0; t < G.size(); ++t) install(t);

    while (true) {
        std::size_t best = pairs.size();
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (!pairs[k].alive) continue;
            if (best == pairs.size()) {
                best = k;
                continue;
            }
            int c = compare_keys(R, pairs[k].comp, pairs[k].lcm, pairs[best].comp,
                                 pairs[best].lcm);
            if (c < 0 || (c == 0 && (pairs[k].i < pairs[best].i ||
                                     (pairs[k].i == pairs[best].i && pairs[k].j < pairs[best].j))))
                best = k;
        }
        if (best == pairs.size()) break;
        MPair p = pairs[best];
        pairs[best].alive = false;
        const MTerm& li = G[p.i].lt();
        const MTerm& lj = G[p.j].lt();
        ModPoly s = ModPoly::zero(R)
                        .add_scaled(1 / li.c, monomial_div(p.lcm, li.m), G[p.i])
                        .add_scaled(-(1 / lj.c), monomial_div(p.lcm, lj.m), G[p.j]);
        ModPoly r = normal_form(s, G);
        if (r.is_zero()) continue;
        if (cap)
            for (const auto& t : r.terms())
                if (t.m.total_degree() > *cap)
                    throw CapExceededError("degree cap exceeded in module basis");
        G.push_back(r.monic());
        install(G.size() - 1);
    }

    // minimalize + tail-reduce for determinism
    std::vector<ModPoly> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            const MTerm &a = G[i].lt(), &b = G[j].lt();
            if (b.comp != a.comp || !monomial_divides(b.m, a.m)) continue;
            if (b.m != a.m || j < i) redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    std::vector<ModPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<ModPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        ModPoly r = normal_form(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const ModPoly& a, const ModPoly& b) {
        return compare_keys(R, a.lt().comp, a.lt().m, b.lt().comp, b.lt().m) < 0;
    });
    return reduced;
}

}  // namespace modgb

// Generators of the syzygy module {(a_i) : sum a_i * gens_i = 0}, via a
// Groebner basis of the graph module {(gens_i, e_i)} under an order that
// eliminates the value component.
inline std::vector<std::vector<Polynomial>> syzygies(const std::vector<Polynomial>& gens,
                                                     const GroebnerOptions& opts = {}) {
    if (gens.empty()) throw DomainError("syzygies of empty generator list");
    const PolyRing& R = gens.front().ring();
    for (const auto& g : gens) require_same_ring(R, g.ring());
    const std::size_t p = gens.size();
    std::vector<modgb::ModPoly> rows;
    for (std::size_t i = 0; i < p; ++i) {
        std::vector<modgb::MTerm> terms;
        for (const auto& t : gens[i].terms()) terms.push_back({0, t.m, t.c});
        terms.push_back({static_cast<int32_t>(i + 1), Monomial(R.nvars()), Rational(1)});
        rows.push_back(modgb::ModPoly::from_terms(R, std::move(terms)));
    }
    auto gb = modgb::module_groebner(R, std::move(rows), opts);
    std::vector<std::vector<Polynomial>> out;
    for (const auto& g : gb) {
        if (g.lt().comp == 0) continue;  // has a value part
        std::vector<Polynomial> row;
        row.reserve(p);
        for (std::size_t i = 0; i < p; ++i)
            row.push_back(g.component(static_cast<int32_t>(i + 1)));
        out.push_back(std::move(row));
    }
    return out;
}

// Groebner basis of <gens> with, for each basis element b, a coefficient row
// expressing b in terms of the input generators.
struct TrackedBasis {
    std::vector<Polynomial> basis;
    std::vector<std::vector<Polynomial>> rows;  // basis[k] = sum rows[k][i]*gens[i]
};

inline TrackedBasis groebner_with_lift(const std::vector<Polynomial>& gens,
                                       const GroebnerOptions& opts = {}) {
    if (gens.empty()) throw DomainError("groebner_with_lift of empty generator list");
    const PolyRing& R = gens.front().ring();
    const std::size_t p = gens.size();
    std::vector<modgb::ModPoly> rows;
    for (std::size_t i = 0; i < p; ++i) {
        require_same_ring(R, gens[i].ring());
        if (gens[i].is_zero()) continue;
        std::vector<modgb::MTerm> terms;
        for (const auto& t : gens[i].terms()) terms.push_back({0, t.m, t.c});
        terms.push_back({static_cast<int32_t>(i + 1), Monomial(R.nvars()), Rational(1)});
        rows.push_back(modgb::ModPoly::from_terms(R, std::move(terms)));
    }
    auto gb = modgb::module_groebner(R, std::move(rows), opts);
    TrackedBasis out;
    for (const auto& g : gb) {
        if (g.lt().comp != 0) continue;
        out.basis.push_back(g.component(0));
        std::vector<Polynomial> row;
        row.reserve(p);
        for (std::size_t i = 0; i < p; ++i)
            row.push_back(g.component(static_cast<int32_t>(i + 1)));
        out.rows.push_back(std::move(row));
    }
    return out;
}

// Express f as a combination of the original generators behind a tracked
// basis; nullopt if f is not in the ideal.
inline std::optional<std::vector<Polynomial>> lift_through(const Polynomial& f,
                                                           const TrackedBasis& tb,
                                                           std::size_t ngens) {
    LiftRecord rec = normal_form_with_lift(f, tb.basis);
    if (!rec.remainder.is_zero()) return std::nullopt;
    const PolyRing& R = f.ring();
    std::vector<Polynomial> coeffs(ngens, Polynomial::zero(R));
    for (std::size_t t = 0; t < tb.basis.size(); ++t) {
        if (rec.quotients[t].is_zero()) continue;
        for (std::size_t i = 0; i < ngens; ++i)
            coeffs[i] = coeffs[i] + rec.quotients[t] * tb.rows[t][i];
    }
    return coeffs;
}

}  // namespace closure
