#pragma once

#include <chrono>
#include <string>
#include <variant>
#include <vector>

#include "closure/fraction.hpp"
#include "closure/radical.hpp"
#include "closure/ringmap.hpp"

namespace closure {

enum class TestIdealStrategy { full_jacobian_radical, single_element_radical };

struct NormalizeOptions {
    TestIdealStrategy strategy = TestIdealStrategy::full_jacobian_radical;
    int max_iterations = 64;
    bool assume_reduced = false;
    int nzd_combination_cap = 5;
    int64_t minor_count_cap = 100000;
    std::string fresh_prefix = "T";
    bool collect_trace = false;
    GroebnerOptions gb;
};

// ---------------------------------------------------------------------------
// Jacobian ideal
// ---------------------------------------------------------------------------

namespace detail {

inline int64_t binomial(int64_t n, int64_t k) {
    if (k < 0 || k > n) return 0;
    int64_t r = 1;
    for (int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline Polynomial poly_det(const std::vector<std::vector<Polynomial>>& M, const PolyRing& R) {
    std::size_t n = M.size();
    if (n == 0) return Polynomial::constant(R, Rational(1));
    if (n == 1) return M[0][0];
    Polynomial det = Polynomial::zero(R);
    for (std::size_t j = 0; j < n; ++j) {
        if (M[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(M[i][k]);
            sub.push_back(std::move(row));
        }
        Polynomial cof = M[0][j] * poly_det(sub, R);
        det = (j % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

// c-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<int>> subsets(int n, int c) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(c);
    for (int i = 0; i < c; ++i) cur[i] = i;
    if (c > n) return out;
    while (true) {
        out.push_back(cur);
        int i = c - 1;
        while (i >= 0 && cur[i] == n - c + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < c; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace detail

// The c x c minors of the Jacobian matrix of the defining ideal,
// c = (#variables) - dim, enumerated deterministically (rows then columns,
// lexicographic). The matrix is taken over the canonical reduced basis (the
// ideal I + minors does not depend on the chosen generators), and minors are
// normal-formed against the defining ideal with zeros and duplicates
// dropped, which leaves the same ideal with far fewer generators.
inline std::vector<Polynomial> jacobian_minors(const QuotientRing& A,
                                               const NormalizeOptions& opts = {}) {
    const PolyRing& R = A.ambient();
    const Ideal& I = A.defining();
    if (is_unit_ideal(I)) throw DomainError("jacobian of the zero ring");
    const GroebnerBasis& gb = I.groebner(opts.gb);
    const auto& gens = gb.elements.empty() ? I.generators() : gb.elements;
    int n = static_cast<int>(R.nvars());
    int c = n - dimension(I);
    if (c == 0) return {Polynomial::constant(R, Rational(1))};
    int g = static_cast<int>(gens.size());
    if (c > g) return {};
    int64_t count = detail::binomial(g, c) * detail::binomial(n, c);
    if (count > opts.minor_count_cap)
        throw CapExceededError("jacobian minor count " + std::to_string(count) +
                               " exceeds cap");
    std::vector<std::vector<Polynomial>> jac(g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < n; ++j) jac[i].push_back(gens[i].derivative(j));
    std::vector<Polynomial> minors;
    for (const auto& rows : detail::subsets(g, c))
        for (const auto& cols : detail::subsets(n, c)) {
            std::vector<std::vector<Polynomial>> M;
            for (int r : rows) {
                std::vector<Polynomial> row;
                for (int cc : cols) row.push_back(jac[r][cc]);
                M.push_back(std::move(row));
            }
            Polynomial d = normal_form(detail::poly_det(M, R), gb);
            if (d.is_zero()) continue;
            d = d.primitive();
            bool dup = false;
            for (const auto& m : minors)
                if (m == d) dup = true;
            if (!dup) minors.push_back(std::move(d));
        }
    return minors;
}

// Defining ideal plus the Jacobian minors.
inline Ideal jacobian_ideal(const QuotientRing& A, const NormalizeOptions& opts = {}) {
    std::vector<Polynomial> gens = A.defining().generators();
    auto minors = jacobian_minors(A, opts);
    gens.insert(gens.end(), minors.begin(), minors.end());
    return Ideal(A.ambient(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Test ideal and Hom(J,J) generators
// ---------------------------------------------------------------------------

struct NormalCertificate {};
struct SplitSignal {
    Polynomial zerodivisor;  // nonzero mod the defining ideal
};
using TestIdealOutcome = std::variant<Ideal, NormalCertificate, SplitSignal>;

struct HomGenerators {
    Polynomial f;
    std::vector<Polynomial> vs;
};
struct EqualityCertificate {};
using HomOutcome = std::variant<HomGenerators, EqualityCertificate, SplitSignal>;

// Radical ideal cutting out the non-normal locus. A unit Jacobian certifies
// regularity; a zerodivisor candidate signals a split of the reduced ring.
inline TestIdealOutcome test_ideal(const QuotientRing& A, const NormalizeOptions& opts = {}) {
    Ideal jac = jacobian_ideal(A, opts);
    if (is_unit_ideal(jac)) return NormalCertificate{};
    if (opts.strategy == TestIdealStrategy::full_jacobian_radical)
        return radical(jac, opts.gb);

    auto minors = jacobian_minors(A, opts);
    std::optional<Polynomial> chosen;
    auto consider = [&](const Polynomial& cand) -> std::optional<SplitSignal> {
        Polynomial r = A.nf(cand);
        if (r.is_zero()) return std::nullopt;
        if (!equals(colon(A.defining(), r, opts.gb), A.defining())) return SplitSignal{r};
        if (!chosen) chosen = cand;
        return std::nullopt;
    };
    for (const auto& m : minors)
        if (auto s = consider(m)) return *s;
    if (!chosen) {
        for (std::size_t i = 0; i < minors.size() && !chosen; ++i)
            for (std::size_t j = i + 1; j < minors.size() && !chosen; ++j)
                for (int n = 1; n <= opts.nzd_combination_cap; ++n) {
                    if (auto s = consider(minors[i] + minors[j] * Rational(n))) return *s;
                    if (chosen) break;
                }
    }
    if (!chosen)
        throw DomainError("no nonzerodivisor among Jacobian minors or their combinations");
    return radical(ideal_sum(A.defining(), Ideal::principal(*chosen)), opts.gb);
}

// Choose a nonzerodivisor f in J and compute module generators of
// f*Hom(J,J) = (fJ : J). Splitting takes priority: any zerodivisor found
// while scanning is reported instead of extending a non-domain in place.
inline HomOutcome hom_generators(const QuotientRing& A, const Ideal& J,
                                 const NormalizeOptions& opts = {}) {
    const PolyRing& R = A.ambient();
    const Ideal& I = A.defining();
    std::optional<Polynomial> f;
    auto consider = [&](const Polynomial& cand) -> std::optional<SplitSignal> {
        Polynomial r = A.nf(cand);
        if (r.is_zero()) return std::nullopt;
        if (!equals(colon(I, r, opts.gb), I)) return SplitSignal{r};
        if (!f) f = r;
        return std::nullopt;
    };
    const auto& gens = J.groebner(opts.gb).elements;
    for (const auto& g : gens)
        if (auto s = consider(g)) return *s;
    if (!f) {
        for (std::size_t i = 0; i < gens.size() && !f; ++i)
            for (std::size_t j = i + 1; j < gens.size() && !f; ++j)
                for (int n = 1; n <= opts.nzd_combination_cap && !f; ++n)
                    if (auto s = consider(gens[i] + gens[j] * Rational(n))) return *s;
    }
    if (!f) throw DomainError("test ideal contains no nonzerodivisor candidate");

    std::vector<Polynomial> wgens;
    for (const auto& g : J.generators()) wgens.push_back(*f * g);
    for (const auto& g : I.generators()) wgens.push_back(g);
    Ideal Q = colon(Ideal(R, wgens), J, opts.gb);
    std::vector<Polynomial> fi = I.generators();
    fi.push_back(*f);
    Ideal fplusI(R, fi);
    if (equals(Q, fplusI)) return EqualityCertificate{};
    std::vector<Polynomial> vs;
    Ideal mg = minimal_generators(Q);
    for (const auto& v : mg.generators())
        if (!contains(fplusI, v)) vs.push_back(v);
    if (vs.empty())
        throw InvariantViolationError("colon grew but all minimal generators were trivial");
    return HomGenerators{*f, std::move(vs)};
}

// ---------------------------------------------------------------------------
// Catanese presentation of Hom(J,J)
// ---------------------------------------------------------------------------

struct Presentation {
    QuotientRing ring;   // original variables plus fresh ones
    RingMap normap;      // old ambient -> new quotient
    std::vector<Fraction> fractions;  // v_i / f, reduced, in the old ambient
    std::vector<std::string> fresh_names;
    std::vector<std::vector<int64_t>> fresh_degrees;
};

namespace detail {

inline std::vector<std::string> allocate_fresh_names(const PolyRing& R,
                                                     const std::string& prefix,
                                                     std::size_t count) {
    // continue after the highest existing "<prefix><number>" variable
    long next = 1;
    for (const auto& v : R.vars()) {
        if (v.size() <= prefix.size() || v.compare(0, prefix.size(), prefix) != 0) continue;
        bool digits = true;
        for (std::size_t i = prefix.size(); i < v.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(v[i]))) digits = false;
        if (!digits) continue;
        long idx = std::stol(v.substr(prefix.size()));
        if (idx + 1 > next) next = idx + 1;
    }
    std::vector<std::string> names;
    while (names.size() < count) {
        std::string n = prefix + std::to_string(next++);
        if (R.var_index(n) < 0) names.push_back(n);
    }
    return names;
}

// Degree vector for a fresh variable standing for v/f. Components where v or
// f are inhomogeneous, and nonpositive first components, fall back to the
// trivial weight.
inline std::vector<int64_t> fraction_degree(const Polynomial& v, const Polynomial& f,
                                            std::size_t glen) {
    std::vector<int64_t> d(glen, 0);
    d[0] = 1;
    for (std::size_t k = 0; k < glen; ++k) {
        auto dv = v.component_degree(k), df = f.component_degree(k);
        if (!dv || !df) continue;
        int64_t diff = *dv - *df;
        if (k == 0) {
            if (diff > 0) d[0] = diff;
        } else {
            d[k] = diff;
        }
    }
    return d;
}

}  // namespace detail

// Present A[v_1/f, ..., v_m/f] as a quotient of the old ambient ring with m
// fresh variables: the defining generators, the linear syzygy relations of
// (f, v_1..v_m) mod I, and the quadratic multiplication relations obtained
// by lifting v_i*v_j into (f^2, f*v_1, ..., f*v_m) + I.
inline Presentation catanese_presentation(const QuotientRing& A, const Polynomial& f,
                                          const std::vector<Polynomial>& vs,
                                          const NormalizeOptions& opts = {}) {
    const PolyRing& R = A.ambient();
    const Ideal& I = A.defining();
    if (vs.empty()) throw DomainError("presentation needs at least one module generator");
    const std::size_t m = vs.size();
    auto names = detail::allocate_fresh_names(R, opts.fresh_prefix, m);

    std::vector<std::vector<int64_t>> fresh_degs;
    for (const auto& v : vs)
        fresh_degs.push_back(detail::fraction_degree(v, f, R.grading_length()));

    std::vector<std::string> vars = R.vars();
    vars.insert(vars.end(), names.begin(), names.end());
    std::vector<std::vector<int64_t>> degs = R.degrees();
    degs.insert(degs.end(), fresh_degs.begin(), fresh_degs.end());
    PolyRing NR = PolyRing::make(std::move(vars), MonomialOrder::Grevlex(), std::move(degs));

    auto T = [&](std::size_t i) { return Polynomial::variable(NR, R.nvars() + i); };

    std::vector<Polynomial> rels = embed_by_names(I.generators(), NR);

    // linear relations from syzygies of (f, v_1, ..., v_m) modulo I
    std::vector<Polynomial> syzin;
    syzin.push_back(f);
    for (const auto& v : vs) syzin.push_back(v);
    for (const auto& g : I.generators()) syzin.push_back(g);
    for (const auto& row : syzygies(syzin, opts.gb)) {
        Polynomial rel = embed_by_names(row[0], NR);
        for (std::size_t i = 0; i < m; ++i)
            rel = rel + embed_by_names(row[1 + i], NR) * T(i);
        if (!rel.is_zero()) rels.push_back(std::move(rel));
    }

    // quadratic relations T_i T_j = beta_0 + sum_k beta_k T_k
    std::vector<Polynomial> liftgens;
    liftgens.push_back(f * f);
    for (const auto& v : vs) liftgens.push_back(f * v);
    for (const auto& g : I.generators()) liftgens.push_back(g);
    TrackedBasis tb = groebner_with_lift(liftgens, opts.gb);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            auto coeffs = lift_through(vs[i] * vs[j], tb, liftgens.size());
            if (!coeffs)
                throw InvariantViolationError(
                    "product of module generators failed to lift into f*(fJ:J)");
            Polynomial rel = T(i) * T(j) - embed_by_names((*coeffs)[0], NR);
            for (std::size_t k = 0; k < m; ++k)
                rel = rel - embed_by_names((*coeffs)[1 + k], NR) * T(k);
            rels.push_back(std::move(rel));
        }

    Ideal defining(NR, rels);
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < R.nvars(); ++i)
        images.push_back(Polynomial::variable(NR, i));
    RingMap normap(R, NR, std::move(images), defining);

    std::vector<Fraction> fractions;
    for (const auto& v : vs) fractions.push_back(reduce_fraction(v, f));

    return Presentation{QuotientRing(NR, defining), std::move(normap), std::move(fractions),
                        std::move(names), std::move(fresh_degs)};
}

// ---------------------------------------------------------------------------
// One Grauert-Remmert step and the recursion driver
// ---------------------------------------------------------------------------

struct NormalStep {};
struct ExtendedStep {
    Presentation presentation;
    Ideal test_ideal_used;
    Polynomial f_used;
    std::vector<Polynomial> vs_used;
};
struct SplitStep {
    QuotientRing left, right;
    Polynomial witness;
};
using ExtensionStep = std::variant<NormalStep, ExtendedStep, SplitStep>;

namespace detail {

inline SplitStep make_split(const QuotientRing& A, const Polynomial& z,
                            const NormalizeOptions& opts) {
    const Ideal& I = A.defining();
    Ideal left = colon(I, z, opts.gb);
    Ideal right = colon(I, left, opts.gb);
    if (!equals(intersect(left, right, opts.gb), I))
        throw NotReducedError("split components do not intersect in the defining ideal; "
                              "input ring is not reduced");
    return SplitStep{QuotientRing(A.ambient(), left), QuotientRing(A.ambient(), right), z};
}

}  // namespace detail

inline ExtensionStep dejong_step(const QuotientRing& A, const NormalizeOptions& opts = {}) {
    TestIdealOutcome t = test_ideal(A, opts);
    if (std::holds_alternative<NormalCertificate>(t)) return NormalStep{};
    if (auto* s = std::get_if<SplitSignal>(&t))
        return detail::make_split(A, s->zerodivisor, opts);
    Ideal J = std::get<Ideal>(std::move(t));
    HomOutcome h = hom_generators(A, J, opts);
    if (std::holds_alternative<EqualityCertificate>(h)) return NormalStep{};
    if (auto* s = std::get_if<SplitSignal>(&h))
        return detail::make_split(A, s->zerodivisor, opts);
    HomGenerators hg = std::get<HomGenerators>(std::move(h));
    Presentation p = catanese_presentation(A, hg.f, hg.vs, opts);
    return ExtendedStep{std::move(p), std::move(J), std::move(hg.f), std::move(hg.vs)};
}

// ---------------------------------------------------------------------------
// Normalization result
// ---------------------------------------------------------------------------

struct NormalComponent {
    QuotientRing presentation;  // ambient: original variables ++ fresh T's
    RingMap normap;             // original ambient -> presentation
    std::vector<std::string> fresh_vars;
    std::vector<std::vector<int64_t>> fresh_degrees;
    // one fraction per presentation variable over the original ambient ring:
    // fresh variables first, then the original variables as trivial fractions
    std::vector<Fraction> fractions;
};

struct ExtensionTraceEntry {
    QuotientRing ring;
    Ideal test_ideal;
    Polynomial f;
    std::vector<Polynomial> vs;
};

struct NormalizationResult {
    std::vector<NormalComponent> components;
    int iterations = 0;
    std::vector<std::pair<std::string, double>> timings;
    std::vector<ExtensionTraceEntry> trace;
};

namespace detail {

struct WorkItem {
    QuotientRing A;
    std::vector<std::string> fresh;
    std::vector<std::vector<int64_t>> fresh_degs;
    std::vector<Fraction> fracs;  // over the original ambient, aligned with fresh
};

class PhaseTimer {
  public:
    explicit PhaseTimer(std::vector<std::pair<std::string, double>>& sink) : sink_(sink) {}
    template <typename F>
    auto time(const std::string& phase, F&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        if constexpr (std::is_void_v<decltype(fn())>) {
            fn();
            add(phase, t0);
        } else {
            auto r = fn();
            add(phase, t0);
            return r;
        }
    }

  private:
    void add(const std::string& phase, std::chrono::steady_clock::time_point t0) {
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        for (auto& kv : sink_)
            if (kv.first == phase) {
                kv.second += s;
                return;
            }
        sink_.push_back({phase, s});
    }
    std::vector<std::pair<std::string, double>>& sink_;
};

// Map a polynomial into new_ring by a variable-index permutation/embedding.
inline Polynomial transport_positions(const Polynomial& f, const PolyRing& new_ring,
                                      const std::vector<int>& pos) {
    std::vector<Term> out;
    out.reserve(f.nterms());
    for (const auto& t : f.terms()) {
        Monomial m(new_ring.nvars());
        for (std::size_t i = 0; i < t.m.size(); ++i) {
            if (t.m.exps[i] == 0) continue;
            if (pos[i] < 0) throw InvariantViolationError("transport drops a used variable");
            m.exps[pos[i]] = t.m.exps[i];
        }
        out.push_back({std::move(m), t.c});
    }
    return Polynomial::from_terms(new_ring, std::move(out));
}

// Eliminate fresh variables that occur linearly with a variable-free-of-self
// complement: a presentation-level minimization preserving the isomorphism
// class and the fractions of the surviving variables.
inline void minimize_presentation(std::size_t n0, WorkItem& item, const NormalizeOptions& opts) {
    bool changed = true;
    while (changed && !item.fresh.empty()) {
        changed = false;
        const PolyRing& R = item.A.ambient();
        const auto& gb = item.A.defining().groebner(opts.gb).elements;
        for (std::size_t t = item.fresh.size(); t-- > 0 && !changed;) {
            std::size_t p = n0 + t;
            for (const auto& e : gb) {
                Rational coeff(0);
                bool other = false;
                for (const auto& term : e.terms()) {
                    if (term.m.exps[p] == 0) continue;
                    if (term.m.exps[p] == 1 && term.m.total_degree() == 1) {
                        if (!closure::is_zero(coeff)) other = true;  // appears twice
                        coeff = term.c;
                    } else {
                        other = true;
                        break;
                    }
                }
                if (other || closure::is_zero(coeff)) continue;
                // e = coeff*Tp + g with Tp absent from g; substitute Tp = -g/coeff
                Monomial bare(R.nvars());
                bare.exps[p] = 1;
                Polynomial g = e - Polynomial::term(R, bare, coeff);
                Polynomial value = g * (-(1 / coeff));
                std::vector<std::string> vars;
                std::vector<std::vector<int64_t>> degs;
                std::vector<int> pos(R.nvars(), -1);
                for (std::size_t i = 0; i < R.nvars(); ++i) {
                    if (i == p) continue;
                    pos[i] = static_cast<int>(vars.size());
                    vars.push_back(R.var_name(i));
                    degs.push_back(R.degrees()[i]);
                }
                PolyRing NR = PolyRing::make(std::move(vars), R.order(), std::move(degs));
                std::vector<Polynomial> gens;
                for (const auto& q : gb) {
                    Polynomial sub = substitute_variable(q, p, value);
                    if (!sub.is_zero()) gens.push_back(transport_positions(sub, NR, pos));
                }
                item.A = QuotientRing(NR, Ideal(NR, gens));
                item.fresh.erase(item.fresh.begin() + t);
                item.fresh_degs.erase(item.fresh_degs.begin() + t);
                item.fracs.erase(item.fracs.begin() + t);
                changed = true;
                break;
            }
        }
    }
}

// Fresh-variable ordering key: by fraction degree, then numerator lead.
inline bool fraction_key_less(const Fraction& a, const Fraction& b) {
    int64_t da = a.num.total_degree() - a.den.total_degree();
    int64_t db = b.num.total_degree() - b.den.total_degree();
    if (da != db) return da < db;
    const PolyRing& R0 = a.num.ring();
    if (!a.num.is_zero() && !b.num.is_zero()) {
        int c = R0.compare(a.num.lm(), b.num.lm());
        if (c != 0) return c < 0;
    }
    if (!a.den.is_zero() && !b.den.is_zero()) {
        int c = R0.compare(a.den.lm(), b.den.lm());
        if (c != 0) return c < 0;
    }
    return false;
}

// Renumber surviving fresh variables to <prefix>1..<prefix>k in canonical
// fraction order and build the emitted component.
inline NormalComponent finalize_component(const PolyRing& R0, WorkItem item,
                                          const NormalizeOptions& opts) {
    minimize_presentation(R0.nvars(), item, opts);
    const PolyRing& R = item.A.ambient();
    std::size_t k = item.fresh.size();
    std::vector<std::size_t> order(k);
    for (std::size_t i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (fraction_key_less(item.fracs[a], item.fracs[b])) return true;
        if (fraction_key_less(item.fracs[b], item.fracs[a])) return false;
        return a < b;
    });

    std::vector<std::string> names;
    {
        long next = 1;
        while (names.size() < k) {
            std::string n = opts.fresh_prefix + std::to_string(next++);
            if (R0.var_index(n) < 0) names.push_back(n);
        }
    }
    std::vector<std::string> vars = R0.vars();
    std::vector<std::vector<int64_t>> degs = R0.degrees();
    std::vector<int> pos(R.nvars(), -1);
    for (std::size_t i = 0; i < R0.nvars(); ++i) pos[i] = static_cast<int>(i);
    std::vector<std::vector<int64_t>> fresh_degs;
    std::vector<Fraction> fracs;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t src = order[i];
        pos[R0.nvars() + src] = static_cast<int>(R0.nvars() + i);
        vars.push_back(names[i]);
        degs.push_back(item.fresh_degs[src]);
        fresh_degs.push_back(item.fresh_degs[src]);
        fracs.push_back(item.fracs[src]);
    }
    PolyRing NR;
    Ideal defining;
    if (vars == R.vars() && degs == R.degrees() &&
        R.order() == MonomialOrder::Grevlex()) {
        NR = R;
        defining = item.A.defining();
    } else {
        NR = PolyRing::make(std::move(vars), MonomialOrder::Grevlex(), std::move(degs));
        std::vector<Polynomial> gens;
        for (const auto& g : item.A.defining().generators())
            gens.push_back(transport_positions(g, NR, pos));
        defining = Ideal(NR, std::move(gens));
    }
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < R0.nvars(); ++i) images.push_back(Polynomial::variable(NR, i));
    RingMap normap(R0, NR, std::move(images), defining);
    for (std::size_t i = 0; i < R0.nvars(); ++i)
        fracs.push_back(trivial_fraction(Polynomial::variable(R0, i)));
    return NormalComponent{QuotientRing(NR, defining), std::move(normap), std::move(names),
                           std::move(fresh_degs), std::move(fracs)};
}

}  // namespace detail

// de Jong's recursion: repeat the Grauert-Remmert step, tracking fraction
// generators down to the original ambient ring, splitting off components at
// zerodivisors, until every component certifies normal.
inline NormalizationResult normalize_ring(const QuotientRing& A0,
                                          const NormalizeOptions& opts = {}) {
    const PolyRing& R0 = A0.ambient();
    if (A0.is_zero_ring()) throw DomainError("normalization of the zero ring");
    NormalizationResult result;
    detail::PhaseTimer timer(result.timings);

    if (!opts.assume_reduced) {
        bool reduced = timer.time("reduced_check", [&] {
            return equals(radical(A0.defining(), opts.gb), A0.defining());
        });
        if (!reduced) throw NotReducedError("input ring is not reduced");
    }

    std::vector<detail::WorkItem> stack;
    stack.push_back({A0, {}, {}, {}});
    while (!stack.empty()) {
        detail::WorkItem item = std::move(stack.back());
        stack.pop_back();
        if (++result.iterations > opts.max_iterations)
            throw CapExceededError("normalization iteration cap exceeded");

        TestIdealOutcome t = timer.time("test_ideal", [&] { return test_ideal(item.A, opts); });
        if (std::holds_alternative<NormalCertificate>(t)) {
            result.components.push_back(
                timer.time("finalize", [&] { return detail::finalize_component(R0, item, opts); }));
            continue;
        }
        std::optional<SplitStep> split;
        std::optional<ExtendedStep> ext;
        if (auto* s = std::get_if<SplitSignal>(&t)) {
            split = detail::make_split(item.A, s->zerodivisor, opts);
        } else {
            Ideal J = std::get<Ideal>(std::move(t));
            HomOutcome h = timer.time("hom_colon", [&] { return hom_generators(item.A, J, opts); });
            if (std::holds_alternative<EqualityCertificate>(h)) {
                result.components.push_back(timer.time(
                    "finalize", [&] { return detail::finalize_component(R0, item, opts); }));
                continue;
            }
            if (auto* s = std::get_if<SplitSignal>(&h)) {
                split = detail::make_split(item.A, s->zerodivisor, opts);
            } else {
                HomGenerators hg = std::get<HomGenerators>(std::move(h));
                Presentation p = timer.time("presentation", [&] {
                    return catanese_presentation(item.A, hg.f, hg.vs, opts);
                });
                if (opts.collect_trace)
                    result.trace.push_back({item.A, J, hg.f, hg.vs});
                ext = ExtendedStep{std::move(p), std::move(J), std::move(hg.f), std::move(hg.vs)};
            }
        }
        if (split) {
            stack.push_back({split->right, item.fresh, item.fresh_degs, item.fracs});
            stack.push_back({split->left, std::move(item.fresh), std::move(item.fresh_degs),
                             std::move(item.fracs)});
            continue;
        }

        // compose the new fractions down to the original ambient ring
        timer.time("compose", [&] {
            std::vector<Fraction> var_fracs;
            for (std::size_t i = 0; i < R0.nvars(); ++i)
                var_fracs.push_back(trivial_fraction(Polynomial::variable(R0, i)));
            for (const auto& fr : item.fracs) var_fracs.push_back(fr);
            detail::WorkItem next;
            next.A = ext->presentation.ring;
            next.fresh = item.fresh;
            next.fresh_degs = item.fresh_degs;
            next.fracs = item.fracs;
            Fraction ff = evaluate_at_fractions(ext->f_used, var_fracs);
            for (std::size_t i = 0; i < ext->vs_used.size(); ++i) {
                Fraction fv = evaluate_at_fractions(ext->vs_used[i], var_fracs);
                next.fracs.push_back(reduce_fraction(fv.num * ff.den, fv.den * ff.num));
                next.fresh.push_back(ext->presentation.fresh_names[i]);
                next.fresh_degs.push_back(ext->presentation.fresh_degrees[i]);
            }
            detail::minimize_presentation(R0.nvars(), next, opts);
            stack.push_back(std::move(next));
        });
    }
    return result;
}

// Fraction generators of the normalization: per component, fresh variables
// first (their composed fractions), then the original variables.
inline std::vector<std::vector<Fraction>> ic_fractions(const QuotientRing& A,
                                                       const NormalizeOptions& opts = {}) {
    NormalizationResult r = normalize_ring(A, opts);
    std::vector<std::vector<Fraction>> out;
    for (const auto& c : r.components) out.push_back(c.fractions);
    return out;
}

}  // namespace closure
