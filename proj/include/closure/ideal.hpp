#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "closure/groebner.hpp"

namespace closure {

// Ideal in a polynomial ring. The canonical reduced Groebner basis (under
// the ring's order) is computed at most once per handle; concurrent readers
// observe either absence or the completed value.
class Ideal {
  public:
    Ideal() = default;

    Ideal(PolyRing ring, std::vector<Polynomial> gens)
        : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
        for (auto& g : gens) {
            require_same_ring(ring_, g.ring());
            if (!g.is_zero()) gens_.push_back(std::move(g));
        }
    }

    static Ideal zero(const PolyRing& r) { return Ideal(r, {}); }

    static Ideal principal(const Polynomial& f) { return Ideal(f.ring(), {f}); }

    // Wraps generators that are already a reduced Groebner basis.
    static Ideal from_groebner(GroebnerBasis gb) {
        Ideal I(gb.ring, gb.elements);
        I.cache_->set(std::move(gb));
        return I;
    }

    const PolyRing& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    const GroebnerBasis& groebner(const GroebnerOptions& opts = {}) const {
        cache_->compute(ring_, gens_, opts);
        return cache_->gb;
    }

  private:
    struct Cache {
        std::once_flag flag;
        GroebnerBasis gb;
        void compute(const PolyRing& r, const std::vector<Polynomial>& gens,
                     const GroebnerOptions& opts) {
            std::call_once(flag, [&] { gb = reduced_groebner(r, gens, opts); });
        }
        void set(GroebnerBasis g) {
            std::call_once(flag, [&] { gb = std::move(g); });
        }
    };

    PolyRing ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

inline bool contains(const Ideal& I, const Polynomial& f) {
    require_same_ring(I.ring(), f.ring());
    return normal_form(f, I.groebner()).is_zero();
}

inline bool equals(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    const auto& a = I.groebner().elements;
    const auto& b = J.groebner().elements;
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

inline bool is_unit_ideal(const Ideal& I) { return I.groebner().is_unit(); }
inline bool is_zero_ideal(const Ideal& I) { return I.groebner().is_zero_ideal(); }

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    require_same_ring(I.ring(), J.ring());
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal(I.ring(), std::move(gens));
}

namespace detail {

inline std::string fresh_name(const PolyRing& R, const std::string& base) {
    if (R.var_index(base) < 0) return base;
    for (int k = 0;; ++k) {
        std::string n = base + std::to_string(k);
        if (R.var_index(n) < 0) return n;
    }
}

// Original ring extended by one auxiliary variable appended at the end.
// Internal helper for the t-trick; the order is immaterial (elimination
// re-sorts), so block orders are replaced by grevlex.
inline PolyRing extend_ring(const PolyRing& R, const std::string& name) {
    std::vector<std::string> vars = R.vars();
    vars.push_back(name);
    std::vector<std::vector<int64_t>> degs = R.degrees();
    std::vector<int64_t> one(R.grading_length(), 0);
    one[0] = 1;
    degs.push_back(std::move(one));
    MonomialOrder ord = R.order();
    if (ord.kind == MonomialOrder::Kind::product) ord = MonomialOrder::Grevlex();
    return PolyRing::make(std::move(vars), std::move(ord), std::move(degs));
}

}  // namespace detail

// I ∩ J by eliminating t from t*I + (1-t)*J.
inline Ideal intersect(const Ideal& I, const Ideal& J, const GroebnerOptions& opts = {}) {
    require_same_ring(I.ring(), J.ring());
    const PolyRing& R = I.ring();
    if (is_zero_ideal(I) || is_zero_ideal(J)) return Ideal::zero(R);
    std::string tname = detail::fresh_name(R, "@t");
    PolyRing E = detail::extend_ring(R, tname);
    Polynomial t = Polynomial::variable(E, E.nvars() - 1);
    Polynomial omt = Polynomial::constant(E, Rational(1)) - t;
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(t * embed_by_names(g, E));
    for (const auto& g : J.generators()) gens.push_back(omt * embed_by_names(g, E));
    auto elems = eliminate(gens, {static_cast<int>(E.nvars() - 1)}, R, opts);
    return Ideal::from_groebner(reduced_groebner(R, elems, opts));
}

// Quotient with remainder check; nullopt if g does not divide f exactly.
inline std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring(), g.ring());
    if (g.is_zero()) throw DomainError("division by zero polynomial");
    if (f.is_zero()) return Polynomial::zero(f.ring());
    LiftRecord rec = normal_form_with_lift(f, {g});
    if (!rec.remainder.is_zero()) return std::nullopt;
    return rec.quotients[0];
}

// (I : g) for a single nonzero polynomial, via I ∩ (g) divided by g.
inline Ideal colon(const Ideal& I, const Polynomial& g, const GroebnerOptions& opts = {}) {
    require_same_ring(I.ring(), g.ring());
    if (g.is_zero()) throw DomainError("colon by zero polynomial");
    Ideal m = intersect(I, Ideal::principal(g), opts);
    std::vector<Polynomial> quotients;
    for (const auto& w : m.generators()) {
        auto q = exact_divide(w, g);
        if (!q)
            throw InvariantViolationError("intersection with principal ideal not divisible");
        quotients.push_back(std::move(*q));
    }
    return Ideal::from_groebner(reduced_groebner(I.ring(), quotients, opts));
}

// (I : J) = {a : a*J ⊆ I}.
inline Ideal colon(const Ideal& I, const Ideal& J, const GroebnerOptions& opts = {}) {
    require_same_ring(I.ring(), J.ring());
    bool any = false;
    Ideal acc;
    for (const auto& g : J.generators()) {
        if (g.is_zero()) continue;
        Ideal part = colon(I, g, opts);
        acc = any ? intersect(acc, part, opts) : part;
        any = true;
    }
    if (!any) throw DomainError("colon by zero ideal");
    return acc;
}

// (I : f^inf), iterated colon until stable.
inline Ideal saturate(const Ideal& I, const Polynomial& f, const GroebnerOptions& opts = {}) {
    if (f.is_zero()) throw DomainError("saturation at zero polynomial");
    Ideal cur = Ideal::from_groebner(I.groebner());
    while (true) {
        Ideal next = colon(cur, f, opts);
        if (equals(next, cur)) return cur;
        cur = next;
    }
}

// ---------------------------------------------------------------------------
// Dimension via independent variable sets modulo the lead-term ideal
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<uint32_t> lead_supports(const Ideal& I) {
    std::vector<uint32_t> sup;
    for (const auto& g : I.groebner().elements) {
        uint32_t s = 0;
        const Monomial& m = g.lm();
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m.exps[i] > 0) s |= (1u << i);
        sup.push_back(s);
    }
    return sup;
}

inline bool independent(uint32_t mask, const std::vector<uint32_t>& sup) {
    for (uint32_t s : sup)
        if ((s & ~mask) == 0) return false;
    return true;
}

}  // namespace detail

// Krull dimension of R/I; -1 for the unit ideal.
inline int dimension(const Ideal& I) {
    if (is_unit_ideal(I)) return -1;
    std::size_t n = I.ring().nvars();
    if (n > 24) throw CapExceededError("dimension: too many variables");
    auto sup = detail::lead_supports(I);
    int best = -1;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        int pc = __builtin_popcount(mask);
        if (pc <= best) continue;
        if (detail::independent(mask, sup)) best = pc;
    }
    return best;
}

// Lexicographically smallest maximum independent variable set.
inline std::vector<int> maximal_independent_set(const Ideal& I) {
    if (is_unit_ideal(I)) throw DomainError("independent set of unit ideal");
    std::size_t n = I.ring().nvars();
    if (n > 24) throw CapExceededError("independent set: too many variables");
    auto sup = detail::lead_supports(I);
    int best = -1;
    std::vector<int> best_set;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        int pc = __builtin_popcount(mask);
        if (pc < best) continue;
        if (!detail::independent(mask, sup)) continue;
        std::vector<int> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(static_cast<int>(i));
        if (pc > best || idx < best_set) {
            best = pc;
            best_set = std::move(idx);
        }
    }
    return best_set;
}

// ---------------------------------------------------------------------------
// Polynomial gcd / squarefree part via principal-ideal intersection
// ---------------------------------------------------------------------------

inline Polynomial poly_lcm(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) return Polynomial::zero(f.ring());
    Ideal m = intersect(Ideal::principal(f), Ideal::principal(g));
    const auto& el = m.groebner().elements;
    if (el.size() != 1)
        throw InvariantViolationError("intersection of principal ideals not principal");
    return el[0];
}

inline Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring(), g.ring());
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_constant() || g.is_constant())
        return Polynomial::constant(f.ring(), Rational(1));
    Polynomial l = poly_lcm(f, g);
    auto q = exact_divide(f * g, l);
    if (!q) throw InvariantViolationError("lcm does not divide product");
    return q->monic();
}

// f divided by gcd(f, df/dx1, ..., df/dxn): the monic generator of sqrt((f)).
inline Polynomial squarefree_part(const Polynomial& f) {
    if (f.is_zero()) throw DomainError("squarefree part of zero");
    if (f.is_constant()) return Polynomial::constant(f.ring(), Rational(1));
    Polynomial g = f;
    for (std::size_t i = 0; i < f.ring().nvars(); ++i) {
        Polynomial d = f.derivative(i);
        if (d.is_zero()) continue;
        g = poly_gcd(g, d);
        if (g.is_constant()) break;
    }
    auto q = exact_divide(f, g);
    if (!q) throw InvariantViolationError("gcd does not divide input");
    return q->monic();
}

// Subset of the generators with none contained in the ideal of the others.
// Scans from the last generator backwards, dropping redundant ones.
inline Ideal minimal_generators(const Ideal& I) {
    std::vector<Polynomial> kept = I.generators();
    for (std::size_t i = kept.size(); i-- > 0;) {
        std::vector<Polynomial> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        if (contains(Ideal(I.ring(), others), kept[i])) kept.erase(kept.begin() + i);
    }
    return Ideal(I.ring(), std::move(kept));
}

// ---------------------------------------------------------------------------
// Quotient ring
// ---------------------------------------------------------------------------

// R/I with all element arithmetic on normal-form representatives. Ideal
// operations in the quotient are performed in the ambient ring with the
// defining generators adjoined.
class QuotientRing {
  public:
    QuotientRing() = default;
    QuotientRing(PolyRing ambient, Ideal defining)
        : ambient_(std::move(ambient)), defining_(std::move(defining)) {
        require_same_ring(ambient_, defining_.ring());
    }

    const PolyRing& ambient() const { return ambient_; }
    const Ideal& defining() const { return defining_; }

    Polynomial nf(const Polynomial& f) const { return normal_form(f, defining_.groebner()); }
    bool element_is_zero(const Polynomial& f) const { return nf(f).is_zero(); }
    bool is_zero_ring() const { return is_unit_ideal(defining_); }

  private:
    PolyRing ambient_;
    Ideal defining_;
};

// f is a nonzerodivisor mod the defining ideal iff (I : f) = I.
inline bool is_nonzerodivisor(const QuotientRing& A, const Polynomial& f) {
    Polynomial r = A.nf(f);
    if (r.is_zero()) return false;
    return equals(colon(A.defining(), r), A.defining());
}

}  // namespace closure
