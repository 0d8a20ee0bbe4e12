#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "closure/rational.hpp"
#include "closure/ring.hpp"

namespace closure {

struct Term {
    Monomial m;
    Rational c;
};

// Sparse polynomial with exact rational coefficients. Terms are kept
// strictly descending in the ring's monomial order with no zero
// coefficients, so equal polynomials have identical stored form.
class Polynomial {
  public:
    Polynomial() = default;

    static Polynomial zero(const PolyRing& r) { return Polynomial(r, {}); }

    static Polynomial constant(const PolyRing& r, Rational c) {
        std::vector<Term> t;
        if (!closure::is_zero(c)) t.push_back({Monomial(r.nvars()), std::move(c)});
        return Polynomial(r, std::move(t));
    }

    static Polynomial variable(const PolyRing& r, std::size_t i) {
        if (i >= r.nvars()) throw DomainError("variable index out of range");
        Monomial m(r.nvars());
        m.exps[i] = 1;
        return Polynomial(r, {{std::move(m), Rational(1)}});
    }

    static Polynomial term(const PolyRing& r, Monomial m, Rational c) {
        if (m.size() != r.nvars()) throw RingMismatchError("monomial length mismatch");
        std::vector<Term> t;
        if (!closure::is_zero(c)) t.push_back({std::move(m), std::move(c)});
        return Polynomial(r, std::move(t));
    }

    // Sorts, merges duplicates, and drops zeros.
    static Polynomial from_terms(const PolyRing& r, std::vector<Term> terms) {
        normalize_terms(r, terms);
        return Polynomial(r, std::move(terms));
    }

    // Trusts the caller: terms strictly descending, no zero coefficients.
    static Polynomial from_sorted_terms(const PolyRing& r, std::vector<Term> terms) {
        return Polynomial(r, std::move(terms));
    }

    Polynomial drop_lead() const {
        if (terms_.empty()) throw DomainError("drop_lead of zero polynomial");
        return Polynomial(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
    }

    const PolyRing& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t nterms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
    }

    const Term& lt() const {
        if (terms_.empty()) throw DomainError("leading term of zero polynomial");
        return terms_.front();
    }
    const Monomial& lm() const { return lt().m; }
    const Rational& lc() const { return lt().c; }

    int64_t total_degree() const {
        int64_t d = -1;
        for (const auto& t : terms_) d = std::max(d, t.m.total_degree());
        return d;
    }

    // Weighted degree of each term must agree; zero counts as inhomogeneous.
    std::optional<std::vector<int64_t>> multidegree() const {
        if (terms_.empty()) return std::nullopt;
        std::vector<int64_t> d = ring_.multidegree(terms_[0].m);
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (ring_.multidegree(terms_[i].m) != d) return std::nullopt;
        return d;
    }

    // Homogeneity in one grading component only.
    std::optional<int64_t> component_degree(std::size_t k) const {
        if (terms_.empty()) return std::nullopt;
        int64_t d = ring_.weighted_degree(terms_[0].m, k);
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (ring_.weighted_degree(terms_[i].m, k) != d) return std::nullopt;
        return d;
    }

    Polynomial operator-() const {
        std::vector<Term> t = terms_;
        for (auto& x : t) x.c = -x.c;
        return Polynomial(ring_, std::move(t));
    }

    Polynomial operator+(const Polynomial& o) const {
        require_same_ring(ring_, o.ring_);
        return Polynomial(ring_, merge(ring_, terms_, o.terms_, Rational(1), Monomial(ring_.nvars())));
    }

    Polynomial operator-(const Polynomial& o) const {
        require_same_ring(ring_, o.ring_);
        return Polynomial(ring_, merge(ring_, terms_, o.terms_, Rational(-1), Monomial(ring_.nvars())));
    }

    // this + c * x^m * g, the division-step workhorse.
    Polynomial add_scaled(const Rational& c, const Monomial& m, const Polynomial& g) const {
        require_same_ring(ring_, g.ring_);
        if (closure::is_zero(c) || g.is_zero()) return *this;
        return Polynomial(ring_, merge(ring_, terms_, g.terms_, c, m));
    }

    Polynomial operator*(const Polynomial& o) const {
        require_same_ring(ring_, o.ring_);
        std::vector<Term> prod;
        prod.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_)
                prod.push_back({monomial_mul(a.m, b.m), a.c * b.c});
        normalize_terms(ring_, prod);
        return Polynomial(ring_, std::move(prod));
    }

    Polynomial operator*(const Rational& c) const {
        if (closure::is_zero(c)) return zero(ring_);
        std::vector<Term> t = terms_;
        for (auto& x : t) x.c *= c;
        return Polynomial(ring_, std::move(t));
    }

    Polynomial pow(unsigned long e) const {
        Polynomial r = constant(ring_, Rational(1));
        Polynomial base = *this;
        while (e) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }

    Polynomial derivative(std::size_t var) const {
        if (var >= ring_.nvars()) throw DomainError("variable index out of range");
        std::vector<Term> t;
        t.reserve(terms_.size());
        for (const auto& x : terms_) {
            if (x.m.exps[var] == 0) continue;
            Term y = x;
            y.c *= Rational(y.m.exps[var]);
            y.m.exps[var] -= 1;
            t.push_back(std::move(y));
        }
        // order of distinct monomials is preserved by a uniform shift
        return Polynomial(ring_, std::move(t));
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        Rational inv = 1 / lc();
        return *this * inv;
    }

    // Integer coefficients with trivial common factor and positive lead.
    Polynomial primitive() const {
        if (is_zero()) return *this;
        Integer den_lcm(1), num_gcd(0);
        for (const auto& t : terms_) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den_mpz_t());
        }
        std::vector<Term> out = terms_;
        for (auto& t : out) {
            t.c *= Rational(den_lcm);
            t.c.canonicalize();
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num_mpz_t());
        }
        if (sgn(out.front().c) < 0) num_gcd = -num_gcd;
        for (auto& t : out) {
            t.c /= Rational(num_gcd);
            t.c.canonicalize();
        }
        return Polynomial(ring_, std::move(out));
    }

    bool operator==(const Polynomial& o) const {
        if (!ring_.same(o.ring_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

  private:
    Polynomial(PolyRing r, std::vector<Term> t) : ring_(std::move(r)), terms_(std::move(t)) {}

    static void normalize_terms(const PolyRing& r, std::vector<Term>& terms) {
        std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
            return r.compare(a.m, b.m) > 0;
        });
        std::size_t w = 0;
        for (std::size_t i = 0; i < terms.size();) {
            Monomial m = terms[i].m;
            Rational c = terms[i].c;
            std::size_t j = i + 1;
            while (j < terms.size() && terms[j].m == m) c += terms[j++].c;
            if (!closure::is_zero(c)) terms[w++] = {std::move(m), std::move(c)};
            i = j;
        }
        terms.resize(w);
    }

    // a + c * x^m * b with both lists descending; result descending.
    static std::vector<Term> merge(const PolyRing& r, const std::vector<Term>& a,
                                   const std::vector<Term>& b, const Rational& c,
                                   const Monomial& m) {
        std::vector<Term> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        const bool shift = !m.is_one();
        auto bterm = [&](std::size_t k) -> Term {
            Term t = b[k];
            if (shift) t.m = monomial_mul(t.m, m);
            t.c *= c;
            return t;
        };
        Term tb;
        bool tb_valid = false;
        while (i < a.size() || j < b.size()) {
            if (j < b.size() && !tb_valid) {
                tb = bterm(j);
                tb_valid = true;
            }
            if (i >= a.size()) {
                out.push_back(std::move(tb));
                tb_valid = false;
                ++j;
            } else if (j >= b.size()) {
                out.push_back(a[i++]);
            } else {
                int cmp = r.compare(a[i].m, tb.m);
                if (cmp > 0) {
                    out.push_back(a[i++]);
                } else if (cmp < 0) {
                    out.push_back(std::move(tb));
                    tb_valid = false;
                    ++j;
                } else {
                    Rational s = a[i].c + tb.c;
                    if (!closure::is_zero(s)) out.push_back({a[i].m, std::move(s)});
                    ++i;
                    ++j;
                    tb_valid = false;
                }
            }
        }
        return out;
    }

    PolyRing ring_;
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}  // namespace closure
