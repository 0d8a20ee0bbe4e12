#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "closure/errors.hpp"

namespace closure {

// Exponent vector. Length always equals the owning ring's variable count.
// Exponents are machine integers; arithmetic that would overflow raises
// MonomialOverflowError instead of wrapping.
struct Monomial {
    std::vector<int32_t> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<int32_t> e) : exps(std::move(e)) {}

    std::size_t size() const { return exps.size(); }
    int32_t operator[](std::size_t i) const { return exps[i]; }

    int64_t total_degree() const {
        return std::accumulate(exps.begin(), exps.end(), int64_t{0});
    }

    bool is_one() const {
        for (int32_t e : exps)
            if (e != 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

inline constexpr int32_t kMaxExponent = INT32_MAX / 2;

inline int32_t checked_exp_add(int32_t a, int32_t b) {
    int64_t s = int64_t{a} + int64_t{b};
    if (s > kMaxExponent)
        throw MonomialOverflowError("monomial exponent overflow");
    return static_cast<int32_t>(s);
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw RingMismatchError("monomial length mismatch");
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r.exps[i] = checked_exp_add(a.exps[i], b.exps[i]);
    return r;
}

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
    // a | b
    if (a.size() != b.size()) throw RingMismatchError("monomial length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.exps[i] > b.exps[i]) return false;
    return true;
}

inline Monomial monomial_div(const Monomial& a, const Monomial& b) {
    // a / b; caller guarantees divisibility
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r.exps[i] = a.exps[i] - b.exps[i];
    return r;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw RingMismatchError("monomial length mismatch");
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r.exps[i] = a.exps[i] > b.exps[i] ? a.exps[i] : b.exps[i];
    return r;
}

inline Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw RingMismatchError("monomial length mismatch");
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r.exps[i] = a.exps[i] < b.exps[i] ? a.exps[i] : b.exps[i];
    return r;
}

inline bool monomial_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.exps[i] > 0 && b.exps[i] > 0) return false;
    return true;
}

// Total multiplicative well-orders on monomials. Block orders (eliminate,
// product) use grevlex inside each block.
struct MonomialOrder {
    enum class Kind { lex, grevlex, eliminate, product };

    Kind kind = Kind::grevlex;
    int elim_block = 0;       // eliminate: number of leading variables
    std::vector<int> blocks;  // product: block sizes, left to right

    static MonomialOrder Lex() { return {Kind::lex, 0, {}}; }
    static MonomialOrder Grevlex() { return {Kind::grevlex, 0, {}}; }
    static MonomialOrder Eliminate(int k) { return {Kind::eliminate, k, {}}; }
    static MonomialOrder Product(std::vector<int> blocks) {
        return {Kind::product, 0, std::move(blocks)};
    }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && elim_block == o.elim_block && blocks == o.blocks;
    }
};

namespace detail {

inline int compare_grevlex_range(const Monomial& a, const Monomial& b,
                                 std::size_t lo, std::size_t hi) {
    int64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a.exps[i];
        db += b.exps[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace detail

inline int compare_monomials(const Monomial& a, const Monomial& b,
                             const MonomialOrder& ord) {
    if (a.size() != b.size()) throw RingMismatchError("monomial length mismatch");
    const std::size_t n = a.size();
    switch (ord.kind) {
        case MonomialOrder::Kind::lex:
            for (std::size_t i = 0; i < n; ++i)
                if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i] ? -1 : 1;
            return 0;
        case MonomialOrder::Kind::grevlex:
            return detail::compare_grevlex_range(a, b, 0, n);
        case MonomialOrder::Kind::eliminate: {
            std::size_t k = static_cast<std::size_t>(ord.elim_block);
            if (k > n) throw DomainError("eliminate block larger than variable count");
            int64_t da = 0, db = 0;
            for (std::size_t i = 0; i < k; ++i) {
                da += a.exps[i];
                db += b.exps[i];
            }
            if (da != db) return da < db ? -1 : 1;
            return detail::compare_grevlex_range(a, b, 0, n);
        }
        case MonomialOrder::Kind::product: {
            std::size_t lo = 0;
            for (int bs : ord.blocks) {
                std::size_t hi = lo + static_cast<std::size_t>(bs);
                if (hi > n) throw DomainError("product order blocks exceed variable count");
                int c = detail::compare_grevlex_range(a, b, lo, hi);
                if (c != 0) return c;
                lo = hi;
            }
            if (lo != n) throw DomainError("product order blocks do not cover variables");
            return 0;
        }
    }
    return 0;
}

}  // namespace closure
