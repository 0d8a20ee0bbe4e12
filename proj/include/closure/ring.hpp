#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "closure/errors.hpp"
#include "closure/monomial.hpp"

namespace closure {

// A polynomial ring over QQ: named variables, a monomial order, and one
// integer weight vector per variable (multidegrees). The first weight
// component of every variable must be positive; further components are
// unconstrained (the Rees construction uses a 0/1 second component).
struct RingData {
    std::vector<std::string> vars;
    MonomialOrder order;
    std::vector<std::vector<int64_t>> degrees;
};

class PolyRing {
  public:
    PolyRing() = default;

    static PolyRing make(std::vector<std::string> vars,
                         MonomialOrder order = MonomialOrder::Grevlex(),
                         std::vector<std::vector<int64_t>> degrees = {}) {
        auto d = std::make_shared<RingData>();
        if (degrees.empty())
            degrees.assign(vars.size(), {1});
        if (degrees.size() != vars.size())
            throw DomainError("degree vector count must match variable count");
        std::size_t dlen = degrees.empty() ? 1 : degrees.front().size();
        std::unordered_set<std::string> seen;
        for (const auto& v : vars)
            if (!seen.insert(v).second)
                throw DomainError("duplicate variable name: " + v);
        for (const auto& dv : degrees) {
            if (dv.size() != dlen)
                throw DomainError("degree vectors must have equal length");
            if (dv.empty() || dv.front() <= 0)
                throw DomainError("first degree component must be positive");
        }
        d->vars = std::move(vars);
        d->order = std::move(order);
        d->degrees = std::move(degrees);
        return PolyRing(std::move(d));
    }

    bool valid() const { return d_ != nullptr; }
    std::size_t nvars() const { return d_->vars.size(); }
    const std::vector<std::string>& vars() const { return d_->vars; }
    const std::string& var_name(std::size_t i) const { return d_->vars[i]; }
    const MonomialOrder& order() const { return d_->order; }
    const std::vector<std::vector<int64_t>>& degrees() const { return d_->degrees; }
    std::size_t grading_length() const {
        return d_->degrees.empty() ? 1 : d_->degrees.front().size();
    }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < d_->vars.size(); ++i)
            if (d_->vars[i] == name) return static_cast<int>(i);
        return -1;
    }

    PolyRing with_order(MonomialOrder o) const {
        return make(d_->vars, std::move(o), d_->degrees);
    }

    int compare(const Monomial& a, const Monomial& b) const {
        return compare_monomials(a, b, d_->order);
    }

    // Weighted degree of a monomial in grading component k.
    int64_t weighted_degree(const Monomial& m, std::size_t k) const {
        int64_t s = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            s += int64_t{m.exps[i]} * d_->degrees[i][k];
        return s;
    }

    std::vector<int64_t> multidegree(const Monomial& m) const {
        std::vector<int64_t> d(grading_length(), 0);
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = weighted_degree(m, k);
        return d;
    }

    bool same(const PolyRing& o) const { return d_ == o.d_; }

  private:
    explicit PolyRing(std::shared_ptr<const RingData> d) : d_(std::move(d)) {}
    std::shared_ptr<const RingData> d_;
};

inline void require_same_ring(const PolyRing& a, const PolyRing& b) {
    if (!a.same(b)) throw RingMismatchError("operands belong to different rings");
}

}  // namespace closure
