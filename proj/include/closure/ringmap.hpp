#pragma once

#include <optional>
#include <vector>

#include "closure/ideal.hpp"

namespace closure {

// Substitute one variable by a polynomial of the same ring.
inline Polynomial substitute_variable(const Polynomial& f, std::size_t var,
                                      const Polynomial& value) {
    const PolyRing& R = f.ring();
    require_same_ring(R, value.ring());
    std::vector<Polynomial> powers = {Polynomial::constant(R, Rational(1))};
    Polynomial out = Polynomial::zero(R);
    for (const auto& t : f.terms()) {
        int32_t e = t.m.exps[var];
        while (static_cast<int32_t>(powers.size()) <= e)
            powers.push_back(powers.back() * value);
        Monomial m = t.m;
        m.exps[var] = 0;
        out = out + Polynomial::term(R, std::move(m), t.c) * powers[e];
    }
    return out;
}

// Ring homomorphism determined by one image per source variable. The target
// may be a quotient ring, in which case results are normal forms.
class RingMap {
  public:
    RingMap() = default;

    RingMap(PolyRing source, PolyRing target, std::vector<Polynomial> images,
            std::optional<Ideal> target_defining = std::nullopt)
        : source_(std::move(source)),
          target_(std::move(target)),
          images_(std::move(images)),
          defining_(std::move(target_defining)) {
        if (images_.size() != source_.nvars())
            throw DomainError("ring map needs one image per source variable");
        for (const auto& p : images_) require_same_ring(target_, p.ring());
        if (defining_) require_same_ring(target_, defining_->ring());
    }

    static RingMap identity(const PolyRing& R) {
        std::vector<Polynomial> images;
        for (std::size_t i = 0; i < R.nvars(); ++i)
            images.push_back(Polynomial::variable(R, i));
        return RingMap(R, R, std::move(images));
    }

    const PolyRing& source() const { return source_; }
    const PolyRing& target() const { return target_; }
    const std::vector<Polynomial>& images() const { return images_; }
    const std::optional<Ideal>& target_defining() const { return defining_; }

    Polynomial apply(const Polynomial& f) const {
        require_same_ring(source_, f.ring());
        std::vector<std::vector<Polynomial>> powers(source_.nvars());
        for (auto& p : powers) p.push_back(Polynomial::constant(target_, Rational(1)));
        Polynomial out = Polynomial::zero(target_);
        for (const auto& t : f.terms()) {
            Polynomial prod = Polynomial::constant(target_, t.c);
            for (std::size_t i = 0; i < source_.nvars(); ++i) {
                int32_t e = t.m.exps[i];
                if (e == 0) continue;
                while (static_cast<int32_t>(powers[i].size()) <= e)
                    powers[i].push_back(powers[i].back() * images_[i]);
                prod = prod * powers[i][e];
            }
            out = out + prod;
        }
        if (defining_) out = normal_form(out, defining_->groebner());
        return out;
    }

  private:
    PolyRing source_;
    PolyRing target_;
    std::vector<Polynomial> images_;
    std::optional<Ideal> defining_;
};

}  // namespace closure
