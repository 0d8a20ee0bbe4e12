#include <catch2/catch_amalgamated.hpp>

#include "closure/parse.hpp"
#include "closure/radical.hpp"
#include "closure/rees.hpp"
#include "test_util.hpp"

using namespace closure;
using testutil::P;
using testutil::PS;

namespace {

// Integral closure of a monomial ideal in two variables: lattice points of
// the Newton polyhedron conv(exponents) + first orthant. A 2D point lies in
// the hull iff it dominates a convex combination of two exponent vectors.
bool in_newton_polyhedron(const std::vector<std::pair<int, int>>& vs, int px, int py) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j) {
            // lambda*v_i + (1-lambda)*v_j <= p for some lambda in [0,1]
            Rational lo(0), hi(1);
            bool empty = false;
            auto restrict_interval = [&](long vi, long vj, long p) {
                // lambda*vi + (1-lambda)*vj <= p  <=>  lambda*(vi - vj) <= p - vj
                long a = vi - vj, b = p - vj;
                if (a == 0) {
                    if (b < 0) empty = true;
                } else if (a > 0) {
                    Rational cap = make_rational(b, a);
                    if (cap < hi) hi = cap;
                } else {
                    Rational floor_ = make_rational(b, a);
                    if (floor_ > lo) lo = floor_;
                }
            };
            restrict_interval(vs[i].first, vs[j].first, px);
            restrict_interval(vs[i].second, vs[j].second, py);
            if (!empty && lo <= hi) return true;
        }
    return false;
}

Ideal newton_closure_oracle(const PolyRing& R, const std::vector<std::pair<int, int>>& vs) {
    int mx = 0, my = 0;
    for (auto& v : vs) {
        mx = std::max(mx, v.first);
        my = std::max(my, v.second);
    }
    std::vector<Polynomial> gens;
    for (int a = 0; a <= mx; ++a)
        for (int b = 0; b <= my; ++b)
            if (in_newton_polyhedron(vs, a, b)) {
                Monomial m(2);
                m.exps[0] = a;
                m.exps[1] = b;
                gens.push_back(Polynomial::term(R, m, Rational(1)));
            }
    return minimal_generators(Ideal(R, gens));
}

}  // namespace

TEST_CASE("blowup: principal ideal gives a polynomial extension") {
    auto R = PolyRing::make({"x", "y"});
    auto B = blowup(Ideal(R, PS(R, {"x^2 - y^3"})));
    CHECK(B.defining.generators().empty());
    CHECK(B.ambient.nvars() == 3);
    CHECK(B.ambient.degrees()[2] == std::vector<int64_t>{3, 1});
    CHECK_THROWS_AS(blowup(Ideal::zero(R)), DomainError);
}

TEST_CASE("blowup: Koszul relations of two generators") {
    auto R = PolyRing::make({"x", "y"});
    auto B = blowup(Ideal(R, PS(R, {"x^2", "y^3"})));
    REQUIRE(B.defining.generators().size() == 1);
    CHECK(equals(B.defining, Ideal(B.ambient, PS(B.ambient, {"y^3*Y1 - x^2*Y2"}))));

    auto B2 = blowup(Ideal(R, PS(R, {"x", "y"})));
    CHECK(equals(B2.defining, Ideal(B2.ambient, PS(B2.ambient, {"y*Y1 - x*Y2"}))));
}

TEST_CASE("blowup: soundness under Y_i -> t*g_i and bihomogeneity") {
    auto R = PolyRing::make({"x", "y"});
    Ideal I(R, PS(R, {"x^2", "x*y^4", "y^5"}));
    auto B = blowup(I);
    // substitution ring k[t, x, y]
    auto S = PolyRing::make({"t", "x", "y"});
    std::vector<Polynomial> images;
    images.push_back(parse_polynomial(S, "x"));
    images.push_back(parse_polynomial(S, "y"));
    Polynomial t = parse_polynomial(S, "t");
    for (const auto& g : B.generator_images) images.push_back(t * embed_by_names(g, S));
    RingMap phi(B.ambient, S, images);
    for (const auto& rel : B.defining.generators()) {
        CHECK(phi.apply(rel).is_zero());
        CHECK(rel.multidegree().has_value());  // bihomogeneous
    }
}

TEST_CASE("ideal closure: monomial ideal of the worked example") {
    auto R = PolyRing::make({"x", "y"});
    Ideal I(R, PS(R, {"x^2", "x*y^4", "y^5"}));
    Ideal C = ideal_integral_closure(I);
    Ideal expected(R, PS(R, {"x^2", "x*y^3", "y^5"}));
    CHECK(equals(C, expected));

    // Newton polyhedron oracle agrees
    Ideal oracle = newton_closure_oracle(R, {{2, 0}, {1, 4}, {0, 5}});
    CHECK(equals(C, oracle));

    // containment I ⊆ closure(I) ⊆ radical(I)
    for (const auto& g : I.generators()) CHECK(contains(C, g));
    Ideal rad = radical(I);
    for (const auto& g : C.generators()) CHECK(contains(rad, g));

    // idempotence
    CHECK(equals(ideal_integral_closure(C), C));
}

TEST_CASE("ideal closure: principal ideals are integrally closed") {
    auto R = PolyRing::make({"x", "y"});
    Ideal I(R, PS(R, {"x^3"}));
    CHECK(equals(ideal_integral_closure(I), I));
}

TEST_CASE("ideal closure: more monomial ideals against the oracle") {
    auto R = PolyRing::make({"x", "y"});
    std::vector<std::vector<std::pair<int, int>>> cases = {
        {{3, 0}, {0, 3}},
        {{4, 0}, {1, 2}, {0, 5}},
        {{2, 1}, {1, 3}},
        {{5, 0}, {0, 2}},
    };
    for (const auto& vs : cases) {
        std::vector<Polynomial> gens;
        for (auto& v : vs) {
            Monomial m(2);
            m.exps[0] = v.first;
            m.exps[1] = v.second;
            gens.push_back(Polynomial::term(R, m, Rational(1)));
        }
        Ideal I(R, gens);
        CHECK(equals(ideal_integral_closure(I), newton_closure_oracle(R, vs)));
    }
}
