#include <catch2/catch_amalgamated.hpp>

#include "closure/normalize.hpp"
#include "closure/parse.hpp"
#include "test_util.hpp"

using namespace closure;
using testutil::P;
using testutil::PS;

namespace {

QuotientRing quot(const PolyRing& r, const std::vector<std::string>& gens) {
    return QuotientRing(r, Ideal(r, parse_polynomials(r, gens)));
}

// relations of a component map to zero under T_i -> fraction_i
void check_component_sound(const NormalComponent& comp, const Ideal& original) {
    // comp.fractions lists fresh variables first; evaluation wants one image
    // per presentation variable in ring order (originals, then fresh)
    std::size_t k = comp.fresh_vars.size();
    std::size_t n0 = comp.presentation.ambient().nvars() - k;
    std::vector<Fraction> by_var;
    for (std::size_t i = 0; i < n0; ++i) by_var.push_back(comp.fractions[k + i]);
    for (std::size_t i = 0; i < k; ++i) by_var.push_back(comp.fractions[i]);
    for (const auto& rel : comp.presentation.defining().generators()) {
        Fraction image = evaluate_at_fractions(rel, by_var);
        CHECK(contains(original, image.num));
    }
}

}  // namespace

TEST_CASE("jacobian ideal examples") {
    auto R = PolyRing::make({"x", "y", "z"});
    QuotientRing A = quot(R, {"x^6 - z^6 - y^2*z^4"});
    Ideal jac = jacobian_ideal(A);
    CHECK(equals(jac, Ideal(R, PS(R, {"x^6 - z^6 - y^2*z^4", "6*x^5", "-2*y*z^4",
                                      "-6*z^5 - 4*y^2*z^3"}))));

    auto R2 = PolyRing::make({"x", "y"});
    QuotientRing cusp = quot(R2, {"x^3 - y^2"});
    CHECK(equals(jacobian_ideal(cusp), Ideal(R2, PS(R2, {"x^3 - y^2", "3*x^2", "-2*y"}))));

    QuotientRing conic = quot(R2, {"x^2 + y^2 - 1"});
    CHECK(is_unit_ideal(jacobian_ideal(conic)));
}

TEST_CASE("test ideal: cusp and smooth conic") {
    auto R2 = PolyRing::make({"x", "y"});
    QuotientRing cusp = quot(R2, {"x^3 - y^2"});
    auto t = test_ideal(cusp);
    REQUIRE(std::holds_alternative<Ideal>(t));
    CHECK(equals(std::get<Ideal>(t), Ideal(R2, PS(R2, {"x", "y"}))));

    QuotientRing conic = quot(R2, {"x^2 + y^2 - 1"});
    CHECK(std::holds_alternative<NormalCertificate>(test_ideal(conic)));
}

TEST_CASE("test ideal: single-element strategy splits the union of planes") {
    auto R = PolyRing::make({"x", "y", "z"});
    QuotientRing A = quot(R, {"(x-y)*(x-z)*(y-z)"});
    NormalizeOptions opts;
    opts.strategy = TestIdealStrategy::single_element_radical;
    auto t = test_ideal(A, opts);
    // every partial vanishes on one plane, so the strategy reports a split
    REQUIRE(std::holds_alternative<SplitSignal>(t));
    Polynomial z = std::get<SplitSignal>(t).zerodivisor;
    CHECK_FALSE(A.element_is_zero(z));
    CHECK_FALSE(is_nonzerodivisor(A, z));
}

TEST_CASE("hom generators: cusp extends, product ring splits") {
    auto R2 = PolyRing::make({"x", "y"});
    QuotientRing cusp = quot(R2, {"x^3 - y^2"});
    Ideal J(R2, PS(R2, {"x", "y", "x^3 - y^2"}));
    auto h = hom_generators(cusp, J);
    REQUIRE(std::holds_alternative<HomGenerators>(h));
    auto hg = std::get<HomGenerators>(h);
    CHECK(hg.vs.size() == 1);
    // v/f equals y/x in the fraction field of the cusp
    Fraction got = reduce_fraction(hg.vs[0], hg.f);
    CHECK(cross_equal(got, Fraction{P(R2, "y"), P(R2, "x")}, cusp.defining()));

    QuotientRing cross = quot(R2, {"x*y"});
    Ideal Jc(R2, PS(R2, {"x", "y"}));
    auto hc = hom_generators(cross, Jc);
    REQUIRE(std::holds_alternative<SplitSignal>(hc));
}

TEST_CASE("hom generators: normal input certifies equality") {
    // QQ[x,y] itself with the (radical) test ideal (x, y)
    auto R2 = PolyRing::make({"x", "y"});
    QuotientRing A(R2, Ideal::zero(R2));
    Ideal J(R2, PS(R2, {"x", "y"}));
    CHECK(std::holds_alternative<EqualityCertificate>(hom_generators(A, J)));
}

TEST_CASE("dejong step: cusp presentation") {
    auto R2 = PolyRing::make({"x", "y"});
    QuotientRing cusp = quot(R2, {"x^3 - y^2"});
    auto step = dejong_step(cusp);
    REQUIRE(std::holds_alternative<ExtendedStep>(step));
    const auto& p = std::get<ExtendedStep>(step).presentation;
    REQUIRE(p.fresh_names.size() == 1);
    const PolyRing& NR = p.ring.ambient();
    CHECK(NR.nvars() == 3);
    Ideal expected(NR, PS(NR, {"x^3 - y^2", "x*T1 - y", "y*T1 - x^2", "T1^2 - x"}));
    CHECK(equals(p.ring.defining(), expected));
}

TEST_CASE("dejong step: smooth conic is normal, planes split") {
    auto R2 = PolyRing::make({"x", "y"});
    CHECK(std::holds_alternative<NormalStep>(dejong_step(quot(R2, {"x^2 + y^2 - 1"}))));

    auto R = PolyRing::make({"x", "y", "z"});
    auto step = dejong_step(quot(R, {"(x-y)*(x-z)*(y-z)"}));
    REQUIRE(std::holds_alternative<SplitStep>(step));
    const auto& s = std::get<SplitStep>(step);
    CHECK(equals(intersect(s.left.defining(), s.right.defining()),
                 Ideal(R, PS(R, {"(x-y)*(x-z)*(y-z)"}))));
}

TEST_CASE("normalize: cusp") {
    auto R2 = PolyRing::make({"x", "y"});
    QuotientRing cusp = quot(R2, {"x^3 - y^2"});
    NormalizeOptions opts;
    opts.collect_trace = true;
    auto res = normalize_ring(cusp, opts);
    REQUIRE(res.components.size() == 1);
    const auto& c = res.components[0];
    REQUIRE(c.fresh_vars.size() == 1);
    CHECK(c.fresh_vars[0] == "T1");
    // fractions: y/x (up to cross-multiplication), then x, y
    REQUIRE(c.fractions.size() == 3);
    CHECK(cross_equal(c.fractions[0], Fraction{P(R2, "y"), P(R2, "x")}, cusp.defining()));
    CHECK(c.fractions[1] == trivial_fraction(P(R2, "x")));
    CHECK(c.fractions[2] == trivial_fraction(P(R2, "y")));
    const PolyRing& NR = c.presentation.ambient();
    Ideal expected(NR, PS(NR, {"x^3 - y^2", "x*T1 - y", "y*T1 - x^2", "T1^2 - x"}));
    CHECK(equals(c.presentation.defining(), expected));
    check_component_sound(c, cusp.defining());
    // normap fixes the original variables
    CHECK(c.normap.apply(P(R2, "x^3 - y^2")).is_zero());

    // the cusp normalizes to a polynomial ring: QQ[T1] after eliminating x, y
    // is not required by the presentation convention (original vars stay),
    // but the component must be normal: re-running returns it unchanged
    NormalizeOptions again;
    again.assume_reduced = true;
    auto res2 = normalize_ring(c.presentation, again);
    REQUIRE(res2.components.size() == 1);
    CHECK(res2.components[0].fresh_vars.empty());
    CHECK(equals(res2.components[0].presentation.defining(), c.presentation.defining()));
}

TEST_CASE("normalize: hom property of emitted fractions") {
    auto R2 = PolyRing::make({"x", "y"});
    QuotientRing cusp = quot(R2, {"x^3 - y^2"});
    NormalizeOptions opts;
    opts.collect_trace = true;
    auto res = normalize_ring(cusp, opts);
    for (const auto& tr : res.trace) {
        // v * j ∈ f*J + I for every emitted generator v and every j in J
        std::vector<Polynomial> w;
        for (const auto& j : tr.test_ideal.generators()) w.push_back(tr.f * j);
        for (const auto& g : tr.ring.defining().generators()) w.push_back(g);
        Ideal fJI(tr.ring.ambient(), w);
        for (const auto& v : tr.vs)
            for (const auto& j : tr.test_ideal.generators())
                CHECK(contains(fJI, v * j));
        // monotonicity: (f) + I strictly grew
        std::vector<Polynomial> fi = tr.ring.defining().generators();
        fi.push_back(tr.f);
        Ideal fplusI(tr.ring.ambient(), fi);
        bool strict = false;
        for (const auto& v : tr.vs)
            if (!contains(fplusI, v)) strict = true;
        CHECK(strict);
    }
}

TEST_CASE("normalize: smooth conic is already normal") {
    auto R2 = PolyRing::make({"x", "y"});
    auto res = normalize_ring(quot(R2, {"x^2 + y^2 - 1"}));
    REQUIRE(res.components.size() == 1);
    CHECK(res.components[0].fresh_vars.empty());
    CHECK(equals(res.components[0].presentation.defining(),
                 Ideal(res.components[0].presentation.ambient(),
                       PS(res.components[0].presentation.ambient(), {"x^2 + y^2 - 1"}))));
}

TEST_CASE("normalize: union of three planes splits into three normal components") {
    auto R = PolyRing::make({"x", "y", "z"});
    QuotientRing A = quot(R, {"(x-y)*(x-z)*(y-z)"});
    auto res = normalize_ring(A);
    REQUIRE(res.components.size() == 3);
    Ideal I0(R, PS(R, {"(x-y)*(x-z)*(y-z)"}));
    std::vector<Ideal> defs;
    for (const auto& c : res.components) {
        CHECK(c.fresh_vars.empty());
        const auto& gb = c.presentation.defining().groebner().elements;
        // empty or all-linear with (vars - rank) = 2
        for (const auto& g : gb) CHECK(g.total_degree() == 1);
        CHECK(c.presentation.ambient().nvars() - gb.size() == 2);
        defs.push_back(Ideal(R, embed_by_names(c.presentation.defining().generators(), R)));
    }
    // split soundness end to end: the three planes intersect in the input
    Ideal meet = intersect(intersect(defs[0], defs[1]), defs[2]);
    CHECK(equals(meet, I0));
}

TEST_CASE("normalize: not-reduced input is rejected") {
    auto R2 = PolyRing::make({"x", "y"});
    CHECK_THROWS_AS(normalize_ring(quot(R2, {"x^2"})), NotReducedError);
}

TEST_CASE("normalize: two crossing lines split") {
    auto R2 = PolyRing::make({"x", "y"});
    auto res = normalize_ring(quot(R2, {"x*y"}));
    REQUIRE(res.components.size() == 2);
    for (const auto& c : res.components) {
        CHECK(c.fresh_vars.empty());
        CHECK(c.presentation.defining().groebner().elements.size() == 1);
    }
}

TEST_CASE("ic_fractions: cusp") {
    auto R2 = PolyRing::make({"x", "y"});
    QuotientRing cusp = quot(R2, {"x^3 - y^2"});
    auto fr = ic_fractions(cusp);
    REQUIRE(fr.size() == 1);
    REQUIRE(fr[0].size() == 3);
    CHECK(cross_equal(fr[0][0], Fraction{P(R2, "y"), P(R2, "x")}, cusp.defining()));
}
