#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace foljet;
using th::I;
using th::P;
using th::W;

namespace {

std::vector<Chart> origin_charts() {
    return blowup_point_charts(th::xy(), th::pt({0, 0}), {{"v"}, {"b"}});
}

}  // namespace

TEST_CASE("blow-up charts at the origin") {
    auto cs = origin_charts();
    REQUIRE(cs.size() == 2);
    SECTION("x-chart: y = x v") {
        auto& c = cs[0];
        CHECK(c.j == 0);
        CHECK(c.ctx->name(0) == "x");
        CHECK(c.ctx->name(1) == "v");
        CHECK(c.phi[0] == P("x", c.ctx));
        CHECK(c.phi[1] == P("x*v", c.ctx));
        CHECK(c.exceptional() == P("x", c.ctx));
        CHECK(c.description() == "y = x*v");
    }
    SECTION("y-chart: x = y b") {
        auto& c = cs[1];
        CHECK(c.j == 1);
        CHECK(c.ctx->name(0) == "b");
        CHECK(c.ctx->name(1) == "y");
        CHECK(c.phi[0] == P("y*b", c.ctx));
        CHECK(c.phi[1] == P("y", c.ctx));
        CHECK(c.exceptional() == P("y", c.ctx));
    }
}

TEST_CASE("blow-up charts at a non-origin centre") {
    // centre (0, 1) in an (x, v) plane, as it appears after a first blow-up
    auto xv = VarContext::base({"x", "v"});
    auto cs = blowup_point_charts(xv, {Rational(0), Rational(1)}, {{"t"}, {"s"}});
    SECTION("chart v - 1 = x t") {
        auto& c = cs[0];
        CHECK(c.phi[1] == P("1 + x*t", c.ctx));
        CHECK(c.exceptional() == P("x", c.ctx));
    }
    SECTION("chart x = (v - 1) s") {
        auto& c = cs[1];
        CHECK(c.phi[0] == P("(v - 1)*s", c.ctx));
        CHECK(c.exceptional() == P("v - 1", c.ctx));
    }
}

TEST_CASE("transform of y^2dx - x^2dy") {
    auto w = W("y^2*d(x) - x^2*d(y)");
    auto cs = origin_charts();
    SECTION("x-chart") {
        auto t = transform_form(w, cs[0]);
        CHECK(t.rawForm == W("x^2*(v^2 - v)*d(x) - x^3*d(v)", cs[0].ctx));
        CHECK(t.removedFactor == P("x^2", cs[0].ctx));
        CHECK(t.exceptionalMultiplicity == 2);
        CHECK(t.saturatedForm == W("(v^2 - v)*d(x) - x*d(v)", cs[0].ctx));
        CHECK(t.exceptionalInvariant);
    }
    SECTION("y-chart") {
        auto t = transform_form(w, cs[1]);
        CHECK(t.exceptionalMultiplicity == 2);
        CHECK(t.saturatedForm == W("(b - b^2)*d(y) + y*d(b)", cs[1].ctx));
        CHECK(t.exceptionalInvariant);
    }
}

TEST_CASE("transform of the radial form is dicritical") {
    auto t = transform_form(W("y*d(x) - x*d(y)"), origin_charts()[0]);
    CHECK(t.rawForm == W("-x^2*d(v)", t.chart.ctx));
    CHECK(t.saturatedForm == W("-d(v)", t.chart.ctx));
    CHECK(t.exceptionalMultiplicity == 2);
    CHECK_FALSE(t.exceptionalInvariant);
}

TEST_CASE("second-level transform at the resonant point") {
    // blow up (0,1) of the saturated x-chart form of y^2dx - x^2dy
    auto xv = VarContext::base({"x", "v"});
    auto w = W("(v^2 - v)*d(x) - x*d(v)", xv);
    auto cs = blowup_point_charts(xv, {Rational(0), Rational(1)}, {{"t"}, {"s"}});
    SECTION("chart v - 1 = x t becomes dicritical") {
        auto t = transform_form(w, cs[0]);
        CHECK(t.saturatedForm == W("t^2*d(x) - d(t)", t.chart.ctx));
        CHECK(t.exceptionalMultiplicity == 2);
        CHECK_FALSE(t.exceptionalInvariant);
    }
    SECTION("chart x = (v - 1) s agrees and is dicritical too") {
        auto t = transform_form(w, cs[1]);
        // with w = v - 1 the form reads w^2((w + 1)ds + sdw); the divisor
        // v = 1 cuts the level sets of sv transversally
        CHECK(t.removedFactor == P("(v - 1)^2", t.chart.ctx));
        CHECK(t.saturatedForm == W("v*d(s) + s*d(v)", t.chart.ctx));
        CHECK(t.exceptionalMultiplicity == 2);
        CHECK_FALSE(t.exceptionalInvariant);
    }
}

TEST_CASE("strict transforms of curves") {
    auto cs = origin_charts();
    SECTION("parabola in the x-chart") {
        auto S = strict_transform_scheme(I("[y - x^2]"), cs[0]);
        CHECK(ideal_equal(S, Ideal(cs[0].ctx, {P("v - x", cs[0].ctx)})));
    }
    SECTION("cross separates into the axes") {
        auto Sx = strict_transform_scheme(I("[x*y]"), cs[0]);
        CHECK(ideal_equal(Sx, Ideal(cs[0].ctx, {P("v", cs[0].ctx)})));
        auto Sy = strict_transform_scheme(I("[x*y]"), cs[1]);
        CHECK(ideal_equal(Sy, Ideal(cs[1].ctx, {P("b", cs[1].ctx)})));
    }
    SECTION("cusp strict transform is smooth in the x-chart") {
        auto S = strict_transform_scheme(I("[y^2 - x^3]"), cs[0]);
        CHECK(ideal_equal(S, Ideal(cs[0].ctx, {P("v^2 - x", cs[0].ctx)})));
    }
}

TEST_CASE("jets are functorial through a chart") {
    auto cs = origin_charts();
    auto& c = cs[0];
    auto m = induced_jet_map(c.phi, th::xy(), 2);
    // a jet on the strict transform maps to a jet on the curve
    auto S = strict_transform_scheme(I("[y - x^2]"), c);
    auto JS = jet_ideal_scheme(S, 2);
    auto JC = jet_ideal_scheme(I("[y - x^2]"), 2);
    auto pulled = m.pullback(JC);
    // pulled generators vanish on the jets of the strict transform away from
    // the exceptional divisor: check membership after saturating by a_{1,0}
    auto sat = saturate_ideal(JS.ideal(), m.source.var(1, 0));
    for (auto& [k, g] : pulled.tagged) CHECK(ideal_member(g, sat));
}

TEST_CASE("blow-down recovers the form up to the removed factor") {
    std::mt19937 rng(41);
    auto cs = origin_charts();
    for (int i = 0; i < 20; ++i) {
        OneForm w(th::xy(), {th::random_poly(rng, th::xy(), 2, 3),
                             th::random_poly(rng, th::xy(), 2, 3)});
        if (w.is_zero()) continue;
        auto t = transform_form(w, cs[0]);
        CHECK(t.rawForm == t.saturatedForm * t.removedFactor);
    }
}
