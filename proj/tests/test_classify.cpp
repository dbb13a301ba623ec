#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace foljet;
using th::I;
using th::P;
using th::W;

TEST_CASE("eigenvalue data of a 2x2 trace and determinant") {
    SECTION("rational pair") {
        auto e = eigen_data(Rational(0), Rational(-1));
        CHECK(e.kind == EigenKind::RationalPair);
        CHECK(*e.lambda1 == 1);
        CHECK(*e.lambda2 == -1);
        CHECK_FALSE(ratio_in_positive_rationals(e));
    }
    SECTION("double eigenvalue") {
        auto e = eigen_data(Rational(-2), Rational(1));
        CHECK(e.kind == EigenKind::Double);
        CHECK(*e.lambda1 == -1);
        CHECK(ratio_in_positive_rationals(e));
    }
    SECTION("irrational real pair") {
        auto e = eigen_data(Rational(1), Rational(-1));
        CHECK(e.kind == EigenKind::IrrationalRealPair);
        CHECK_FALSE(ratio_in_positive_rationals(e));
    }
    SECTION("complex pair") {
        auto e = eigen_data(Rational(0), Rational(1));
        CHECK(e.kind == EigenKind::ComplexPair);
        CHECK_FALSE(ratio_in_positive_rationals(e));
    }
    SECTION("zero eigenvalue gives ratio outside Q+") {
        auto e = eigen_data(Rational(1), Rational(0));
        CHECK_FALSE(ratio_in_positive_rationals(e));
    }
    SECTION("positive rational ratio") {
        auto e = eigen_data(Rational(3), Rational(2));  // eigenvalues 1 and 2
        CHECK(ratio_in_positive_rationals(e));
    }
}

TEST_CASE("classification of planar singular points") {
    SECTION("saddle is reduced") {
        auto c = classify_reduced_2d(W("y*d(x) + x*d(y)"), th::pt({0, 0}));
        CHECK(c.tag == SingTag::Reduced);
        CHECK(c.eigen->kind == EigenKind::RationalPair);
    }
    SECTION("radial point is resonant but not of monomial type") {
        auto c = classify_reduced_2d(W("y*d(x) - x*d(y)"), th::pt({0, 0}));
        CHECK(c.tag == SingTag::PreSimpleA_Resonant);
    }
    SECTION("resonant saddle node matches the interpolation shape") {
        auto c = classify_reduced_2d(W("y*d(x) - (x+y)*d(y)"), th::pt({0, 0}));
        REQUIRE(c.tag == SingTag::TypeC_Shape);
        CHECK(*c.typeC_r == 1);
        CHECK(*c.typeC_a == 1);
    }
    SECTION("interpolation shape with r = 2") {
        auto c = classify_reduced_2d(W("y*d(x) - (2*x + 3*y^2)*d(y)"), th::pt({0, 0}));
        REQUIRE(c.tag == SingTag::TypeC_Shape);
        CHECK(*c.typeC_r == 2);
        CHECK(*c.typeC_a == 3);
    }
    SECTION("nilpotent linear part") {
        auto c = classify_reduced_2d(W("-x^2*d(x) + y*d(y)"), th::pt({0, 0}));
        CHECK(c.tag == SingTag::Nilpotent_NonPreSimple);
    }
    SECTION("vanishing linear part") {
        auto c = classify_reduced_2d(W("x^2*d(x) + y^2*d(y)"), th::pt({0, 0}));
        CHECK(c.tag == SingTag::ZeroLinear_NonPreSimple);
    }
    SECTION("non-singular point") {
        auto c = classify_reduced_2d(W("d(x)"), th::pt({0, 0}));
        CHECK(c.tag == SingTag::NotSingular);
    }
    SECTION("complex rotation is reduced") {
        auto c = classify_reduced_2d(W("x*d(x) + y*d(y)"), th::pt({0, 0}));
        CHECK(c.tag == SingTag::Reduced);
        CHECK(c.eigen->kind == EigenKind::ComplexPair);
    }
    SECTION("irrational hyperbolic pair is reduced") {
        auto c = classify_reduced_2d(W("-x*d(x) + (x + y)*d(y)"), th::pt({0, 0}));
        CHECK(c.tag == SingTag::Reduced);
        CHECK(c.eigen->kind == EigenKind::IrrationalRealPair);
    }
    SECTION("classification at a translated point") {
        auto xv = VarContext::base({"x", "v"});
        auto w = W("(v^2 - v)*d(x) - x*d(v)", xv);
        CHECK(classify_reduced_2d(w, th::pt({0, 0})).tag == SingTag::Reduced);
        CHECK(classify_reduced_2d(w, th::pt({0, 1})).tag ==
              SingTag::PreSimpleA_Resonant);
        CHECK(classify_reduced_2d(w, th::pt({1, 0})).tag == SingTag::NotSingular);
    }
}

TEST_CASE("resonance witnesses") {
    SECTION("known minimal witnesses") {
        CHECK(*resonance_check({Rational(1), Rational(-1)}) == std::vector<int>{1, 1});
        CHECK(*resonance_check({Rational(2), Rational(-3)}) == std::vector<int>{3, 2});
        CHECK(*resonance_check({Rational(1, 2), Rational(-1, 3)}) ==
              std::vector<int>{2, 3});
        CHECK(*resonance_check({Rational(0), Rational(5)}) == std::vector<int>{1, 0});
    }
    SECTION("non-resonant tuples") {
        CHECK_FALSE(resonance_check({Rational(1), Rational(1)}).has_value());
        CHECK_FALSE(resonance_check({Rational(1), Rational(2), Rational(3)}).has_value());
    }
    SECTION("three entries") {
        auto r = resonance_check({Rational(1), Rational(1), Rational(-2)});
        REQUIRE(r.has_value());
        Rational acc = Rational((*r)[0]) + Rational((*r)[1]) - 2 * Rational((*r)[2]);
        CHECK(acc == 0);
        int sum = (*r)[0] + (*r)[1] + (*r)[2];
        CHECK(sum == 3);  // (0,2,1) or (2,0,1); lexicographic tie-break
        CHECK(*r == std::vector<int>{2, 0, 1});
    }
    SECTION("witness really annihilates the tuple") {
        std::mt19937 rng(53);
        std::uniform_int_distribution<int> cd(-4, 4);
        for (int i = 0; i < 100; ++i) {
            std::vector<Rational> l{Rational(cd(rng)), Rational(cd(rng)),
                                    Rational(cd(rng))};
            auto r = resonance_check(l);
            if (!r) continue;
            Rational acc = 0;
            int sum = 0;
            for (std::size_t j = 0; j < 3; ++j) {
                acc += Rational((*r)[j]) * l[j];
                sum += (*r)[j];
            }
            CHECK(acc == 0);
            CHECK(sum >= 1);
        }
    }
}

TEST_CASE("adapted order and multiplicity") {
    SECTION("saddle with both separatrices in the divisor") {
        auto d = adapted_order(W("y*d(x) + x*d(y)"), {0, 1}, th::pt({0, 0}));
        CHECK(d.nu == 0);
        CHECK(d.mu == 0);
        CHECK(d.adapted_b[0] == P("1"));
        CHECK(d.adapted_b[1] == P("1"));
    }
    SECTION("saddle node with only the strong separatrix") {
        auto d = adapted_order(W("y*d(x) - (x+y)*d(y)"), {1}, th::pt({0, 0}));
        CHECK(d.nu == 0);
    }
    SECTION("non-invariant divisor component is rejected") {
        CHECK_THROWS_AS(adapted_order(W("d(x)"), {1}, th::pt({0, 0})),
                        std::invalid_argument);
    }
    SECTION("adapted multiplicity shortcut agrees") {
        auto w = W("(x + y)*d(x) + x*y*d(y)");
        CHECK(adapted_multiplicity(w, {0}, th::pt({0, 0})) ==
              adapted_order(w, {0}, th::pt({0, 0})).mu);
    }
}

TEST_CASE("pre-simplicity relative to a divisor") {
    SECTION("order zero branch") {
        auto r = presimple_check(W("y*d(x) + x*d(y)"), {0, 1}, th::pt({0, 0}));
        CHECK(r.presimple);
        CHECK(r.branch == "nu=0");
    }
    SECTION("nu = mu = 1 with transverse linear part") {
        auto r = presimple_check(W("(x + y)*d(x) + x*y*d(y)"), {0}, th::pt({0, 0}));
        CHECK(r.nu == 1);
        CHECK(r.mu == 1);
        CHECK(r.presimple);
        CHECK(r.branch == "nu=mu=1");
    }
    SECTION("linear part confined to the divisor fails") {
        auto r = presimple_check(W("x*d(x) + x*y*d(y)"), {0}, th::pt({0, 0}));
        CHECK(r.nu == 1);
        CHECK(r.mu == 1);
        CHECK_FALSE(r.presimple);
    }
    SECTION("higher order fails") {
        auto r = presimple_check(W("x^2*d(x) + x*y^2*d(y)"), {0}, th::pt({0, 0}));
        CHECK_FALSE(r.presimple);
    }
}

TEST_CASE("normal form generation") {
    auto xy = th::xy();
    SECTION("diagonal type with two variables") {
        NormalFormSpec s;
        s.type = NormalFormType::A;
        s.t = 2;
        s.lambda = {Rational(1), Rational(-1)};
        CHECK(normal_form_generate(s, xy) == W("y*d(x) - x*d(y)"));
    }
    SECTION("diagonal type with three variables") {
        NormalFormSpec s;
        s.type = NormalFormType::A;
        s.t = 3;
        s.lambda = {Rational(1), Rational(2), Rational(3)};
        auto w = normal_form_generate(s, th::xyz());
        CHECK(w == W("y*z*d(x) + 2*x*z*d(y) + 3*x*y*d(z)", th::xyz()));
        CHECK(integrability_check(w).integrable);
    }
    SECTION("formal-series type gives a saddle node") {
        NormalFormSpec s;
        s.type = NormalFormType::B;
        s.t = 2;
        s.k = 1;
        s.p = {1};
        s.lambda = {Rational(1)};
        auto u = VarContext::base({"u"});
        s.Psi = Polynomial::variable(u, 0);
        CHECK(normal_form_generate(s, xy) == W("y*d(x) + x^2*d(y)"));
    }
    SECTION("interpolation type shorthand") {
        NormalFormSpec s;
        s.type = NormalFormType::C;
        s.r = 1;
        s.a = Rational(1);
        CHECK(normal_form_generate(s, xy) == W("y*d(x) - (x + y)*d(y)"));
        s.r = 2;
        s.a = Rational(3);
        CHECK(normal_form_generate(s, xy) == W("y*d(x) - (2*x + 3*y^2)*d(y)"));
    }
    SECTION("generated forms classify back to their own tag") {
        NormalFormSpec s;
        s.type = NormalFormType::C;
        s.r = 1;
        s.a = Rational(2);
        auto c = classify_reduced_2d(normal_form_generate(s, xy), th::pt({0, 0}));
        REQUIRE(c.tag == SingTag::TypeC_Shape);
        CHECK(*c.typeC_r == 1);
        CHECK(*c.typeC_a == 2);
    }
}

TEST_CASE("jet variety comparison against the crossing divisor") {
    auto O = th::pt({0, 0});
    SECTION("saddle agrees with the crossing jets at every order") {
        auto r = jet_comparison_probe(W("y*d(x) + x*d(y)"), 2, 4, O);
        CHECK(r.verdict == ProbeVerdict::EqualsNCOracle);
        CHECK_FALSE(r.firstDivergenceOrder.has_value());
    }
    SECTION("radial point is strictly larger from order two") {
        auto r = jet_comparison_probe(W("y*d(x) - x*d(y)"), 2, 4, O);
        CHECK(r.verdict == ProbeVerdict::SchemeStrictlyLarger);
        CHECK(*r.firstDivergenceOrder == 2);
        CHECK(*r.componentsContained == 2);
        CHECK(*r.componentsTotal == 2);
    }
    SECTION("saddle node loses one branch") {
        auto r = jet_comparison_probe(W("y*d(x) - (x+y)*d(y)"), 2, 4, O);
        CHECK(r.verdict == ProbeVerdict::Other);
        CHECK(*r.firstDivergenceOrder == 2);
        CHECK(*r.componentsContained == 1);
        CHECK(*r.componentsTotal == 2);
    }
}

TEST_CASE("dimensional type estimates") {
    SECTION("cylinder over a saddle") {
        auto xyz = th::xyz();
        OneForm w(xyz, {P("y", xyz), P("x", xyz), Polynomial::zero(xyz)});
        CHECK(dimensional_type_estimate(w, th::pt({0, 0, 0})) == 2);
    }
    SECTION("regular form") {
        CHECK(dimensional_type_estimate(W("d(x)"), th::pt({0, 0})) == 1);
    }
    SECTION("diagonal type uses exactly its t variables") {
        auto c4 = VarContext::base({"x", "y", "z", "u"});
        NormalFormSpec s;
        s.type = NormalFormType::A;
        s.t = 3;
        s.lambda = {Rational(1), Rational(1), Rational(1)};
        CHECK(dimensional_type_estimate(normal_form_generate(s, c4),
                                        th::pt({0, 0, 0, 0})) == 3);
    }
}
