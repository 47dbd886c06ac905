#include <doctest.h>

#include "helpers.hpp"

using namespace tjurina;
using testutil::global_ctx;
using testutil::local_ctx;
using testutil::pp;

TEST_CASE("parser reads the grammar") {
    auto ctx = global_ctx({"x", "y", "w", "v"});

    auto f = pp("x*y^2 - 3/2*w", ctx);
    REQUIRE(f.terms().size() == 2);
    CHECK(f.to_string() == "x*y^2 - 3/2*w");

    CHECK(pp("0", ctx).is_zero());
    CHECK(pp(" 0 ", ctx).is_zero());

    auto pik = pp("y+v^3", ctx);
    CHECK(pik == pp("v^3", ctx) + pp("y", ctx));

    CHECK(pp("(x+y)*(x-y)", ctx) == pp("x^2-y^2", ctx));
    CHECK(pp("2/4", ctx) == Polynomial::constant(ctx, Rat(1, 2)));
    CHECK(pp("-x", ctx) == -pp("x", ctx));
}

TEST_CASE("parser rejects bad input with positions") {
    auto ctx = global_ctx({"x", "y"});
    CHECK_THROWS_WITH_AS(pp("2x", ctx), doctest::Contains("position 1"), Error);
    CHECK_THROWS_AS(pp("x y", ctx), Error);
    CHECK_THROWS_AS(pp("x+", ctx), Error);
    CHECK_THROWS_AS(pp("x*", ctx), Error);
    CHECK_THROWS_AS(pp("(x", ctx), Error);
    CHECK_THROWS_AS(pp("x^y", ctx), Error);
    CHECK_THROWS_AS(pp("z", ctx), Error); // unknown variable
    try {
        pp("x+q*y", ctx);
        FAIL("expected parse error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ParseError);
        CHECK(std::string(e.what()).find("q") != std::string::npos);
    }
}

TEST_CASE("arithmetic examples") {
    auto ctx = global_ctx({"x", "y"});
    auto x = pp("x", ctx), y = pp("y", ctx);
    CHECK((x + y) * (x - y) == pp("x^2 - y^2", ctx));
    auto f = pp("3*x^2*y - 1/3", ctx);
    CHECK(f + Polynomial::zero(ctx) == f);
    CHECK((x + y).pow(2) == pp("x^2 + 2*x*y + y^2", ctx));
    CHECK((x + y).pow(0).is_one());

    auto other = global_ctx({"x", "y"});
    CHECK_THROWS_AS(x + pp("x", other), Error); // distinct contexts never mix
}

TEST_CASE("derivative examples and rules") {
    auto ctx = global_ctx({"x", "y", "v"});
    CHECK(pp("x^2*y", ctx).derivative("x") == pp("2*x*y", ctx));
    CHECK(pp("y+v^3", ctx).derivative("v") == pp("3*v^2", ctx));
    CHECK(pp("5/7", ctx).derivative("x").is_zero());
    CHECK_THROWS_AS(pp("x", ctx).derivative("t"), Error);

    testutil::Rnd rnd(20260810);
    for (int i = 0; i < 40; ++i) {
        auto f = rnd.poly(ctx, 4, 3);
        auto g = rnd.poly(ctx, 4, 3);
        int v = rnd.uniform(0, 2);
        CHECK((f + g).derivative(v) == f.derivative(v) + g.derivative(v));
        CHECK((f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v));
    }
}

TEST_CASE("substitution implements chart restriction and fiber selection") {
    auto ctx = global_ctx({"s1", "s2", "a", "x1"});
    auto f = pp("s1*a + s2*x1", ctx);
    auto target = global_ctx({"s2", "a", "x1"});
    std::map<std::string, Polynomial> bind{{"s1", Polynomial::constant(target, 1)}};
    CHECK(f.substitute(bind, target) == pp("a + s2*x1", target));

    CHECK(f.substitute(std::map<std::string, Polynomial>{}, ctx) == f);

    auto ctx2 = global_ctx({"s1", "s2", "e", "y"});
    auto g = pp("s1*y - s2*e", ctx2);
    auto t2 = global_ctx({"s1", "s2", "y"});
    std::map<std::string, Rat> vals{{"e", Rat(1)}};
    CHECK(g.substitute(vals, t2) == pp("s1*y - s2", t2));

    // unbound variable missing from the target is an error
    std::map<std::string, Polynomial> none;
    CHECK_THROWS_AS(f.substitute(none, global_ctx({"s1"})), Error);
}

TEST_CASE("jet truncation") {
    auto ctx = global_ctx({"x", "y", "v"});
    CHECK(pp("x + x*y", ctx).jet(1) == pp("x", ctx));
    CHECK(pp("y + v^3", ctx).jet(1) == pp("y", ctx));
    auto f = pp("x^5*y^5 + v - 2", ctx);
    CHECK(f.jet(1000) == f);
    // degree counted only in the selected variables
    std::vector<int> only_v{ctx->require("v")};
    CHECK(pp("x^3*v + v^2", ctx).jet(1, only_v) == pp("x^3*v", ctx));
}

TEST_CASE("monomial order axioms hold on random triples") {
    auto check_ctx = [](const Ctx& ctx) {
        testutil::Rnd rnd(7);
        for (int i = 0; i < 300; ++i) {
            Monomial a = rnd.monomial(ctx, 5);
            Monomial b = rnd.monomial(ctx, 5);
            Monomial c = rnd.monomial(ctx, 5);
            // totality / antisymmetry
            CHECK(ctx->compare(a, b) == -ctx->compare(b, a));
            CHECK((ctx->compare(a, b) == 0) == (a == b));
            // transitivity
            if (ctx->compare(a, b) >= 0 && ctx->compare(b, c) >= 0)
                CHECK(ctx->compare(a, c) >= 0);
            // multiplicativity
            int before = ctx->compare(a, b);
            CHECK(ctx->compare(mono_mul(a, c), mono_mul(b, c)) == before);
        }
    };
    check_ctx(global_ctx({"x", "y", "z"}));
    check_ctx(local_ctx({"x", "y", "z"}));
    check_ctx(testutil::mixed_ctx({"s1", "s2"}, {"x", "y"}));
}

TEST_CASE("1 is minimal iff all blocks are global") {
    auto g = global_ctx({"x", "y"});
    Monomial one = g->one();
    testutil::Rnd rnd(11);
    for (int i = 0; i < 100; ++i) {
        Monomial m = rnd.monomial(g, 4);
        if (!(m == one)) CHECK(g->compare(m, one) > 0);
    }
    CHECK(g->is_global());

    auto l = testutil::mixed_ctx({"s1"}, {"x"});
    CHECK(!l->is_global());
    CHECK(l->compare(l->var_mono(l->require("x")), one) < 0); // some variable below 1
}

TEST_CASE("print then parse is the identity") {
    auto run = [](const Ctx& ctx, unsigned seed) {
        testutil::Rnd rnd(seed);
        for (int i = 0; i < 120; ++i) {
            auto f = rnd.poly(ctx, rnd.uniform(0, 6), 4);
            CAPTURE(f.to_string());
            CHECK(parse_polynomial(f.to_string(), ctx) == f);
        }
    };
    run(global_ctx({"x", "y", "z"}), 101);
    run(local_ctx({"u", "v"}), 102);
    run(testutil::mixed_ctx({"s1", "s2"}, {"x", "y"}), 103);
}
