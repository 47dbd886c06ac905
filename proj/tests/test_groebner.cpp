#include <doctest.h>

#include <tjurina/groebner.hpp>

#include "helpers.hpp"
#include "oracle.hpp"

using namespace tjurina;
using testutil::global_ctx;
using testutil::local_ctx;
using testutil::pp;
using testutil::ppv;

namespace {

bool same_module(const std::vector<ModuleElement>& a, const std::vector<ModuleElement>& b,
                 const ModuleOrder& ord, int rank) {
    StdBasis ba = std_basis(a, ord, rank);
    StdBasis bb = std_basis(b, ord, rank);
    for (const auto& g : a)
        if (!is_member(g, bb)) return false;
    for (const auto& g : b)
        if (!is_member(g, ba)) return false;
    return true;
}

} // namespace

TEST_CASE("std_basis on simple ideals") {
    auto g2 = global_ctx({"x", "y"});

    auto b1 = std_basis(ppv({"x", "y"}, g2), g2);
    CHECK(b1.gens.size() == 2);
    CHECK(b1.complete);
    CHECK(verify_spairs(b1));

    // x^3 = -x*(y - x^2) + x*y lies in the ideal; under degrevlex the lead of
    // y - x^2 is x^2, so the reduced basis is {x^2 - y, x*y, y^2} and x^3 is
    // reducible. Under the local order the lead is y and x^3 shows up as a
    // basis element.
    auto b2 = std_basis(ppv({"y - x^2", "x*y"}, g2), g2);
    CHECK(normal_form(pp("x^3", g2), b2).is_zero());
    REQUIRE(b2.gens.size() == 3);
    CHECK(b2.gens[0].comp(0) == pp("x^2 - y", g2));
    CHECK(b2.gens[1].comp(0) == pp("x*y", g2));
    CHECK(b2.gens[2].comp(0) == pp("y^2", g2));
    CHECK(verify_spairs(b2));

    auto l2 = local_ctx({"x", "y"});
    auto b2l = std_basis(ppv({"y - x^2", "x*y"}, l2), l2);
    bool has_x3 = false;
    for (const auto& g : b2l.gens)
        if (g.comp(0) == pp("x^3", l2)) has_x3 = true;
    CHECK(has_x3);

    auto l1 = local_ctx({"x"});
    auto b3 = std_basis(ppv({"x - x^2"}, l1), l1);
    REQUIRE(b3.gens.size() == 1);
    CHECK(b3.gens[0].comp(0) == pp("x", l1)); // 1 - x is a local unit
}

TEST_CASE("normal form and membership") {
    auto g2 = global_ctx({"x", "y"});
    auto bx = std_basis(ppv({"x"}, g2), g2);
    CHECK(normal_form(pp("x^3", g2), bx).is_zero());
    CHECK(normal_form(pp("y", g2), bx) == pp("y", g2));

    auto l1 = local_ctx({"x"});
    auto bl = std_basis(ppv({"x - x^2"}, l1), l1);
    CHECK(normal_form(pp("1", l1), bl) == pp("1", l1)); // 1 not in (x)
    CHECK(normal_form(pp("x^17", l1), bl).is_zero());

    // idempotence and the difference property (global orders give honest
    // representations; for local orders weak normal forms are certified via
    // membership instead)
    testutil::Rnd rnd(99);
    auto g3 = global_ctx({"x", "y", "z"});
    std::vector<Polynomial> gens = {rnd.poly(g3, 3, 2), rnd.poly(g3, 3, 2), rnd.poly(g3, 2, 3)};
    auto b = std_basis(gens, g3);
    for (int i = 0; i < 20; ++i) {
        auto f = rnd.poly(g3, 5, 4);
        auto r = normal_form(f, b);
        CHECK(normal_form(f - r, b).is_zero());
        CHECK(normal_form(r, b) == r);
    }
}

TEST_CASE("vdim counts standard monomials") {
    auto g2 = global_ctx({"x", "y"});
    auto v1 = vdim(std_basis(ppv({"2*x", "3*y^2"}, g2), g2));
    REQUIRE(v1.finite);
    CHECK(v1.value == 2); // basis {1, y}

    auto v2 = vdim(std_basis(ppv({"x"}, g2), g2));
    CHECK(!v2.finite);

    // columns of the identity in a rank-2 free module
    ModuleElement e1(g2, 2), e2(g2, 2);
    e1.comp(0) = pp("1", g2);
    e2.comp(1) = pp("1", g2);
    auto v3 = vdim(std_basis({e1, e2}, ModuleOrder::top(g2), 2));
    REQUIRE(v3.finite);
    CHECK(v3.value == 0);

    // unit ideal
    auto v4 = vdim(std_basis(ppv({"1"}, g2), g2));
    REQUIRE(v4.finite);
    CHECK(v4.value == 0);
}

TEST_CASE("local versus global vdim discriminates (x - x^2)") {
    auto l1 = local_ctx({"x"});
    auto g1 = global_ctx({"x"});
    auto lv = vdim(std_basis(ppv({"x - x^2"}, l1), l1));
    auto gv = vdim(std_basis(ppv({"x - x^2"}, g1), g1));
    REQUIRE(lv.finite);
    REQUIRE(gv.finite);
    CHECK(lv.value == 1);
    CHECK(gv.value == 2);
}

TEST_CASE("krull dimension of the leading ideal") {
    auto g2 = global_ctx({"x", "y"});
    CHECK(krull_dim(std_basis(ppv({"x*y"}, g2), g2)) == 1);
    CHECK(krull_dim(std_basis(ppv({"x", "y"}, g2), g2)) == 0);
    CHECK(krull_dim(std_basis(ppv({"3"}, g2), g2)) == -1);
    CHECK(krull_dim(std_basis(std::vector<Polynomial>{}, g2)) == 2);

    auto l5 = local_ctx({"x", "y", "z", "v", "w"});
    CHECK(krull_dim(std_basis(ppv({"x^2"}, l5), l5)) == 4);
}

TEST_CASE("radical membership by the auxiliary variable trick") {
    auto g2 = global_ctx({"x", "y"});
    CHECK(radical_membership(pp("x", g2), ppv({"x^2"}, g2), g2));
    CHECK(!radical_membership(pp("y", g2), ppv({"x"}, g2), g2));
    // V(x^2+y^2, xy) = origin (over C), so both coordinates are in the radical
    auto origin = ppv({"x^2 + y^2", "x*y"}, g2);
    CHECK(radical_membership(pp("x", g2), origin, g2));
    CHECK(radical_membership(pp("y", g2), origin, g2));
    CHECK(radical_membership(Polynomial::zero(g2), origin, g2));

    // also fine over local contexts
    auto l2 = local_ctx({"x", "y"});
    CHECK(radical_membership(pp("x", l2), ppv({"x^3"}, l2), l2));
    CHECK(!radical_membership(pp("x", l2), ppv({"y"}, l2), l2));
}

TEST_CASE("syzygies: koszul and the fat point relation") {
    auto g2 = global_ctx({"x", "y"});
    auto s1 = syzygies(ppv({"x", "y"}, g2));
    ModuleElement koszul(g2, 2);
    koszul.comp(0) = pp("y", g2);
    koszul.comp(1) = pp("-x", g2);
    CHECK(same_module(s1, {koszul}, ModuleOrder::top(g2), 2));

    auto s2 = syzygies(ppv({"x^2", "x"}, g2));
    ModuleElement rel(g2, 2);
    rel.comp(0) = pp("1", g2);
    rel.comp(1) = pp("-x", g2);
    CHECK(same_module(s2, {rel}, ModuleOrder::top(g2), 2));

    // every syzygy annihilates the generators exactly
    auto check_exact = [](const std::vector<Polynomial>& gens) {
        auto syz = syzygies(gens);
        CHECK(!syz.empty());
        for (const auto& s : syz) {
            Polynomial dot = Polynomial::zero(gens[0].ctx());
            for (size_t i = 0; i < gens.size(); ++i) dot += s.comp(static_cast<int>(i)) * gens[i];
            CHECK(dot.is_zero());
        }
    };
    check_exact(ppv({"x", "y"}, g2));

    // fat point: s1^2 f1 - s1 s2 f2 + s2^2 f3 = 0
    auto ctx = testutil::mixed_ctx({"s1", "s2"}, {"x", "y"});
    auto fs = ppv({"s2*x", "s1*x + s2*y", "s1*y"}, ctx);
    check_exact(fs);
    auto syz = syzygies(fs);
    ModuleElement target(ctx, 3);
    target.comp(0) = pp("s1^2", ctx);
    target.comp(1) = pp("-s1*s2", ctx);
    target.comp(2) = pp("s2^2", ctx);
    auto basis = std_basis(syz, ModuleOrder::top(ctx), 3);
    CHECK(is_member(target, basis));
}

TEST_CASE("module quotient examples") {
    auto g1 = global_ctx({"x"});
    int rank = 1;
    std::vector<ModuleElement> xF = {ModuleElement::from_poly(pp("x", g1))};

    // (xF : (x)) is everything
    auto q1 = module_quotient(xF, ppv({"x"}, g1), rank, g1);
    auto b1 = std_basis(q1, ModuleOrder::top(g1), rank);
    CHECK(is_member(ModuleElement::from_poly(pp("1", g1)), b1));

    // ((x^2) : (x)) = (x)
    std::vector<ModuleElement> x2F = {ModuleElement::from_poly(pp("x^2", g1))};
    auto q2 = module_quotient(x2F, ppv({"x"}, g1), rank, g1);
    CHECK(same_module(q2, xF, ModuleOrder::top(g1), rank));

    // (N : (1)) = N
    auto q3 = module_quotient(x2F, ppv({"1"}, g1), rank, g1);
    CHECK(same_module(q3, x2F, ModuleOrder::top(g1), rank));
}

TEST_CASE("torsion part of a finite-length module") {
    auto g1 = global_ctx({"x"});

    // all of F/N supported on V(J)
    std::vector<ModuleElement> n1 = {ModuleElement::from_poly(pp("x^3", g1))};
    CHECK(torsion_part_vdim(n1, ppv({"x"}, g1), 1, g1) == 3);

    // support at x = 1 only, J = (x): nothing is J-torsion
    std::vector<ModuleElement> n2 = {ModuleElement::from_poly(pp("x - 1", g1))};
    CHECK(torsion_part_vdim(n2, ppv({"x"}, g1), 1, g1) == 0);

    // split support: O/(x) + O/(x-1)
    std::vector<ModuleElement> n3 = {ModuleElement::from_poly(pp("x^2 - x", g1))};
    CHECK(torsion_part_vdim(n3, ppv({"x"}, g1), 1, g1) == 1);

    // torsion with respect to the unit ideal vanishes
    CHECK(torsion_part_vdim(n1, ppv({"1"}, g1), 1, g1) == 0);
    // empty J: everything is supported on V(0)
    CHECK(torsion_part_vdim(n1, {}, 1, g1) == 3);
}

TEST_CASE("zero dimensional radical point counts") {
    auto g1 = global_ctx({"x"});
    CHECK(zero_dim_radical_count(ppv({"x^2"}, g1), g1) == 1);

    auto g2 = global_ctx({"x", "y"});
    CHECK(zero_dim_radical_count(ppv({"x^2 - 1", "y"}, g2), g2) == 2);
    CHECK(zero_dim_radical_count(ppv({"1"}, g2), g2) == 0);
    CHECK_THROWS_AS(zero_dim_radical_count(ppv({"x"}, g2), g2), Error);

    // the Pi_5 deformed fiber pattern: five roots of unity
    auto g5 = global_ctx({"x", "y", "z", "v", "w"});
    CHECK(zero_dim_radical_count(ppv({"v^5 - 1", "x", "y", "z", "w"}, g5), g5) == 5);

    // multiplicity does not inflate the count
    CHECK(zero_dim_radical_count(ppv({"x^3*(x-1)^2", "y^4"}, g2), g2) == 2);
}

TEST_CASE("buchberger fixed point is re-checkable") {
    testutil::Rnd rnd(5);
    auto g3 = global_ctx({"x", "y", "z"});
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<Polynomial> gens;
        int k = rnd.uniform(1, 3);
        for (int i = 0; i < k; ++i) gens.push_back(rnd.poly(g3, 3, 3));
        CHECK(verify_spairs(std_basis(gens, g3)));
    }
    auto l2 = local_ctx({"x", "y"});
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<Polynomial> gens;
        int k = rnd.uniform(1, 3);
        for (int i = 0; i < k; ++i) gens.push_back(rnd.poly(l2, 3, 3));
        CHECK(verify_spairs(std_basis(gens, l2)));
    }
}

TEST_CASE("vdim finite iff krull dimension <= 0") {
    testutil::Rnd rnd(17);
    auto g2 = global_ctx({"x", "y"});
    for (int rep = 0; rep < 25; ++rep) {
        std::vector<Polynomial> gens;
        int k = rnd.uniform(1, 3);
        for (int i = 0; i < k; ++i) gens.push_back(rnd.poly(g2, 3, 3));
        auto b = std_basis(gens, g2);
        CHECK(vdim(b).finite == (krull_dim(b) <= 0));
    }
}

TEST_CASE("homogeneous ideals: local and global vdim agree") {
    testutil::Rnd rnd(23);
    auto g2 = global_ctx({"x", "y"});
    auto l2 = local_ctx({"x", "y"});
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<Polynomial> ggens, lgens;
        int k = rnd.uniform(1, 3);
        for (int i = 0; i < k; ++i) {
            int deg = rnd.uniform(1, 3);
            std::vector<Term> ts;
            for (int t = 0; t < 3; ++t) {
                Monomial m(2);
                int a = rnd.uniform(0, deg);
                m.e[0] = a;
                m.e[1] = deg - a;
                ts.push_back({rnd.coeff(), m});
            }
            ggens.push_back(Polynomial::from_terms(g2, ts));
            lgens.push_back(Polynomial::from_terms(l2, ts));
        }
        auto vg = vdim(std_basis(ggens, g2));
        auto vl = vdim(std_basis(lgens, l2));
        CHECK(vg.finite == vl.finite);
        if (vg.finite) CHECK(vg.value == vl.value);
    }
}

TEST_CASE("engine vdim agrees with the gaussian elimination oracle") {
    testutil::Rnd rnd(2026);
    auto g3 = global_ctx({"x", "y", "z"});
    auto l3 = local_ctx({"x", "y", "z"});
    int checked = 0;
    for (int rep = 0; rep < 40 && checked < 25; ++rep) {
        std::vector<Polynomial> ggens, lgens;
        int k = rnd.uniform(2, 4);
        for (int i = 0; i < k; ++i) {
            auto f = rnd.poly(g3, rnd.uniform(1, 4), rnd.uniform(1, 3));
            ggens.push_back(f);
            lgens.push_back(f.transport(l3));
        }
        auto vg = vdim(std_basis(ggens, g3));
        if (vg.finite && vg.value < 40) {
            auto og = oracle::gauss_vdim_ideal(ggens, g3, false, 18);
            REQUIRE(og.stabilized);
            CHECK(vg.value == og.value);
            ++checked;
        }
        auto vl = vdim(std_basis(lgens, l3));
        if (vl.finite && vl.value < 40) {
            auto ol = oracle::gauss_vdim_ideal(lgens, l3, true, 18);
            REQUIRE(ol.stabilized);
            CHECK(vl.value == ol.value);
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("milnor numbers of A_k via the jacobian ideal") {
    // f = x^(k+1) + y^2: mu = k, computed from the local jacobian ideal
    auto l2 = local_ctx({"x", "y"});
    for (int k = 1; k <= 5; ++k) {
        Polynomial f = pp("x", l2).pow(k + 1) + pp("y^2", l2);
        std::vector<Polynomial> jac = {f.derivative("x"), f.derivative("y")};
        auto v = vdim(std_basis(jac, l2));
        REQUIRE(v.finite);
        CHECK(v.value == k);
        auto o = oracle::gauss_vdim_ideal(jac, l2, true);
        REQUIRE(o.stabilized);
        CHECK(o.value == k);
    }
}

TEST_CASE("eliminant and squarefree part") {
    auto g2 = global_ctx({"x", "y"});
    auto el = eliminant(ppv({"x^2 - y", "y^2"}, g2), g2, "x");
    REQUIRE(el.has_value());
    // I contains x^4 and that is the smallest pure power of x
    CHECK(el->lm() == g2->var_mono(0, 4));

    auto p = pp("x^3 - x^2", g2); // x^2 (x - 1)
    auto sq = univariate_squarefree_part(p, 0);
    CHECK(sq == pp("x^2 - x", g2));
}
