#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsakit/algebra.hpp"
#include "lsakit/bimodule.hpp"
#include "lsakit/fixtures.hpp"
#include "lsakit/morphism.hpp"
#include "sweep_util.hpp"

using namespace lsakit;
namespace fx = lsakit::fixtures;

static const FieldSpec Q = FieldSpec::rationals();
static const FieldSpec F2 = FieldSpec::prime(2);

TEST_CASE("ex46 is left-symmetric but not Novikov") {
    Algebra a = fx::ex46(Q);
    CHECK(check_identity(a, IdentityKind::left_symmetric).pass);

    CheckReport nov = check_identity(a, IdentityKind::novikov);
    REQUIRE(!nov.pass);
    REQUIRE(nov.violations.size() == 1);
    const Violation& v = nov.violations[0];
    CHECK(v.condition == "eq2");
    CHECK(v.where == std::vector<std::size_t>{3, 2, 1});  // (e4, e3, e2)
    // (e4∘e3)∘e2 = 2e1 while (e4∘e2)∘e3 = −2e1
    Vec lhs = Vec::zero(Q, 4), rhs = Vec::zero(Q, 4);
    lhs[0] = Scalar::integer(Q, 2);
    rhs[0] = Scalar::integer(Q, -2);
    CHECK(v.lhs == lhs);
    CHECK(v.rhs == rhs);
    // the recorded witness re-substitutes to lhs ≠ rhs
    CHECK(a.mul(a.basis_product(3, 2), a.unit(1)) == v.lhs);
    CHECK(a.mul(a.basis_product(3, 1), a.unit(2)) == v.rhs);
}

TEST_CASE("ex47 is Novikov, ex55 is left-symmetric") {
    CHECK(check_identity(fx::ex47(Q), IdentityKind::novikov).pass);
    CHECK(check_identity(fx::ex55(Q), IdentityKind::left_symmetric).pass);
}

TEST_CASE("zero algebra passes every identity, any dimension") {
    for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{3}}) {
        Algebra z = Algebra::zero(Q, n);
        for (auto kind : {IdentityKind::left_symmetric, IdentityKind::novikov,
                          IdentityKind::lie_jacobi_of_commutator, IdentityKind::antisymmetry_of_commutator})
            CHECK(check_identity(z, kind).pass);
    }
}

TEST_CASE("commutator bracket of ex47") {
    Algebra g = commutator_lie(fx::ex47(Q));
    // [e1,e2] = e2, [e1,e3] = e3, everything else zero
    Vec e2 = g.unit(1), e3 = g.unit(2);
    CHECK(g.basis_product(0, 1) == e2);
    CHECK(g.basis_product(0, 2) == e3);
    CHECK(g.basis_product(1, 0) == -e2);
    CHECK(g.basis_product(2, 0) == -e3);
    CHECK(g.basis_product(1, 2).is_zero());
    CHECK(g.basis_product(0, 0).is_zero());
    CHECK(check_identity(g, IdentityKind::antisymmetry_of_commutator).pass);
    CHECK(check_identity(g, IdentityKind::lie_jacobi_of_commutator).pass);
    CHECK(commutator_lie(Algebra::zero(Q, 3)) == Algebra::zero(Q, 3));
}

TEST_CASE("commutator of ex46 satisfies the Lie identities") {
    Algebra g = commutator_lie(fx::ex46(Q));
    CHECK(check_identity(g, IdentityKind::antisymmetry_of_commutator).pass);
    CHECK(check_identity(g, IdentityKind::lie_jacobi_of_commutator).pass);
    // ex46 itself is not an antisymmetric table
    CHECK(!check_identity(fx::ex46(Q), IdentityKind::antisymmetry_of_commutator).pass);
}

TEST_CASE("every left-symmetric passer over F_2 (dim 2) has a Lie commutator") {
    std::size_t passers = 0;
    sweep::each_algebra(F2, 2, [&](const Algebra& a) {
        if (!check_identity(a, IdentityKind::left_symmetric).pass) return;
        ++passers;
        Algebra g = commutator_lie(a);
        CHECK(check_identity(g, IdentityKind::antisymmetry_of_commutator).pass);
        CHECK(check_identity(g, IdentityKind::lie_jacobi_of_commutator).pass);
    });
    CHECK(passers > 0);
}

TEST_CASE("bimodules: trivial maps pass, scaled identities need the right products") {
    Algebra a = fx::ex46(Q);
    Bimodule zero{a, 1, std::vector<Matrix>(4, Matrix::zero(Q, 1, 1)), std::vector<Matrix>(4, Matrix::zero(Q, 1, 1))};
    CHECK(check_bimodule(zero, AlgKind::left_symmetric).pass);
    CHECK(check_bimodule(zero, AlgKind::novikov).pass);
    CHECK(check_commutator_representation(zero).pass);

    // S = Id, T = 0 breaks S(x)S(y) − S(x∘y) symmetry on the nonzero products
    Bimodule sid{a, 1, std::vector<Matrix>(4, Matrix::identity(Q, 1)), std::vector<Matrix>(4, Matrix::zero(Q, 1, 1))};
    CheckReport rep = check_bimodule(sid, AlgKind::left_symmetric);
    REQUIRE(!rep.pass);
    CHECK(rep.violations[0].condition == "eq4");
}

TEST_CASE("bimodule passers over F_2 yield Lie representations via S − T") {
    // dim-2 left-symmetric passers with 1-dimensional modules
    std::size_t checked = 0;
    sweep::each_algebra(F2, 2, [&](const Algebra& a) {
        if (!check_identity(a, IdentityKind::left_symmetric).pass) return;
        sweep::each_tuple(2, 4, [&](const std::vector<std::uint32_t>& r) {
            Bimodule bm{a, 1,
                        {Matrix::zero(F2, 1, 1), Matrix::zero(F2, 1, 1)},
                        {Matrix::zero(F2, 1, 1), Matrix::zero(F2, 1, 1)}};
            bm.S[0].at(0, 0) = Scalar::integer(F2, r[0]);
            bm.S[1].at(0, 0) = Scalar::integer(F2, r[1]);
            bm.T[0].at(0, 0) = Scalar::integer(F2, r[2]);
            bm.T[1].at(0, 0) = Scalar::integer(F2, r[3]);
            if (check_bimodule(bm, AlgKind::left_symmetric).pass) {
                CHECK(check_commutator_representation(bm).pass);
                ++checked;
            }
        });
    });
    CHECK(checked > 0);
}

TEST_CASE("morphism checks") {
    Algebra a = fx::ex46(Q);
    MorphismWitness ident;
    ident.map = Matrix::identity(Q, 4);
    ident.stabilizes = true;
    ident.costabilizes = true;
    ident.split = BasisSplit{{0, 2}, {1, 3}};  // an arbitrary split
    MorphismReport rep = check_morphism(a, a, ident);
    CHECK(rep.report.pass);
    CHECK(rep.invertible);

    // e1 -> e2 with stabilization of {e1} requested fails the stab check
    MorphismWitness skew;
    skew.map = Matrix::identity(Q, 4);
    skew.map.set_column(0, Vec::unit(Q, 4, 1));
    skew.stabilizes = true;
    skew.split = BasisSplit{{0}, {1, 2, 3}};
    CheckReport srep = check_morphism(a, a, skew).report;
    REQUIRE(!srep.pass);
    bool saw_stab = false;
    for (const auto& v : srep.violations) saw_stab |= v.condition == "stab";
    CHECK(saw_stab);

    CHECK_THROWS_AS(check_morphism(a, a, MorphismWitness{Matrix::zero(Q, 2, 4), false, false, {}, {}}), error);
}

TEST_CASE("subalgebra tests on ex55") {
    Algebra e = fx::ex55(Q);
    {
        auto res = subalgebra_test(e, {e.unit(0), e.unit(2)});  // {e1, e3}
        CHECK(res.is_subalgebra);
        CHECK(!res.is_ideal);
        REQUIRE(res.induced);
        // induced product: a1∘a2 = a2, everything else zero
        CHECK(res.induced->basis_product(0, 1) == res.induced->unit(1));
        CHECK(res.induced->basis_product(1, 0).is_zero());
        CHECK(res.induced->basis_product(0, 0).is_zero());
        CHECK(res.induced->basis_product(1, 1).is_zero());
    }
    {
        auto res = subalgebra_test(e, {e.unit(1), e.unit(3)});  // {e2, e4}
        CHECK(res.is_subalgebra);
        REQUIRE(res.induced);
        CHECK(res.induced->basis_product(0, 0) == res.induced->unit(0).scaled(Scalar::integer(Q, 2)));
        CHECK(res.induced->basis_product(0, 1) == res.induced->unit(1));
        CHECK(res.induced->basis_product(1, 0).is_zero());
        CHECK(res.induced->basis_product(1, 1).is_zero());
    }
    {
        Vec v = e.unit(0) + e.unit(1);  // e1 + e2
        auto res = subalgebra_test(e, {v});
        CHECK(!res.is_subalgebra);
    }
    CHECK_THROWS_AS(subalgebra_test(e, {e.unit(0), e.unit(0)}), error);
}

TEST_CASE("identity checker over prime fields agrees with rational tables") {
    // the fixture tables reduce mod p and stay valid
    for (std::uint32_t p : {2u, 3u, 5u}) {
        FieldSpec f = FieldSpec::prime(p);
        CHECK(check_identity(fx::ex46(f), IdentityKind::left_symmetric).pass);
        CHECK(check_identity(fx::ex47(f), IdentityKind::novikov).pass);
        CHECK(check_identity(fx::ex55(f), IdentityKind::left_symmetric).pass);
    }
}
