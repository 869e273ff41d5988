#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsakit/registry.hpp"

using namespace lsakit;
namespace fx = lsakit::fixtures;

static const FieldSpec Q = FieldSpec::rationals();

TEST_CASE("every fixture validates at load over Q and small prime fields") {
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(5)}) {
        CHECK_NOTHROW(fx::load_fixture("ex46", f));
        CHECK_NOTHROW(fx::load_fixture("ex47", f));
        CHECK_NOTHROW(fx::load_fixture("ex55", f));
        CHECK_NOTHROW(fx::load_fixture("ex46-ext(1,1,2,1)", f));
        CHECK_NOTHROW(fx::load_fixture("ex47-case1(1,0,0,2)", f));
        CHECK_NOTHROW(fx::load_fixture("ex47-case2(1,0,0)", f));
        CHECK_NOTHROW(fx::load_fixture("ex55-mp", f));
        CHECK_NOTHROW(fx::load_fixture("ex55-phi(1)", f));
    }
}

TEST_CASE("ex46 has exactly seven nonzero products") {
    Algebra a = fx::ex46(Q);
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (!a.basis_product(i, j).is_zero()) ++nonzero;
    CHECK(nonzero == 7);
}

TEST_CASE("parametric fixtures reject invalid parameters with a named condition") {
    // c^2 = ec violated
    try {
        fx::load_fixture("ex46-ext(1,1,2,0)", Q);
        FAIL("expected rejection");
    } catch (const error& e) {
        CHECK(e.code() == errc::parse_error);
        CHECK(std::string(e.what()).find("condition") != std::string::npos);
    }
    CHECK_THROWS_AS(fx::load_fixture("ex46-ext(1,1)", Q), error);       // arity
    CHECK_THROWS_AS(fx::load_fixture("nosuch", Q), error);              // unknown
    CHECK_THROWS_AS(fx::load_fixture("ex46-ext(1,1,2,1", Q), error);    // malformed
}

TEST_CASE("fixture arguments parse as exact scalars") {
    auto v = fx::load_fixture("ex55-phi(-1)", Q);
    const auto& dm = std::get<DeformationMap>(v);
    CHECK(dm.phi(1, 1) == Scalar::integer(Q, -1));
    auto w = fx::load_fixture("ex46-ext(1/2,1/2,3,1/2)", Q);  // c^2 = ec with e = c = 1/2
    const auto& fd = std::get<FlagDatum>(w);
    CHECK(fd.alpha == Scalar::parse(Q, "1/2"));
}

TEST_CASE("family witness helper recognizes square scalings over prime fields") {
    FieldSpec f5 = FieldSpec::prime(5);
    auto s = [&](int v) { return Scalar::integer(f5, v); };
    // (0,0,4,0) vs (0,0,1,0): beta^2 = 4 has roots 2 and 3 in F_5
    auto beta = fx::ex46_family_witness(fx::Ex46Params{s(0), s(0), s(4), s(0)},
                                        fx::Ex46Params{s(0), s(0), s(1), s(0)});
    REQUIRE(beta);
    CHECK(*beta * *beta == s(4));
    // 2 is not a square mod 5
    CHECK(!fx::ex46_family_witness(fx::Ex46Params{s(0), s(0), s(2), s(0)},
                                   fx::Ex46Params{s(0), s(0), s(1), s(0)}));
}

TEST_CASE("fixture list names are loadable") {
    for (const auto& info : fx::fixture_list()) {
        if (info.name == info.signature) CHECK_NOTHROW(fx::load_fixture(info.name, Q));
    }
}
