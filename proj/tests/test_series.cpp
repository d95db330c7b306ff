#include "doctest.h"
#include "nonarch/errors.hpp"
#include "nonarch/phase.hpp"
#include "nonarch/series.hpp"

using namespace nonarch;

namespace {

Phase make(const FieldSpec& F,
           const std::vector<std::pair<std::int64_t, const char*>>& coeffs) {
    std::vector<std::pair<std::int64_t, Scalar>> c;
    for (const auto& [i, text] : coeffs) c.emplace_back(i, Scalar::parse(F, text));
    return Phase(F, c);
}

}  // namespace

TEST_CASE("rescale_compose matches the hand expansion") {
    const FieldSpec Q2(FieldKind::Qp, 2);
    // (1/2) (1 + 2t)^2 = 1/2 + 2t + 2t^2
    const Phase f = make(Q2, {{2, "1"}});
    const Phase got = f.rescale_compose(Scalar::one(Q2),
                                        Scalar::from_integer(Q2, 2));
    CHECK(got == make(Q2, {{0, "1/2"}, {1, "2"}, {2, "2"}}));

    const FieldSpec Q3(FieldKind::Qp, 3);
    // (1/3) (1 + 3t)^3 = 1/3 + 3t + 9t^2 + 9t^3
    const Phase g = make(Q3, {{3, "1"}});
    const Phase got3 = g.rescale_compose(Scalar::one(Q3),
                                         Scalar::from_integer(Q3, 3));
    CHECK(got3 == make(Q3, {{0, "1/3"}, {1, "3"}, {2, "9"}, {3, "9"}}));
}

TEST_CASE("taylor_at and eval agree") {
    const FieldSpec Q5(FieldKind::Qp, 5);
    const Phase f = make(Q5, {{0, "2"}, {1, "1/5"}, {3, "4"}});
    const Scalar b = Scalar::from_integer(Q5, 7);
    CHECK(f.taylor_at(b)[0] == f.eval(b));
}

TEST_CASE("stationary-phase certificates") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    const Phase sp = make(Q3, {{1, "1"}, {2, "3"}});
    CHECK(is_sp(sp).sp);
    CHECK(sp_valuation(sp) == Valuation(0));

    const Phase notsp = make(Q3, {{2, "1"}});
    const SpCertificate cert = is_sp(notsp);
    CHECK_FALSE(cert.sp);
    CHECK_THROWS_AS(sp_valuation(notsp), PreconditionFailed);
}

TEST_CASE("stationary-phase numbers of the reference phases") {
    const FieldSpec Q2(FieldKind::Qp, 2);

    const SpNumberResult linear = sp_number(make(Q2, {{1, "1"}}));
    CHECK(linear.decided);
    CHECK_FALSE(linear.infinite);
    CHECK(linear.r == 0);

    const SpNumberResult quartic =
        sp_number(make(Q2, {{1, "1"}, {4, "1/2"}}));
    CHECK(quartic.decided);
    CHECK_FALSE(quartic.infinite);
    CHECK(quartic.r == 1);

    const SpNumberResult square = sp_number(make(Q2, {{2, "1"}}));
    CHECK(square.decided);
    CHECK(square.infinite);
}

TEST_CASE("regular degree data") {
    const FieldSpec Q5(FieldKind::Qp, 5);
    const Phase f = make(Q5, {{1, "5"}, {3, "1"}, {4, "25"}});
    const RegularityData reg = regular_degree(f);
    CHECK(reg.d == 3);
    CHECK(reg.c == Scalar::one(Q5));
    CHECK(reg.min_ord == Valuation(0));
}

TEST_CASE("hensel roots of stationary-phase polynomials") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    const Phase f = make(Q3, {{0, "3"}, {1, "1"}, {2, "9"}});
    const HenselResult h = hensel_root(f, 64);
    REQUIRE(h.has_root);
    const Valuation v = f.eval(*h.root).valuation();
    CHECK((!v.is_finite() || v >= 64));

    const Phase rootless = make(Q3, {{0, "1"}, {1, "3"}});
    const HenselResult none = hensel_root(rootless, 64);
    CHECK_FALSE(none.has_root);
    CHECK(none.value_valuation == Valuation(0));
}

TEST_CASE("derivative lower bounds") {
    const FieldSpec Q2(FieldKind::Qp, 2);
    CHECK(verify_derivative_lower_bound(make(Q2, {{1, "1"}, {2, "2"}}), 1, 0)
              .verdict == Tri::Yes);
    const DerivativeBoundReport no =
        verify_derivative_lower_bound(make(Q2, {{2, "1"}}), 1, 0);
    CHECK(no.verdict == Tri::No);
    CHECK(no.witness.has_value());
}

TEST_CASE("integral roots of general phases") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    CHECK(has_root_in_integers(make(Q3, {{0, "-1"}, {2, "1"}})) == Tri::Yes);
    CHECK(has_root_in_integers(make(Q3, {{0, "1"}, {2, "1"}})) == Tri::No);
}
