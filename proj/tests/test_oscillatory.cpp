#include <cmath>

#include "doctest.h"
#include "nonarch/errors.hpp"
#include "nonarch/oscillatory.hpp"
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

TEST_CASE("integral levels match the closed form") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    const Phase f = make(Q3, {{2, "1"}});
    CHECK(integral_level(f, Scalar::one(Q3)) == 1);
    CHECK(integral_level(f, Scalar::parse(Q3, "1/9")) == 3);
    // a uniformly small phase needs no subdivision at all
    CHECK(integral_level(make(Q3, {{2, "3"}}), Scalar::one(Q3)) == 0);
}

TEST_CASE("the unit-frequency square integral is an exact ternary sum") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    const Phase f = make(Q3, {{2, "1"}});
    const CharacterSum got = eval_integral(f, Scalar::one(Q3));

    CharacterSum want(Q3, 1);
    want.add_term(UnitRootExponent(), 1);
    want.add_term(UnitRootExponent(mpq_class(1, 3)), 2);
    CHECK(got.equals(want));
    CHECK(std::abs(got.magnitude() - std::sqrt(3.0) / 3.0) <=
          got.magnitude_error() + 1e-12);
}

TEST_CASE("refinement never changes the integral") {
    const FieldSpec F2(FieldKind::FpT, 2);
    const Phase f = make(F2, {{1, "1+t"}, {3, "t"}});
    const Scalar y = Scalar::parse(F2, "(1+t)/t");
    const std::int64_t m = integral_level(f, y);
    const CharacterSum base = eval_integral(f, y);
    for (std::int64_t extra = 1; extra <= 3; ++extra)
        CHECK(base.equals(eval_integral(f, y, kDefaultCosetCap, m + extra)));
}

TEST_CASE("stationary-phase integrals vanish exactly on coarse shells") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    const Phase f = make(Q3, {{0, "2"}, {1, "1"}, {3, "9"}});
    REQUIRE(is_sp(f).sp);

    // ord(a_1) = 0: zero whenever |y| >= 1 ...
    CHECK(eval_integral(f, Scalar::one(Q3)).is_zero());
    CHECK(eval_integral(f, Scalar::parse(Q3, "1/3")).is_zero());
    CHECK(eval_integral(f, Scalar::parse(Q3, "2/9")).is_zero());

    // ... and a single character of mass one below
    const Scalar y = Scalar::from_integer(Q3, 3);
    CharacterSum want(Q3, 0);
    want.add_term(character(y * f.coeff(0)));
    CHECK(eval_integral(f, y).equals(want));
}

TEST_CASE("enumeration caps raise ResourceLimit") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    const Phase f = make(Q3, {{2, "1"}});
    CHECK_THROWS_AS(eval_integral(f, Scalar::parse(Q3, "1/81"), 10),
                    ResourceLimit);
}

TEST_CASE("decay profile of the square phase") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    const DecayTable table = decay_profile(make(Q3, {{2, "1"}}), 2, 0, 2);
    REQUIRE(table.rows.size() == 3);
    CHECK(std::abs(table.rows[0].sup_norm - 1.0 / std::sqrt(3.0)) <=
          table.rows[0].error_bound + 1e-12);
    CHECK(std::abs(table.rows[1].sup_norm - 1.0 / 3.0) <=
          table.rows[1].error_bound + 1e-12);
    // constant ratio q^{-1/2} across shells
    for (const DecayRow& row : table.rows)
        CHECK(std::abs(row.ratio - 1.0 / std::sqrt(3.0)) <= 1e-9);
    // CSV has the fixed column header
    CHECK(table.to_csv().rfind("j,shell_size,sup_norm,error_bound,ratio\n", 0) ==
          0);
}

TEST_CASE("uniform decay for a regular third derivative") {
    const FieldSpec Q5(FieldKind::Qp, 5);
    const RogersResult r = rogers_check(make(Q5, {{3, "1"}}), 1, 4);
    CHECK(r.m == 3);
    CHECK(r.holds);
    CHECK(r.max_ratio <= 0.5849);
    CHECK(r.table.rows.size() == 5);
}
