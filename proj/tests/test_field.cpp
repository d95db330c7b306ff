#include "doctest.h"
#include "nonarch/errors.hpp"
#include "nonarch/field.hpp"

using namespace nonarch;

TEST_CASE("scalar parse/str round trips") {
    const FieldSpec Q2(FieldKind::Qp, 2);
    const FieldSpec F3(FieldKind::FpT, 3);

    for (const char* text : {"0", "1", "-1", "3/4", "7", "-5/8"}) {
        const Scalar a = Scalar::parse(Q2, text);
        CHECK(Scalar::parse(Q2, a.str()) == a);
    }
    for (const char* text : {"0", "1", "1+t^2", "t^2/(1+t)", "(1+t)/t", "2t"}) {
        const Scalar a = Scalar::parse(F3, text);
        CHECK(Scalar::parse(F3, a.str()) == a);
    }
}

TEST_CASE("valuations are exact integers") {
    const FieldSpec Q2(FieldKind::Qp, 2);
    CHECK(Scalar::parse(Q2, "3/4").valuation() == Valuation(-2));
    CHECK(Scalar::parse(Q2, "6").valuation() == Valuation(1));
    CHECK_FALSE(Scalar::zero(Q2).valuation().is_finite());

    const FieldSpec F3(FieldKind::FpT, 3);
    CHECK(Scalar::parse(F3, "(1+t)/t").valuation() == Valuation(-1));
    CHECK(Scalar::parse(F3, "t^2/(1+t)").valuation() == Valuation(2));

    // multiplicative on products, ultrametric with equality on sums
    const Scalar a = Scalar::parse(Q2, "3/4");
    const Scalar b = Scalar::parse(Q2, "6");
    CHECK((a * b).valuation() == Valuation(-1));
    CHECK((a + b).valuation() == Valuation(-2));
}

TEST_CASE("division by zero is refused") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    CHECK_THROWS_AS(Scalar::one(Q3) / Scalar::zero(Q3), DivisionByZero);
}

TEST_CASE("the pinned character has conductor pi O") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    // psi is nontrivial on O ...
    CHECK(character(Scalar::one(Q3)) == UnitRootExponent(mpq_class(1, 3)));
    // ... trivial exactly on pi O ...
    CHECK(character(Scalar::from_integer(Q3, 3)) == UnitRootExponent());
    CHECK(character(Scalar::from_integer(Q3, 9)) == UnitRootExponent());
    // ... and picks up depth below the unit ball
    CHECK(character(Scalar::parse(Q3, "1/3")) ==
          UnitRootExponent(mpq_class(1, 9)));

    const FieldSpec F2(FieldKind::FpT, 2);
    CHECK(character(Scalar::one(F2)) == UnitRootExponent(mpq_class(1, 2)));
    CHECK(character(Scalar::parse(F2, "t")) == UnitRootExponent());
    CHECK(character(Scalar::parse(F2, "(1+t)/t")) ==
          UnitRootExponent(mpq_class(1, 2)));
}

TEST_CASE("unit root exponents canonicalize mod 1") {
    CHECK(UnitRootExponent(mpq_class(5, 4)) == UnitRootExponent(mpq_class(1, 4)));
    CHECK(UnitRootExponent(mpq_class(-1, 3)) == UnitRootExponent(mpq_class(2, 3)));
}

TEST_CASE("coset representatives enumerate O/pi^m") {
    const FieldSpec F2(FieldKind::FpT, 2);
    CHECK(coset_representatives(F2, 0).size() == 1);
    CHECK(coset_representatives(F2, 3).size() == 8);
    const auto reps = coset_representatives(F2, 2);
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            const Scalar d = reps[i] - reps[j];
            CHECK_FALSE(d.is_zero());
            CHECK(d.valuation() < 2);
        }
    CHECK_THROWS_AS(coset_representatives(FieldSpec(FieldKind::Qp, 5), 30, 100),
                    ResourceLimit);
}
