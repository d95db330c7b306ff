#include <cmath>

#include "doctest.h"
#include "nonarch/errors.hpp"
#include "nonarch/manifold.hpp"
#include "nonarch/restriction.hpp"
#include "nonarch/rng.hpp"

using namespace nonarch;

namespace {

StepPiece piece(const FieldSpec& F, const char* center, std::int64_t level,
                long re, long im) {
    StepPiece p;
    p.center = {Scalar::parse(F, center)};
    p.level = level;
    p.coeff_re = mpq_class(re);
    p.coeff_im = mpq_class(im);
    return p;
}

GraphChart parabola(const FieldSpec& F) {
    std::vector<MultiPhase> comps;
    comps.push_back(MultiPhase::variable(F, 1, 0));
    comps.push_back(MultiPhase(F, 1, {{{2}, Scalar::one(F)}}));
    return GraphChart(F, 1, 2, std::move(comps));
}

}  // namespace

TEST_CASE("step functions must have disjoint pieces") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    // 1 + 3 O contains 4 + 9 O: rejected
    CHECK_THROWS_AS(StepFunction(Q3, 1,
                                 {piece(Q3, "1", 1, 1, 0),
                                  piece(Q3, "4", 2, 1, 0)}),
                    PreconditionFailed);
    // 1 + 3 O and 2 + 3 O are fine
    CHECK_NOTHROW(StepFunction(
        Q3, 1, {piece(Q3, "1", 1, 1, 0), piece(Q3, "2", 1, 1, 0)}));
}

TEST_CASE("L^p norms of indicator combinations") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    const StepFunction unit(Q3, 1, {piece(Q3, "0", 0, 1, 0)});
    CHECK(lp_norm(unit, mpq_class(1)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lp_norm(unit, mpq_class(2)) == doctest::Approx(1.0).epsilon(1e-12));

    const StepFunction diag(Q3, 1, {piece(Q3, "0", 0, 1, 1)});
    CHECK(lp_norm(diag, mpq_class(2)) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    const StepFunction small(Q3, 1, {piece(Q3, "0", 1, 2, 0)});
    CHECK(lp_norm(small, mpq_class(1)) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    CHECK_THROWS_AS(lp_norm(unit, mpq_class(1, 2)), DomainError);
}

TEST_CASE("the transform of a shifted ball is a character times its mass") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    const StepFunction f(Q3, 1, {piece(Q3, "1", 1, 1, 0)});

    // xi = 1: within the dual ball, so the value is (1/3) psi(1)
    const ComplexSum at1 = fourier_step(f, {Scalar::one(Q3)});
    CHECK_FALSE(at1.is_zero());
    CHECK(std::abs(std::abs(at1.value()) - 1.0 / 3.0) <=
          at1.magnitude_error() + 1e-12);

    // xi = 1/3: ord(xi) + level = 0 < 1, the inner oscillation kills it
    const ComplexSum at13 = fourier_step(f, {Scalar::parse(Q3, "1/3")});
    CHECK(at13.is_zero());

    // xi = 0 recovers the mass
    const ComplexSum at0 = fourier_step(f, {Scalar::zero(Q3)});
    CHECK(std::abs(std::abs(at0.value()) - 1.0 / 3.0) <=
          at0.magnitude_error() + 1e-12);
}

TEST_CASE("transform equals brute-force enumeration on a fixed instance") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    const StepFunction f(
        Q3, 1, {piece(Q3, "0", 1, 1, 0), piece(Q3, "1", 1, 0, 1)});
    const Scalar xi = Scalar::parse(Q3, "1/3");

    // constant per coset at level L = 2
    const std::int64_t L = 2;
    ComplexSum brute = ComplexSum::zero(Q3);
    for (const Scalar& x : coset_representatives(Q3, L)) {
        for (const StepPiece& p : f.pieces()) {
            const Scalar d = x - p.center[0];
            if (!d.is_zero() && d.valuation() < p.level) continue;
            brute.accumulate(p.coeff_re, p.coeff_im, character(x * xi), L);
            break;
        }
    }
    CHECK(fourier_step(f, {xi}).equals(brute));
}

TEST_CASE("restriction exponents are validated against p0") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    const GraphChart chart = parabola(Q3);

    const RestrictionReport rep =
        restriction_check(chart, 2, mpq_class(1), 5, 7);
    CHECK(rep.p0 == mpq_class(8, 7));
    for (const TrialRow& row : rep.rows) CHECK(row.ratio <= 1.0 + 1e-9);

    CHECK_THROWS_AS(restriction_check(chart, 2, mpq_class(3), 5, 7),
                    DomainError);
    CHECK_NOTHROW(restriction_check(chart, 2, mpq_class(3), 2, 7, true));
}

TEST_CASE("seeded generators reproduce themselves") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    SplitMix64 a(99), b(99);
    const StepFunction fa = random_step_function(Q3, 2, a);
    const StepFunction fb = random_step_function(Q3, 2, b);
    REQUIRE(fa.pieces().size() == fb.pieces().size());
    for (std::size_t i = 0; i < fa.pieces().size(); ++i) {
        CHECK(fa.pieces()[i].level == fb.pieces()[i].level);
        CHECK(fa.pieces()[i].center[0] == fb.pieces()[i].center[0]);
        CHECK(fa.pieces()[i].coeff_re == fb.pieces()[i].coeff_re);
    }
}
