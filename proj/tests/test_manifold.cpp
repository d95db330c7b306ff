#include <cmath>

#include "doctest.h"
#include "nonarch/errors.hpp"
#include "nonarch/manifold.hpp"
#include "nonarch/oscillatory.hpp"

using namespace nonarch;

namespace {

GraphChart graph1(const FieldSpec& F, const MultiPhase& g) {
    std::vector<MultiPhase> comps;
    comps.push_back(MultiPhase::variable(F, 1, 0));
    comps.push_back(g);
    return GraphChart(F, 1, 2, std::move(comps));
}

}  // namespace

TEST_CASE("graph charts validate their shape") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    // first component must be the coordinate itself
    std::vector<MultiPhase> bad;
    bad.push_back(MultiPhase(Q3, 1, {{{2}, Scalar::one(Q3)}}));
    bad.push_back(MultiPhase::variable(Q3, 1, 0));
    CHECK_THROWS_AS(GraphChart(Q3, 1, 2, bad), DomainError);

    // graph components need integral coefficients
    std::vector<MultiPhase> frac;
    frac.push_back(MultiPhase::variable(Q3, 1, 0));
    frac.push_back(MultiPhase(Q3, 1, {{{2}, Scalar::parse(Q3, "1/3")}}));
    CHECK_THROWS_AS(GraphChart(Q3, 1, 2, frac), DomainError);
}

TEST_CASE("finite type orders of the model charts") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    const FieldSpec Q5(FieldKind::Qp, 5);

    const GraphChart parabola =
        graph1(Q3, MultiPhase(Q3, 1, {{{2}, Scalar::one(Q3)}}));
    const GraphChart cubic =
        graph1(Q3, MultiPhase(Q3, 1, {{{3}, Scalar::one(Q3)}}));
    const GraphChart flat = graph1(Q3, MultiPhase(Q3, 1));

    std::vector<MultiPhase> m;
    m.push_back(MultiPhase::variable(Q5, 1, 0));
    m.push_back(MultiPhase(Q5, 1, {{{2}, Scalar::one(Q5)}}));
    m.push_back(MultiPhase(Q5, 1, {{{3}, Scalar::one(Q5)}}));
    const GraphChart moment(Q5, 1, 3, std::move(m));

    const std::vector<Scalar> origin3 = {Scalar::zero(Q3)};
    const std::vector<Scalar> origin5 = {Scalar::zero(Q5)};

    CHECK(type_at(parabola, origin3, 4).finite());
    CHECK(type_at(parabola, origin3, 4).value == 2);
    CHECK(type_at(cubic, origin3, 4).value == 3);
    CHECK(type_at(moment, origin5, 4).value == 3);
    CHECK_FALSE(type_at(flat, origin3, 4).finite());

    CHECK(type_on_chart(parabola, 4).value == 2);
    CHECK(type_on_chart(cubic, 4).value == 3);
    CHECK(type_on_chart(moment, 4).value == 3);
    CHECK_FALSE(type_on_chart(flat, 4).finite());
}

TEST_CASE("surface transform of a flat chart keeps full mass") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    const GraphChart flat = graph1(Q3, MultiPhase(Q3, 1));
    for (std::int64_t j = 0; j <= 3; ++j) {
        const CharacterSum mu = fourier_surface_measure(
            flat, {Scalar::zero(Q3), Scalar::uniformizer_pow(Q3, -j)});
        CHECK(mu.magnitude() == 1.0);
    }
}

TEST_CASE("surface decay of the parabola matches its scalar phase") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    const GraphChart parabola =
        graph1(Q3, MultiPhase(Q3, 1, {{{2}, Scalar::one(Q3)}}));
    const DecayTable table = surface_decay_profile(parabola, 2, 0, 3);
    REQUIRE(table.rows.size() == 4);
    for (const DecayRow& row : table.rows) CHECK(row.ratio <= 0.5774);
}

TEST_CASE("k-th power bases have the multiset-coefficient dimension") {
    const FieldSpec Q5(FieldKind::Qp, 5);
    CHECK(homogeneous_basis(1, 3, Q5).dim() == 3);
    CHECK(homogeneous_basis(2, 2, Q5).dim() == 3);
    CHECK(homogeneous_basis(2, 3, Q5).dim() == 6);
    CHECK(homogeneous_basis(3, 2, Q5).dim() == 4);
}

TEST_CASE("the cross term expands through the polarization identity") {
    const FieldSpec Q5(FieldKind::Qp, 5);
    const HomBasis basis = homogeneous_basis(2, 2, Q5);
    const std::vector<Scalar> e = expand_in_basis(basis, {1, 1});
    REQUIRE(e.size() == 3);
    // xy = ((x+y)^2 - x^2 - y^2)/2 against the basis order [y, x, x+y]
    CHECK(e[0] == Scalar::parse(Q5, "-1/2"));
    CHECK(e[1] == Scalar::parse(Q5, "-1/2"));
    CHECK(e[2] == Scalar::parse(Q5, "1/2"));
}

TEST_CASE("expansion rejects monomials outside the degree") {
    const FieldSpec Q5(FieldKind::Qp, 5);
    const HomBasis basis = homogeneous_basis(2, 2, Q5);
    CHECK_THROWS_AS(expand_in_basis(basis, {1, 2}), PreconditionFailed);
    CHECK_THROWS_AS(expand_in_basis(basis, {1}), PreconditionFailed);
}
