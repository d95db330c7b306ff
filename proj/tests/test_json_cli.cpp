#include "doctest.h"
#include "nonarch/errors.hpp"
#include "nonarch/json_io.hpp"
#include "nonarch/oscillatory.hpp"

using namespace nonarch;

TEST_CASE("phase JSON uses the documented wire shape") {
    const Json j = Json::parse(
        R"({"field": {"kind": "Qp", "p": 3}, "coeffs": [[2, "1"], [0, "1/3"]]})");
    const Phase f = phase_from_json(j);
    CHECK(f.field() == FieldSpec(FieldKind::Qp, 3));
    CHECK(f.coeff(2) == Scalar::one(f.field()));
    CHECK(f.coeff(0) == Scalar::parse(f.field(), "1/3"));
    CHECK(phase_from_json(phase_to_json(f)) == f);
}

TEST_CASE("chart JSON round trips through the documented wire shape") {
    const Json j = Json::parse(R"({
        "field": {"kind": "Qp", "p": 3},
        "d": 1, "n": 2,
        "components": [[[[1], "1"]], [[[2], "1"]]]
    })");
    const GraphChart chart = chart_from_json(j);
    CHECK(chart.dim() == 1);
    CHECK(chart.ambient() == 2);
    CHECK(chart_to_json(chart_from_json(chart_to_json(chart))) ==
          chart_to_json(chart));
}

TEST_CASE("malformed JSON inputs raise input errors") {
    CHECK_THROWS_AS(parse_json_text("not json at all"), DomainError);
    CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), DomainError);
    CHECK_THROWS_AS(phase_from_json(Json::parse(R"({"coeffs": []})")),
                    DomainError);
    CHECK_THROWS_AS(
        field_from_json(Json::parse(R"({"kind": "Rp", "p": 3})")),
        DomainError);
    CHECK_THROWS_AS(
        phase_from_json(Json::parse(
            R"({"field": {"kind": "Qp", "p": 3}, "coeffs": [[0, "x"]]})")),
        DomainError);
}

TEST_CASE("every emitted artifact re-parses to an equal value") {
    const FieldSpec Q3(FieldKind::Qp, 3);
    const Phase f(Q3, {{2, Scalar::one(Q3)}});
    const CharacterSum I = eval_integral(f, Scalar::one(Q3));
    CHECK(character_sum_from_json(character_sum_to_json(I)).equals(I));

    const DecayTable t = decay_profile(f, 2, 0, 2);
    const DecayTable back = decay_table_from_json(decay_table_to_json(t));
    CHECK(back.to_csv() == t.to_csv());
}
