#pragma once

#include <string>

#include "json.hpp"
#include "nonarch/character_sum.hpp"
#include "nonarch/field.hpp"
#include "nonarch/manifold.hpp"
#include "nonarch/oscillatory.hpp"
#include "nonarch/phase.hpp"
#include "nonarch/restriction.hpp"

/**
 * JSON shapes (all scalars and exact rationals travel as strings so nothing
 * is rounded):
 *   field:   {"kind": "Qp"|"FpT", "p": 3}
 *   phase:   {"field": <field>, "coeffs": [[i, "scalar"], ...]}
 *   chart:   {"field": <field>, "d": 1, "n": 2,
 *             "components": [[[alpha..., ], "scalar"], ...] per component}
 *   sum:     {"field": <field>, "scale": m, "terms": [["r", "count"], ...]}
 *   decay:   {"k": k, "rows": [{"j":, "shell_size":, "sup_norm":,
 *             "error_bound":, "ratio":, "exact_zero":}, ...]}
 * Malformed input raises DomainError (the CLI's input-error exit path).
 */
namespace nonarch {

using Json = nlohmann::json;

Json field_to_json(const FieldSpec& F);
FieldSpec field_from_json(const Json& j);

Json phase_to_json(const Phase& f);
Phase phase_from_json(const Json& j);

Json multiphase_terms_to_json(const MultiPhase& f);
MultiPhase multiphase_terms_from_json(const Json& j, const FieldSpec& F,
                                      std::int64_t d);

Json chart_to_json(const GraphChart& chart);
GraphChart chart_from_json(const Json& j);

Json character_sum_to_json(const CharacterSum& s);
CharacterSum character_sum_from_json(const Json& j);

Json complex_sum_to_json(const ComplexSum& s);
ComplexSum complex_sum_from_json(const Json& j);

Json decay_table_to_json(const DecayTable& t);
DecayTable decay_table_from_json(const Json& j);

Json restriction_report_to_json(const RestrictionReport& r);
RestrictionReport restriction_report_from_json(const Json& j);

// file plumbing; DomainError on missing files or malformed JSON
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

}  // namespace nonarch
