#include "nonarch/json_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "nonarch/errors.hpp"

namespace nonarch {

namespace {

[[noreturn]] void bad(const std::string& what) { throw DomainError(what); }

mpq_class mpq_from_string(const std::string& s) {
    try {
        mpq_class v(s);
        v.canonicalize();
        return v;
    } catch (const std::invalid_argument&) {
        bad("malformed rational: " + s);
    }
}

mpz_class mpz_from_string(const std::string& s) {
    try {
        return mpz_class(s);
    } catch (const std::invalid_argument&) {
        bad("malformed integer: " + s);
    }
}

}  // namespace

Json field_to_json(const FieldSpec& F) {
    return Json{{"kind", F.kind() == FieldKind::Qp ? "Qp" : "FpT"},
                {"p", F.p()}};
}

FieldSpec field_from_json(const Json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        const std::int64_t p = j.at("p").get<std::int64_t>();
        if (kind == "Qp") return FieldSpec(FieldKind::Qp, p);
        if (kind == "FpT") return FieldSpec(FieldKind::FpT, p);
        bad("field json: unknown kind '" + kind + "'");
    } catch (const Json::exception& e) {
        bad(std::string("field json: ") + e.what());
    }
}

Json phase_to_json(const Phase& f) {
    Json coeffs = Json::array();
    for (const auto& [i, c] : f.coeffs()) coeffs.push_back({i, c.str()});
    return Json{{"field", field_to_json(f.field())}, {"coeffs", coeffs}};
}

Phase phase_from_json(const Json& j) {
    try {
        const FieldSpec F = field_from_json(j.at("field"));
        std::vector<std::pair<std::int64_t, Scalar>> coeffs;
        for (const auto& entry : j.at("coeffs"))
            coeffs.emplace_back(
                entry.at(0).get<std::int64_t>(),
                Scalar::parse(F, entry.at(1).get<std::string>()));
        return Phase(F, coeffs);
    } catch (const Json::exception& e) {
        bad(std::string("phase json: ") + e.what());
    }
}

Json multiphase_terms_to_json(const MultiPhase& f) {
    Json terms = Json::array();
    for (const auto& [alpha, c] : f.terms()) terms.push_back({alpha, c.str()});
    return terms;
}

MultiPhase multiphase_terms_from_json(const Json& j, const FieldSpec& F,
                                      std::int64_t d) {
    try {
        std::vector<std::pair<std::vector<std::int64_t>, Scalar>> terms;
        for (const auto& entry : j)
            terms.emplace_back(
                entry.at(0).get<std::vector<std::int64_t>>(),
                Scalar::parse(F, entry.at(1).get<std::string>()));
        return MultiPhase(F, static_cast<std::size_t>(d), terms);
    } catch (const Json::exception& e) {
        bad(std::string("multivariate phase json: ") + e.what());
    }
}

Json chart_to_json(const GraphChart& chart) {
    Json comps = Json::array();
    for (const MultiPhase& c : chart.components())
        comps.push_back(multiphase_terms_to_json(c));
    return Json{{"field", field_to_json(chart.field())},
                {"d", chart.dim()},
                {"n", chart.ambient()},
                {"components", comps}};
}

GraphChart chart_from_json(const Json& j) {
    try {
        const FieldSpec F = field_from_json(j.at("field"));
        const std::int64_t d = j.at("d").get<std::int64_t>();
        const std::int64_t n = j.at("n").get<std::int64_t>();
        std::vector<MultiPhase> comps;
        for (const auto& entry : j.at("components"))
            comps.push_back(multiphase_terms_from_json(entry, F, d));
        return GraphChart(F, d, n, std::move(comps));
    } catch (const Json::exception& e) {
        bad(std::string("chart json: ") + e.what());
    }
}

Json character_sum_to_json(const CharacterSum& s) {
    Json terms = Json::array();
    for (const auto& [root, count] : s.terms())
        terms.push_back({root.str(), count.get_str()});
    return Json{{"field", field_to_json(s.field())},
                {"scale", s.scale_valuation()},
                {"terms", terms}};
}

CharacterSum character_sum_from_json(const Json& j) {
    try {
        const FieldSpec F = field_from_json(j.at("field"));
        CharacterSum s(F, j.at("scale").get<std::int64_t>());
        for (const auto& entry : j.at("terms"))
            s.add_term(
                UnitRootExponent(
                    mpq_from_string(entry.at(0).get<std::string>())),
                mpz_from_string(entry.at(1).get<std::string>()));
        return s;
    } catch (const Json::exception& e) {
        bad(std::string("character sum json: ") + e.what());
    }
}

Json complex_sum_to_json(const ComplexSum& s) {
    return Json{{"one", character_sum_to_json(s.one)},
                {"i", character_sum_to_json(s.ipart)}};
}

ComplexSum complex_sum_from_json(const Json& j) {
    try {
        return ComplexSum{character_sum_from_json(j.at("one")),
                          character_sum_from_json(j.at("i"))};
    } catch (const Json::exception& e) {
        bad(std::string("complex sum json: ") + e.what());
    }
}

Json decay_table_to_json(const DecayTable& t) {
    Json rows = Json::array();
    for (const DecayRow& r : t.rows)
        rows.push_back(Json{{"j", r.j},
                            {"shell_size", r.shell_size},
                            {"sup_norm", r.sup_norm},
                            {"error_bound", r.error_bound},
                            {"ratio", r.ratio},
                            {"exact_zero", r.exact_zero}});
    return Json{{"k", t.k}, {"rows", rows}};
}

DecayTable decay_table_from_json(const Json& j) {
    try {
        DecayTable t;
        t.k = j.at("k").get<std::int64_t>();
        for (const auto& entry : j.at("rows")) {
            DecayRow r;
            r.j = entry.at("j").get<std::int64_t>();
            r.shell_size = entry.at("shell_size").get<std::int64_t>();
            r.sup_norm = entry.at("sup_norm").get<double>();
            r.error_bound = entry.at("error_bound").get<double>();
            r.ratio = entry.at("ratio").get<double>();
            r.exact_zero = entry.at("exact_zero").get<bool>();
            t.rows.push_back(r);
        }
        return t;
    } catch (const Json::exception& e) {
        bad(std::string("decay table json: ") + e.what());
    }
}

Json restriction_report_to_json(const RestrictionReport& r) {
    Json rows = Json::array();
    for (const TrialRow& row : r.rows)
        rows.push_back(Json{{"trial", row.trial},
                            {"lhs", row.lhs},
                            {"rhs_norm", row.rhs_norm},
                            {"ratio", row.ratio}});
    return Json{{"p", r.p.get_str()},   {"p0", r.p0.get_str()},
                {"lhs", r.lhs},         {"rhs_norm", r.rhs_norm},
                {"ratio", r.ratio},     {"trials", r.trials},
                {"rows", rows}};
}

RestrictionReport restriction_report_from_json(const Json& j) {
    try {
        RestrictionReport r;
        r.p = mpq_from_string(j.at("p").get<std::string>());
        r.p0 = mpq_from_string(j.at("p0").get<std::string>());
        r.lhs = j.at("lhs").get<double>();
        r.rhs_norm = j.at("rhs_norm").get<double>();
        r.ratio = j.at("ratio").get<double>();
        r.trials = j.at("trials").get<std::int64_t>();
        for (const auto& entry : j.at("rows")) {
            TrialRow row;
            row.trial = entry.at("trial").get<std::int64_t>();
            row.lhs = entry.at("lhs").get<double>();
            row.rhs_norm = entry.at("rhs_norm").get<double>();
            row.ratio = entry.at("ratio").get<double>();
            r.rows.push_back(row);
        }
        return r;
    } catch (const Json::exception& e) {
        bad(std::string("restriction report json: ") + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot read file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) bad("cannot write file: " + path);
    out << content;
    if (!out) bad("write failed: " + path);
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        bad(std::string("malformed json: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    return parse_json_text(read_text_file(path));
}

}  // namespace nonarch
