/**
 * nonarch-osc: command line front end for the exact oscillatory-integral
 * toolkit over Q_p and F_p((t)).
 *
 * Exit codes: 0 success (all asserted properties hold), 2 property
 * violation, 3 resource cap exceeded, 4 input error, 5 undecided.
 */

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nonarch/errors.hpp"
#include "nonarch/json_io.hpp"
#include "nonarch/manifold.hpp"
#include "nonarch/oscillatory.hpp"
#include "nonarch/phase.hpp"
#include "nonarch/restriction.hpp"
#include "nonarch/series.hpp"
#include "nonarch/suites.hpp"

namespace {

using namespace nonarch;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 2;
constexpr int kExitResource = 3;
constexpr int kExitInput = 4;
constexpr int kExitUndecided = 5;

struct Globals {
    std::string field = "Qp";
    std::int64_t p = 2;
    std::int64_t cap = kDefaultCosetCap;
    std::uint64_t seed = 42;
    std::string out;
    bool json = false;
    int threads = 1;
};

std::string fmt9(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return std::string(buf);
}

FieldSpec field_from_globals(const Globals& g) {
    if (g.field == "Qp") return FieldSpec(FieldKind::Qp, g.p);
    if (g.field == "FpT") return FieldSpec(FieldKind::FpT, g.p);
    throw DomainError("--field must be Qp or FpT, got " + g.field);
}

// the single writer: every artifact leaves through here
void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        write_text_file(g.out, text);
    }
}

void emit_json(const Globals& g, const Json& j) { emit(g, j.dump(2) + "\n"); }

Phase load_phase(const std::string& path) {
    return phase_from_json(load_json_file(path));
}

GraphChart load_chart(const std::string& path) {
    return chart_from_json(load_json_file(path));
}

std::vector<Scalar> parse_scalar_list(const FieldSpec& F,
                                      const std::string& text) {
    std::vector<Scalar> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        out.push_back(Scalar::parse(F, item));
    if (out.empty()) throw DomainError("empty scalar list");
    return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw DomainError("bad integer list entry: " + item);
        }
    }
    if (out.empty()) throw DomainError("empty integer list");
    return out;
}

mpq_class parse_rational(const std::string& text) {
    try {
        mpq_class v(text);
        v.canonicalize();
        return v;
    } catch (const std::exception&) {
        throw DomainError("bad rational: " + text);
    }
}

Json decay_json_with_err(const DecayTable& table) {
    return decay_table_to_json(table);
}

int cmd_sp_number(const Globals& g, const std::string& phase_path) {
    const Phase f = load_phase(phase_path);
    const SpNumberResult r = sp_number(f);
    if (g.json) {
        Json j;
        j["decided"] = r.decided;
        j["infinite"] = r.infinite;
        if (r.decided && !r.infinite) j["r"] = r.r;
        j["note"] = r.note;
        emit_json(g, j);
    } else {
        std::string text;
        if (!r.decided)
            text = "sp_number: undecided\n";
        else if (r.infinite)
            text = "sp_number: infinite\n";
        else
            text = "sp_number: " + std::to_string(r.r) + "\n";
        text += "note: " + r.note + "\n";
        emit(g, text);
    }
    return r.decided ? kExitOk : kExitUndecided;
}

int cmd_regular_degree(const Globals& g, const std::string& phase_path) {
    const Phase f = load_phase(phase_path);
    const RegularityData reg = regular_degree(f);
    if (g.json) {
        Json j;
        j["d"] = reg.d;
        j["c"] = reg.c.str();
        j["min_ord"] = reg.min_ord.str();
        emit_json(g, j);
    } else {
        emit(g, "d: " + std::to_string(reg.d) + "\nc: " + reg.c.str() +
                    "\nmin_ord: " + reg.min_ord.str() + "\n");
    }
    return kExitOk;
}

int cmd_eval(const Globals& g, const std::string& phase_path,
             const std::string& y_text, std::int64_t level) {
    const Phase f = load_phase(phase_path);
    const Scalar y = Scalar::parse(f.field(), y_text);
    const CharacterSum I = eval_integral(f, y, g.cap, level, g.threads);
    if (g.json) {
        Json j = character_sum_to_json(I);
        j["magnitude"] = fmt9(I.magnitude());
        j["err"] = fmt9(I.magnitude_error());
        j["zero"] = I.is_zero();
        emit_json(g, j);
    } else {
        emit(g, "magnitude: " + fmt9(I.magnitude()) + "\nerr: " +
                    fmt9(I.magnitude_error()) +
                    "\nzero: " + (I.is_zero() ? "true" : "false") +
                    "\nexact: " + I.str() + "\n");
    }
    return kExitOk;
}

int cmd_decay(const Globals& g, const std::string& phase_path, std::int64_t k,
              std::int64_t jmin, std::int64_t jmax) {
    const Phase f = load_phase(phase_path);
    const DecayTable table = decay_profile(f, k, jmin, jmax, g.cap, g.threads);
    if (g.json)
        emit_json(g, decay_json_with_err(table));
    else
        emit(g, table.to_csv());
    return kExitOk;
}

int cmd_rogers(const Globals& g, const std::string& phase_path, std::int64_t j,
               std::int64_t jmax) {
    const Phase f = load_phase(phase_path);
    const RogersResult r = rogers_check(f, j, jmax, g.cap, g.threads);
    if (g.json) {
        Json out;
        out["m"] = r.m;
        out["holds"] = r.holds;
        out["max_ratio"] = fmt9(r.max_ratio);
        out["gauss_exponent"] = r.gauss_exponent;
        out["sp_note"] = r.sp_note;
        out["table"] = decay_json_with_err(r.table);
        emit_json(g, out);
    } else {
        emit(g, "m: " + std::to_string(r.m) +
                    "\nholds: " + (r.holds ? "true" : "false") +
                    "\nmax_ratio: " + fmt9(r.max_ratio) + "\ngauss_exponent: " +
                    std::to_string(r.gauss_exponent) +
                    "\nsp_note: " + r.sp_note + "\n" + r.table.to_csv());
    }
    return r.holds ? kExitOk : kExitViolation;
}

int cmd_manifold_type(const Globals& g, const std::string& chart_path,
                      const std::string& x0_text, std::int64_t kmax,
                      std::int64_t depth) {
    const GraphChart chart = load_chart(chart_path);
    TypeResult r;
    if (x0_text.empty()) {
        r = type_on_chart(chart, kmax, depth);
    } else {
        r = type_at(chart, parse_scalar_list(chart.field(), x0_text), kmax);
    }
    if (g.json) {
        Json j;
        j["kind"] = r.kind == TypeResult::Kind::Finite      ? "finite"
                    : r.kind == TypeResult::Kind::NotFinite ? "not-finite"
                                                            : "undecided";
        j["value"] = r.value;
        emit_json(g, j);
    } else {
        emit(g, r.str() + "\n");
    }
    return r.kind == TypeResult::Kind::Undecided ? kExitUndecided : kExitOk;
}

int cmd_surface_decay(const Globals& g, const std::string& chart_path,
                      std::int64_t k, std::int64_t jmin, std::int64_t jmax) {
    const GraphChart chart = load_chart(chart_path);
    const DecayTable table =
        surface_decay_profile(chart, k, jmin, jmax, g.cap, g.threads);
    if (g.json)
        emit_json(g, decay_json_with_err(table));
    else
        emit(g, table.to_csv());
    return kExitOk;
}

int cmd_basis(const Globals& g, std::int64_t k, std::int64_t n,
              const std::string& expand_text) {
    const FieldSpec F = field_from_globals(g);
    const HomBasis basis = homogeneous_basis(k, n, F);
    std::vector<Scalar> coeffs;
    if (!expand_text.empty())
        coeffs = expand_in_basis(basis, parse_int_list(expand_text));
    if (g.json) {
        Json j;
        j["dim"] = basis.dim();
        j["monomials"] = basis.monomials;
        Json xi = Json::array();
        for (const auto& row : basis.xi) {
            Json jr = Json::array();
            for (const Scalar& s : row) jr.push_back(s.str());
            xi.push_back(jr);
        }
        j["xi"] = xi;
        if (!coeffs.empty()) {
            Json jc = Json::array();
            for (const Scalar& s : coeffs) jc.push_back(s.str());
            j["coeffs"] = jc;
        }
        emit_json(g, j);
    } else {
        std::string text = "dim: " + std::to_string(basis.dim()) + "\n";
        for (std::int64_t i = 0; i < basis.dim(); ++i) {
            text += "xi[" + std::to_string(i) + "]:";
            for (const Scalar& s : basis.xi[static_cast<std::size_t>(i)])
                text += " " + s.str();
            text += "\n";
        }
        if (!coeffs.empty()) {
            text += "coeffs:";
            for (const Scalar& s : coeffs) text += " " + s.str();
            text += "\n";
        }
        emit(g, text);
    }
    return kExitOk;
}

int cmd_restriction(const Globals& g, const std::string& chart_path,
                    std::int64_t k, const std::string& exponent,
                    std::int64_t trials, bool allow_above_p0) {
    const GraphChart chart = load_chart(chart_path);
    const mpq_class p = parse_rational(exponent);
    const RestrictionReport rep =
        restriction_check(chart, k, p, trials, g.seed, allow_above_p0);
    if (g.json)
        emit_json(g, restriction_report_to_json(rep));
    else
        emit(g, rep.to_csv());
    return kExitOk;
}

int cmd_verify(const Globals& g, const std::string& suite) {
    SuiteReport report;
    if (suite == "all")
        report = run_all_suites(g.seed, g.threads);
    else
        report = run_suite(suite, g.seed, g.threads);
    const std::string text = report.str();
    std::cout << text;
    if (!g.out.empty()) write_text_file(g.out, text);
    return report.all_pass() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    Globals g;
    std::function<int()> action;

    CLI::App app{
        "exact oscillatory integrals over Q_p and F_p((t)): stationary-phase "
        "series, character-sum evaluation, decay profiles, finite-type "
        "surfaces, and an empirical restriction checker"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--field", g.field, "ground field kind: Qp or FpT")
        ->capture_default_str();
    app.add_option("--p", g.p, "residue characteristic (prime)")
        ->capture_default_str();
    app.add_option("--cap", g.cap, "max cosets enumerated per integral")
        ->capture_default_str();
    app.add_option("--seed", g.seed, "PRNG seed for randomized checks")
        ->capture_default_str();
    app.add_option("--out", g.out, "write the artifact to this path");
    app.add_flag("--json", g.json, "emit JSON instead of text/CSV");
    app.add_option("--threads", g.threads, "worker threads")
        ->capture_default_str();

    // sp-number
    {
        auto* sub = app.add_subcommand(
            "sp-number", "stationary-phase number of a phase (JSON file)");
        sub->fallthrough();
        auto phase = std::make_shared<std::string>();
        sub->add_option("--phase", *phase, "phase JSON file")->required();
        sub->callback([&g, phase, &action] {
            action = [&g, phase] { return cmd_sp_number(g, *phase); };
        });
    }

    // regular-degree
    {
        auto* sub = app.add_subcommand(
            "regular-degree",
            "regular degree d and normalizing constant of a phase");
        sub->fallthrough();
        auto phase = std::make_shared<std::string>();
        sub->add_option("--phase", *phase, "phase JSON file")->required();
        sub->callback([&g, phase, &action] {
            action = [&g, phase] { return cmd_regular_degree(g, *phase); };
        });
    }

    // eval
    {
        auto* sub = app.add_subcommand(
            "eval", "evaluate int psi(y f(x)) dx as an exact character sum");
        sub->fallthrough();
        auto phase = std::make_shared<std::string>();
        auto y = std::make_shared<std::string>();
        auto level = std::make_shared<std::int64_t>(-1);
        sub->add_option("--phase", *phase, "phase JSON file")->required();
        sub->add_option("--y", *y, "frequency scalar, e.g. 1/9 or t^-2")
            ->required();
        sub->add_option("--level", *level,
                        "coset level override (-1 = minimal)")
            ->capture_default_str();
        sub->callback([&g, phase, y, level, &action] {
            action = [&g, phase, y, level] {
                return cmd_eval(g, *phase, *y, *level);
            };
        });
    }

    // decay
    {
        auto* sub = app.add_subcommand(
            "decay", "sup |I(y)| over shells |y| = q^j, with q^{j/k} ratios");
        sub->fallthrough();
        auto phase = std::make_shared<std::string>();
        auto k = std::make_shared<std::int64_t>(1);
        auto jmin = std::make_shared<std::int64_t>(0);
        auto jmax = std::make_shared<std::int64_t>(6);
        sub->add_option("--phase", *phase, "phase JSON file")->required();
        sub->add_option("--k", *k, "decay exponent denominator")
            ->capture_default_str();
        sub->add_option("--jmin", *jmin, "first shell")->capture_default_str();
        sub->add_option("--jmax", *jmax, "last shell")->capture_default_str();
        sub->callback([&g, phase, k, jmin, jmax, &action] {
            action = [&g, phase, k, jmin, jmax] {
                return cmd_decay(g, *phase, *k, *jmin, *jmax);
            };
        });
    }

    // rogers
    {
        auto* sub = app.add_subcommand(
            "rogers",
            "uniform q^{-j/m} decay for a phase whose j-th derivative is "
            "regular");
        sub->fallthrough();
        auto phase = std::make_shared<std::string>();
        auto j = std::make_shared<std::int64_t>(1);
        auto jmax = std::make_shared<std::int64_t>(6);
        sub->add_option("--phase", *phase, "phase JSON file")->required();
        sub->add_option("--j", *j, "derivative order with regular degree")
            ->capture_default_str();
        sub->add_option("--jmax", *jmax, "last shell")->capture_default_str();
        sub->callback([&g, phase, j, jmax, &action] {
            action = [&g, phase, j, jmax] {
                return cmd_rogers(g, *phase, *j, *jmax);
            };
        });
    }

    // manifold-type
    {
        auto* sub = app.add_subcommand(
            "manifold-type",
            "finite-type order of a graph chart, at a point or chart-wide");
        sub->fallthrough();
        auto chart = std::make_shared<std::string>();
        auto x0 = std::make_shared<std::string>();
        auto kmax = std::make_shared<std::int64_t>(4);
        auto depth = std::make_shared<std::int64_t>(8);
        sub->add_option("--chart", *chart, "chart JSON file")->required();
        sub->add_option("--x0", *x0,
                        "comma-separated point (omit for chart-wide sup)");
        sub->add_option("--kmax", *kmax, "largest k tested")
            ->capture_default_str();
        sub->add_option("--depth", *depth, "coset subdivision depth cap")
            ->capture_default_str();
        sub->callback([&g, chart, x0, kmax, depth, &action] {
            action = [&g, chart, x0, kmax, depth] {
                return cmd_manifold_type(g, *chart, *x0, *kmax, *depth);
            };
        });
    }

    // surface-decay
    {
        auto* sub = app.add_subcommand(
            "surface-decay",
            "decay profile of the surface-measure transform of a chart");
        sub->fallthrough();
        auto chart = std::make_shared<std::string>();
        auto k = std::make_shared<std::int64_t>(1);
        auto jmin = std::make_shared<std::int64_t>(0);
        auto jmax = std::make_shared<std::int64_t>(4);
        sub->add_option("--chart", *chart, "chart JSON file")->required();
        sub->add_option("--k", *k, "decay exponent denominator (the type)")
            ->capture_default_str();
        sub->add_option("--jmin", *jmin, "first shell")->capture_default_str();
        sub->add_option("--jmax", *jmax, "last shell")->capture_default_str();
        sub->callback([&g, chart, k, jmin, jmax, &action] {
            action = [&g, chart, k, jmin, jmax] {
                return cmd_surface_decay(g, *chart, *k, *jmin, *jmax);
            };
        });
    }

    // basis
    {
        auto* sub = app.add_subcommand(
            "basis",
            "k-th power basis of degree-k homogeneous forms in n variables");
        sub->fallthrough();
        auto k = std::make_shared<std::int64_t>(0);
        auto n = std::make_shared<std::int64_t>(0);
        auto expand = std::make_shared<std::string>();
        sub->add_option("--k", *k, "degree")->required();
        sub->add_option("--n", *n, "number of variables")->required();
        sub->add_option("--expand", *expand,
                        "monomial exponent vector to expand, e.g. 1,1");
        sub->callback([&g, k, n, expand, &action] {
            action = [&g, k, n, expand] {
                return cmd_basis(g, *k, *n, *expand);
            };
        });
    }

    // restriction
    {
        auto* sub = app.add_subcommand(
            "restriction",
            "empirical L^p -> L^2 restriction ratios over random step "
            "functions");
        sub->fallthrough();
        auto chart = std::make_shared<std::string>();
        auto k = std::make_shared<std::int64_t>(2);
        auto exponent = std::make_shared<std::string>();
        auto trials = std::make_shared<std::int64_t>(100);
        auto allow = std::make_shared<bool>(false);
        sub->add_option("--chart", *chart, "chart JSON file")->required();
        sub->add_option("--k", *k, "finite type order of the chart")
            ->capture_default_str();
        sub->add_option("--exponent", *exponent,
                        "L^p exponent as an exact rational, e.g. 8/7")
            ->required();
        sub->add_option("--trials", *trials, "random step functions tested")
            ->capture_default_str();
        sub->add_flag("--allow-above-p0", *allow,
                      "test an exponent beyond the proven range");
        sub->callback([&g, chart, k, exponent, trials, allow, &action] {
            action = [&g, chart, k, exponent, trials, allow] {
                return cmd_restriction(g, *chart, *k, *exponent, *trials,
                                       *allow);
            };
        });
    }

    // verify
    {
        auto* sub = app.add_subcommand(
            "verify", "run a named invariant suite (or all of them)");
        sub->fallthrough();
        auto suite = std::make_shared<std::string>("all");
        sub->add_option("--suite", *suite,
                        "all, fields, series, oscillatory, manifold, harness")
            ->capture_default_str();
        sub->callback([&g, suite, &action] {
            action = [&g, suite] { return cmd_verify(g, *suite); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        return action ? action() : kExitInput;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const PreconditionFailed& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const DivisionByZero& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
