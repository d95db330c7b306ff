#include "nonarch/suites.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "nonarch/errors.hpp"
#include "nonarch/json_io.hpp"
#include "nonarch/linalg.hpp"
#include "nonarch/manifold.hpp"
#include "nonarch/oscillatory.hpp"
#include "nonarch/phase.hpp"
#include "nonarch/restriction.hpp"
#include "nonarch/rng.hpp"
#include "nonarch/series.hpp"

namespace nonarch {

namespace {

// ---------------------------------------------------------------------------
// shared plumbing

struct Ctx {
    std::string suite;
    std::vector<CheckResult>* out;

    void check(const std::string& name, bool pass,
               const std::string& detail = "") {
        out->push_back(CheckResult{suite, name, pass, pass ? "" : detail});
    }
};

std::vector<FieldSpec> all_fields() {
    return {FieldSpec(FieldKind::Qp, 2),  FieldSpec(FieldKind::Qp, 3),
            FieldSpec(FieldKind::Qp, 5),  FieldSpec(FieldKind::FpT, 2),
            FieldSpec(FieldKind::FpT, 3), FieldSpec(FieldKind::FpT, 5)};
}

Scalar random_unit(const FieldSpec& F, SplitMix64& rng) {
    if (F.kind() == FieldKind::Qp) {
        std::int64_t u = rng.range(1, 40);
        while (u % F.p() == 0) ++u;
        return Scalar::from_integer(F, u);
    }
    const std::int64_t c0 = rng.range(1, F.p() - 1);
    const std::int64_t c1 = rng.range(0, F.p() - 1);
    return Scalar::from_integer(F, c0) +
           Scalar::from_integer(F, c1) * Scalar::uniformizer(F);
}

Scalar random_with_ord(const FieldSpec& F, SplitMix64& rng, std::int64_t v) {
    return random_unit(F, rng) * Scalar::uniformizer_pow(F, v);
}

Phase random_phase(const FieldSpec& F, SplitMix64& rng, std::int64_t max_deg,
                   std::int64_t vmin, std::int64_t vmax) {
    std::map<std::int64_t, Scalar> c;
    for (std::int64_t i = 0; i <= max_deg; ++i)
        if (rng.below(3) != 0)
            c.emplace(i, random_with_ord(F, rng, rng.range(vmin, vmax)));
    // keep a nonconstant term so integral levels and norms are defined
    if (c.empty() || (c.size() == 1 && c.count(0)))
        c.emplace(1, random_with_ord(F, rng, rng.range(vmin, vmax)));
    std::vector<std::pair<std::int64_t, Scalar>> v(c.begin(), c.end());
    return Phase(F, v);
}

// a_1 strictly dominant: the defining shape of an SP phase
Phase random_sp_phase(const FieldSpec& F, SplitMix64& rng) {
    const std::int64_t s = rng.range(-2, 2);
    std::map<std::int64_t, Scalar> c;
    if (rng.below(4) != 0)
        c.emplace(0, random_with_ord(F, rng, rng.range(-2, 2)));
    c.emplace(1, random_with_ord(F, rng, s));
    const std::int64_t extra = static_cast<std::int64_t>(rng.below(3));
    for (std::int64_t t = 0; t < extra; ++t)
        c.emplace(2 + static_cast<std::int64_t>(rng.below(3)),
                  random_with_ord(
                      F, rng, s + 1 + static_cast<std::int64_t>(rng.below(3))));
    std::vector<std::pair<std::int64_t, Scalar>> v(c.begin(), c.end());
    return Phase(F, v);
}

std::string ord_str(const Valuation& v) { return v.str(); }

GraphChart parabola_chart(const FieldSpec& F) {
    std::vector<MultiPhase> comps;
    comps.push_back(MultiPhase::variable(F, 1, 0));
    comps.push_back(MultiPhase(F, 1, {{{2}, Scalar::one(F)}}));
    return GraphChart(F, 1, 2, std::move(comps));
}

GraphChart cubic_chart(const FieldSpec& F) {
    std::vector<MultiPhase> comps;
    comps.push_back(MultiPhase::variable(F, 1, 0));
    comps.push_back(MultiPhase(F, 1, {{{3}, Scalar::one(F)}}));
    return GraphChart(F, 1, 2, std::move(comps));
}

GraphChart moment_chart(const FieldSpec& F) {
    std::vector<MultiPhase> comps;
    comps.push_back(MultiPhase::variable(F, 1, 0));
    comps.push_back(MultiPhase(F, 1, {{{2}, Scalar::one(F)}}));
    comps.push_back(MultiPhase(F, 1, {{{3}, Scalar::one(F)}}));
    return GraphChart(F, 1, 3, std::move(comps));
}

GraphChart identity_chart(const FieldSpec& F) {
    std::vector<MultiPhase> comps;
    comps.push_back(MultiPhase::variable(F, 1, 0));
    return GraphChart(F, 1, 1, std::move(comps));
}

GraphChart flat_chart(const FieldSpec& F) {
    std::vector<MultiPhase> comps;
    comps.push_back(MultiPhase::variable(F, 1, 0));
    comps.push_back(MultiPhase(F, 1));
    return GraphChart(F, 1, 2, std::move(comps));
}

// ---------------------------------------------------------------------------
// fields

void suite_fields(std::vector<CheckResult>& out, std::uint64_t seed) {
    Ctx ctx{"fields", &out};

    {
        bool pass = true;
        std::string detail;
        SplitMix64 rng(seed ^ 0x66696c64ULL);
        for (const FieldSpec& F : all_fields())
            for (int t = 0; t < 40 && pass; ++t) {
                const Scalar a = random_with_ord(F, rng, rng.range(-3, 3));
                const Scalar b = random_with_ord(F, rng, rng.range(-3, 3));
                const Valuation va = a.valuation(), vb = b.valuation();
                if ((a * b).valuation() != Valuation(va.value() + vb.value())) {
                    pass = false;
                    detail = F.str() + ": ord(ab) != ord a + ord b for a=" +
                             a.str() + " b=" + b.str();
                }
            }
        ctx.check("valuation-multiplicative", pass, detail);
    }

    {
        bool pass = true;
        std::string detail;
        SplitMix64 rng(seed ^ 0x756c7472ULL);
        for (const FieldSpec& F : all_fields())
            for (int t = 0; t < 40 && pass; ++t) {
                const Scalar a = random_with_ord(F, rng, rng.range(-3, 3));
                const Scalar b = random_with_ord(F, rng, rng.range(-3, 3));
                const Valuation lo = min(a.valuation(), b.valuation());
                const Valuation vs = (a + b).valuation();
                if (vs < lo) {
                    pass = false;
                    detail = F.str() + ": ord(a+b) < min for a=" + a.str() +
                             " b=" + b.str();
                } else if (a.valuation() != b.valuation() && vs != lo) {
                    pass = false;
                    detail = F.str() + ": strict ultrametric equality failed";
                }
            }
        ctx.check("ultrametric", pass, detail);
    }

    {
        bool pass = true;
        std::string detail;
        SplitMix64 rng(seed ^ 0x63686172ULL);
        for (const FieldSpec& F : all_fields())
            for (int t = 0; t < 40 && pass; ++t) {
                const Scalar a = random_with_ord(F, rng, rng.range(-3, 1));
                const Scalar m = random_with_ord(F, rng, rng.range(1, 3));
                if (character(a + m) != character(a)) {
                    pass = false;
                    detail = F.str() + ": character not constant mod pi O at " +
                             a.str();
                }
            }
        ctx.check("character-periodic", pass, detail);
    }

    {
        bool pass = true;
        std::string detail;
        SplitMix64 rng(seed ^ 0x73756d30ULL);
        for (const FieldSpec& F : all_fields())
            for (int t = 0; t < 10 && pass; ++t) {
                // u -> psi(u x) is nontrivial on O_K iff ord(x) <= 0, and
                // constant on cosets of pi^m O_K once m >= 1 - ord(x)
                const std::int64_t v = rng.range(-2, 0);
                const Scalar x =
                    random_unit(F, rng) * Scalar::uniformizer_pow(F, v);
                CharacterSum cs(F, 0);
                for (const Scalar& u : coset_representatives(F, 1 - v))
                    cs.add_term(character(u * x));
                if (!cs.is_zero()) {
                    pass = false;
                    detail = F.str() +
                             ": nontrivial character sum not exactly zero";
                }
                const Scalar x1 =
                    random_unit(F, rng) * Scalar::uniformizer_pow(F, 1);
                CharacterSum triv(F, 0);
                for (const Scalar& u : coset_representatives(F, 1))
                    triv.add_term(character(u * x1));
                if (triv.is_zero() ||
                    triv.magnitude() !=
                        static_cast<double>(F.p())) {
                    pass = false;
                    detail = F.str() + ": trivial character sum lost mass";
                }
            }
        ctx.check("character-sum-vanishes", pass, detail);
    }

    {
        bool pass = true;
        std::string detail;
        for (const FieldSpec& F : all_fields())
            for (std::int64_t m = 0; m <= 3 && pass; ++m) {
                const std::vector<Scalar> reps = coset_representatives(F, m);
                std::int64_t want = 1;
                for (std::int64_t i = 0; i < m; ++i) want *= F.p();
                if (static_cast<std::int64_t>(reps.size()) != want) {
                    pass = false;
                    detail = F.str() + ": rep count at level " +
                             std::to_string(m);
                    break;
                }
                for (std::size_t i = 0; i < reps.size() && pass; ++i)
                    for (std::size_t j = i + 1; j < reps.size(); ++j) {
                        const Scalar d = reps[i] - reps[j];
                        if (d.is_zero() || d.valuation() >= m) {
                            pass = false;
                            detail = F.str() + ": congruent reps at level " +
                                     std::to_string(m);
                            break;
                        }
                    }
            }
        ctx.check("coset-reps-complete", pass, detail);
    }
}

// ---------------------------------------------------------------------------
// series

void suite_series(std::vector<CheckResult>& out, std::uint64_t seed) {
    Ctx ctx{"series", &out};

    {
        // unit derivative -> finite SP number r with q^{r-1} <= ||f - f(0)||,
        // and every window at radius q^{-r} is SP with norm >= 1
        bool pass = true;
        std::string detail;
        SplitMix64 rng(seed ^ 0x31737030ULL);
        for (const FieldSpec& F : all_fields())
            for (int t = 0; t < 10 && pass; ++t) {
                std::map<std::int64_t, Scalar> c;
                if (rng.below(3) != 0)
                    c.emplace(0, random_with_ord(F, rng, rng.range(-1, 2)));
                c.emplace(1, random_unit(F, rng));
                const std::int64_t extra =
                    static_cast<std::int64_t>(rng.below(3));
                for (std::int64_t e = 0; e < extra; ++e)
                    c.emplace(2 + static_cast<std::int64_t>(rng.below(3)),
                              random_with_ord(
                                  F, rng,
                                  1 + static_cast<std::int64_t>(rng.below(3))));
                std::vector<std::pair<std::int64_t, Scalar>> v(c.begin(),
                                                               c.end());
                const Phase f(F, v);
                if (verify_derivative_lower_bound(f, 1, 0).verdict != Tri::Yes) {
                    pass = false;
                    detail = F.str() + ": |f'| >= 1 certificate failed on a "
                                       "unit-derivative phase";
                    break;
                }
                const SpNumberResult r = sp_number(f);
                std::int64_t r_eff = r.r;
                if (!r.decided || r.infinite) {
                    // positive-characteristic root searches can hit an
                    // inseparable corner; the certified upper bound still
                    // yields a radius whose windows must all be SP
                    if (F.kind() == FieldKind::Qp || r.infinite) {
                        pass = false;
                        detail = F.str() + ": sp number undecided/infinite: " +
                                 r.note;
                        break;
                    }
                    r_eff = sp_number_upper_bound(f);
                }
                const Valuation g = gauss_norm_valuation(f, true);
                if (!(r_eff - 1 <= -g.value())) {
                    pass = false;
                    detail = F.str() + ": q^{r-1} <= ||f-f(0)|| failed, r=" +
                             std::to_string(r_eff) + " g=" + g.str();
                    break;
                }
                const Scalar cwin = Scalar::uniformizer_pow(F, r_eff);
                for (const Scalar& b : coset_representatives(F, 2)) {
                    const SpCertificate cert = is_sp(f.rescale_compose(b, cwin));
                    if (!cert.sp || !(cert.sp_valuation <= 0)) {
                        pass = false;
                        detail = F.str() + ": window at b=" + b.str() +
                                 " not SP with norm >= 1";
                        break;
                    }
                }
            }
        ctx.check("window-sp-bound", pass, detail);
    }

    {
        // (d-1)-th derivative of a regular-degree-d phase, p > d: SP with
        // norm exactly |d!| / |c|
        bool pass = true;
        std::string detail;
        SplitMix64 rng(seed ^ 0x64646d31ULL);
        for (std::int64_t p : {3, 5}) {
            const FieldSpec F(FieldKind::Qp, p);
            for (int t = 0; t < 30 && pass; ++t) {
                const Phase f = random_phase(F, rng, p - 1, -2, 2);
                const RegularityData reg = regular_degree(f);
                if (reg.d < 1) continue;
                const SpCertificate cert = is_sp(f.derivative(reg.d - 1));
                mpz_class fact;
                mpz_fac_ui(fact.get_mpz_t(),
                           static_cast<unsigned long>(reg.d));
                const std::int64_t want =
                    mpz_ord_p(fact, p) - reg.c.valuation().value();
                if (!cert.sp || cert.sp_valuation != want) {
                    pass = false;
                    detail = F.str() + ": f=" + f.str() + " d=" +
                             std::to_string(reg.d) + " expected sp ord " +
                             std::to_string(want) + " got " +
                             (cert.sp ? ord_str(cert.sp_valuation)
                                      : "not SP: " + cert.reason);
                }
            }
        }
        ctx.check("derivative-regular-sp-norm", pass, detail);
    }

    {
        // positive characteristic kills the statement: d = p collapses the
        // (p-1)-th derivative of x^p
        bool pass = true;
        std::string detail;
        for (std::int64_t p : {2, 3}) {
            const FieldSpec F(FieldKind::FpT, p);
            const Phase f(F, {{p, Scalar::one(F)}});
            const SpCertificate cert = is_sp(f.derivative(p - 1));
            if (cert.sp) {
                pass = false;
                detail = F.str() + ": counterexample unexpectedly SP";
            }
        }
        ctx.check("characteristic-hypothesis-necessary", pass, detail);
    }

    {
        // dichotomy for |f(x)| on SP phases, against the direct evaluation
        bool pass = true;
        std::string detail;
        SplitMix64 rng(seed ^ 0x73703261ULL);
        for (const FieldSpec& F : all_fields())
            for (int t = 0; t < 6 && pass; ++t) {
                const Phase f = random_sp_phase(F, rng);
                const HenselResult h = hensel_root(f, 64);
                const Valuation sv = sp_valuation(f);
                for (int pt = 0; pt < 200 && pass; ++pt) {
                    const Scalar x =
                        rng.below(8) == 0
                            ? Scalar::zero(F)
                            : random_with_ord(
                                  F, rng,
                                  static_cast<std::int64_t>(rng.below(5)));
                    const Valuation got = f.eval(x).valuation();
                    Valuation want = Valuation::infinity();
                    if (h.has_root) {
                        const Valuation dx = (x - *h.root).valuation();
                        if (dx.is_finite() && dx.value() >= 64) continue;
                        want = dx.is_finite()
                                   ? Valuation(sv.value() + dx.value())
                                   : Valuation::infinity();
                    } else {
                        want = f.coeff(0).valuation();
                    }
                    if (got != want || sp_norm_profile(f, x) != want) {
                        pass = false;
                        detail = F.str() + ": norm identity failed at x=" +
                                 x.str() + " for f=" + f.str();
                    }
                }
            }
        ctx.check("sp-norm-dichotomy", pass, detail);
    }

    {
        // SP derivative with constant unit-bounded norm forces SP number <= 1
        bool pass = true;
        std::string detail;
        SplitMix64 rng(seed ^ 0x73706666ULL);
        for (std::int64_t p : {2, 3, 5}) {
            const FieldSpec F(FieldKind::Qp, p);
            for (int t = 0; t < 12 && pass; ++t) {
                const std::int64_t s = rng.range(0, 2);
                std::map<std::int64_t, Scalar> c;
                if (rng.below(3) != 0)
                    c.emplace(0, random_with_ord(F, rng, rng.range(-1, 2)));
                c.emplace(1, random_with_ord(F, rng, s));
                const std::int64_t v2 =
                    s + 1 + static_cast<std::int64_t>(rng.below(2));
                c.emplace(2, random_with_ord(F, rng, v2));
                if (rng.below(2) == 0)
                    c.emplace(3, random_with_ord(F, rng, v2 + 2));
                std::vector<std::pair<std::int64_t, Scalar>> v(c.begin(),
                                                               c.end());
                const Phase f(F, v);
                if (!is_sp(f.derivative()).sp) {
                    pass = false;
                    detail = F.str() + ": generator produced non-SP f'";
                    break;
                }
                if (verify_derivative_lower_bound(f, 1, 32).verdict !=
                    Tri::Yes) {
                    pass = false;
                    detail = F.str() + ": |f'| lower bound not certified";
                    break;
                }
                const SpNumberResult r = sp_number(f);
                if (!r.decided || r.infinite || r.r > 1) {
                    pass = false;
                    detail = F.str() + ": sp number not <= 1 for f=" + f.str();
                }
            }
        }
        ctx.check("sp-derivative-number-bound", pass, detail);
    }

    {
        bool pass = true;
        std::string detail;
        SplitMix64 rng(seed ^ 0x72657363ULL);
        for (const FieldSpec& F : all_fields())
            for (int t = 0; t < 10 && pass; ++t) {
                const Phase f = random_phase(F, rng, 4, -2, 2);
                const Scalar b = random_with_ord(
                    F, rng, static_cast<std::int64_t>(rng.below(3)));
                const Scalar c = random_with_ord(
                    F, rng, static_cast<std::int64_t>(rng.below(3)));
                const Phase g = f.rescale_compose(b, c);
                if (!(g.rescale_compose(Scalar::zero(F), Scalar::one(F)) ==
                      g)) {
                    pass = false;
                    detail = F.str() + ": identity window changed the phase";
                }
            }
        ctx.check("rescale-identity-stability", pass, detail);
    }

    {
        // d/dt [(1/c) f(b + c t)] = f'(b + c t), i.e. the derivative of the
        // window is the window of the derivative times c
        bool pass = true;
        std::string detail;
        SplitMix64 rng(seed ^ 0x63686169ULL);
        for (const FieldSpec& F : all_fields())
            for (int t = 0; t < 10 && pass; ++t) {
                const Phase f = random_phase(F, rng, 4, -2, 2);
                const Scalar b = random_with_ord(
                    F, rng, static_cast<std::int64_t>(rng.below(3)));
                const Scalar c = random_with_ord(
                    F, rng, static_cast<std::int64_t>(rng.below(3)));
                const Phase lhs = f.rescale_compose(b, c).derivative();
                const Phase rhs =
                    f.derivative().rescale_compose(b, c).scaled(c);
                if (!(lhs == rhs)) {
                    pass = false;
                    detail = F.str() + ": chain rule failed for f=" + f.str();
                }
            }
        ctx.check("rescale-chain-rule", pass, detail);
    }
}

// ---------------------------------------------------------------------------
// oscillatory

void suite_oscillatory(std::vector<CheckResult>& out, std::uint64_t seed,
                       int threads) {
    Ctx ctx{"oscillatory", &out};

    {
        bool pass = true;
        std::string detail;
        SplitMix64 rng(seed ^ 0x72656669ULL);
        for (const FieldSpec& F : all_fields())
            for (int t = 0; t < 10 && pass; ++t) {
                const Phase f = random_phase(F, rng, 3, -1, 2);
                const Scalar y = random_with_ord(F, rng, rng.range(-1, 1));
                const std::int64_t m = integral_level(f, y);
                const CharacterSum base =
                    eval_integral(f, y, kDefaultCosetCap, -1, threads);
                const CharacterSum fine =
                    eval_integral(f, y, kDefaultCosetCap, m + 1, threads);
                if (!base.equals(fine)) {
                    pass = false;
                    detail = F.str() + ": refinement changed the integral of " +
                             f.str();
                }
            }
        ctx.check("refinement-invariance", pass, detail);
    }

    {
        // 500 seeded SP phases: exact vanishing on coarse shells, exact
        // single-term value on fine shells
        bool pass = true;
        std::string detail;
        SplitMix64 rng(seed ^ 0x6f736370ULL);
        const std::vector<FieldSpec> fields = all_fields();
        for (int t = 0; t < 500 && pass; ++t) {
            const FieldSpec& F = fields[static_cast<std::size_t>(t) %
                                        fields.size()];
            const Phase f = random_sp_phase(F, rng);
            const std::int64_t s = sp_valuation(f).value();
            for (std::int64_t j = s; j <= s + 2 && pass; ++j) {
                const Scalar y =
                    random_unit(F, rng) * Scalar::uniformizer_pow(F, -j);
                if (!eval_integral(f, y, kDefaultCosetCap, -1, threads)
                         .is_zero()) {
                    pass = false;
                    detail = F.str() + ": integral not zero at |y|=q^" +
                             std::to_string(j) + " for f=" + f.str();
                }
            }
            for (std::int64_t j = s - 2; j <= s - 1 && pass; ++j) {
                const Scalar y =
                    random_unit(F, rng) * Scalar::uniformizer_pow(F, -j);
                const CharacterSum got =
                    eval_integral(f, y, kDefaultCosetCap, -1, threads);
                CharacterSum want(F, 0);
                want.add_term(character(y * f.coeff(0)));
                if (!got.equals(want)) {
                    pass = false;
                    detail = F.str() + ": fine-shell value wrong at |y|=q^" +
                             std::to_string(j) + " for f=" + f.str();
                }
            }
        }
        ctx.check("sp-integral-exact", pass, detail);
    }

    {
        // fixture decay tables stay under their recorded ceilings and peak
        // before the last tested shell
        struct Fixture {
            FieldSpec F;
            std::vector<std::pair<std::int64_t, const char*>> coeffs;
            std::int64_t k;
            double ceiling;
        };
        const std::vector<Fixture> fixtures = {
            {FieldSpec(FieldKind::Qp, 3), {{2, "1"}}, 2, 0.5774},
            {FieldSpec(FieldKind::Qp, 5), {{3, "1"}}, 3, 0.5849},
            {FieldSpec(FieldKind::Qp, 2), {{1, "1"}, {4, "1/2"}}, 1, 0.7072},
        };
        bool pass = true;
        std::string detail;
        for (const Fixture& fx : fixtures) {
            std::vector<std::pair<std::int64_t, Scalar>> cs;
            for (const auto& [i, text] : fx.coeffs)
                cs.emplace_back(i, Scalar::parse(fx.F, text));
            const Phase f(fx.F, cs);
            const DecayTable table =
                decay_profile(f, fx.k, 0, 6, kDefaultCosetCap, threads);
            double head = 0.0, full = 0.0;
            for (std::size_t i = 0; i < table.rows.size(); ++i) {
                full = std::max(full, table.rows[i].ratio);
                if (i < table.rows.size() / 2)
                    head = std::max(head, table.rows[i].ratio);
            }
            if (full > fx.ceiling) {
                pass = false;
                detail = fx.F.str() + ": ratio " + std::to_string(full) +
                         " above recorded ceiling";
            } else if (full > head + 1e-12) {
                pass = false;
                detail = fx.F.str() + ": ratio grew past the early shells";
            }
        }
        ctx.check("decay-ratios-bounded", pass, detail);
    }

    {
        bool pass = true;
        std::string detail;
        SplitMix64 rng(seed ^ 0x756e6974ULL);
        for (const FieldSpec& F : all_fields())
            for (int t = 0; t < 8 && pass; ++t) {
                const Phase f = random_phase(F, rng, 3, -1, 2);
                const Scalar y = random_with_ord(F, rng, rng.range(-2, 1));
                const CharacterSum I =
                    eval_integral(f, y, kDefaultCosetCap, -1, threads);
                if (I.magnitude() > 1.0 + I.magnitude_error() + 1e-12) {
                    pass = false;
                    detail = F.str() + ": unit-mass integral above 1";
                }
            }
        ctx.check("unitary-bound", pass, detail);
    }

    {
        bool pass = true;
        std::string detail;
        SplitMix64 rng(seed ^ 0x6d756c74ULL);
        for (const FieldSpec& F : all_fields())
            for (int t = 0; t < 8 && pass; ++t) {
                const Phase f = random_phase(F, rng, 3, -1, 2);
                const Scalar y = random_with_ord(F, rng, rng.range(-1, 1));
                const VectorPhase vp(F, 1,
                                     {MultiPhase::from_univariate(f, 1, 0)});
                const CharacterSum multi = eval_integral_multi(
                    vp, {y}, kDefaultCosetCap, -1, threads);
                const CharacterSum uni =
                    eval_integral(f, y, kDefaultCosetCap, -1, threads);
                if (!multi.equals(uni)) {
                    pass = false;
                    detail = F.str() +
                             ": one-variable map disagrees with the scalar "
                             "integral for " +
                             f.str();
                }
            }
        ctx.check("multi-univariate-consistency", pass, detail);
    }
}

// ---------------------------------------------------------------------------
// manifold

void suite_manifold(std::vector<CheckResult>& out, std::uint64_t seed,
                    int threads) {
    Ctx ctx{"manifold", &out};
    const FieldSpec Q3(FieldKind::Qp, 3);
    const FieldSpec Q5(FieldKind::Qp, 5);

    {
        bool pass = true;
        std::string detail;
        struct Case {
            GraphChart chart;
            std::vector<Scalar> x0;
            bool finite;
            std::int64_t type;
        };
        const std::vector<Case> cases = {
            {parabola_chart(Q3), {Scalar::zero(Q3)}, true, 2},
            {cubic_chart(Q3), {Scalar::zero(Q3)}, true, 3},
            {identity_chart(Q3), {Scalar::zero(Q3)}, true, 1},
            {flat_chart(Q3), {Scalar::zero(Q3)}, false, 0},
            {moment_chart(Q5), {Scalar::zero(Q5)}, true, 3},
        };
        for (const Case& c : cases) {
            const TypeResult r = type_at(c.chart, c.x0, 4);
            if (c.finite != r.finite() || (c.finite && r.value != c.type)) {
                pass = false;
                detail = "pointwise type mismatch: got " + r.str();
                break;
            }
            // monotone rank growth with the first-k witness reproduced by
            // direct rank computations
            if (!c.finite) continue;
            std::vector<std::vector<Scalar>> rows;
            std::size_t prev = 0;
            for (std::int64_t k = 1; k <= r.value; ++k) {
                std::vector<Scalar> row;
                for (const MultiPhase& comp : c.chart.components())
                    row.push_back(comp.derivative_multi({k}).eval(c.x0));
                rows.push_back(row);
                const std::size_t rank = exact_rank(rows);
                if (rank < prev) {
                    pass = false;
                    detail = "rank decreased while k grew";
                    break;
                }
                prev = rank;
                const bool full =
                    rank == static_cast<std::size_t>(c.chart.ambient());
                if (full != (k == r.value)) {
                    pass = false;
                    detail = "first full-rank k differs from reported type";
                    break;
                }
            }
        }
        ctx.check("type-first-full-rank", pass, detail);
    }

    {
        // rank formulation == "every direction sees some derivative":
        // sample random nonzero directions v and find a witnessing alpha
        bool pass = true;
        std::string detail;
        SplitMix64 rng(seed ^ 0x76646972ULL);
        const GraphChart chart = parabola_chart(Q3);
        const TypeResult r = type_at(chart, {Scalar::zero(Q3)}, 4);
        for (int t = 0; t < 20 && pass; ++t) {
            std::vector<Scalar> v(2, Scalar::zero(Q3));
            while (v[0].is_zero() && v[1].is_zero())
                for (auto& c : v)
                    if (rng.below(2) == 0)
                        c = random_with_ord(Q3, rng, rng.range(-1, 2));
            bool seen = false;
            for (std::int64_t k = 1; k <= r.value && !seen; ++k) {
                Scalar dot = Scalar::zero(Q3);
                std::size_t l = 0;
                for (const MultiPhase& comp : chart.components())
                    dot = dot + v[l++] * comp.derivative_multi({k}).eval(
                                             {Scalar::zero(Q3)});
                seen = !dot.is_zero();
            }
            if (!seen) {
                pass = false;
                detail = "a direction escaped every derivative up to the type";
            }
        }
        ctx.check("type-direction-equivalence", pass, detail);
    }

    {
        bool pass = true;
        std::string detail;
        struct Case {
            GraphChart chart;
            bool finite;
            std::int64_t type;
        };
        const std::vector<Case> cases = {
            {parabola_chart(Q3), true, 2},
            {cubic_chart(Q3), true, 3},
            {identity_chart(Q3), true, 1},
            {flat_chart(Q3), false, 0},
            {moment_chart(Q5), true, 3},
        };
        for (const Case& c : cases) {
            const TypeResult r = type_on_chart(c.chart, 4, 8);
            if (c.finite != r.finite() || (c.finite && r.value != c.type)) {
                pass = false;
                detail = "chart-wide type mismatch: got " + r.str();
            }
        }
        ctx.check("type-on-chart", pass, detail);
    }

    {
        // finite type implies uniform decay under the recorded ceilings
        bool pass = true;
        std::string detail;
        const DecayTable par = surface_decay_profile(
            parabola_chart(Q3), 2, 0, 4, kDefaultCosetCap, threads);
        const DecayTable mom = surface_decay_profile(
            moment_chart(Q5), 3, 0, 3, kDefaultCosetCap, threads);
        if (par.max_ratio() > 0.5774) {
            pass = false;
            detail = "parabola ratios above the recorded ceiling";
        }
        if (mom.max_ratio() > 0.7237) {
            pass = false;
            detail = "moment-curve ratios above the recorded ceiling";
        }
        ctx.check("surface-decay-bounded", pass, detail);
    }

    {
        // a chart inside a hyperplane never decays in the normal direction
        bool pass = true;
        std::string detail;
        const GraphChart flat = flat_chart(Q3);
        if (type_at(flat, {Scalar::zero(Q3)}, 4).finite()) {
            pass = false;
            detail = "flat chart classified as finite type";
        }
        for (std::int64_t j = 0; j <= 4 && pass; ++j) {
            const std::vector<Scalar> y = {
                Scalar::zero(Q3), Scalar::uniformizer_pow(Q3, -j)};
            const CharacterSum mu =
                fourier_surface_measure(flat, y, kDefaultCosetCap, threads);
            if (mu.magnitude() != 1.0) {
                pass = false;
                detail = "degenerate direction lost mass at shell " +
                         std::to_string(j);
            }
        }
        ctx.check("flat-chart-no-decay", pass, detail);
    }

    {
        bool pass = true;
        std::string detail;
        const std::vector<std::pair<std::int64_t, std::int64_t>> shapes = {
            {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}};
        for (const auto& [k, n] : shapes) {
            const HomBasis basis = homogeneous_basis(k, n, Q5);
            mpz_class dim;
            mpz_bin_uiui(dim.get_mpz_t(),
                         static_cast<unsigned long>(n + k - 1),
                         static_cast<unsigned long>(k));
            if (mpz_class(basis.dim()) != dim) {
                pass = false;
                detail = "basis dimension mismatch at k=" + std::to_string(k) +
                         " n=" + std::to_string(n);
            }
        }
        ctx.check("power-basis-dimension", pass, detail);
    }

    {
        // expanding x^alpha in k-th powers and resumming returns x^alpha
        bool pass = true;
        std::string detail;
        const std::vector<std::pair<std::int64_t, std::int64_t>> shapes = {
            {2, 2}, {3, 2}, {2, 3}};
        for (const auto& [k, n] : shapes) {
            const HomBasis basis = homogeneous_basis(k, n, Q5);
            for (const auto& alpha : basis.monomials) {
                const std::vector<Scalar> e = expand_in_basis(basis, alpha);
                MultiPhase acc(Q5, static_cast<std::size_t>(n));
                for (std::int64_t i = 0; i < basis.dim(); ++i) {
                    if (e[static_cast<std::size_t>(i)].is_zero()) continue;
                    MultiPhase lin(Q5, static_cast<std::size_t>(n));
                    for (std::int64_t l = 0; l < n; ++l)
                        lin = lin +
                              MultiPhase::variable(
                                  Q5, static_cast<std::size_t>(n),
                                  static_cast<std::size_t>(l))
                                  .scaled(basis.xi[static_cast<std::size_t>(i)]
                                                  [static_cast<std::size_t>(
                                                      l)]);
                    MultiPhase pw =
                        MultiPhase::constant(Q5, static_cast<std::size_t>(n),
                                             Scalar::one(Q5));
                    for (std::int64_t reps = 0; reps < k; ++reps)
                        pw = pw * lin;
                    acc = acc + pw.scaled(e[static_cast<std::size_t>(i)]);
                }
                MultiPhase mono(Q5, static_cast<std::size_t>(n));
                mono.set_coeff(alpha, Scalar::one(Q5));
                if (!(acc == mono)) {
                    pass = false;
                    detail = "round-trip failed at k=" + std::to_string(k) +
                             " n=" + std::to_string(n);
                }
            }
        }
        ctx.check("power-basis-round-trip", pass, detail);
    }
}

// ---------------------------------------------------------------------------
// harness

void suite_harness(std::vector<CheckResult>& out, std::uint64_t seed,
                   int threads) {
    Ctx ctx{"harness", &out};
    const FieldSpec Q3(FieldKind::Qp, 3);

    {
        // closed-form transform == brute-force enumeration, exactly
        bool pass = true;
        std::string detail;
        SplitMix64 rng(seed ^ 0x62727574ULL);
        const std::vector<FieldSpec> fields = {
            FieldSpec(FieldKind::Qp, 2), FieldSpec(FieldKind::Qp, 3),
            FieldSpec(FieldKind::FpT, 2), FieldSpec(FieldKind::FpT, 3)};
        for (int t = 0; t < 100 && pass; ++t) {
            const FieldSpec& F =
                fields[static_cast<std::size_t>(t) % fields.size()];
            const std::int64_t n = 1 + (t / 4) % 2;
            SplitMix64 sub = rng.fork();
            const StepFunction f = random_step_function(F, n, sub);
            std::vector<Scalar> xi;
            for (std::int64_t l = 0; l < n; ++l)
                xi.push_back(rng.below(5) == 0
                                 ? Scalar::zero(F)
                                 : random_with_ord(F, rng, rng.range(-2, 2)));
            // a level fine enough that the integrand is constant per coset
            std::int64_t L = 0;
            for (const StepPiece& piece : f.pieces())
                L = std::max(L, piece.level);
            for (const Scalar& c : xi)
                if (!c.is_zero())
                    L = std::max(L, 1 - c.valuation().value());
            ComplexSum brute = ComplexSum::zero(F);
            const std::vector<Scalar> reps = coset_representatives(F, L);
            const std::size_t R = reps.size();
            std::size_t total = 1;
            for (std::int64_t v = 0; v < n; ++v) total *= R;
            for (std::size_t idx = 0; idx < total; ++idx) {
                std::vector<Scalar> x;
                std::size_t rem = idx;
                for (std::int64_t v = 0; v < n; ++v) {
                    x.push_back(reps[rem % R]);
                    rem /= R;
                }
                for (const StepPiece& piece : f.pieces()) {
                    bool inside = true;
                    for (std::int64_t l = 0; l < n && inside; ++l) {
                        const Scalar diff =
                            x[static_cast<std::size_t>(l)] -
                            piece.center[static_cast<std::size_t>(l)];
                        if (!diff.is_zero() &&
                            diff.valuation() < piece.level)
                            inside = false;
                    }
                    if (!inside) continue;
                    Scalar dot = Scalar::zero(F);
                    for (std::int64_t l = 0; l < n; ++l)
                        dot = dot + x[static_cast<std::size_t>(l)] *
                                        xi[static_cast<std::size_t>(l)];
                    brute.accumulate(piece.coeff_re, piece.coeff_im,
                                     character(dot), L * n);
                    break;
                }
            }
            if (!fourier_step(f, xi).equals(brute)) {
                pass = false;
                detail = F.str() + ": closed form disagrees with enumeration "
                                   "on trial " +
                         std::to_string(t);
            }
        }
        ctx.check("transform-brute-force-agreement", pass, detail);
    }

    {
        // p = 1 is an unconditional ceiling: |Rf| <= ||f||_1 pointwise
        bool pass = true;
        std::string detail;
        const RestrictionReport rep =
            restriction_check(parabola_chart(Q3), 2, mpq_class(1), 25, seed);
        for (const TrialRow& row : rep.rows)
            if (row.ratio > 1.0 + 1e-9) {
                pass = false;
                detail = "trial " + std::to_string(row.trial) +
                         " ratio above 1";
            }
        ctx.check("l1-ratio-ceiling", pass, detail);
    }

    {
        // identical seeds and inputs -> byte-identical artifacts at any
        // worker count
        bool pass = true;
        std::string detail;
        const Phase f(Q3, {{2, Scalar::one(Q3)}});
        const std::string csv1 =
            decay_profile(f, 2, 0, 4, kDefaultCosetCap, 1).to_csv();
        const std::string csv4 =
            decay_profile(f, 2, 0, 4, kDefaultCosetCap, 4).to_csv();
        const std::string csvT =
            decay_profile(f, 2, 0, 4, kDefaultCosetCap, threads).to_csv();
        if (csv1 != csv4 || csv1 != csvT) {
            pass = false;
            detail = "decay CSV differs across worker counts";
        }
        const RestrictionReport r1 =
            restriction_check(parabola_chart(Q3), 2, mpq_class(1), 10, seed);
        const RestrictionReport r2 =
            restriction_check(parabola_chart(Q3), 2, mpq_class(1), 10, seed);
        if (r1.to_csv() != r2.to_csv()) {
            pass = false;
            detail = "restriction CSV differs between identical runs";
        }
        const Scalar y = Scalar::uniformizer_pow(Q3, -1);
        const Json j1 = character_sum_to_json(
            eval_integral(f, y, kDefaultCosetCap, -1, 1));
        const Json j4 = character_sum_to_json(
            eval_integral(f, y, kDefaultCosetCap, -1, 4));
        if (j1.dump() != j4.dump()) {
            pass = false;
            detail = "integral JSON differs across worker counts";
        }
        ctx.check("deterministic-artifacts", pass, detail);
    }

    {
        bool pass = true;
        std::string detail;
        for (const FieldSpec& F : all_fields()) {
            const FieldSpec back = field_from_json(field_to_json(F));
            if (!(back == F)) {
                pass = false;
                detail = "field json round trip failed for " + F.str();
            }
        }
        SplitMix64 rng(seed ^ 0x6a736f6eULL);
        const Phase f = random_phase(Q3, rng, 4, -2, 2);
        if (phase_to_json(phase_from_json(phase_to_json(f))) !=
            phase_to_json(f)) {
            pass = false;
            detail = "phase json round trip failed";
        }
        const GraphChart chart = parabola_chart(Q3);
        if (chart_to_json(chart_from_json(chart_to_json(chart))) !=
            chart_to_json(chart)) {
            pass = false;
            detail = "chart json round trip failed";
        }
        const CharacterSum I = eval_integral(
            f, Scalar::uniformizer_pow(Q3, -1), kDefaultCosetCap, -1, 1);
        if (character_sum_to_json(
                character_sum_from_json(character_sum_to_json(I))) !=
            character_sum_to_json(I)) {
            pass = false;
            detail = "character sum json round trip failed";
        }
        SplitMix64 sub(seed ^ 0x73746570ULL);
        const StepFunction sf = random_step_function(Q3, 2, sub);
        const ComplexSum cs =
            fourier_step(sf, {Scalar::one(Q3), Scalar::uniformizer(Q3)});
        if (complex_sum_to_json(
                complex_sum_from_json(complex_sum_to_json(cs))) !=
            complex_sum_to_json(cs)) {
            pass = false;
            detail = "complex sum json round trip failed";
        }
        const DecayTable table =
            decay_profile(f, 2, 0, 2, kDefaultCosetCap, 1);
        if (decay_table_to_json(
                decay_table_from_json(decay_table_to_json(table))) !=
            decay_table_to_json(table)) {
            pass = false;
            detail = "decay table json round trip failed";
        }
        const RestrictionReport rep =
            restriction_check(chart, 2, mpq_class(1), 5, seed);
        if (restriction_report_to_json(restriction_report_from_json(
                restriction_report_to_json(rep))) !=
            restriction_report_to_json(rep)) {
            pass = false;
            detail = "restriction report json round trip failed";
        }
        ctx.check("json-round-trip", pass, detail);
    }
}

}  // namespace

bool SuiteReport::all_pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string SuiteReport::str() const {
    std::ostringstream out;
    std::size_t failed = 0;
    for (const CheckResult& c : checks) {
        if (c.pass) {
            out << "ok " << c.suite << "." << c.name << "\n";
        } else {
            ++failed;
            out << "FAIL " << c.suite << "." << c.name << ": " << c.detail
                << "\n";
        }
    }
    out << "checks: " << checks.size() << " failed: " << failed << "\n";
    return out.str();
}

std::vector<std::string> suite_names() {
    return {"fields", "series", "oscillatory", "manifold", "harness"};
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed,
                      int threads) {
    SuiteReport report;
    if (name == "fields")
        suite_fields(report.checks, seed);
    else if (name == "series")
        suite_series(report.checks, seed);
    else if (name == "oscillatory")
        suite_oscillatory(report.checks, seed, threads);
    else if (name == "manifold")
        suite_manifold(report.checks, seed, threads);
    else if (name == "harness")
        suite_harness(report.checks, seed, threads);
    else
        throw DomainError("unknown suite: " + name);
    return report;
}

SuiteReport run_all_suites(std::uint64_t seed, int threads) {
    SuiteReport report;
    for (const std::string& name : suite_names()) {
        SuiteReport one = run_suite(name, seed, threads);
        report.checks.insert(report.checks.end(), one.checks.begin(),
                             one.checks.end());
    }
    return report;
}

}  // namespace nonarch
