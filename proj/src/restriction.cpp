#include "nonarch/restriction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "nonarch/errors.hpp"

namespace nonarch {

namespace {

std::string fmt9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return std::string(buf);
}

// den must equal p^t; returns t
std::int64_t p_power_exponent(const mpz_class& den, std::int64_t p) {
    mpz_class d = den;
    std::int64_t t = 0;
    while (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(),
                        static_cast<unsigned long>(p));
        ++t;
    }
    if (d != 1)
        throw PreconditionFailed(
            "step coefficients need residue-power denominators");
    return t;
}

bool balls_overlap(const StepPiece& a, const StepPiece& b) {
    // two balls meet exactly when the coarser one contains the other's
    // center: every coordinate difference has valuation >= min level
    const std::int64_t m = std::min(a.level, b.level);
    for (std::size_t l = 0; l < a.center.size(); ++l) {
        const Scalar diff = a.center[l] - b.center[l];
        if (!diff.is_zero() && diff.valuation() < m) return false;
    }
    return true;
}

}  // namespace

StepFunction::StepFunction(const FieldSpec& F, std::int64_t n,
                           std::vector<StepPiece> pieces)
    : field_(F), n_(n), pieces_(std::move(pieces)) {
    if (n_ < 1) throw PreconditionFailed("step function: need n >= 1");
    for (const StepPiece& piece : pieces_) {
        if (static_cast<std::int64_t>(piece.center.size()) != n_)
            throw PreconditionFailed("step function: center arity mismatch");
        if (piece.level < 0)
            throw PreconditionFailed("step function: negative ball level");
    }
    for (std::size_t i = 0; i < pieces_.size(); ++i)
        for (std::size_t j = i + 1; j < pieces_.size(); ++j)
            if (balls_overlap(pieces_[i], pieces_[j]))
                throw PreconditionFailed(
                    "step function: support balls must be pairwise disjoint");
}

ComplexSum ComplexSum::zero(const FieldSpec& F) {
    return ComplexSum{CharacterSum(F, 0), CharacterSum(F, 0)};
}

void ComplexSum::accumulate(const mpq_class& re, const mpq_class& im,
                            const UnitRootExponent& root, std::int64_t qexp) {
    const FieldSpec& F = one.field();
    const std::int64_t p = F.p();
    if (re != 0) {
        const std::int64_t t = p_power_exponent(re.get_den(), p);
        CharacterSum term(F, qexp + t);
        term.add_term(root, re.get_num());
        one = one + term;
    }
    if (im != 0) {
        const std::int64_t t = p_power_exponent(im.get_den(), p);
        CharacterSum term(F, qexp + t);
        if (p == 2) {
            // i = zeta_4 lives among the 2-power unit roots: fold it in
            term.add_term(root + UnitRootExponent(mpq_class(1, 4)),
                          im.get_num());
            one = one + term;
        } else {
            term.add_term(root, im.get_num());
            ipart = ipart + term;
        }
    }
}

std::complex<double> ComplexSum::value() const {
    return one.value() + std::complex<double>(0.0, 1.0) * ipart.value();
}

double ComplexSum::magnitude_error() const {
    return one.magnitude_error() + ipart.magnitude_error();
}

bool ComplexSum::is_zero() const { return one.is_zero() && ipart.is_zero(); }

bool ComplexSum::equals(const ComplexSum& o) const {
    return one.equals(o.one) && ipart.equals(o.ipart);
}

ComplexSum fourier_step(const StepFunction& f, const std::vector<Scalar>& xi) {
    const FieldSpec& F = f.field();
    if (static_cast<std::int64_t>(xi.size()) != f.n())
        throw PreconditionFailed("fourier_step: frequency arity mismatch");
    ComplexSum acc = ComplexSum::zero(F);
    for (const StepPiece& piece : f.pieces()) {
        bool survives = true;
        for (const Scalar& x : xi) {
            if (x.is_zero()) continue;
            if (x.valuation() + piece.level < 1) {
                survives = false;
                break;
            }
        }
        if (!survives) continue;
        Scalar dot = Scalar::zero(F);
        for (std::size_t l = 0; l < xi.size(); ++l)
            dot = dot + piece.center[l] * xi[l];
        acc.accumulate(piece.coeff_re, piece.coeff_im, character(dot),
                       piece.level * f.n());
    }
    return acc;
}

double lp_norm(const StepFunction& f, const mpq_class& p) {
    if (p < 1) throw DomainError("lp_norm: exponent must be >= 1");
    const double pd = p.get_d();
    const double q = static_cast<double>(f.field().residue_cardinality());
    double sum = 0.0;
    for (const StepPiece& piece : f.pieces()) {
        const double mag =
            std::hypot(piece.coeff_re.get_d(), piece.coeff_im.get_d());
        sum += std::pow(mag, pd) *
               std::pow(q, -static_cast<double>(piece.level * f.n()));
    }
    return std::pow(sum, 1.0 / pd);
}

StepFunction random_step_function(const FieldSpec& F, std::int64_t n,
                                  SplitMix64& rng) {
    static const std::vector<std::pair<int, int>> kCoeffs = {
        {1, 0}, {-1, 0}, {2, 0}, {-2, 0}, {0, 1}, {0, -1}};
    const std::int64_t want = 1 + static_cast<std::int64_t>(rng.below(4));
    std::vector<StepPiece> pieces;
    for (std::int64_t i = 0; i < want; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
            StepPiece piece;
            piece.level = static_cast<std::int64_t>(rng.below(4));
            const std::vector<Scalar> reps =
                coset_representatives(F, piece.level);
            piece.center.reserve(static_cast<std::size_t>(n));
            for (std::int64_t l = 0; l < n; ++l)
                piece.center.push_back(rng.pick(reps));
            const auto& [re, im] = rng.pick(kCoeffs);
            piece.coeff_re = re;
            piece.coeff_im = im;
            bool disjoint = true;
            for (const StepPiece& other : pieces)
                if (balls_overlap(piece, other)) {
                    disjoint = false;
                    break;
                }
            if (disjoint) {
                pieces.push_back(std::move(piece));
                placed = true;
            }
        }
        if (!placed) break;  // keep the pieces found so far
    }
    return StepFunction(F, n, std::move(pieces));
}

std::string RestrictionReport::to_csv() const {
    std::string out = "trial,lhs,rhs_norm,ratio\n";
    for (const TrialRow& r : rows)
        out += std::to_string(r.trial) + "," + fmt9(r.lhs) + "," +
               fmt9(r.rhs_norm) + "," + fmt9(r.ratio) + "\n";
    out += "max," + fmt9(lhs) + "," + fmt9(rhs_norm) + "," + fmt9(ratio) +
           "\n";
    return out;
}

RestrictionReport restriction_check(const GraphChart& chart, std::int64_t k,
                                    const mpq_class& p, std::int64_t trials,
                                    std::uint64_t seed, bool allow_above_p0) {
    const FieldSpec& F = chart.field();
    const std::int64_t n = chart.ambient();
    const std::int64_t d = chart.dim();
    if (k < 1) throw DomainError("restriction_check: need k >= 1");
    if (trials < 1) throw DomainError("restriction_check: need trials >= 1");
    RestrictionReport report;
    report.p = p;
    report.p0 = mpq_class(2 * n * k, 2 * n * k - 1);
    report.p0.canonicalize();
    report.trials = trials;
    if (p < 1) throw DomainError("restriction_check: exponent must be >= 1");
    if (p > report.p0 && !allow_above_p0)
        throw DomainError(
            "restriction_check: exponent exceeds the guaranteed range (use "
            "the override to probe beyond it)");
    const TypeResult type = type_on_chart(chart, k, 8);
    if (!type.finite() || type.value > k)
        throw DomainError(
            "restriction_check: chart does not certify finite type <= k");

    const double q = static_cast<double>(F.residue_cardinality());
    SplitMix64 master(seed);
    std::ptrdiff_t best = -1;
    for (std::int64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 sub = master.fork();
        const StepFunction f = random_step_function(F, n, sub);

        // level at which Rf(chart(x)) is constant in x on each coset: the
        // ball indicators need 1 - level, the center phases need
        // 1 - min ord(center); chart components have integral coefficients
        // so an x-shift moves the frequency by at least the same valuation
        std::int64_t L = 0;
        for (const StepPiece& piece : f.pieces()) {
            L = std::max(L, 1 - piece.level);
            for (const Scalar& c : piece.center)
                if (!c.is_zero())
                    L = std::max(L, 1 - c.valuation().value());
        }

        const std::vector<Scalar> reps = coset_representatives(F, L);
        const std::size_t R = reps.size();
        std::size_t total = 1;
        for (std::int64_t v = 0; v < d; ++v) total *= R;
        double lhs2 = 0.0;
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::vector<Scalar> x;
            x.reserve(static_cast<std::size_t>(d));
            std::size_t rem = idx;
            for (std::int64_t v = 0; v < d; ++v) {
                x.push_back(reps[rem % R]);
                rem /= R;
            }
            std::vector<Scalar> y;
            y.reserve(static_cast<std::size_t>(n));
            for (const MultiPhase& comp : chart.components())
                y.push_back(comp.eval(x));
            const std::complex<double> v = fourier_step(f, y).value();
            lhs2 += std::norm(v);
        }
        lhs2 *= std::pow(q, -static_cast<double>(L * d));

        TrialRow row;
        row.trial = trial;
        row.lhs = std::sqrt(lhs2);
        row.rhs_norm = lp_norm(f, p);
        row.ratio = row.lhs / row.rhs_norm;
        report.rows.push_back(row);
        if (best < 0 || row.ratio > report.rows[static_cast<std::size_t>(best)].ratio)
            best = static_cast<std::ptrdiff_t>(trial);
    }
    const TrialRow& top = report.rows[static_cast<std::size_t>(best)];
    report.lhs = top.lhs;
    report.rhs_norm = top.rhs_norm;
    report.ratio = top.ratio;
    return report;
}

}  // namespace nonarch
