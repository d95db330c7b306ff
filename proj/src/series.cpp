#include "nonarch/series.hpp"

#include <sstream>

#include "nonarch/errors.hpp"

namespace nonarch {

namespace {

// ---- univariate polynomial division / gcd over the scalar field ----

std::pair<Phase, Phase> divmod(const Phase& A, const Phase& B) {
    if (B.is_zero()) throw DivisionByZero("polynomial division by zero");
    Phase q(A.field()), r = A;
    const std::int64_t db = B.degree();
    const Scalar lead_inv = B.coeff(db).inverse();
    while (!r.is_zero() && r.degree() >= db) {
        const std::int64_t dr = r.degree();
        Scalar c = r.coeff(dr) * lead_inv;
        Phase term(A.field());
        term.set_coeff(dr - db, c);
        q = q + term;
        r = r - term * B;
    }
    return {q, r};
}

Phase make_monic(const Phase& f) {
    if (f.is_zero()) return f;
    return f.scaled(f.coeff(f.degree()).inverse());
}

Phase poly_gcd(Phase a, Phase b) {
    while (!b.is_zero()) {
        Phase r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return make_monic(a);
}

// f(pi^s u) as a polynomial in u
Phase scale_argument(const Phase& f, std::int64_t s) {
    Phase r(f.field());
    for (const auto& [j, a] : f.coeffs())
        r.set_coeff(j, a * Scalar::uniformizer_pow(f.field(), s * j));
    return r;
}

// divide out the coefficient content pi^{min ord} (no-op on the zero phase)
Phase strip_content(const Phase& f) {
    Valuation m = f.gauss_norm_exponent();
    if (!m.is_finite() || m.value() == 0) return f;
    return f.scaled(Scalar::uniformizer_pow(f.field(), -m.value()));
}

/**
 * What a polynomial g looks like on the coset b0 + pi^s O_K, read off the
 * substituted polynomial h(u) = g(b0 + pi^s u): if the constant coefficient
 * strictly dominates, ord(g) is constant on the coset; otherwise we only get
 * the lower bound ord(g) >= min over coefficient valuations.
 */
struct CosetView {
    bool constant = false;
    Valuation center_ord = Valuation::infinity();  // ord g(b0) = ord h(0)
    Valuation lower_bound = Valuation::infinity();
};

CosetView analyze(const Phase& h) {
    CosetView v;
    v.center_ord = h.coeff(0).valuation();
    Valuation rest = h.gauss_norm_exponent_nonconstant();
    v.constant = !rest.is_finite() || v.center_ord < rest;
    v.lower_bound = min(v.center_ord, rest);
    return v;
}

// canonical representative of x mod pi^L (requires ord(x) >= 0)
Scalar reduce_mod_pik(const Scalar& x, std::int64_t L) {
    if (x.is_zero()) return x;
    if (x.valuation() < Valuation(0)) throw PreconditionFailed("reduction needs ord(x) >= 0");
    const FieldSpec& F = x.field();
    if (F.kind() == FieldKind::Qp) {
        mpz_class modulus;
        mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(F.p()),
                      static_cast<unsigned long>(L));
        const mpq_class& q = x.rat();
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), modulus.get_mpz_t()) == 0)
            throw PreconditionFailed("denominator not invertible in residue ring");
        mpz_class m = (q.get_num() * inv) % modulus;
        if (m < 0) m += modulus;
        return Scalar::from_mpq(F, mpq_class(m));
    }
    const FpRatFunc& rf = x.ratfunc();
    if (rf.exp >= L) return Scalar::zero(F);
    std::int64_t budget = L - rf.exp;
    FpPoly body = (rf.num * rf.den.inverse_mod_tk(budget)).truncated(budget);
    FpPoly shifted = body.shifted_up(rf.exp);
    return Scalar::from_ratfunc(F, FpRatFunc{0, shifted, FpPoly::constant(F.p(), 1)});
}

}  // namespace

Valuation gauss_norm_valuation(const Phase& f, bool drop_constant) {
    return drop_constant ? f.gauss_norm_exponent_nonconstant() : f.gauss_norm_exponent();
}

Valuation sp_norm_profile(const Phase& f, const Scalar& x) {
    SpCertificate cert = is_sp(f);
    if (!cert.sp) throw PreconditionFailed("sp_norm_profile requires an SP phase: " + cert.reason);
    if (!x.is_zero() && x.valuation() < Valuation(0))
        throw DomainError("sp_norm_profile requires x in O_K");
    return f.eval(x).valuation();
}

std::string tri_str(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        default: return "undecided";
    }
}

SpCertificate is_sp(const Phase& f) {
    SpCertificate cert;
    Scalar a1 = f.coeff(1);
    if (a1.is_zero()) {
        cert.witness_j = 1;
        cert.reason = "linear coefficient vanishes";
        return cert;
    }
    Valuation v1 = a1.valuation();
    for (const auto& [j, a] : f.coeffs()) {
        if (j <= 1) continue;
        if (!(a.valuation() > v1)) {
            cert.witness_j = j;
            std::ostringstream os;
            os << "ord(a_" << j << ") = " << a.valuation().str() << " does not exceed ord(a_1) = "
               << v1.str();
            cert.reason = os.str();
            return cert;
        }
    }
    cert.sp = true;
    cert.sp_valuation = v1;
    return cert;
}

Valuation sp_valuation(const Phase& f) {
    SpCertificate cert = is_sp(f);
    if (!cert.sp) throw PreconditionFailed("sp_valuation requires an SP phase: " + cert.reason);
    return cert.sp_valuation;
}

RegularityData regular_degree(const Phase& f) {
    RegularityData out;
    out.c = Scalar::zero(f.field());
    for (const auto& [i, a] : f.coeffs()) {
        if (i < 1) continue;
        Valuation v = a.valuation();
        if (v < out.min_ord) {
            out.min_ord = v;
            out.d = i;
        } else if (v == out.min_ord && i > out.d) {
            out.d = i;
        }
    }
    if (out.d == 0) throw DomainError("regular_degree requires a nonconstant phase");
    out.c = f.coeff(out.d).inverse();
    return out;
}

std::int64_t sp_number_upper_bound(const Phase& f, std::int64_t depth_cap) {
    Valuation g = f.gauss_norm_exponent_nonconstant();
    if (!g.is_finite()) throw DomainError("sp_number_upper_bound requires a nonconstant phase");
    DerivativeBoundReport cert = verify_derivative_lower_bound(f, 1, 0, depth_cap);
    if (cert.verdict != Tri::Yes)
        throw PreconditionFailed("sp_number_upper_bound needs |f'| >= 1 on O_K (check came back " +
                                 tri_str(cert.verdict) + ")");
    return 1 - g.value();
}

DerivativeBoundReport verify_derivative_lower_bound(const Phase& f, std::int64_t k,
                                                    std::int64_t bound, std::int64_t depth_cap) {
    if (k < 0) throw DomainError("derivative order must be nonnegative");
    Phase g = f.derivative(k);
    DerivativeBoundReport report;
    const std::int64_t p = f.field().p();

    struct Walker {
        const Phase& g;
        std::int64_t bound, depth_cap, p;
        DerivativeBoundReport& report;

        Tri walk(const Scalar& b0, std::int64_t s) {
            report.depth_reached = std::max(report.depth_reached, s);
            Phase h = scale_argument(g.shifted(b0), s);
            CosetView view = analyze(h);
            if (view.constant) {
                if (view.center_ord <= bound) return Tri::Yes;
                report.witness = b0;
                return Tri::No;
            }
            if (view.lower_bound > bound) {
                report.witness = b0;
                return Tri::No;
            }
            if (s + 1 > depth_cap) return Tri::Undecided;
            bool undecided = false;
            for (std::int64_t r = 0; r < p; ++r) {
                Scalar child = b0 + Scalar::from_integer(g.field(), r) *
                                        Scalar::uniformizer_pow(g.field(), s);
                Tri t = walk(child, s + 1);
                if (t == Tri::No) return Tri::No;
                if (t == Tri::Undecided) undecided = true;
            }
            return undecided ? Tri::Undecided : Tri::Yes;
        }
    };

    Walker walker{g, bound, depth_cap, p, report};
    report.verdict = walker.walk(Scalar::zero(f.field()), 0);
    return report;
}

namespace {

// root existence for a squarefree separable polynomial, by digit descent with
// an exact root check and the Hensel lifting criterion at each center
Tri has_root_separable(const Phase& g0, std::int64_t depth_cap) {
    struct Walker {
        std::int64_t depth_cap, p;
        FieldSpec F;

        Tri walk(const Phase& h, std::int64_t depth) {
            Phase hp = h.derivative();
            bool undecided = false;
            for (std::int64_t r = 0; r < p; ++r) {
                Scalar c = Scalar::from_integer(F, r);
                Scalar val = h.eval(c);
                if (val.is_zero()) return Tri::Yes;
                if (val.valuation() == Valuation(0)) continue;  // unit: no root over this digit
                Scalar dval = hp.eval(c);
                if (!dval.is_zero() && val.valuation() > dval.valuation() * 2) return Tri::Yes;
                if (depth + 1 > depth_cap) {
                    undecided = true;
                    continue;
                }
                Phase child = strip_content(
                    scale_argument(h.shifted(c), 1));
                Tri t = walk(child, depth + 1);
                if (t == Tri::Yes) return Tri::Yes;
                if (t == Tri::Undecided) undecided = true;
            }
            return undecided ? Tri::Undecided : Tri::No;
        }
    };
    Walker walker{depth_cap, g0.field().p(), g0.field()};
    return walker.walk(strip_content(g0), 0);
}

}  // namespace

Tri has_root_in_integers(const Phase& f, std::int64_t depth_cap) {
    if (f.is_zero()) return Tri::Yes;
    if (f.is_constant()) return Tri::No;
    Phase fp = f.derivative();
    if (fp.is_zero()) {
        // only possible in characteristic p (f in K[x^p]); the Frobenius
        // image question is out of scope, so stay honest
        return Tri::Undecided;
    }
    Phase G = poly_gcd(f, fp);
    Phase gs = divmod(f, G).first;  // separable part: distinct factors with
                                    // tame multiplicity
    Tri r1 = has_root_separable(gs, depth_cap);
    if (r1 == Tri::Yes) return Tri::Yes;
    // factors with multiplicity divisible by char, or inseparable factors,
    // survive inside G with their full root set; recurse (degree drops)
    Tri r2 = G.is_constant() ? Tri::No : has_root_in_integers(G, depth_cap);
    if (r2 == Tri::Yes) return Tri::Yes;
    if (r1 == Tri::No && r2 == Tri::No) return Tri::No;
    return Tri::Undecided;
}

namespace {

// Taylor coefficient polynomials: T_j(b) = Delta_j at b, so that
// f(b + s) = sum_j T_j(b) s^j.  Exact binomial form, any characteristic.
std::vector<Phase> taylor_polys(const Phase& f) {
    std::int64_t deg = f.degree();
    std::vector<Phase> T(static_cast<std::size_t>(deg < 0 ? 1 : deg + 1), Phase(f.field()));
    for (const auto& [i, a] : f.coeffs()) {
        for (std::int64_t j = 0; j <= i; ++j) {
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(i),
                         static_cast<unsigned long>(j));
            Scalar coef = a.times_integer(b);
            if (coef.is_zero()) continue;
            Phase term(f.field());
            term.set_coeff(i - j, coef);
            T[static_cast<std::size_t>(j)] = T[static_cast<std::size_t>(j)] + term;
        }
    }
    return T;
}

/**
 * Is f_{b, c} SP for every b in O_K, for c of valuation exactly r?  The
 * window coefficients are beta_j(b) = T_j(b) c^{j-1}, so the SP condition at
 * b reads ord(T_j(b)) + (j-1) r > ord(T_1(b)) for all j >= 2 — it depends on
 * c only through r, and relaxes as r grows.
 */
Tri windows_all_sp_at(const std::vector<Phase>& T, std::int64_t r, std::int64_t p,
                      const FieldSpec& F, std::int64_t depth_cap) {
    std::vector<std::size_t> active;  // j >= 2 with T_j not identically zero
    for (std::size_t j = 2; j < T.size(); ++j)
        if (!T[j].is_zero()) active.push_back(j);

    struct Walker {
        const std::vector<Phase>& T;
        const std::vector<std::size_t>& active;
        std::int64_t r, p, depth_cap;
        FieldSpec F;

        Tri walk(const Scalar& b0, std::int64_t s) {
            Phase h1 = scale_argument(T[1].shifted(b0), s);
            CosetView v1 = analyze(h1);
            // exact check at the center: one bad window kills the whole r
            if (!v1.center_ord.is_finite()) return Tri::No;
            std::vector<CosetView> views;
            views.reserve(active.size());
            bool need_split = !v1.constant;
            for (std::size_t j : active) {
                Phase hj = scale_argument(T[j].shifted(b0), s);
                CosetView vj = analyze(hj);
                if (vj.center_ord + static_cast<std::int64_t>(j - 1) * r <= v1.center_ord)
                    return Tri::No;
                views.push_back(vj);
            }
            if (v1.constant) {
                for (std::size_t idx = 0; idx < active.size(); ++idx) {
                    const CosetView& vj = views[idx];
                    const std::int64_t jm1 = static_cast<std::int64_t>(active[idx]) - 1;
                    if (vj.constant) continue;  // center check already passed exactly
                    if (!(vj.lower_bound + jm1 * r > v1.center_ord)) need_split = true;
                }
                if (!need_split) return Tri::Yes;
            }
            if (s + 1 > depth_cap) return Tri::Undecided;
            bool undecided = false;
            for (std::int64_t d = 0; d < p; ++d) {
                Scalar child =
                    b0 + Scalar::from_integer(F, d) * Scalar::uniformizer_pow(F, s);
                Tri t = walk(child, s + 1);
                if (t == Tri::No) return Tri::No;
                if (t == Tri::Undecided) undecided = true;
            }
            return undecided ? Tri::Undecided : Tri::Yes;
        }
    };

    Walker walker{T, active, r, p, depth_cap, F};
    return walker.walk(Scalar::zero(F), 0);
}

}  // namespace

SpNumberResult sp_number(const Phase& f, std::int64_t r_max, std::int64_t depth_cap) {
    SpNumberResult out;
    Phase fp = f.derivative();
    if (fp.is_zero()) {
        out.decided = true;
        out.infinite = true;
        out.note = "f' vanishes identically, so no window is ever SP";
        return out;
    }
    Tri root = has_root_in_integers(fp);
    if (root == Tri::Yes) {
        out.decided = true;
        out.infinite = true;
        out.note = "f' has a root in O_K, so windows at that center are never SP";
        return out;
    }
    if (root == Tri::Undecided) {
        out.note = "root search for f' was inconclusive";
        return out;
    }
    std::vector<Phase> T = taylor_polys(f);
    for (std::int64_t r = 0; r <= r_max; ++r) {
        Tri t = windows_all_sp_at(T, r, f.field().p(), f.field(), depth_cap);
        if (t == Tri::Yes) {
            out.decided = true;
            out.r = r;
            return out;
        }
        if (t == Tri::Undecided) {
            std::ostringstream os;
            os << "window check at r = " << r << " hit the depth cap";
            out.note = os.str();
            return out;
        }
    }
    out.note = "no r up to r_max certified; increase r_max";
    return out;
}

HenselResult hensel_root(const Phase& f, std::int64_t precision) {
    SpCertificate cert = is_sp(f);
    if (!cert.sp) throw PreconditionFailed("hensel_root requires an SP phase: " + cert.reason);
    if (precision < 1) throw DomainError("precision must be positive");
    HenselResult out;
    out.precision = precision;
    const Valuation v1 = cert.sp_valuation;
    const Valuation v0 = f.coeff(0).valuation();
    if (v0 < v1) {
        out.value_valuation = v0;
        return out;
    }
    out.has_root = true;
    Phase fp = f.derivative();
    Scalar x = Scalar::zero(f.field());
    for (int iter = 0; iter < 200; ++iter) {
        Scalar fx = f.eval(x);
        if (fx.is_zero()) {
            out.exact = true;
            out.root = x;
            return out;
        }
        if (fx.valuation() - v1.value() >= Valuation(precision)) {
            out.root = x;
            return out;
        }
        x = reduce_mod_pik(x - fx / fp.eval(x), precision);
    }
    throw PreconditionFailed("Newton iteration failed to converge (internal invariant)");
}

}  // namespace nonarch
