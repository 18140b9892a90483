#include "lforge/arch.hpp"

#include <charconv>
#include <cmath>

#include "lforge/errors.hpp"
#include "lforge/prng.hpp"

namespace lforge {

namespace {

Complex draw_box(SplitMix64& rng, double re_lo, double re_hi, double im_lo,
                 double im_hi) {
    const double re = rng.uniform_real(re_lo, re_hi);
    const double im = rng.uniform_real(im_lo, im_hi);
    return Complex(re, im);
}

ArchCheck make_check(std::string name, std::string params, Complex lhs,
                     Complex rhs, double tol) {
    ArchCheck c;
    c.check = std::move(name);
    c.params = std::move(params);
    c.lhs = lhs;
    c.rhs = rhs;
    c.rel_err = std::abs(lhs - rhs) / std::abs(rhs);
    c.pass = c.rel_err <= tol;
    return c;
}

std::string list_params(const std::string& label,
                        const std::vector<Complex>& zs) {
    std::string out = label + "=(";
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (i) out += ",";
        out += format_complex(zs[i]);
    }
    out += ")";
    return out;
}

std::string zeta_params(const ArchParams& p, Complex s) {
    std::string out = list_params("mu", {p.mu[0], p.mu[1], p.mu[2], p.mu[3]});
    out += " " + list_params("nu", {p.nu0, p.nu1});
    out += " s=" + format_complex(s);
    out += " F=" + field_name(p.field);
    return out;
}

} // namespace

std::string format_real(double x) {
    if (x == 0.0) return "0"; // collapse the sign of -0.0
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::string format_complex(Complex z) {
    if (z.imag() == 0.0) return format_real(z.real());
    std::string out;
    if (z.real() != 0.0) out += format_real(z.real());
    if (z.imag() > 0.0 && !out.empty()) out += "+";
    if (z.imag() == -1.0) {
        out += "-";
    } else if (z.imag() != 1.0) {
        out += format_real(z.imag());
    }
    out += "i";
    return out;
}

ArchParams arch_params_trivial(ArchField f) {
    ArchParams p;
    p.field = f;
    return p;
}

ArchParams arch_params_generic(ArchField f) {
    ArchParams p;
    p.mu = {Complex(0.0, 0.1), Complex(0.0, 0.05), Complex(0.0, -0.05),
            Complex(0.0, -0.1)};
    p.nu1 = Complex(0.0, 0.1);
    p.nu0 = Complex(0.0, 0.05); // 2 nu0 - nu1 = 0 = -sum(mu)
    p.field = f;
    return p;
}

void require_central_match(const ArchParams& p) {
    const Complex defect = 2.0 * p.nu0 - p.nu1 + p.mu_sum();
    if (std::abs(defect) > 1e-12) {
        throw CentralCharacterViolation(
            "central characters do not cancel: 2*nu0 - nu1 + sum(mu) = " +
            format_complex(defect));
    }
}

ArchFactorKind arch_factor_from_string(const std::string& s) {
    if (s == "wedge2_std2") return ArchFactorKind::Wedge2Std2;
    if (s == "sym2") return ArchFactorKind::Sym2Twist;
    throw InputError("unknown archimedean L-factor \"" + s + "\"");
}

std::string arch_factor_name(ArchFactorKind k) {
    return k == ArchFactorKind::Wedge2Std2 ? "wedge2_std2" : "sym2";
}

std::vector<Complex> arch_lfactor_shifts(const ArchParams& p, ArchFactorKind k) {
    std::vector<Complex> shifts;
    if (k == ArchFactorKind::Wedge2Std2) {
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                shifts.push_back(p.mu[i] + p.mu[j] + p.nu0);
                shifts.push_back(p.mu[i] + p.mu[j] + p.nu0 - p.nu1);
            }
        }
    } else {
        const Complex m = p.mu_sum();
        shifts.push_back(2.0 * p.nu0 + m);
        shifts.push_back(2.0 * p.nu0 - 2.0 * p.nu1 + m);
        shifts.push_back(2.0 * p.nu0 - p.nu1 + m);
    }
    return shifts;
}

Complex arch_lfactor(const ArchParams& p, ArchFactorKind k, Complex s) {
    Complex lg(0.0, 0.0);
    for (const Complex& c : arch_lfactor_shifts(p, k)) {
        const Complex arg = s + c;
        try {
            (void)gamma_F(p.field, arg); // pole detection with factor context
        } catch (const PoleError&) {
            throw PoleError("archimedean L-factor pole in Gamma_" +
                            field_name(p.field) + "(s + " + format_complex(c) +
                            ") at s = " + format_complex(s));
        }
        lg += log_gamma_F(p.field, arg);
    }
    return std::exp(lg);
}

ArchCheck verify_barnes1(const std::array<Complex, 2>& a,
                         const std::array<Complex, 2>& b, ArchField field,
                         const QuadratureSpec& spec, double tol) {
    MBIntegrand f(1, spec);
    for (const Complex& ai : a) f.add_factor(field, {1, 0, 0, 0}, ai);
    for (const Complex& bj : b) f.add_factor(field, {-1, 0, 0, 0}, bj);
    const Complex lhs = mb_integrate(f).value;

    Complex lg(0.0, 0.0);
    for (const Complex& ai : a)
        for (const Complex& bj : b) lg += log_gamma_F(field, ai + bj);
    lg -= log_gamma_F(field, a[0] + a[1] + b[0] + b[1]);
    const Complex rhs = std::exp(lg);

    return make_check("barnes_first",
                      list_params("a", {a[0], a[1]}) + " " +
                          list_params("b", {b[0], b[1]}) + " F=" +
                          field_name(field),
                      lhs, rhs, tol);
}

ArchCheck verify_barnes2(const std::array<Complex, 2>& a,
                         const std::array<Complex, 3>& b, ArchField field,
                         const QuadratureSpec& spec, double tol) {
    const Complex total = a[0] + a[1] + b[0] + b[1] + b[2];
    MBIntegrand f(1, spec);
    for (const Complex& ai : a) f.add_factor(field, {1, 0, 0, 0}, ai);
    for (const Complex& bj : b) f.add_factor(field, {-1, 0, 0, 0}, bj);
    f.add_factor(field, {-1, 0, 0, 0}, total, /*denominator=*/true);
    const Complex lhs = mb_integrate(f).value;

    Complex lg(0.0, 0.0);
    for (const Complex& ai : a)
        for (const Complex& bj : b) lg += log_gamma_F(field, ai + bj);
    lg -= log_gamma_F(field, a[0] + a[1] + b[0] + b[1]);
    lg -= log_gamma_F(field, a[0] + a[1] + b[0] + b[2]);
    lg -= log_gamma_F(field, a[0] + a[1] + b[1] + b[2]);
    const Complex rhs = std::exp(lg);

    return make_check("barnes_second",
                      list_params("a", {a[0], a[1]}) + " " +
                          list_params("b", {b[0], b[1], b[2]}) + " F=" +
                          field_name(field),
                      lhs, rhs, tol);
}

namespace {

// I(a; b): three increasing and three decreasing numerator shifts against
// one denominator shift on each side.
Complex stade_integral(const std::array<Complex, 4>& a,
                       const std::array<Complex, 4>& b, ArchField field,
                       const QuadratureSpec& spec) {
    MBIntegrand f(1, spec);
    for (int i = 0; i < 3; ++i) {
        f.add_factor(field, {1, 0, 0, 0}, a[static_cast<std::size_t>(i)]);
        f.add_factor(field, {-1, 0, 0, 0}, b[static_cast<std::size_t>(i)]);
    }
    f.add_factor(field, {1, 0, 0, 0}, a[3], /*denominator=*/true);
    f.add_factor(field, {-1, 0, 0, 0}, b[3], /*denominator=*/true);
    return mb_integrate(f).value;
}

} // namespace

ArchCheck verify_stade(const std::array<Complex, 4>& a,
                       const std::array<Complex, 4>& b, ArchField field,
                       const QuadratureSpec& spec, double tol) {
    const Complex balance =
        a[0] + a[1] + a[2] + b[0] + b[1] + b[2] - a[3] - b[3];
    if (std::abs(balance) > 1e-9) {
        throw BalanceViolation("parameters violate the balance condition by " +
                               format_complex(balance));
    }

    const Complex lhs = stade_integral(a, b, field, spec);

    Complex lg = log_gamma_F(field, a[0] + b[2]) + log_gamma_F(field, a[1] + b[2]) +
                 log_gamma_F(field, a[2] + b[0]) + log_gamma_F(field, a[2] + b[1]);
    lg -= log_gamma_F(field, a[3] - a[0]) + log_gamma_F(field, a[3] - a[1]) +
          log_gamma_F(field, b[3] - b[0]) + log_gamma_F(field, b[3] - b[1]);
    const Complex prefactor = std::exp(lg);

    const std::array<Complex, 4> at{a[0], a[1], b[3] - b[0] - b[1],
                                    a[0] + a[1] + b[2]};
    const std::array<Complex, 4> bt{b[0], b[1], a[3] - a[0] - a[1],
                                    b[0] + b[1] + a[2]};
    const Complex rhs = prefactor * stade_integral(at, bt, field, spec);

    return make_check("stade_transform",
                      list_params("a", {a[0], a[1], a[2], a[3]}) + " " +
                          list_params("b", {b[0], b[1], b[2], b[3]}) + " F=" +
                          field_name(field),
                      lhs, rhs, tol);
}

Complex whittaker_gl2_arch(Complex nu0, Complex nu1, double a0, double a1,
                           ArchField field, const QuadratureSpec& spec) {
    if (!(a0 > 0.0) || !(a1 > 0.0)) {
        throw InputError("torus coordinates must be positive");
    }
    const double eps = field_epsilon(field);
    MBIntegrand f(1, spec);
    f.add_factor(field, {1, 0, 0, 0}, 0.5 * nu1);
    f.add_factor(field, {1, 0, 0, 0}, -0.5 * nu1);
    f.set_exponential(0, -eps * std::log(a0 * a1 * a1));
    const Complex power = eps * (nu0 - 0.5 * nu1) + 0.5 * eps;
    f.set_prefactor(std::pow(2.0, eps) * std::exp(power * std::log(a0)) *
                    std::pow(a1, eps));
    return mb_integrate(f).value;
}

Complex whittaker_gl4_kernel(const std::array<Complex, 4>& mu, Complex p1,
                             Complex p2, Complex p3, ArchField field,
                             const QuadratureSpec& spec) {
    const Complex m = mu[0] + mu[1] + mu[2] + mu[3];
    MBIntegrand f(2, spec);
    // the (q1, q2) kernel shared by every radial formula of the rank-four
    // factor; its denominator cancels the growth of the six numerators
    for (int i = 1; i < 4; ++i) {
        f.add_factor(field, {1, 0, 0, 0}, mu[static_cast<std::size_t>(i)]);
        f.add_factor(field, {0, 1, 0, 0}, m - mu[static_cast<std::size_t>(i)]);
    }
    f.add_factor(field, {1, 1, 0, 0}, m, /*denominator=*/true);
    // couplings to the outer Mellin parameters
    f.add_factor(field, {-1, 0, 0, 0}, p1);
    f.add_factor(field, {-1, 0, 0, 0}, p2 + mu[0]);
    f.add_factor(field, {0, -1, 0, 0}, p2 - mu[0]);
    f.add_factor(field, {0, -1, 0, 0}, p3);
    f.set_prefactor(std::exp(log_gamma_F(field, p1 + mu[0]) +
                             log_gamma_F(field, p3 + m - mu[0])));
    return mb_integrate(f).value;
}

ZetaStage stage_from_string(const std::string& s) {
    if (s == "after_barnes1") return ZetaStage::AfterBarnes1;
    if (s == "full") return ZetaStage::Full;
    throw InputError("unknown stage \"" + s + "\" (expected after_barnes1 or full)");
}

std::string stage_name(ZetaStage st) {
    return st == ZetaStage::AfterBarnes1 ? "after_barnes1" : "full";
}

QuadratureSpec stage_spec(ZetaStage st) {
    QuadratureSpec spec;
    if (st == ZetaStage::Full) {
        spec.height = 20.0;
        spec.nodes = 400;
    }
    return spec;
}

ArchCheck arch_zeta_verify(const ArchParams& p, Complex s, ZetaStage stage,
                           const QuadratureSpec& spec, double tol) {
    require_central_match(p);
    const ArchField field = p.field;
    const Complex m = p.mu_sum();

    Complex lhs;
    if (stage == ZetaStage::AfterBarnes1) {
        // two variables (q1, q2) after both p-integrals have been collapsed
        MBIntegrand f(2, spec);
        for (int i = 1; i < 4; ++i) {
            f.add_factor(field, {1, 0, 0, 0}, p.mu[static_cast<std::size_t>(i)]);
            f.add_factor(field, {0, 1, 0, 0}, m - p.mu[static_cast<std::size_t>(i)]);
        }
        f.add_factor(field, {1, 1, 0, 0}, m, /*denominator=*/true);
        const Complex shalf = s - 0.5 * m;
        f.add_factor(field, {-1, 0, 0, 0}, shalf + 0.5 * p.nu1 + p.mu[0]);
        f.add_factor(field, {-1, 0, 0, 0}, shalf - 0.5 * p.nu1 + p.mu[0]);
        f.add_factor(field, {0, -1, 0, 0}, shalf + 0.5 * p.nu1 - p.mu[0]);
        f.add_factor(field, {0, -1, 0, 0}, shalf - 0.5 * p.nu1 - p.mu[0]);
        f.add_factor(field, {0, -1, 0, 0}, 2.0 * s - m + p.mu[0]);
        f.add_factor(field, {-1, -1, 0, 0}, 2.0 * s - m);
        f.add_factor(field, {-1, 0, 0, 0}, 2.0 * s - p.mu[0]);
        f.add_factor(field, {-1, -1, 0, 0}, 2.0 * s - m, /*denominator=*/true);
        f.add_factor(field, {-1, -1, 0, 0}, 4.0 * s - m, /*denominator=*/true);
        f.set_prefactor(gamma_F(field, 2.0 * s));
        lhs = mb_integrate(f).value;
    } else {
        // variables (q1, q2, p2, p3)
        MBIntegrand f(4, spec);
        for (int i = 1; i < 4; ++i) {
            f.add_factor(field, {1, 0, 0, 0}, p.mu[static_cast<std::size_t>(i)]);
            f.add_factor(field, {0, 1, 0, 0}, m - p.mu[static_cast<std::size_t>(i)]);
        }
        f.add_factor(field, {1, 1, 0, 0}, m, /*denominator=*/true);
        const Complex shalf = s - 0.5 * m;
        f.add_factor(field, {0, 0, -1, 0}, shalf + 0.5 * p.nu1);
        f.add_factor(field, {0, 0, -1, 0}, shalf - 0.5 * p.nu1);
        f.add_factor(field, {0, 0, 0, -1}, 2.0 * s - m + p.mu[0]);
        f.add_factor(field, {-1, 0, 0, -1}, 2.0 * s - m);
        f.add_factor(field, {-1, 0, 1, 0}, p.mu[0]);
        f.add_factor(field, {0, -1, 1, 0}, -p.mu[0]);
        f.add_factor(field, {0, -1, 0, 1}, Complex(0.0, 0.0));
        f.add_factor(field, {0, 0, 0, 1}, m - p.mu[0]);
        lhs = mb_integrate(f).value;
    }

    const Complex rhs = arch_lfactor(p, ArchFactorKind::Wedge2Std2, s) /
                        arch_lfactor(p, ArchFactorKind::Sym2Twist, 2.0 * s);

    const std::string name = stage == ZetaStage::AfterBarnes1
                                 ? "whittaker_zeta_ratio_2d"
                                 : "whittaker_zeta_ratio_4d";
    return make_check(name, zeta_params(p, s), lhs, rhs, tol);
}

std::vector<ArchCheck> sweep_barnes1(int draws, ArchField field,
                                     std::uint64_t seed,
                                     const QuadratureSpec& spec, double tol) {
    SplitMix64 root(seed);
    std::vector<ArchCheck> out;
    for (int i = 0; i < draws; ++i) {
        SplitMix64 rng = root.split();
        const std::array<Complex, 2> a{draw_box(rng, 0.3, 2.0, -0.5, 0.5),
                                       draw_box(rng, 0.3, 2.0, -0.5, 0.5)};
        const std::array<Complex, 2> b{draw_box(rng, 0.3, 2.0, -0.5, 0.5),
                                       draw_box(rng, 0.3, 2.0, -0.5, 0.5)};
        out.push_back(verify_barnes1(a, b, field, spec, tol));
    }
    return out;
}

std::vector<ArchCheck> sweep_barnes2(int draws, ArchField field,
                                     std::uint64_t seed,
                                     const QuadratureSpec& spec, double tol) {
    SplitMix64 root(seed);
    std::vector<ArchCheck> out;
    for (int i = 0; i < draws; ++i) {
        SplitMix64 rng = root.split();
        const std::array<Complex, 2> a{draw_box(rng, 0.3, 2.0, -0.5, 0.5),
                                       draw_box(rng, 0.3, 2.0, -0.5, 0.5)};
        const std::array<Complex, 3> b{draw_box(rng, 0.3, 2.0, -0.5, 0.5),
                                       draw_box(rng, 0.3, 2.0, -0.5, 0.5),
                                       draw_box(rng, 0.3, 2.0, -0.5, 0.5)};
        out.push_back(verify_barnes2(a, b, field, spec, tol));
    }
    return out;
}

namespace {

// Balanced draw with the third decreasing shift kept away from the contour
// window edge: Re(d) >= 0.4 where d = a3 + b3 - c.
void draw_stade(SplitMix64& rng, std::array<Complex, 4>& a,
                std::array<Complex, 4>& b) {
    for (int i = 0; i < 3; ++i)
        a[static_cast<std::size_t>(i)] = draw_box(rng, 0.4, 1.2, -0.3, 0.3);
    for (int i = 0; i < 3; ++i)
        b[static_cast<std::size_t>(i)] = draw_box(rng, 0.4, 1.2, -0.3, 0.3);
    const double c_hi = std::min(1.2, a[2].real() + b[2].real() - 0.4);
    const Complex c = draw_box(rng, 0.4, c_hi, -0.3, 0.3);
    const Complex d = a[2] + b[2] - c;
    b[3] = b[0] + b[1] + c;
    a[3] = a[0] + a[1] + d;
}

} // namespace

std::vector<ArchCheck> sweep_stade(int draws, ArchField field,
                                   std::uint64_t seed,
                                   const QuadratureSpec& spec, double tol) {
    SplitMix64 root(seed);
    std::vector<ArchCheck> out;
    for (int i = 0; i < draws; ++i) {
        SplitMix64 rng = root.split();
        std::array<Complex, 4> a;
        std::array<Complex, 4> b;
        draw_stade(rng, a, b);
        out.push_back(verify_stade(a, b, field, spec, tol));
    }
    return out;
}

ArchCheck stade_fixed_point(std::uint64_t seed, ArchField field,
                            const QuadratureSpec& spec, double tol) {
    SplitMix64 rng(seed);
    std::array<Complex, 4> a;
    std::array<Complex, 4> b;
    for (int i = 0; i < 2; ++i)
        a[static_cast<std::size_t>(i)] = draw_box(rng, 0.4, 1.2, -0.3, 0.3);
    for (int i = 0; i < 3; ++i)
        b[static_cast<std::size_t>(i)] = draw_box(rng, 0.4, 1.2, -0.3, 0.3);
    b[3] = b[0] + b[1] + draw_box(rng, 0.4, 1.2, -0.3, 0.3);
    a[2] = b[3] - b[0] - b[1];
    a[3] = a[0] + a[1] + b[2];
    ArchCheck c = verify_stade(a, b, field, spec, tol);
    c.check = "stade_fixed_point";
    return c;
}

ArchCheck gamma_reflection_report(int points, std::uint64_t seed, double tol) {
    ArchCheck c;
    c.check = "gamma_reflection";
    c.params = "points=" + std::to_string(points) + " seed=" + std::to_string(seed);
    c.rel_err = check_gamma_reflection(points, seed);
    c.lhs = Complex(1.0, 0.0);
    c.rhs = Complex(1.0, 0.0);
    c.pass = c.rel_err <= tol;
    return c;
}

ArchCheck gamma_duplication_report(int points, std::uint64_t seed, double tol) {
    ArchCheck c;
    c.check = "gamma_duplication";
    c.params = "points=" + std::to_string(points) + " seed=" + std::to_string(seed);
    c.rel_err = check_gamma_duplication(points, seed);
    c.lhs = Complex(1.0, 0.0);
    c.rhs = Complex(1.0, 0.0);
    c.pass = c.rel_err <= tol;
    return c;
}

} // namespace lforge
