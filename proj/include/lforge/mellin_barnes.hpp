#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "lforge/gammafun.hpp"

namespace lforge {

// Quadrature controls for one truncated vertical-line integral: contour
// height T, trapezoid nodes per dimension, and the minimum distance every
// numerator gamma argument must keep from its pole half-line.
struct QuadratureSpec {
    double height = 40.0;
    int nodes = 4000;
    double margin = 1e-3;
};

// Affine argument a.z + shift over at most four integration variables.
struct AffineForm {
    std::array<int, 4> coeff{0, 0, 0, 0};
    Complex shift{0.0, 0.0};
};

// One Gamma_F factor of the integrand. Denominator factors contribute zeros
// rather than poles, so they are ignored when contours are chosen.
struct GammaFactor {
    ArchField field = ArchField::R;
    AffineForm arg;
    bool denominator = false;
};

struct QuadratureResult {
    Complex value{0.0, 0.0};
    double error = 0.0;   // step-halving estimate |I_N - I_{N/2}|
    long nodes = 0;       // grid points of the finest run
};

// Product of Gamma_F factors integrated over d vertical lines with the
// normalization (4 pi i)^{-1} per variable. Optional per-variable factors
// exp(kappa_i z_i) carry radial-coordinate powers; `prefactor` scales the
// whole integral.
class MBIntegrand {
public:
    MBIntegrand(int dim, QuadratureSpec spec);

    void add_factor(ArchField f, std::array<int, 4> coeff, Complex shift,
                    bool denominator = false);
    void set_exponential(int var, double kappa);
    void set_prefactor(Complex c);
    // Overrides the automatically chosen contour abscissas.
    void set_contours(const std::array<double, 4>& sigma);

    int dim() const { return dim_; }
    const std::vector<GammaFactor>& factors() const { return factors_; }
    const QuadratureSpec& spec() const { return spec_; }
    Complex prefactor() const { return prefactor_; }
    const std::array<double, 4>& exponentials() const { return kappa_; }

    // The abscissas actually used: the override if set, otherwise the
    // solved ones. Throws ContourViolation if no admissible line exists.
    std::array<double, 4> contours() const;

private:
    int dim_;
    QuadratureSpec spec_;
    std::vector<GammaFactor> factors_;
    std::array<double, 4> kappa_{0.0, 0.0, 0.0, 0.0};
    Complex prefactor_{1.0, 0.0};
    std::optional<std::array<double, 4>> sigma_;
};

// Midpoint coordinate iteration over the admissible windows of each
// variable. Throws ContourViolation when the final slack drops below
// `margin`; denominator factors are excluded.
std::array<double, 4> solve_contours(int dim,
                                     const std::vector<GammaFactor>& factors,
                                     double margin);

// Deterministic trapezoid evaluation with a step-halving error estimate
// (full reruns at half and quarter resolution). Work may be spread over
// threads but every reduction runs in fixed index order, so the result is
// bitwise independent of the worker count. Throws NonConvergence when the
// halving sequence stops contracting.
QuadratureResult mb_integrate(const MBIntegrand& f);

} // namespace lforge
