#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lforge/gammafun.hpp"
#include "lforge/mellin_barnes.hpp"

namespace lforge {

// Spectral data of the spherical principal series pair: four parameters for
// the rank-four factor, a central/twist pair (nu0, nu1) for the rank-two
// factor, over a fixed archimedean field.
struct ArchParams {
    std::array<Complex, 4> mu{};
    Complex nu0{0.0, 0.0};
    Complex nu1{0.0, 0.0};
    ArchField field = ArchField::R;

    Complex mu_sum() const { return mu[0] + mu[1] + mu[2] + mu[3]; }
};

ArchParams arch_params_trivial(ArchField f);
// Purely imaginary tempered-style parameters satisfying the matching
// condition 2 nu0 - nu1 = -(mu1+mu2+mu3+mu4).
ArchParams arch_params_generic(ArchField f);

// Throws CentralCharacterViolation unless the matching condition holds.
void require_central_match(const ArchParams& p);

enum class ArchFactorKind { Wedge2Std2, Sym2Twist };
ArchFactorKind arch_factor_from_string(const std::string& s);
std::string arch_factor_name(ArchFactorKind k);

// The gamma-shift multiset of the chosen L-factor: value(s) is the product
// of Gamma_F(s + shift) over the returned shifts (12 for Wedge2Std2, 3 for
// Sym2Twist).
std::vector<Complex> arch_lfactor_shifts(const ArchParams& p, ArchFactorKind k);
Complex arch_lfactor(const ArchParams& p, ArchFactorKind k, Complex s);

// One numerical identity: quadrature value against closed form.
struct ArchCheck {
    std::string check;
    std::string params;
    Complex lhs{0.0, 0.0};
    Complex rhs{0.0, 0.0};
    double rel_err = 0.0;
    bool pass = false;
};

// Deterministic shortest round-trip formatting; shared by reports.
std::string format_real(double x);
std::string format_complex(Complex z);

// First gamma-integral lemma: one vertical line, two shifts on each side.
ArchCheck verify_barnes1(const std::array<Complex, 2>& a,
                         const std::array<Complex, 2>& b, ArchField field,
                         const QuadratureSpec& spec, double tol);
// Second lemma: an extra decreasing shift balanced by a denominator factor.
ArchCheck verify_barnes2(const std::array<Complex, 2>& a,
                         const std::array<Complex, 3>& b, ArchField field,
                         const QuadratureSpec& spec, double tol);
// Degree 3+3 over 1+1 transformation identity. Inputs must satisfy the
// balance condition a1+a2+a3+b1+b2+b3 = a4+b4 (BalanceViolation otherwise).
ArchCheck verify_stade(const std::array<Complex, 4>& a,
                       const std::array<Complex, 4>& b, ArchField field,
                       const QuadratureSpec& spec, double tol);

// Radial spherical Whittaker value on the rank-two torus (a0, a1), both
// positive.
Complex whittaker_gl2_arch(Complex nu0, Complex nu1, double a0, double a1,
                           ArchField field, const QuadratureSpec& spec);
// Inner double integral of the rank-four radial Whittaker function at outer
// Mellin parameters (p1, p2, p3); symmetric in mu2 <-> mu3.
Complex whittaker_gl4_kernel(const std::array<Complex, 4>& mu, Complex p1,
                             Complex p2, Complex p3, ArchField field,
                             const QuadratureSpec& spec);

// Which reduction of the archimedean zeta integral to evaluate: the 2-D
// integral left after the first lemma collapses two variables, or the full
// 4-D Mellin-Barnes form.
enum class ZetaStage { AfterBarnes1, Full };
ZetaStage stage_from_string(const std::string& s);
std::string stage_name(ZetaStage st);

// Grid defaults per stage. The 4-D grid uses a lower height: its error is
// dominated by the node spacing, and the gamma decay makes truncation
// negligible already at height 20, so the budget goes into density.
QuadratureSpec stage_spec(ZetaStage st);

// Quadrature of the chosen stage against the closed-form ratio
// arch_lfactor(Wedge2Std2, s) / arch_lfactor(Sym2Twist, 2s).
ArchCheck arch_zeta_verify(const ArchParams& p, Complex s, ZetaStage stage,
                           const QuadratureSpec& spec, double tol);

// Seeded random sweeps used by the CLI and the acceptance gate.
std::vector<ArchCheck> sweep_barnes1(int draws, ArchField field,
                                     std::uint64_t seed,
                                     const QuadratureSpec& spec, double tol);
std::vector<ArchCheck> sweep_barnes2(int draws, ArchField field,
                                     std::uint64_t seed,
                                     const QuadratureSpec& spec, double tol);
std::vector<ArchCheck> sweep_stade(int draws, ArchField field,
                                   std::uint64_t seed,
                                   const QuadratureSpec& spec, double tol);
// The self-transform parameter choice; both sides coincide structurally.
ArchCheck stade_fixed_point(std::uint64_t seed, ArchField field,
                            const QuadratureSpec& spec, double tol);

// Gamma-function oracle sweeps wrapped as reportable checks.
ArchCheck gamma_reflection_report(int points, std::uint64_t seed, double tol);
ArchCheck gamma_duplication_report(int points, std::uint64_t seed, double tol);

} // namespace lforge
