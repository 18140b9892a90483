#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace lforge {

using Complex = std::complex<double>;

// The two archimedean places. epsilon(R) = 1, epsilon(C) = 2; the doubled
// value shows up in exponents of the radial coordinates.
enum class ArchField { R, C };

int field_epsilon(ArchField f);
std::string field_name(ArchField f);
ArchField field_from_string(const std::string& s);

// log Gamma on the cut plane, Lanczos approximation with reflection for
// Re z < 1/2. The imaginary part may differ from the principal branch by a
// multiple of 2*pi; every consumer only exponentiates sums of these values.
Complex log_gamma(Complex z);

// Gamma itself. Throws PoleError at non-positive integers.
Complex complex_gamma(Complex z);

// Normalized factors pi^{-s/2} Gamma(s/2) and 2 (2 pi)^{-s} Gamma(s).
Complex log_gamma_R(Complex s);
Complex log_gamma_C(Complex s);
Complex gamma_R(Complex s); // poles at non-positive even integers
Complex gamma_C(Complex s); // poles at non-positive integers

Complex log_gamma_F(ArchField f, Complex s);
Complex gamma_F(ArchField f, Complex s);

// Oracle sweeps. Both return the maximum relative error over `points`
// seeded random arguments; they are the correctness anchor for everything
// that exponentiates log_gamma.
double check_gamma_reflection(int points, std::uint64_t seed);
double check_gamma_duplication(int points, std::uint64_t seed);

} // namespace lforge
