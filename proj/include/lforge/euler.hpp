#pragma once

#include <string>
#include <vector>

#include "lforge/satake.hpp"
#include "lforge/series.hpp"

namespace lforge {

// One inverse block (1 - lambda * X^degree)^{-1} of an Euler factor.
// Blocks with lambda = 0 are unit factors and are dropped by the builders,
// which is what makes formal degenerations (like beta2 = 0) behave.
struct EulerBlock {
    LaurentPoly lambda;
    int degree = 1;
};

struct EulerFactor {
    std::string label;
    std::string var = "T";
    std::vector<EulerBlock> blocks;

    // Sum of block degrees: the factor's denominator degree in `var`.
    int degree() const;

    // Truncated expansion of prod (1 - lambda X^d)^{-1}.
    TruncatedSeries expand(int N) const;

    // The reciprocal polynomial prod (1 - lambda X^d) itself, as a series
    // (finite, exact). Multiplying expand() by this gives 1.
    TruncatedSeries reciprocal_polynomial(int N) const;

    // Product of all inverse roots (with multiplicity d).
    LaurentPoly root_product() const;
};

// L(2s, sigma, Sym^2 x twist): blocks (beta1^2 chi, 2), (beta1 beta2 chi, 2),
// (beta2^2 chi, 2); T^2 realizes q^{-2s}.
EulerFactor lfactor_sym2(const SatakeGL2& s2, const LaurentPoly& twist);

// Split exterior-square tensor factor: 12 degree-1 blocks chi a_i a_j b_k.
EulerFactor lfactor_wedge2_std2_split(const SatakeGL4& s4, const SatakeGL2& s2);

// Inert avatar of the same factor: 8 degree-1 blocks from the symplectic
// eigenvalues times beta_k, plus the two quadratic blocks
// (1 - c0^2 c1 c2 beta_k^2 T^2) standing in for the square-root pair.
EulerFactor lfactor_wedge2_std2_inert(const SatakeGSp4& c, const SatakeGL2& s2);

// Degree-8 tensor factor: blocks e_i beta_k over the symplectic eigenvalues.
EulerFactor lfactor_tensor_gsp4_gl2(const SatakeGSp4& c, const SatakeGL2& s2);

// Standard degree-4 factor in U (U = q^{-z-1/2}; the half shift is absorbed
// into the variable).
EulerFactor lfactor_std4(const SatakeGL4& s4);

// Rank-one factor L(2s, omega_pi' omega_sigma): single degree-2 block.
EulerFactor lfactor_central_product(const SatakeGSp4& c, const SatakeGL2& s2);

} // namespace lforge
