#pragma once

#include <array>
#include <optional>
#include <string>

#include "lforge/laurent.hpp"
#include "lforge/prng.hpp"
#include "lforge/weyl.hpp"

namespace lforge {

// Frobenius conjugacy-class data. Entries are single-term Laurent
// polynomials: rational constants for numeric sweeps, or symbols
// (beta1, alpha3, chi, c0, ...) for fully symbolic runs.

struct SatakeGL2 {
    std::array<LaurentPoly, 2> beta;

    void validate() const;
    static SatakeGL2 ones();
    static SatakeGL2 symbolic();
    LaurentPoly central() const { return beta[0] * beta[1]; }
};

struct SatakeGL4 {
    std::array<LaurentPoly, 4> alpha;
    LaurentPoly chi;

    void validate() const;
    static SatakeGL4 ones();
    static SatakeGL4 symbolic();
    // omega_pi = chi^2 * alpha1 alpha2 alpha3 alpha4
    LaurentPoly central() const;
};

struct SatakeGSp4 {
    LaurentPoly c0, c1, c2;

    void validate() const;
    static SatakeGSp4 ones();
    static SatakeGSp4 symbolic();
    // eigenvalues c0 * (1, c1, c2, c1 c2)
    std::array<LaurentPoly, 4> eigenvalues() const;
    // omega_pi' = c0^2 c1 c2
    LaurentPoly central() const;
    // C2sim torus coordinates (y1, y2, nu) = (c0 c1 c2, c0 c1, c0^2 c1 c2)
    TorusPoint torus_point() const;
};

struct SatakeData {
    std::optional<SatakeGL4> gl4;
    std::optional<SatakeGL2> gl2;
    std::optional<SatakeGSp4> gsp4;

    static SatakeData ones();
    const SatakeGL4& need_gl4() const;
    const SatakeGL2& need_gl2() const;
    const SatakeGSp4& need_gsp4() const;
};

// Exterior-square image of a GL4 class inside the orthogonal similitude
// group: six eigenvalue monomials chi*alpha_i*alpha_j (i<j, lexicographic
// pair order), the similitude, and the D3sim torus coordinates
// (chi a1 a2, chi a1 a3, chi a2 a3) that enumerate the six as
// (t1, t2, t3, nu/t3, nu/t2, nu/t1).
struct ExteriorSquare {
    std::array<LaurentPoly, 6> eigenvalues;
    LaurentPoly nu;
    TorusPoint torus;
};
ExteriorSquare exterior_square_satake(const SatakeGL4& s);

// Random small-height rational parameter sets for sweeps.
SatakeGL2 random_gl2(SplitMix64& rng);
SatakeGL4 random_gl4(SplitMix64& rng);
SatakeGSp4 random_gsp4(SplitMix64& rng);

} // namespace lforge
