#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lforge/laurent.hpp"
#include "lforge/rational.hpp"

namespace lforge {

// The five root systems in play. A1/A2/A3 are the GL2/GL3/GL4 weight
// lattices (arbitrary non-increasing integer weights, so determinant twists
// are included). C2sim and D3sim carry an extra similitude coordinate nu on
// the torus; their sign flips act by y_i -> nu / y_i. Only last-coordinate-0
// highest weights are supported on the similitude systems.
enum class RootSystemId { A1, A2, A3, C2sim, D3sim };

using Weight = std::vector<int>;

// Number of y-coordinates: 2, 3, 4, 2, 3.
int rank(RootSystemId sys);
bool has_similitude(RootSystemId sys);
std::string system_name(RootSystemId sys);

// Torus coordinate names: y1..yr, plus "nu" for the similitude systems.
std::vector<std::string> torus_vars(RootSystemId sys);

// rho = (n-1,...,0) for A systems, (2,1) for C2sim, (2,1,0) for D3sim.
Weight rho(RootSystemId sys);
const std::vector<Weight>& positive_roots(RootSystemId sys);

bool is_dominant(RootSystemId sys, const Weight& lambda);

// One signed coordinate transformation: first permute (coordinate i goes to
// slot perm[i]), then invert the coordinates in `flips` (y -> 1/y on the
// weight lattice, y -> nu/y on the similitude torus).
struct WeylElement {
    std::array<std::uint8_t, 4> perm{};
    unsigned flips = 0;
    int sign = 1;
};

// Whole group: 2, 6, 24, 8, 24 elements.
const std::vector<WeylElement>& weyl_group(RootSystemId sys);

// Image of a weight vector under w.
Weight weyl_apply_weight(RootSystemId sys, const WeylElement& w, const Weight& mu);

// Substitution action on a polynomial in the torus variables.
LaurentPoly weyl_apply_poly(RootSystemId sys, const WeylElement& w, const LaurentPoly& p);

// Irreducible character as the alternant quotient A_{lambda+rho}/A_rho in the
// generic torus variables. Exact; cached per (system, weight). Dominant
// weights only, and last coordinate 0 on the similitude systems.
LaurentPoly weyl_character(RootSystemId sys, const Weight& lambda);

// Weight multiplicities of the same module by Freudenthal's recursion,
// including the full Weyl orbit of every dominant weight. Independent of the
// alternant path. `bound` caps sum(|lambda_i|).
std::map<Weight, BigInt> freudenthal_multiplicities(RootSystemId sys, const Weight& lambda,
                                                    int bound = 8);

// Product formula dimension, prod <lambda+rho,a> / <rho,a> over positive
// roots a.
BigInt weyl_dim(RootSystemId sys, const Weight& lambda);

// Character rebuilt from freudenthal_multiplicities, similitude powers
// restored through 2p + sum(weight) = sum(lambda).
LaurentPoly character_from_multiplicities(RootSystemId sys, const Weight& lambda, int bound = 8);

// Values for the torus coordinates; y.size() must equal rank, nu is ignored
// by the A systems. Every value must be an invertible single term.
struct TorusPoint {
    std::vector<LaurentPoly> y;
    LaurentPoly nu;
};

LaurentPoly specialize_character(const LaurentPoly& chi, RootSystemId sys, const TorusPoint& pt);

// U(3) -> U(2) x U(1) branching: all interlacing (mu1, mu2) with
// l1 >= mu1 >= l2 >= mu2 >= l3, paired with the scalar-slot power
// |lambda| - mu1 - mu2.
std::vector<std::pair<int, Weight>> branching_u3_u2(const Weight& lambda);

// Exact identity chi^{A2}_lambda(x1,x2,t) = sum over the branching list of
// t^{power} * chi^{A1}_mu(x1,x2). Returns true on success; on failure fills
// *diff with the (nonzero) difference when diff is non-null.
bool verify_branching(const Weight& lambda, LaurentPoly* diff = nullptr);

} // namespace lforge
