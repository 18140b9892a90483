#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lforge/satake.hpp"
#include "lforge/series.hpp"
#include "lforge/zeta.hpp"

namespace lforge {

// Outcome of one exact series identity. Failures are data, not exceptions:
// the sweep drivers and the CLI aggregate them.
struct SeriesCheck {
    std::string identity;
    std::string params;
    int order = 0;
    bool pass = true;
    std::optional<SeriesMismatch> mismatch;
};

// When set, the verifiers corrupt the first inverse root of the reference
// Euler factor (scaling it by 2) before comparing. Used to prove the checks
// can fail: a corrupted eigenvalue must surface by degree 2.
struct MutationFlag {
    bool enabled = false;
};

// Whittaker zeta series against the split exterior-square tensor factor.
SeriesCheck verify_split(const SatakeGL4& s4, const SatakeGL2& s2, int N,
                         MutationFlag mutate = {});

// The two inert factorizations of the same zeta series: the exterior-square
// avatar factor, and the central-product polynomial times the symmetric
// square times the degree-8 tensor factor.
std::vector<SeriesCheck> verify_inert(const SatakeGSp4& c, const SatakeGL2& s2, int N,
                                      MutationFlag mutate = {});

// Complete-homogeneous expansion of the eight tensor eigenvalues against the
// symplectic-by-linear character sum, one check per degree l <= ell_max.
std::vector<SeriesCheck> verify_sym_alg_fact(const SatakeGSp4& c, const SatakeGL2& s2,
                                             int ell_max, MutationFlag mutate = {});

// Same shape for the twelve split eigenvalues against the orthogonal-by-
// linear character sum with symmetric-square coefficients.
std::vector<SeriesCheck> verify_separation_split(const SatakeGL4& s4, const SatakeGL2& s2,
                                                 int ell_max, MutationFlag mutate = {});

// Two-variable product against an independently associated product and
// against the route through the Whittaker zeta sum.
std::vector<SeriesCheck> verify_two_variable(const SatakeGL4& s4, const SatakeGL2& s2,
                                             const ZetaSeriesConfig& cfg, MutationFlag mutate = {});

// Deterministic sweep drivers used by the CLI and the acceptance tests; one
// child generator per draw, results in draw order.
std::vector<SeriesCheck> sweep_split(int sweeps, int N, std::uint64_t seed);
std::vector<SeriesCheck> sweep_inert(int sweeps, int N, std::uint64_t seed);

std::string describe_params(const SatakeGL4& s4, const SatakeGL2& s2);
std::string describe_params(const SatakeGSp4& c, const SatakeGL2& s2);

} // namespace lforge
