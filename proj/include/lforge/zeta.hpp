#pragma once

#include "lforge/satake.hpp"
#include "lforge/series.hpp"

namespace lforge {

enum class PlaceType { Split, Inert };

PlaceType place_from_string(const std::string& s);
std::string place_to_string(PlaceType p);

struct ZetaSeriesConfig {
    int order_t = TruncatedSeries::kDefaultOrderT;
    int order_u = TruncatedSeries::kDefaultOrderU;
    // Multiply the Whittaker double sum by the symmetric-square prefactor so
    // the result is the actual zeta factor rather than the bare sum.
    bool normalized = true;
};

// Spherical Whittaker values at the (n, m)-indexed torus elements, exact in
// the Satake symbols. The square root of q is the formal symbol qh (so q
// itself never appears; q^k is qh^{2k}).
LaurentPoly cs_whittaker_gl2(int n, int m, const SatakeGL2& s2);
LaurentPoly cs_whittaker_gsp4(int n, int m, const SatakeGSp4& c);
LaurentPoly cs_whittaker_gl4(int n, int m, const SatakeGL4& s4);

// The zeta double sum over n, m >= 0 with 2n + m <= order_t, as a series in
// T = q^{-s}. The modulus-character powers cancel the Whittaker qh powers
// degree by degree, so coefficients are polynomials in the Satake symbols
// alone. Needs gl2 plus gl4 (split) or gsp4 (inert).
TruncatedSeries zeta_series(PlaceType place, const SatakeData& data,
                            const ZetaSeriesConfig& cfg);

// Two-variable product J(T, U): the standard degree-4 factor in U times the
// split exterior-square tensor factor in T times the reciprocal polynomial of
// the symmetric-square prefactor.
TruncatedSeries two_variable_factor(const SatakeGL4& s4, const SatakeGL2& s2,
                                    const ZetaSeriesConfig& cfg);

} // namespace lforge
