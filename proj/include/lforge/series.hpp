#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lforge/laurent.hpp"

namespace lforge {

// Formal power series in one or two deformation variables, truncated at fixed
// order bounds, with LaurentPoly coefficients. The deformation variables are
// kept apart from the coefficient symbols: a coefficient polynomial never
// mentions a deformation variable.
//
// For a univariate series the key's second component is always 0 and the
// second bound is 0.
class TruncatedSeries {
public:
    using Key = std::pair<int, int>;

    static constexpr int kDefaultOrderT = 8;
    static constexpr int kDefaultOrderU = 4;

    TruncatedSeries(std::vector<std::string> vars, Key bounds);

    static TruncatedSeries zero(std::vector<std::string> vars, Key bounds) {
        return TruncatedSeries(std::move(vars), bounds);
    }
    static TruncatedSeries one(std::vector<std::string> vars, Key bounds);

    const std::vector<std::string>& deformation_vars() const { return vars_; }
    Key bounds() const { return bounds_; }
    bool is_bivariate() const { return vars_.size() == 2; }
    const std::map<Key, LaurentPoly>& coefficients() const { return coeffs_; }

    // Coefficient polynomial at the given degrees (zero when absent).
    const LaurentPoly& coeff(int deg_first, int deg_second = 0) const;

    // Both mutators silently drop contributions beyond the bounds, so
    // builders can iterate without edge bookkeeping.
    void set_coeff(int deg_first, int deg_second, LaurentPoly p);
    void add_to_coeff(int deg_first, int deg_second, const LaurentPoly& p);

    // Copy with tighter bounds, dropping higher-degree coefficients.
    TruncatedSeries truncated(Key new_bounds) const;

    // Multiply every coefficient by a fixed polynomial.
    TruncatedSeries scaled(const LaurentPoly& p) const;

    // Reinterpret inside a larger deformation-variable list (existing
    // variables keep their degrees by name, new ones sit at degree zero).
    TruncatedSeries embedded(std::vector<std::string> new_vars, Key new_bounds) const;

    std::string str() const;

private:
    std::vector<std::string> vars_;
    Key bounds_;
    std::map<Key, LaurentPoly> coeffs_;
};

// Degree and the two disagreeing coefficients of the earliest mismatch
// between two series, in graded order (total degree, then first-variable
// degree). Degrees are compared over the common truncation region.
struct SeriesMismatch {
    std::pair<int, int> degree;
    LaurentPoly lhs;
    LaurentPoly rhs;
};

// Exact truncated product. Requires identical deformation variables; the
// result's bounds are the componentwise minimum.
TruncatedSeries ps_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Structural equality of coefficients over the common truncation region.
bool ps_eq(const TruncatedSeries& a, const TruncatedSeries& b);

std::optional<SeriesMismatch> first_series_mismatch(const TruncatedSeries& a,
                                                    const TruncatedSeries& b);

// Expansion of prod_j (1 - lambda_j * X^{d_j})^{-1} to order N in the single
// deformation variable `var`. Each root is the pair (lambda_j, d_j), d_j >= 1.
TruncatedSeries ps_from_inverse_roots(const std::vector<std::pair<LaurentPoly, int>>& roots,
                                      int N, const std::string& var = "T");

} // namespace lforge
