#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lforge/rational.hpp"

namespace lforge {

// Multivariate Laurent polynomial over Rational: finitely many terms
// c * x1^e1 * ... * xr^er with integer exponents of either sign.
//
// Representation invariants:
//   - vars is sorted and duplicate-free, at most kMaxVars entries;
//   - terms maps fixed-width exponent vectors to nonzero coefficients,
//     entries beyond vars.size() are zero;
//   - the map's lexicographic key order is the canonical term order.
// Values are immutable from the caller's point of view: every operation
// returns a fresh polynomial.
class LaurentPoly {
public:
    static constexpr std::size_t kMaxVars = 8;
    using ExpVec = std::array<std::int16_t, kMaxVars>;
    using TermMap = std::map<ExpVec, Rational>;

    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly constant(const Rational& c);
    static LaurentPoly one() { return constant(Rational(1)); }
    // The single variable `name`, i.e. name^1 with coefficient 1.
    static LaurentPoly symbol(const std::string& name);
    // c * name^exp.
    static LaurentPoly monomial(const std::string& name, int exp, const Rational& c = Rational(1));

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // True if the polynomial is a single term (optionally requiring the
    // coefficient to be invertible, which it always is when present).
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    // Constant term value (0 if absent); only meaningful via is_constant for
    // whole-poly questions.
    Rational constant_value() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const Rational& c) const;

    // Exact quotient this / rhs. Throws NonExactDivision when no Laurent
    // polynomial quotient exists. No content/GCD preprocessing: leading-term
    // elimination in the canonical term order, exactly as documented.
    LaurentPoly exact_div(const LaurentPoly& rhs) const;

    // Integer power. Negative k requires a monomial base.
    LaurentPoly pow(long k) const;

    // Replace each mapped variable by a single-term polynomial (an invertible
    // monomial times a rational). Unmapped variables persist. Throws
    // InputError if an image has more than one term or is zero.
    LaurentPoly substitute(const std::map<std::string, LaurentPoly>& images) const;

    // Coefficient of the monomial with the given exponents on `names`
    // (all other variables must have exponent zero in the matching term).
    Rational coefficient(const std::map<std::string, int>& exponents) const;

    // Structural equality modulo unused variables.
    bool operator==(const LaurentPoly& rhs) const;
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    // Drop variables that appear with exponent zero in every term.
    LaurentPoly pruned() const;

    // Human-readable rendering, canonical term order, e.g. "3/2*x^2*y^-1 + 1".
    std::string str() const;

    // Build from parallel data (used by the JSON reader). Validates width,
    // merges duplicate exponent vectors, drops zero coefficients.
    static LaurentPoly from_terms(const std::vector<std::string>& vars,
                                  const std::vector<std::pair<std::vector<int>, Rational>>& terms);

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void insert_term(const ExpVec& e, const Rational& c);
    // Remap both operands onto the union variable list.
    static void align(const LaurentPoly& a, const LaurentPoly& b,
                      std::vector<std::string>& union_vars,
                      TermMap& a_terms, TermMap& b_terms);
    static TermMap remap(const TermMap& terms, const std::vector<std::string>& from,
                         const std::vector<std::string>& to);

    friend LaurentPoly operator*(const Rational& c, const LaurentPoly& p) { return p * c; }
};

} // namespace lforge
