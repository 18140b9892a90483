#include "lforge/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "lforge/errors.hpp"

namespace lforge {

namespace {

constexpr long kDivisionStepGuard = 2'000'000;

} // namespace

LaurentPoly LaurentPoly::constant(const Rational& c) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace(ExpVec{}, c);
    return p;
}

LaurentPoly LaurentPoly::symbol(const std::string& name) {
    return monomial(name, 1);
}

LaurentPoly LaurentPoly::monomial(const std::string& name, int exp, const Rational& c) {
    if (c == 0) return zero();
    LaurentPoly p;
    p.vars_ = {name};
    ExpVec e{};
    e[0] = static_cast<std::int16_t>(exp);
    p.terms_.emplace(e, c);
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    return terms_.begin()->first == ExpVec{};
}

Rational LaurentPoly::constant_value() const {
    const auto it = terms_.find(ExpVec{});
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::insert_term(const ExpVec& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly::TermMap LaurentPoly::remap(const TermMap& terms, const std::vector<std::string>& from,
                                        const std::vector<std::string>& to) {
    if (from == to) return terms;
    std::array<std::size_t, kMaxVars> pos{};
    for (std::size_t i = 0; i < from.size(); ++i) {
        const auto it = std::lower_bound(to.begin(), to.end(), from[i]);
        pos[i] = static_cast<std::size_t>(it - to.begin());
    }
    TermMap out;
    for (const auto& [e, c] : terms) {
        ExpVec ne{};
        for (std::size_t i = 0; i < from.size(); ++i) ne[pos[i]] = e[i];
        out.emplace(ne, c);
    }
    return out;
}

void LaurentPoly::align(const LaurentPoly& a, const LaurentPoly& b,
                        std::vector<std::string>& union_vars,
                        TermMap& a_terms, TermMap& b_terms) {
    union_vars.clear();
    std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(union_vars));
    if (union_vars.size() > kMaxVars)
        throw InputError("polynomial would need " + std::to_string(union_vars.size()) +
                         " variables; capacity is " + std::to_string(kMaxVars));
    a_terms = remap(a.terms_, a.vars_, union_vars);
    b_terms = remap(b.terms_, b.vars_, union_vars);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(*this);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    LaurentPoly out;
    TermMap a, b;
    align(*this, rhs, out.vars_, a, b);
    out.terms_ = std::move(a);
    for (const auto& [e, c] : b) out.insert_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    LaurentPoly out;
    TermMap a, b;
    align(*this, rhs, out.vars_, a, b);
    out.terms_ = std::move(a);
    for (const auto& [e, c] : b) out.insert_term(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    LaurentPoly out;
    if (terms_.empty() || rhs.terms_.empty()) return out;
    TermMap a, b;
    align(*this, rhs, out.vars_, a, b);
    const std::size_t width = out.vars_.size();
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            ExpVec e{};
            for (std::size_t i = 0; i < width; ++i)
                e[i] = static_cast<std::int16_t>(ea[i] + eb[i]);
            out.insert_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
    if (c == 0) return zero();
    LaurentPoly out(*this);
    for (auto& [e, coef] : out.terms_) coef *= c;
    return out;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& rhs) const {
    if (rhs.terms_.empty()) throw NonExactDivision("division by zero polynomial");
    if (terms_.empty()) return zero();

    LaurentPoly quotient;
    TermMap rem, div;
    align(*this, rhs, quotient.vars_, rem, div);
    const std::size_t width = quotient.vars_.size();

    // Leading term = lexicographically largest exponent vector. Monomials are
    // units in the Laurent ring, so each elimination step always applies; a
    // non-exact input shows up as an endless strictly-decreasing leading term,
    // which the step guard converts into NonExactDivision.
    const auto lead_div = std::prev(div.end());
    long steps = 0;
    while (!rem.empty()) {
        if (++steps > kDivisionStepGuard)
            throw NonExactDivision("no Laurent polynomial quotient (elimination does not terminate)");
        const auto lead_rem = std::prev(rem.end());
        ExpVec qe{};
        for (std::size_t i = 0; i < width; ++i)
            qe[i] = static_cast<std::int16_t>(lead_rem->first[i] - lead_div->first[i]);
        const Rational qc = lead_rem->second / lead_div->second;
        quotient.insert_term(qe, qc);
        for (const auto& [de, dc] : div) {
            ExpVec e{};
            for (std::size_t i = 0; i < width; ++i)
                e[i] = static_cast<std::int16_t>(qe[i] + de[i]);
            const Rational c = -qc * dc;
            auto [it, inserted] = rem.emplace(e, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    return quotient;
}

LaurentPoly LaurentPoly::pow(long k) const {
    if (k == 0) return one();
    if (k < 0) {
        if (!is_monomial()) throw InputError("negative power of a non-monomial");
        const auto& [e, c] = *terms_.begin();
        LaurentPoly out;
        out.vars_ = vars_;
        ExpVec ne{};
        for (std::size_t i = 0; i < vars_.size(); ++i)
            ne[i] = static_cast<std::int16_t>(e[i] * k);
        out.terms_.emplace(ne, rational_pow(c, k));
        return out;
    }
    if (is_monomial()) {
        const auto& [e, c] = *terms_.begin();
        LaurentPoly out;
        out.vars_ = vars_;
        ExpVec ne{};
        for (std::size_t i = 0; i < vars_.size(); ++i)
            ne[i] = static_cast<std::int16_t>(e[i] * k);
        out.terms_.emplace(ne, rational_pow(c, k));
        return out;
    }
    LaurentPoly acc = one();
    LaurentPoly base = *this;
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        base = base * base;
        e >>= 1UL;
    }
    return acc;
}

LaurentPoly LaurentPoly::substitute(const std::map<std::string, LaurentPoly>& images) const {
    // Validate images and split each into (per-variable exponent row, coefficient).
    struct Image {
        ExpVec exps{};
        Rational coef;
        const std::vector<std::string>* vars = nullptr;
    };
    std::map<std::string, Image> prepared;
    for (const auto& [name, img] : images) {
        if (img.term_count() != 1)
            throw InputError("substitution image for '" + name + "' must be a single invertible term");
        Image im;
        im.exps = img.terms_.begin()->first;
        im.coef = img.terms_.begin()->second;
        im.vars = &img.vars_;
        prepared.emplace(name, std::move(im));
    }

    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
        LaurentPoly term = constant(c);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            const auto it = prepared.find(vars_[i]);
            if (it == prepared.end()) {
                term = term * monomial(vars_[i], e[i]);
            } else {
                const Image& im = it->second;
                LaurentPoly powed = constant(rational_pow(im.coef, e[i]));
                for (std::size_t j = 0; j < im.vars->size(); ++j) {
                    if (im.exps[j] == 0) continue;
                    powed = powed * monomial((*im.vars)[j], im.exps[j] * e[i]);
                }
                term = term * powed;
            }
        }
        out = out + term;
    }
    return out;
}

Rational LaurentPoly::coefficient(const std::map<std::string, int>& exponents) const {
    ExpVec target{};
    for (const auto& [name, exp] : exponents) {
        const auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
        if (it == vars_.end() || *it != name) {
            if (exp != 0) return Rational(0);
            continue;
        }
        target[static_cast<std::size_t>(it - vars_.begin())] = static_cast<std::int16_t>(exp);
    }
    const auto it = terms_.find(target);
    return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly LaurentPoly::pruned() const {
    std::array<bool, kMaxVars> used{};
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (e[i] != 0) used[i] = true;
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) kept.push_back(vars_[i]);
    if (kept.size() == vars_.size()) return *this;
    LaurentPoly out;
    out.vars_ = kept;
    for (const auto& [e, c] : terms_) {
        ExpVec ne{};
        std::size_t j = 0;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) ne[j++] = e[i];
        out.terms_.emplace(ne, c);
    }
    return out;
}

bool LaurentPoly::operator==(const LaurentPoly& rhs) const {
    const LaurentPoly a = pruned();
    const LaurentPoly b = rhs.pruned();
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Render leading (lex-largest) terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational coef = c;
        if (!first) {
            os << (coef < 0 ? " - " : " + ");
            if (coef < 0) coef = -coef;
        }
        first = false;
        std::string body;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (!body.empty()) body += "*";
            body += vars_[i];
            if (e[i] != 1) body += "^" + std::to_string(e[i]);
        }
        if (body.empty()) {
            os << rational_to_string(coef);
        } else if (coef == 1) {
            os << body;
        } else if (coef == -1) {
            os << "-" << body;
        } else {
            os << rational_to_string(coef) << "*" << body;
        }
    }
    return os.str();
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::string>& vars,
                                    const std::vector<std::pair<std::vector<int>, Rational>>& terms) {
    if (vars.size() > kMaxVars)
        throw InputError("too many variables: " + std::to_string(vars.size()));
    std::vector<std::string> sorted_vars = vars;
    std::sort(sorted_vars.begin(), sorted_vars.end());
    if (std::adjacent_find(sorted_vars.begin(), sorted_vars.end()) != sorted_vars.end())
        throw InputError("duplicate variable name");
    // Positions of the caller's order inside the sorted order.
    std::vector<std::size_t> pos(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        pos[i] = static_cast<std::size_t>(
            std::lower_bound(sorted_vars.begin(), sorted_vars.end(), vars[i]) - sorted_vars.begin());
    }
    LaurentPoly out;
    out.vars_ = std::move(sorted_vars);
    for (const auto& [exps, coef] : terms) {
        if (exps.size() != vars.size())
            throw InputError("exponent vector length does not match variable list");
        ExpVec e{};
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] < INT16_MIN || exps[i] > INT16_MAX)
                throw InputError("exponent out of range");
            e[pos[i]] = static_cast<std::int16_t>(exps[i]);
        }
        out.insert_term(e, coef);
    }
    return out;
}

} // namespace lforge
