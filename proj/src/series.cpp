#include "lforge/series.hpp"

#include <algorithm>
#include <sstream>

#include "lforge/errors.hpp"

namespace lforge {

namespace {

const LaurentPoly kZeroPoly = LaurentPoly::zero();

void check_vars(const std::vector<std::string>& vars) {
    if (vars.empty() || vars.size() > 2)
        throw InputError("a truncated series needs one or two deformation variables");
    if (vars.size() == 2 && vars[0] == vars[1])
        throw InputError("duplicate deformation variable '" + vars[0] + "'");
}

} // namespace

TruncatedSeries::TruncatedSeries(std::vector<std::string> vars, Key bounds)
    : vars_(std::move(vars)), bounds_(bounds) {
    check_vars(vars_);
    if (bounds_.first < 0 || bounds_.second < 0)
        throw InputError("series order bounds must be nonnegative");
    if (vars_.size() == 1 && bounds_.second != 0)
        throw InputError("univariate series carries a single order bound");
}

TruncatedSeries TruncatedSeries::one(std::vector<std::string> vars, Key bounds) {
    TruncatedSeries s(std::move(vars), bounds);
    s.coeffs_.emplace(Key{0, 0}, LaurentPoly::one());
    return s;
}

const LaurentPoly& TruncatedSeries::coeff(int deg_first, int deg_second) const {
    const auto it = coeffs_.find(Key{deg_first, deg_second});
    return it == coeffs_.end() ? kZeroPoly : it->second;
}

void TruncatedSeries::set_coeff(int deg_first, int deg_second, LaurentPoly p) {
    if (deg_first < 0 || deg_second < 0)
        throw InputError("series degrees must be nonnegative");
    if (deg_first > bounds_.first || deg_second > bounds_.second) return;
    const Key k{deg_first, deg_second};
    if (p.is_zero())
        coeffs_.erase(k);
    else
        coeffs_[k] = std::move(p);
}

void TruncatedSeries::add_to_coeff(int deg_first, int deg_second, const LaurentPoly& p) {
    if (deg_first < 0 || deg_second < 0)
        throw InputError("series degrees must be nonnegative");
    if (deg_first > bounds_.first || deg_second > bounds_.second || p.is_zero()) return;
    const Key k{deg_first, deg_second};
    auto [it, inserted] = coeffs_.emplace(k, p);
    if (!inserted) {
        it->second = it->second + p;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::truncated(Key new_bounds) const {
    TruncatedSeries out(vars_, {std::min(bounds_.first, new_bounds.first),
                                std::min(bounds_.second, new_bounds.second)});
    for (const auto& [k, p] : coeffs_)
        if (k.first <= out.bounds_.first && k.second <= out.bounds_.second)
            out.coeffs_.emplace(k, p);
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const LaurentPoly& p) const {
    TruncatedSeries out(vars_, bounds_);
    if (p.is_zero()) return out;
    for (const auto& [k, c] : coeffs_) {
        LaurentPoly prod = c * p;
        if (!prod.is_zero()) out.coeffs_.emplace(k, std::move(prod));
    }
    return out;
}

TruncatedSeries TruncatedSeries::embedded(std::vector<std::string> new_vars, Key new_bounds) const {
    check_vars(new_vars);
    // Position of each current variable inside the new list.
    std::vector<std::size_t> pos;
    for (const auto& v : vars_) {
        const auto it = std::find(new_vars.begin(), new_vars.end(), v);
        if (it == new_vars.end())
            throw InputError("embedded series must keep deformation variable '" + v + "'");
        pos.push_back(static_cast<std::size_t>(it - new_vars.begin()));
    }
    TruncatedSeries out(std::move(new_vars), new_bounds);
    for (const auto& [k, p] : coeffs_) {
        const std::array<int, 2> degs_in{k.first, k.second};
        std::array<int, 2> degs_out{0, 0};
        for (std::size_t i = 0; i < pos.size(); ++i) degs_out[pos[i]] = degs_in[i];
        if (degs_out[0] <= new_bounds.first && degs_out[1] <= new_bounds.second)
            out.coeffs_.emplace(Key{degs_out[0], degs_out[1]}, p);
    }
    return out;
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, p] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << p.str() << ")";
        if (k.first != 0) {
            os << "*" << vars_[0];
            if (k.first != 1) os << "^" << k.first;
        }
        if (k.second != 0) {
            os << "*" << vars_[1];
            if (k.second != 1) os << "^" << k.second;
        }
    }
    if (first) os << "0";
    os << "  [O(" << vars_[0] << "^" << bounds_.first + 1;
    if (vars_.size() == 2) os << ", " << vars_[1] << "^" << bounds_.second + 1;
    os << ")]";
    return os.str();
}

TruncatedSeries ps_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.deformation_vars() != b.deformation_vars())
        throw InputError("series product needs matching deformation variables");
    const TruncatedSeries::Key bounds{std::min(a.bounds().first, b.bounds().first),
                                      std::min(a.bounds().second, b.bounds().second)};
    TruncatedSeries out(a.deformation_vars(), bounds);
    for (const auto& [ka, pa] : a.coefficients()) {
        if (ka.first > bounds.first || ka.second > bounds.second) continue;
        for (const auto& [kb, pb] : b.coefficients()) {
            const int dt = ka.first + kb.first;
            const int du = ka.second + kb.second;
            if (dt > bounds.first || du > bounds.second) continue;
            out.add_to_coeff(dt, du, pa * pb);
        }
    }
    return out;
}

bool ps_eq(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !first_series_mismatch(a, b).has_value();
}

std::optional<SeriesMismatch> first_series_mismatch(const TruncatedSeries& a,
                                                    const TruncatedSeries& b) {
    if (a.deformation_vars() != b.deformation_vars())
        throw InputError("series comparison needs matching deformation variables");
    const int bt = std::min(a.bounds().first, b.bounds().first);
    const int bu = std::min(a.bounds().second, b.bounds().second);

    std::vector<TruncatedSeries::Key> keys;
    for (const auto& [k, p] : a.coefficients())
        if (k.first <= bt && k.second <= bu) keys.push_back(k);
    for (const auto& [k, p] : b.coefficients())
        if (k.first <= bt && k.second <= bu) keys.push_back(k);
    std::sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) {
        const int gx = x.first + x.second, gy = y.first + y.second;
        if (gx != gy) return gx < gy;
        return x < y;
    });
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    for (const auto& k : keys) {
        const LaurentPoly& ca = a.coeff(k.first, k.second);
        const LaurentPoly& cb = b.coeff(k.first, k.second);
        if (!(ca == cb)) return SeriesMismatch{k, ca, cb};
    }
    return std::nullopt;
}

TruncatedSeries ps_from_inverse_roots(const std::vector<std::pair<LaurentPoly, int>>& roots,
                                      int N, const std::string& var) {
    if (N < 0) throw InputError("series order must be nonnegative");
    TruncatedSeries acc = TruncatedSeries::one({var}, {N, 0});
    for (const auto& [lambda, d] : roots) {
        if (d < 1) throw InputError("inverse-root degree must be at least 1");
        // 1/(1 - lambda X^d) = sum_k lambda^k X^{dk}
        TruncatedSeries geo({var}, {N, 0});
        LaurentPoly power = LaurentPoly::one();
        for (int k = 0; d * k <= N; ++k) {
            geo.set_coeff(d * k, 0, power);
            if (d * (k + 1) <= N) power = power * lambda;
        }
        acc = ps_mul(acc, geo);
    }
    return acc;
}

} // namespace lforge
