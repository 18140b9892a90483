#include "lforge/weyl.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "lforge/errors.hpp"

namespace lforge {

namespace {

int popcount(unsigned x) {
    int n = 0;
    while (x) {
        n += static_cast<int>(x & 1U);
        x >>= 1U;
    }
    return n;
}

long long dot(const Weight& a, const Weight& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
    return s;
}

Weight add_scaled(const Weight& a, const Weight& b, int k) {
    Weight out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += k * b[i];
    return out;
}

int perm_sign(const std::vector<int>& p) {
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) sign = -sign;
    return sign;
}

void check_weight(RootSystemId sys, const Weight& lambda) {
    if (static_cast<int>(lambda.size()) != rank(sys))
        throw InputError("weight for " + system_name(sys) + " needs " +
                         std::to_string(rank(sys)) + " entries");
    if (!is_dominant(sys, lambda))
        throw InputError("weight is not dominant for " + system_name(sys));
    // The C2sim similitude power is an implicit third slot fixed to 0; for
    // D3sim the stored third coordinate must itself vanish (the only
    // normalization the identities ever need).
    if (sys == RootSystemId::D3sim && lambda.back() != 0)
        throw InputError("orthogonal similitude weights must end in 0");
}

// Signed sum over the whole Weyl group of the images of y^mu; similitude
// flips contribute nu^{mu_i} y^{-mu_i}.
LaurentPoly alternant(RootSystemId sys, const Weight& mu) {
    const int r = rank(sys);
    const bool sim = has_similitude(sys);
    std::vector<std::string> vars;
    for (int i = 0; i < r; ++i) vars.push_back("y" + std::to_string(i + 1));
    if (sim) vars.push_back("nu");

    std::vector<std::pair<std::vector<int>, Rational>> terms;
    for (const WeylElement& w : weyl_group(sys)) {
        std::vector<int> e(static_cast<std::size_t>(r) + (sim ? 1 : 0), 0);
        for (int i = 0; i < r; ++i) {
            const bool flip = (w.flips >> i) & 1U;
            e[w.perm[static_cast<std::size_t>(i)]] = flip ? -mu[static_cast<std::size_t>(i)]
                                                          : mu[static_cast<std::size_t>(i)];
            if (flip && sim) e[static_cast<std::size_t>(r)] += mu[static_cast<std::size_t>(i)];
        }
        terms.emplace_back(std::move(e), Rational(w.sign));
    }
    return LaurentPoly::from_terms(vars, terms);
}

// Dominant representative of a weight (multiplicities are Weyl invariant).
Weight dominant_rep(RootSystemId sys, Weight mu) {
    switch (sys) {
        case RootSystemId::A1:
        case RootSystemId::A2:
        case RootSystemId::A3:
            std::sort(mu.begin(), mu.end(), std::greater<int>());
            return mu;
        case RootSystemId::C2sim: {
            for (auto& x : mu) x = std::abs(x);
            std::sort(mu.begin(), mu.end(), std::greater<int>());
            return mu;
        }
        case RootSystemId::D3sim: {
            int negatives = 0;
            bool has_zero = false;
            for (auto& x : mu) {
                if (x < 0) {
                    ++negatives;
                    x = -x;
                } else if (x == 0) {
                    has_zero = true;
                }
            }
            std::sort(mu.begin(), mu.end(), std::greater<int>());
            if (!has_zero && (negatives % 2) != 0) mu.back() = -mu.back();
            return mu;
        }
    }
    throw std::logic_error("unreachable");
}

// lambda - mu expressed in simple-root coordinates must be a nonnegative
// integer combination.
bool in_positive_root_cone(RootSystemId sys, const Weight& delta) {
    switch (sys) {
        case RootSystemId::A1:
        case RootSystemId::A2:
        case RootSystemId::A3: {
            long long partial = 0, total = 0;
            for (const int d : delta) total += d;
            if (total != 0) return false;
            for (std::size_t i = 0; i + 1 < delta.size(); ++i) {
                partial += delta[i];
                if (partial < 0) return false;
            }
            return true;
        }
        case RootSystemId::C2sim: {
            const int c1 = delta[0];
            const int s = delta[0] + delta[1];
            return c1 >= 0 && s >= 0 && s % 2 == 0;
        }
        case RootSystemId::D3sim: {
            const int c1 = delta[0];
            const int s = delta[0] + delta[1] + delta[2];
            if (s % 2 != 0) return false;
            const int c3 = s / 2;
            const int c2 = c3 - delta[2];
            return c1 >= 0 && c2 >= 0 && c3 >= 0;
        }
    }
    throw std::logic_error("unreachable");
}

// All dominant weights mu of the module with highest weight lambda
// (equivalently: dominant with lambda - mu in the positive root cone).
std::vector<Weight> dominant_candidates(RootSystemId sys, const Weight& lambda) {
    std::vector<Weight> out;
    const auto push_if_ok = [&](const Weight& mu) {
        Weight delta(lambda);
        for (std::size_t i = 0; i < mu.size(); ++i) delta[i] -= mu[i];
        if (in_positive_root_cone(sys, delta)) out.push_back(mu);
    };
    switch (sys) {
        case RootSystemId::A1: {
            for (int a = lambda[1]; a <= lambda[0]; ++a)
                for (int b = lambda[1]; b <= a; ++b) push_if_ok({a, b});
            break;
        }
        case RootSystemId::A2: {
            for (int a = lambda[2]; a <= lambda[0]; ++a)
                for (int b = lambda[2]; b <= a; ++b)
                    for (int c = lambda[2]; c <= b; ++c) push_if_ok({a, b, c});
            break;
        }
        case RootSystemId::A3: {
            for (int a = lambda[3]; a <= lambda[0]; ++a)
                for (int b = lambda[3]; b <= a; ++b)
                    for (int c = lambda[3]; c <= b; ++c)
                        for (int d = lambda[3]; d <= c; ++d) push_if_ok({a, b, c, d});
            break;
        }
        case RootSystemId::C2sim: {
            for (int a = 0; a <= lambda[0]; ++a)
                for (int b = 0; b <= a; ++b) push_if_ok({a, b});
            break;
        }
        case RootSystemId::D3sim: {
            for (int a = 0; a <= lambda[0]; ++a)
                for (int b = 0; b <= a; ++b)
                    for (int c = -b; c <= b; ++c) push_if_ok({a, b, c});
            break;
        }
    }
    return out;
}

} // namespace

int rank(RootSystemId sys) {
    switch (sys) {
        case RootSystemId::A1: return 2;
        case RootSystemId::A2: return 3;
        case RootSystemId::A3: return 4;
        case RootSystemId::C2sim: return 2;
        case RootSystemId::D3sim: return 3;
    }
    throw std::logic_error("unreachable");
}

bool has_similitude(RootSystemId sys) {
    return sys == RootSystemId::C2sim || sys == RootSystemId::D3sim;
}

std::string system_name(RootSystemId sys) {
    switch (sys) {
        case RootSystemId::A1: return "A1";
        case RootSystemId::A2: return "A2";
        case RootSystemId::A3: return "A3";
        case RootSystemId::C2sim: return "C2sim";
        case RootSystemId::D3sim: return "D3sim";
    }
    throw std::logic_error("unreachable");
}

std::vector<std::string> torus_vars(RootSystemId sys) {
    std::vector<std::string> vars;
    for (int i = 0; i < rank(sys); ++i) vars.push_back("y" + std::to_string(i + 1));
    if (has_similitude(sys)) vars.push_back("nu");
    return vars;
}

Weight rho(RootSystemId sys) {
    switch (sys) {
        case RootSystemId::A1: return {1, 0};
        case RootSystemId::A2: return {2, 1, 0};
        case RootSystemId::A3: return {3, 2, 1, 0};
        case RootSystemId::C2sim: return {2, 1};
        case RootSystemId::D3sim: return {2, 1, 0};
    }
    throw std::logic_error("unreachable");
}

const std::vector<Weight>& positive_roots(RootSystemId sys) {
    static const std::vector<Weight> a1{{1, -1}};
    static const std::vector<Weight> a2{{1, -1, 0}, {1, 0, -1}, {0, 1, -1}};
    static const std::vector<Weight> a3{{1, -1, 0, 0}, {1, 0, -1, 0}, {1, 0, 0, -1},
                                        {0, 1, -1, 0}, {0, 1, 0, -1}, {0, 0, 1, -1}};
    static const std::vector<Weight> c2{{1, -1}, {0, 2}, {1, 1}, {2, 0}};
    static const std::vector<Weight> d3{{1, -1, 0}, {1, 0, -1}, {0, 1, -1},
                                        {1, 1, 0},  {1, 0, 1},  {0, 1, 1}};
    switch (sys) {
        case RootSystemId::A1: return a1;
        case RootSystemId::A2: return a2;
        case RootSystemId::A3: return a3;
        case RootSystemId::C2sim: return c2;
        case RootSystemId::D3sim: return d3;
    }
    throw std::logic_error("unreachable");
}

bool is_dominant(RootSystemId sys, const Weight& lambda) {
    if (static_cast<int>(lambda.size()) != rank(sys)) return false;
    switch (sys) {
        case RootSystemId::A1:
        case RootSystemId::A2:
        case RootSystemId::A3:
            return std::is_sorted(lambda.rbegin(), lambda.rend());
        case RootSystemId::C2sim:
            return lambda[0] >= lambda[1] && lambda[1] >= 0;
        case RootSystemId::D3sim:
            return lambda[0] >= lambda[1] && lambda[1] >= std::abs(lambda[2]);
    }
    return false;
}

const std::vector<WeylElement>& weyl_group(RootSystemId sys) {
    static std::map<RootSystemId, std::vector<WeylElement>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(sys);
    if (it != cache.end()) return it->second;

    const int r = rank(sys);
    const bool allow_flips = has_similitude(sys);
    const bool even_flips_only = sys == RootSystemId::D3sim;

    std::vector<int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<WeylElement> group;
    do {
        const int psign = perm_sign(perm);
        const unsigned max_mask = allow_flips ? (1U << r) : 1U;
        for (unsigned mask = 0; mask < max_mask; ++mask) {
            if (even_flips_only && popcount(mask) % 2 != 0) continue;
            WeylElement w;
            for (int i = 0; i < r; ++i)
                w.perm[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(perm[static_cast<std::size_t>(i)]);
            w.flips = mask;
            w.sign = psign * (popcount(mask) % 2 == 0 ? 1 : -1);
            group.push_back(w);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    return cache.emplace(sys, std::move(group)).first->second;
}

Weight weyl_apply_weight(RootSystemId sys, const WeylElement& w, const Weight& mu) {
    const int r = rank(sys);
    Weight out(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i) {
        const bool flip = (w.flips >> i) & 1U;
        out[w.perm[static_cast<std::size_t>(i)]] =
            flip ? -mu[static_cast<std::size_t>(i)] : mu[static_cast<std::size_t>(i)];
    }
    return out;
}

LaurentPoly weyl_apply_poly(RootSystemId sys, const WeylElement& w, const LaurentPoly& p) {
    const int r = rank(sys);
    const bool sim = has_similitude(sys);
    std::map<std::string, LaurentPoly> images;
    for (int i = 0; i < r; ++i) {
        const std::string from = "y" + std::to_string(i + 1);
        const std::string to = "y" + std::to_string(w.perm[static_cast<std::size_t>(i)] + 1);
        const bool flip = (w.flips >> i) & 1U;
        if (!flip) {
            images.emplace(from, LaurentPoly::symbol(to));
        } else if (sim) {
            images.emplace(from, LaurentPoly::symbol("nu") * LaurentPoly::monomial(to, -1));
        } else {
            images.emplace(from, LaurentPoly::monomial(to, -1));
        }
    }
    return p.substitute(images);
}

LaurentPoly weyl_character(RootSystemId sys, const Weight& lambda) {
    check_weight(sys, lambda);

    static std::map<std::pair<RootSystemId, Weight>, LaurentPoly> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        const auto it = cache.find({sys, lambda});
        if (it != cache.end()) return it->second;
    }

    const Weight r = rho(sys);
    const LaurentPoly numerator = alternant(sys, add_scaled(lambda, r, 1));
    const LaurentPoly denominator = alternant(sys, r);
    LaurentPoly chi = numerator.exact_div(denominator);

    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_pair(sys, lambda), std::move(chi)).first->second;
}

std::map<Weight, BigInt> freudenthal_multiplicities(RootSystemId sys, const Weight& lambda,
                                                    int bound) {
    check_weight(sys, lambda);
    long long size = 0;
    for (const int x : lambda) size += std::abs(x);
    if (size > bound)
        throw BoundExceeded("weight size " + std::to_string(size) + " exceeds bound " +
                            std::to_string(bound));

    const Weight rh = rho(sys);
    const auto& roots = positive_roots(sys);
    const Weight lam_rho = add_scaled(lambda, rh, 1);
    const long long norm_top = dot(lam_rho, lam_rho);

    std::vector<Weight> candidates = dominant_candidates(sys, lambda);
    std::sort(candidates.begin(), candidates.end(), [&](const Weight& a, const Weight& b) {
        const long long ha = dot(lambda, rh) - dot(a, rh);
        const long long hb = dot(lambda, rh) - dot(b, rh);
        if (ha != hb) return ha < hb;
        return a < b;
    });

    std::map<Weight, BigInt> dominant_mult;
    for (const Weight& mu : candidates) {
        if (mu == lambda) {
            dominant_mult[mu] = 1;
            continue;
        }
        BigInt numer = 0;
        for (const Weight& alpha : roots) {
            for (int k = 1;; ++k) {
                if (k > 4 * bound + 8)
                    throw std::logic_error("runaway root string in multiplicity recursion");
                const Weight xi = add_scaled(mu, alpha, k);
                const auto it = dominant_mult.find(dominant_rep(sys, xi));
                if (it == dominant_mult.end()) break;
                numer += it->second * dot(xi, alpha);
            }
        }
        const Weight mu_rho = add_scaled(mu, rh, 1);
        const long long denom = norm_top - dot(mu_rho, mu_rho);
        if (denom <= 0) throw std::logic_error("nonpositive denominator in multiplicity recursion");
        const BigInt twice = 2 * numer;
        if (twice % denom != 0) throw std::logic_error("non-integral weight multiplicity");
        dominant_mult[mu] = twice / denom;
    }

    std::map<Weight, BigInt> full;
    for (const auto& [mu, m] : dominant_mult)
        for (const WeylElement& w : weyl_group(sys)) full[weyl_apply_weight(sys, w, mu)] = m;
    return full;
}

BigInt weyl_dim(RootSystemId sys, const Weight& lambda) {
    check_weight(sys, lambda);
    const Weight rh = rho(sys);
    const Weight lam_rho = add_scaled(lambda, rh, 1);
    Rational dim(1);
    for (const Weight& alpha : positive_roots(sys))
        dim *= Rational(dot(lam_rho, alpha), dot(rh, alpha));
    if (denominator(dim) != 1) throw std::logic_error("non-integral dimension");
    return numerator(dim);
}

LaurentPoly character_from_multiplicities(RootSystemId sys, const Weight& lambda, int bound) {
    const auto mult = freudenthal_multiplicities(sys, lambda, bound);
    const bool sim = has_similitude(sys);
    long long lam_sum = 0;
    for (const int x : lambda) lam_sum += x;

    std::vector<std::string> vars = torus_vars(sys);
    std::vector<std::pair<std::vector<int>, Rational>> terms;
    for (const auto& [mu, m] : mult) {
        std::vector<int> e(mu.begin(), mu.end());
        if (sim) {
            long long mu_sum = 0;
            for (const int x : mu) mu_sum += x;
            if ((lam_sum - mu_sum) % 2 != 0)
                throw std::logic_error("weight violates the similitude parity");
            e.push_back(static_cast<int>((lam_sum - mu_sum) / 2));
        }
        terms.emplace_back(std::move(e), Rational(m));
    }
    return LaurentPoly::from_terms(vars, terms);
}

LaurentPoly specialize_character(const LaurentPoly& chi, RootSystemId sys, const TorusPoint& pt) {
    if (static_cast<int>(pt.y.size()) != rank(sys))
        throw InputError("torus point needs " + std::to_string(rank(sys)) + " coordinates");
    std::map<std::string, LaurentPoly> images;
    for (int i = 0; i < rank(sys); ++i) images.emplace("y" + std::to_string(i + 1), pt.y[static_cast<std::size_t>(i)]);
    if (has_similitude(sys)) {
        if (pt.nu.is_zero()) throw InputError("similitude coordinate must be invertible");
        images.emplace("nu", pt.nu);
    }
    return chi.substitute(images);
}

std::vector<std::pair<int, Weight>> branching_u3_u2(const Weight& lambda) {
    if (lambda.size() != 3 || !is_dominant(RootSystemId::A2, lambda))
        throw InputError("branching expects a non-increasing integer triple");
    const long long total = lambda[0] + lambda[1] + lambda[2];
    std::vector<std::pair<int, Weight>> out;
    for (int mu1 = lambda[0]; mu1 >= lambda[1]; --mu1)
        for (int mu2 = lambda[1]; mu2 >= lambda[2]; --mu2)
            out.emplace_back(static_cast<int>(total - mu1 - mu2), Weight{mu1, mu2});
    return out;
}

bool verify_branching(const Weight& lambda, LaurentPoly* diff) {
    const LaurentPoly chi3 = weyl_character(RootSystemId::A2, lambda);
    const LaurentPoly lhs = chi3.substitute({{"y1", LaurentPoly::symbol("x1")},
                                             {"y2", LaurentPoly::symbol("x2")},
                                             {"y3", LaurentPoly::symbol("t")}});
    LaurentPoly rhs;
    for (const auto& [power, mu] : branching_u3_u2(lambda)) {
        const LaurentPoly chi2 = weyl_character(RootSystemId::A1, mu);
        const LaurentPoly on_x = chi2.substitute(
            {{"y1", LaurentPoly::symbol("x1")}, {"y2", LaurentPoly::symbol("x2")}});
        rhs = rhs + LaurentPoly::monomial("t", power) * on_x;
    }
    const LaurentPoly d = lhs - rhs;
    if (diff) *diff = d;
    return d.is_zero();
}

} // namespace lforge
