#include "lforge/mellin_barnes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "lforge/errors.hpp"
#include "lforge/threading.hpp"

namespace lforge {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Slack of a candidate contour: smallest real part any numerator gamma
// argument attains on it. Negative means a pole sits on the wrong side.
double contour_slack(int dim, const std::vector<GammaFactor>& factors,
                     const std::array<double, 4>& sigma) {
    double slack = kInf;
    for (const auto& f : factors) {
        if (f.denominator) continue;
        bool touches = false;
        double re = f.arg.shift.real();
        for (int v = 0; v < dim; ++v) {
            if (f.arg.coeff[v] != 0) touches = true;
            re += f.arg.coeff[v] * sigma[v];
        }
        if (touches) slack = std::min(slack, re);
    }
    return slack;
}

void require_variable_coverage(int dim, const std::vector<GammaFactor>& factors) {
    for (int v = 0; v < dim; ++v) {
        bool seen = false;
        for (const auto& f : factors) {
            if (!f.denominator && f.arg.coeff[v] != 0) seen = true;
        }
        if (!seen) {
            throw InputError("integration variable z" + std::to_string(v + 1) +
                             " appears in no numerator gamma factor");
        }
    }
}

// Value table of one gamma factor restricted to the shared node grid. The
// argument depends on the node indices k_i only through m = sum a_i k_i, so
// a single vector indexed by m covers the whole grid.
struct Table {
    std::array<int, 4> a{0, 0, 0, 0};
    long m_lo = 0;
    std::vector<Complex> val;

    const Complex* probe_base() const { return val.data() - m_lo; }
};

// Dense intermediate produced by summing out one variable; indexed by
// val[ka * n + kb] for the two surviving variables (va < vb).
struct Tensor {
    int va = -1;
    int vb = -1;
    std::vector<Complex> val;
};

// Pointer + stride view of one factor along the innermost loop variable.
struct Probe {
    const Complex* base = nullptr;
    long stride = 0;
};

// Quadrature value together with the absolute-sum magnitude of the final
// fold. The magnitude is the cancellation scale: rounding noise is a tiny
// multiple of it even when the value itself is far smaller.
struct GridValue {
    Complex value{0.0, 0.0};
    double mag = 0.0;
};

Table build_table(const GammaFactor& f, const std::array<double, 4>& sigma,
                  double height, int n, double dt) {
    Table t;
    t.a = f.arg.coeff;
    long lo = 0;
    long hi = 0;
    int coeff_sum = 0;
    double re0 = f.arg.shift.real();
    for (int v = 0; v < 4; ++v) {
        const int a = f.arg.coeff[v];
        coeff_sum += a;
        re0 += a * sigma[v];
        if (a > 0) {
            hi += static_cast<long>(a) * (n - 1);
        } else if (a < 0) {
            lo += static_cast<long>(a) * (n - 1);
        }
    }
    t.m_lo = lo;
    t.val.resize(static_cast<std::size_t>(hi - lo + 1));
    const Complex base0(re0, f.arg.shift.imag() - height * coeff_sum);
    const double sign = f.denominator ? -1.0 : 1.0;
    for (long m = lo; m <= hi; ++m) {
        const Complex arg = base0 + Complex(0.0, dt * static_cast<double>(m));
        const Complex v = std::exp(sign * log_gamma_F(f.field, arg));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw InputError("gamma table overflow on the contour; reduce the "
                             "quadrature height");
        }
        t.val[static_cast<std::size_t>(m - lo)] = v;
    }
    return t;
}

struct GridEvaluator {
    int dim;
    int n;
    double dt;
    std::array<double, 4> sigma;
    // trapezoid weight, (4 pi)^{-1} normalization, and the optional
    // exp(kappa z) factor, per variable and node
    std::array<std::vector<Complex>, 4> weight;
    std::vector<Table> tables;
    std::vector<Tensor> tensors;
    Complex scalar{1.0, 0.0};
    std::vector<int> active;

    bool table_touches(const Table& t, int v) const { return t.a[v] != 0; }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        auto add = [&](int u) {
            if (u != v && std::find(out.begin(), out.end(), u) == out.end())
                out.push_back(u);
        };
        for (const auto& t : tables) {
            if (!table_touches(t, v)) continue;
            for (int u : active)
                if (t.a[u] != 0) add(u);
        }
        for (const auto& t : tensors) {
            if (t.va == v) add(t.vb);
            if (t.vb == v) add(t.va);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Probes for all factors touching `v`, with the outer indices already
    // folded into the base pointers. ka/kb are node indices of j1/j2 (either
    // may be -1 when absent).
    void collect_probes(int v, int j1, long ka, int j2, long kb,
                        std::vector<Probe>& probes) const {
        probes.clear();
        for (const auto& t : tables) {
            if (!table_touches(t, v)) continue;
            long off = -t.m_lo;
            if (j1 >= 0) off += static_cast<long>(t.a[j1]) * ka;
            if (j2 >= 0) off += static_cast<long>(t.a[j2]) * kb;
            probes.push_back(Probe{t.val.data() + off, t.a[v]});
        }
        for (const auto& t : tensors) {
            if (t.va != v && t.vb != v) continue;
            const int other = t.va == v ? t.vb : t.va;
            const long k_other = other == j1 ? ka : kb;
            if (t.va == v) {
                probes.push_back(Probe{t.val.data() + k_other,
                                       static_cast<long>(n)});
            } else {
                probes.push_back(Probe{t.val.data() + k_other * n, 1});
            }
        }
    }

    Complex inner_sum(int v, const std::vector<Probe>& probes) const {
        const auto& w = weight[static_cast<std::size_t>(v)];
        Complex acc(0.0, 0.0);
        for (long k = 0; k < n; ++k) {
            Complex prod = w[static_cast<std::size_t>(k)];
            for (const auto& p : probes) prod *= p.base[p.stride * k];
            acc += prod;
        }
        return acc;
    }

    void eliminate(int v) {
        const std::vector<int> nb = neighbors(v);
        if (nb.size() > 2) {
            throw InputError("integrand couples one variable to more than two "
                             "others; no elimination order exists");
        }
        const int j1 = nb.empty() ? -1 : nb[0];
        const int j2 = nb.size() > 1 ? nb[1] : -1;

        std::vector<Complex> out;
        if (nb.size() == 2) {
            out.assign(static_cast<std::size_t>(n) * n, Complex());
            parallel_for(static_cast<std::size_t>(n), [&](std::size_t ka) {
                std::vector<Probe> probes;
                for (long kb = 0; kb < n; ++kb) {
                    collect_probes(v, j1, static_cast<long>(ka), j2, kb, probes);
                    out[ka * n + kb] = inner_sum(v, probes);
                }
            });
        } else if (nb.size() == 1) {
            out.assign(static_cast<std::size_t>(n), Complex());
            parallel_for(static_cast<std::size_t>(n), [&](std::size_t ka) {
                std::vector<Probe> probes;
                collect_probes(v, j1, static_cast<long>(ka), -1, 0, probes);
                out[ka] = inner_sum(v, probes);
            });
        } else {
            std::vector<Probe> probes;
            collect_probes(v, -1, 0, -1, 0, probes);
            scalar *= inner_sum(v, probes);
        }

        tables.erase(std::remove_if(tables.begin(), tables.end(),
                                    [&](const Table& t) { return table_touches(t, v); }),
                     tables.end());
        tensors.erase(std::remove_if(tensors.begin(), tensors.end(),
                                     [&](const Tensor& t) {
                                         return t.va == v || t.vb == v;
                                     }),
                      tensors.end());
        active.erase(std::find(active.begin(), active.end(), v));

        if (nb.size() == 2) {
            tensors.push_back(Tensor{j1, j2, std::move(out)});
        } else if (nb.size() == 1) {
            Table t;
            t.a[j1] = 1;
            t.m_lo = 0;
            t.val = std::move(out);
            tables.push_back(std::move(t));
        }
    }

    GridValue finish() {
        while (active.size() > 2) {
            // cheapest variable first: fewest surviving neighbors
            int best = -1;
            std::size_t best_deg = 5;
            for (int v : active) {
                const std::size_t deg = neighbors(v).size();
                if (deg < best_deg) {
                    best_deg = deg;
                    best = v;
                }
            }
            eliminate(best);
        }
        if (active.size() == 1) {
            const int v = active[0];
            std::vector<Probe> probes;
            collect_probes(v, -1, 0, -1, 0, probes);
            const auto& w = weight[static_cast<std::size_t>(v)];
            Complex acc(0.0, 0.0);
            double mag = 0.0;
            for (long k = 0; k < n; ++k) {
                Complex prod = w[static_cast<std::size_t>(k)];
                for (const auto& p : probes) prod *= p.base[p.stride * k];
                acc += prod;
                mag += std::abs(prod);
            }
            return GridValue{scalar * acc, std::abs(scalar) * mag};
        }
        // two live variables: fixed-order fold over the first index
        const int va = active[0];
        const int vb = active[1];
        std::vector<Complex> partial(static_cast<std::size_t>(n));
        parallel_for(static_cast<std::size_t>(n), [&](std::size_t ka) {
            std::vector<Probe> probes;
            collect_probes(vb, va, static_cast<long>(ka), -1, 0, probes);
            partial[ka] = inner_sum(vb, probes);
        });
        // factors depending on the outer variable alone join its weight
        Complex acc(0.0, 0.0);
        double mag = 0.0;
        const auto& w = weight[static_cast<std::size_t>(va)];
        for (long ka = 0; ka < n; ++ka) {
            Complex wa = w[static_cast<std::size_t>(ka)];
            for (const auto& t : tables) {
                if (t.a[va] != 0 && t.a[vb] == 0)
                    wa *= t.probe_base()[static_cast<long>(t.a[va]) * ka];
            }
            const Complex term = wa * partial[static_cast<std::size_t>(ka)];
            acc += term;
            mag += std::abs(term);
        }
        return GridValue{scalar * acc, std::abs(scalar) * mag};
    }
};

GridValue evaluate_on_grid(const MBIntegrand& f, const std::array<double, 4>& sigma,
                           int n) {
    GridEvaluator ev;
    ev.dim = f.dim();
    ev.n = n;
    ev.dt = 2.0 * f.spec().height / (n - 1);
    ev.sigma = sigma;
    ev.scalar = f.prefactor();
    for (int v = 0; v < ev.dim; ++v) {
        ev.active.push_back(v);
        auto& w = ev.weight[static_cast<std::size_t>(v)];
        w.resize(static_cast<std::size_t>(n));
        const double kappa = f.exponentials()[static_cast<std::size_t>(v)];
        for (int k = 0; k < n; ++k) {
            const double t = -f.spec().height + ev.dt * k;
            const double wk =
                ev.dt * ((k == 0 || k == n - 1) ? 0.5 : 1.0) / (4.0 * kPi);
            w[static_cast<std::size_t>(k)] =
                wk * std::exp(kappa * Complex(sigma[static_cast<std::size_t>(v)], t));
        }
    }
    for (const auto& g : f.factors()) {
        bool constant = true;
        for (int v = 0; v < ev.dim; ++v)
            if (g.arg.coeff[v] != 0) constant = false;
        if (constant) {
            const double sign = g.denominator ? -1.0 : 1.0;
            ev.scalar *= std::exp(sign * log_gamma_F(g.field, g.arg.shift));
        } else {
            ev.tables.push_back(build_table(g, sigma, f.spec().height, n, ev.dt));
        }
    }
    return ev.finish();
}

} // namespace

MBIntegrand::MBIntegrand(int dim, QuadratureSpec spec) : dim_(dim), spec_(spec) {
    if (dim < 1 || dim > 4) {
        throw InputError("integral dimension must be between 1 and 4");
    }
    if (spec_.nodes < 8) throw InputError("quadrature needs at least 8 nodes");
    if (!(spec_.height > 0.0)) throw InputError("quadrature height must be positive");
}

void MBIntegrand::add_factor(ArchField f, std::array<int, 4> coeff, Complex shift,
                             bool denominator) {
    for (int v = dim_; v < 4; ++v) {
        if (coeff[v] != 0) {
            throw InputError("gamma factor references variable z" +
                             std::to_string(v + 1) + " beyond the integral dimension");
        }
    }
    factors_.push_back(GammaFactor{f, AffineForm{coeff, shift}, denominator});
}

void MBIntegrand::set_exponential(int var, double kappa) {
    if (var < 0 || var >= dim_) throw InputError("exponential on unknown variable");
    kappa_[static_cast<std::size_t>(var)] = kappa;
}

void MBIntegrand::set_prefactor(Complex c) { prefactor_ = c; }

void MBIntegrand::set_contours(const std::array<double, 4>& sigma) { sigma_ = sigma; }

std::array<double, 4> MBIntegrand::contours() const {
    require_variable_coverage(dim_, factors_);
    if (sigma_.has_value()) {
        const double slack = contour_slack(dim_, factors_, *sigma_);
        if (slack < spec_.margin) {
            throw ContourViolation("requested contour passes within " +
                                   std::to_string(slack) +
                                   " of a gamma pole sequence");
        }
        return *sigma_;
    }
    return solve_contours(dim_, factors_, spec_.margin);
}

std::array<double, 4> solve_contours(int dim,
                                     const std::vector<GammaFactor>& factors,
                                     double margin) {
    require_variable_coverage(dim, factors);
    std::array<double, 4> sigma{0.0, 0.0, 0.0, 0.0};
    for (int pass = 0; pass < 60; ++pass) {
        for (int v = 0; v < dim; ++v) {
            double lo = -kInf;
            double hi = kInf;
            for (const auto& f : factors) {
                if (f.denominator) continue;
                const int a = f.arg.coeff[v];
                if (a == 0) continue;
                double rest = f.arg.shift.real();
                for (int u = 0; u < dim; ++u)
                    if (u != v) rest += f.arg.coeff[u] * sigma[u];
                const double bound = -rest / a;
                if (a > 0) {
                    lo = std::max(lo, bound);
                } else {
                    hi = std::min(hi, bound);
                }
            }
            if (lo > -kInf && hi < kInf) {
                sigma[static_cast<std::size_t>(v)] = 0.5 * (lo + hi);
            } else if (lo > -kInf) {
                sigma[static_cast<std::size_t>(v)] = lo + 1.0;
            } else if (hi < kInf) {
                sigma[static_cast<std::size_t>(v)] = hi - 1.0;
            }
        }
    }
    const double slack = contour_slack(dim, factors, sigma);
    if (slack < margin) {
        throw ContourViolation(
            "no admissible contour: best slack " + std::to_string(slack) +
            " is below the margin " + std::to_string(margin));
    }
    return sigma;
}

QuadratureResult mb_integrate(const MBIntegrand& f) {
    const std::array<double, 4> sigma = f.contours();
    const int n = f.spec().nodes;
    const GridValue fine = evaluate_on_grid(f, sigma, n);
    const GridValue half = evaluate_on_grid(f, sigma, n / 2);
    const GridValue quarter = evaluate_on_grid(f, sigma, n / 4);

    const double e0 = std::abs(fine.value - half.value);
    const double e1 = std::abs(half.value - quarter.value);
    // refinements living below the rounding scale of the fold are a plateau,
    // not a divergence
    const double noise_floor = 1e-10 * (fine.mag + 1e-300);
    if (e0 > std::max(e1, noise_floor)) {
        char msg[128];
        std::snprintf(msg, sizeof(msg),
                      "halving the step did not contract the quadrature error "
                      "(%.3e -> %.3e)", e1, e0);
        throw NonConvergence(msg);
    }

    QuadratureResult out;
    out.value = fine.value;
    out.error = e0;
    long total = 1;
    for (int v = 0; v < f.dim(); ++v) total *= n;
    out.nodes = total;
    return out;
}

} // namespace lforge
