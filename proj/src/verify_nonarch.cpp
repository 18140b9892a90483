#include "lforge/verify_nonarch.hpp"

#include "lforge/euler.hpp"
#include "lforge/prng.hpp"
#include "lforge/weyl.hpp"

namespace lforge {

namespace {

SeriesCheck compare(const std::string& identity, std::string params, int order,
                    const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    SeriesCheck out;
    out.identity = identity;
    out.params = std::move(params);
    out.order = order;
    out.mismatch = first_series_mismatch(lhs, rhs);
    out.pass = !out.mismatch.has_value();
    return out;
}

SeriesCheck compare_polys(const std::string& identity, std::string params, int degree,
                          const LaurentPoly& lhs, const LaurentPoly& rhs) {
    SeriesCheck out;
    out.identity = identity;
    out.params = std::move(params);
    out.order = degree;
    if (!(lhs == rhs)) {
        out.pass = false;
        out.mismatch = SeriesMismatch{{degree, 0}, lhs, rhs};
    }
    return out;
}

void corrupt(EulerFactor& f) {
    if (!f.blocks.empty()) f.blocks.front().lambda = f.blocks.front().lambda * Rational(2);
}

// chi^{A1}_{(m1,m2)} evaluated at the two linear Satake values.
LaurentPoly gl2_char_value(int m1, int m2, const SatakeGL2& s2) {
    TorusPoint pt;
    pt.y = {s2.beta[0], s2.beta[1]};
    return specialize_character(weyl_character(RootSystemId::A1, {m1, m2}), RootSystemId::A1, pt);
}

} // namespace

std::string describe_params(const SatakeGL4& s4, const SatakeGL2& s2) {
    return "alpha=(" + s4.alpha[0].str() + "," + s4.alpha[1].str() + "," + s4.alpha[2].str() +
           "," + s4.alpha[3].str() + ") chi=" + s4.chi.str() + " beta=(" + s2.beta[0].str() +
           "," + s2.beta[1].str() + ")";
}

std::string describe_params(const SatakeGSp4& c, const SatakeGL2& s2) {
    return "c=(" + c.c0.str() + ";" + c.c1.str() + "," + c.c2.str() + ") beta=(" +
           s2.beta[0].str() + "," + s2.beta[1].str() + ")";
}

SeriesCheck verify_split(const SatakeGL4& s4, const SatakeGL2& s2, int N, MutationFlag mutate) {
    SatakeData data;
    data.gl4 = s4;
    data.gl2 = s2;
    ZetaSeriesConfig cfg;
    cfg.order_t = N;
    const TruncatedSeries lhs = zeta_series(PlaceType::Split, data, cfg);

    EulerFactor wedge = lfactor_wedge2_std2_split(s4, s2);
    if (mutate.enabled) corrupt(wedge);
    return compare("split_wedge2_factorization", describe_params(s4, s2), N, lhs, wedge.expand(N));
}

std::vector<SeriesCheck> verify_inert(const SatakeGSp4& c, const SatakeGL2& s2, int N,
                                      MutationFlag mutate) {
    SatakeData data;
    data.gsp4 = c;
    data.gl2 = s2;
    ZetaSeriesConfig cfg;
    cfg.order_t = N;
    const TruncatedSeries lhs = zeta_series(PlaceType::Inert, data, cfg);
    const std::string params = describe_params(c, s2);

    EulerFactor wedge = lfactor_wedge2_std2_inert(c, s2);
    EulerFactor tensor = lfactor_tensor_gsp4_gl2(c, s2);
    if (mutate.enabled) {
        corrupt(wedge);
        corrupt(tensor);
    }

    std::vector<SeriesCheck> out;
    out.push_back(compare("inert_wedge2_factorization", params, N, lhs, wedge.expand(N)));

    const TruncatedSeries rhs = ps_mul(
        lfactor_central_product(c, s2).reciprocal_polynomial(N),
        ps_mul(lfactor_sym2(s2, c.central()).expand(N), tensor.expand(N)));
    out.push_back(compare("inert_tensor8_factorization", params, N, lhs, rhs));
    return out;
}

std::vector<SeriesCheck> verify_sym_alg_fact(const SatakeGSp4& c, const SatakeGL2& s2,
                                             int ell_max, MutationFlag mutate) {
    EulerFactor tensor = lfactor_tensor_gsp4_gl2(c, s2);
    if (mutate.enabled) corrupt(tensor);
    const TruncatedSeries lhs_series = tensor.expand(ell_max);

    const LaurentPoly scale = c.central() * s2.central();
    const TorusPoint tp = c.torus_point();
    const std::string params = describe_params(c, s2);

    std::vector<SeriesCheck> out;
    for (int ell = 0; ell <= ell_max; ++ell) {
        LaurentPoly rhs;
        for (int i = 0; 2 * i <= ell; ++i) {
            const int j = ell - 2 * i;
            LaurentPoly inner;
            for (int m2 = 0; 2 * m2 <= j; ++m2) {
                const int m1 = j - m2;
                const LaurentPoly sp = specialize_character(
                    weyl_character(RootSystemId::C2sim, {m1, m2}), RootSystemId::C2sim, tp);
                inner = inner + sp * gl2_char_value(m1, m2, s2);
            }
            rhs = rhs + scale.pow(i) * inner;
        }
        out.push_back(compare_polys("symmetric_algebra_plethysm", params, ell,
                                    lhs_series.coeff(ell).pruned(), rhs.pruned()));
    }
    return out;
}

std::vector<SeriesCheck> verify_separation_split(const SatakeGL4& s4, const SatakeGL2& s2,
                                                 int ell_max, MutationFlag mutate) {
    EulerFactor wedge = lfactor_wedge2_std2_split(s4, s2);
    if (mutate.enabled) corrupt(wedge);
    const TruncatedSeries lhs_series = wedge.expand(ell_max);

    // h_i of the three twisted symmetric-square values, via a degree-1
    // geometric expansion.
    const LaurentPoly omega = s4.central();
    const TruncatedSeries sym_h = ps_from_inverse_roots(
        {{omega * s2.beta[0] * s2.beta[0], 1},
         {omega * s2.beta[0] * s2.beta[1], 1},
         {omega * s2.beta[1] * s2.beta[1], 1}},
        ell_max);

    const ExteriorSquare ext = exterior_square_satake(s4);
    const std::string params = describe_params(s4, s2);

    std::vector<SeriesCheck> out;
    for (int ell = 0; ell <= ell_max; ++ell) {
        LaurentPoly rhs;
        for (int i = 0; 2 * i <= ell; ++i) {
            const int j = ell - 2 * i;
            LaurentPoly inner;
            for (int m2 = 0; 2 * m2 <= j; ++m2) {
                const int m1 = j - m2;
                const LaurentPoly sp = specialize_character(
                    weyl_character(RootSystemId::D3sim, {m1, m2, 0}), RootSystemId::D3sim,
                    ext.torus);
                inner = inner + sp * gl2_char_value(m1, m2, s2);
            }
            rhs = rhs + sym_h.coeff(i) * inner;
        }
        out.push_back(compare_polys("harmonic_separation_plethysm", params, ell,
                                    lhs_series.coeff(ell).pruned(), rhs.pruned()));
    }
    return out;
}

std::vector<SeriesCheck> verify_two_variable(const SatakeGL4& s4, const SatakeGL2& s2,
                                             const ZetaSeriesConfig& cfg, MutationFlag mutate) {
    const std::vector<std::string> vars{"T", "U"};
    const TruncatedSeries::Key bounds{cfg.order_t, cfg.order_u};
    const std::string params = describe_params(s4, s2);

    TruncatedSeries lhs = two_variable_factor(s4, s2, cfg);
    if (mutate.enabled) {
        // rebuild with a corrupted wedge factor so both comparisons must fail
        EulerFactor wedge = lfactor_wedge2_std2_split(s4, s2);
        corrupt(wedge);
        lhs = ps_mul(ps_mul(lfactor_std4(s4).expand(cfg.order_u).embedded(vars, bounds),
                            wedge.expand(cfg.order_t).embedded(vars, bounds)),
                     lfactor_sym2(s2, s4.central())
                         .reciprocal_polynomial(cfg.order_t)
                         .embedded(vars, bounds));
    }

    std::vector<SeriesCheck> out;

    // Independent association order of the same three factors.
    {
        const TruncatedSeries std_u = lfactor_std4(s4).expand(cfg.order_u).embedded(vars, bounds);
        const TruncatedSeries wedge_t =
            lfactor_wedge2_std2_split(s4, s2).expand(cfg.order_t).embedded(vars, bounds);
        const TruncatedSeries sym2_rec = lfactor_sym2(s2, s4.central())
                                             .reciprocal_polynomial(cfg.order_t)
                                             .embedded(vars, bounds);
        const TruncatedSeries rhs = ps_mul(std_u, ps_mul(sym2_rec, wedge_t));
        out.push_back(compare("two_variable_product", params, cfg.order_t, lhs, rhs));
    }

    // Route through the Whittaker double sum: the unnormalized zeta series
    // already equals the wedge factor divided by the symmetric square.
    {
        SatakeData data;
        data.gl4 = s4;
        data.gl2 = s2;
        ZetaSeriesConfig un = cfg;
        un.normalized = false;
        const TruncatedSeries zeta_route =
            ps_mul(lfactor_std4(s4).expand(cfg.order_u).embedded(vars, bounds),
                   zeta_series(PlaceType::Split, data, un).embedded(vars, bounds));
        out.push_back(compare("two_variable_zeta_route", params, cfg.order_t, lhs, zeta_route));
    }
    return out;
}

std::vector<SeriesCheck> sweep_split(int sweeps, int N, std::uint64_t seed) {
    SplitMix64 root(seed);
    std::vector<SeriesCheck> out;
    for (int i = 0; i < sweeps; ++i) {
        SplitMix64 child = root.split();
        const SatakeGL4 s4 = random_gl4(child);
        const SatakeGL2 s2 = random_gl2(child);
        out.push_back(verify_split(s4, s2, N));
    }
    return out;
}

std::vector<SeriesCheck> sweep_inert(int sweeps, int N, std::uint64_t seed) {
    SplitMix64 root(seed);
    std::vector<SeriesCheck> out;
    for (int i = 0; i < sweeps; ++i) {
        SplitMix64 child = root.split();
        const SatakeGSp4 c = random_gsp4(child);
        const SatakeGL2 s2 = random_gl2(child);
        for (auto& chk : verify_inert(c, s2, N)) out.push_back(std::move(chk));
    }
    return out;
}

} // namespace lforge
