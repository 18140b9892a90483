#include "lforge/zeta.hpp"

#include "lforge/errors.hpp"
#include "lforge/euler.hpp"
#include "lforge/weyl.hpp"

namespace lforge {

namespace {

void check_indices(int n, int m) {
    if (n < 0 || m < 0) throw InputError("Whittaker support requires n, m >= 0");
}

} // namespace

PlaceType place_from_string(const std::string& s) {
    if (s == "split") return PlaceType::Split;
    if (s == "inert") return PlaceType::Inert;
    throw InputError("place must be \"split\" or \"inert\", got \"" + s + "\"");
}

std::string place_to_string(PlaceType p) {
    return p == PlaceType::Split ? "split" : "inert";
}

LaurentPoly cs_whittaker_gl2(int n, int m, const SatakeGL2& s2) {
    check_indices(n, m);
    s2.validate();
    const LaurentPoly chi = weyl_character(RootSystemId::A1, {m + n, n});
    TorusPoint pt;
    pt.y = {s2.beta[0], s2.beta[1]};
    return LaurentPoly::monomial("qh", -m) * specialize_character(chi, RootSystemId::A1, pt);
}

LaurentPoly cs_whittaker_gsp4(int n, int m, const SatakeGSp4& c) {
    check_indices(n, m);
    c.validate();
    const LaurentPoly chi = weyl_character(RootSystemId::C2sim, {m + n, n});
    return LaurentPoly::monomial("qh", -6 * n - 4 * m) *
           specialize_character(chi, RootSystemId::C2sim, c.torus_point());
}

LaurentPoly cs_whittaker_gl4(int n, int m, const SatakeGL4& s4) {
    check_indices(n, m);
    const ExteriorSquare ext = exterior_square_satake(s4);
    const LaurentPoly chi = weyl_character(RootSystemId::D3sim, {m + n, n, 0});
    return LaurentPoly::monomial("qh", -6 * n - 4 * m) *
           specialize_character(chi, RootSystemId::D3sim, ext.torus);
}

TruncatedSeries zeta_series(PlaceType place, const SatakeData& data,
                            const ZetaSeriesConfig& cfg) {
    if (cfg.order_t < 1) throw InputError("zeta series order must be at least 1");
    const SatakeGL2& s2 = data.need_gl2();
    const int N = cfg.order_t;

    TruncatedSeries sum({"T"}, {N, 0});
    for (int n = 0; 2 * n <= N; ++n) {
        for (int m = 0; 2 * n + m <= N; ++m) {
            const LaurentPoly w2 = cs_whittaker_gl2(n, m, s2);
            const LaurentPoly w4 = place == PlaceType::Split
                                       ? cs_whittaker_gl4(n, m, data.need_gl4())
                                       : cs_whittaker_gsp4(n, m, data.need_gsp4());
            // modulus-character prefactor q^{4n+3m} * q^{-(2n+m)/2}
            const LaurentPoly pre = LaurentPoly::monomial("qh", 6 * n + 5 * m);
            sum.add_to_coeff(2 * n + m, 0, (pre * w2 * w4).pruned());
        }
    }
    for (const auto& [k, p] : sum.coefficients())
        for (const auto& v : p.vars())
            if (v == "qh")
                throw std::logic_error("qh powers failed to cancel in the zeta sum");

    if (!cfg.normalized) return sum;
    const LaurentPoly twist = place == PlaceType::Split ? data.need_gl4().central()
                                                        : data.need_gsp4().central();
    return ps_mul(sum, lfactor_sym2(s2, twist).expand(N));
}

TruncatedSeries two_variable_factor(const SatakeGL4& s4, const SatakeGL2& s2,
                                    const ZetaSeriesConfig& cfg) {
    const std::vector<std::string> vars{"T", "U"};
    const TruncatedSeries::Key bounds{cfg.order_t, cfg.order_u};

    const TruncatedSeries std_u = lfactor_std4(s4).expand(cfg.order_u).embedded(vars, bounds);
    const TruncatedSeries wedge_t =
        lfactor_wedge2_std2_split(s4, s2).expand(cfg.order_t).embedded(vars, bounds);
    const TruncatedSeries sym2_rec =
        lfactor_sym2(s2, s4.central()).reciprocal_polynomial(cfg.order_t).embedded(vars, bounds);

    return ps_mul(ps_mul(std_u, wedge_t), sym2_rec);
}

} // namespace lforge
