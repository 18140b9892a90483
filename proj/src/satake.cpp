#include "lforge/satake.hpp"

#include "lforge/errors.hpp"

namespace lforge {

namespace {

void check_entry(const LaurentPoly& p, const std::string& what) {
    if (p.term_count() > 1)
        throw InputError(what + " must be a single-term value, got: " + p.str());
}

} // namespace

void SatakeGL2::validate() const {
    check_entry(beta[0], "beta1");
    check_entry(beta[1], "beta2");
}

SatakeGL2 SatakeGL2::ones() {
    return {{LaurentPoly::one(), LaurentPoly::one()}};
}

SatakeGL2 SatakeGL2::symbolic() {
    return {{LaurentPoly::symbol("beta1"), LaurentPoly::symbol("beta2")}};
}

void SatakeGL4::validate() const {
    for (int i = 0; i < 4; ++i)
        check_entry(alpha[static_cast<std::size_t>(i)], "alpha" + std::to_string(i + 1));
    check_entry(chi, "chi");
}

SatakeGL4 SatakeGL4::ones() {
    return {{LaurentPoly::one(), LaurentPoly::one(), LaurentPoly::one(), LaurentPoly::one()},
            LaurentPoly::one()};
}

SatakeGL4 SatakeGL4::symbolic() {
    return {{LaurentPoly::symbol("alpha1"), LaurentPoly::symbol("alpha2"),
             LaurentPoly::symbol("alpha3"), LaurentPoly::symbol("alpha4")},
            LaurentPoly::symbol("chi")};
}

LaurentPoly SatakeGL4::central() const {
    return chi * chi * alpha[0] * alpha[1] * alpha[2] * alpha[3];
}

void SatakeGSp4::validate() const {
    check_entry(c0, "c0");
    check_entry(c1, "c1");
    check_entry(c2, "c2");
}

SatakeGSp4 SatakeGSp4::ones() {
    return {LaurentPoly::one(), LaurentPoly::one(), LaurentPoly::one()};
}

SatakeGSp4 SatakeGSp4::symbolic() {
    return {LaurentPoly::symbol("c0"), LaurentPoly::symbol("c1"), LaurentPoly::symbol("c2")};
}

std::array<LaurentPoly, 4> SatakeGSp4::eigenvalues() const {
    return {c0, c0 * c1, c0 * c2, c0 * c1 * c2};
}

LaurentPoly SatakeGSp4::central() const {
    return c0 * c0 * c1 * c2;
}

TorusPoint SatakeGSp4::torus_point() const {
    // With y1 = c0 c1 c2 and y2 = c0 c1 the coordinate pairs (y1, nu/y1) and
    // (y2, nu/y2) recover {c0 c1 c2, c0} and {c0 c1, c0 c2}, exactly the
    // eigenvalue list. Pairing y1 = c0 c1, y2 = c0 c2 instead would collide
    // when c1 = c2.
    TorusPoint pt;
    pt.y = {c0 * c1 * c2, c0 * c1};
    pt.nu = central();
    return pt;
}

SatakeData SatakeData::ones() {
    SatakeData d;
    d.gl4 = SatakeGL4::ones();
    d.gl2 = SatakeGL2::ones();
    d.gsp4 = SatakeGSp4::ones();
    return d;
}

const SatakeGL4& SatakeData::need_gl4() const {
    if (!gl4) throw InputError("these parameters need a \"gl4\" section");
    return *gl4;
}

const SatakeGL2& SatakeData::need_gl2() const {
    if (!gl2) throw InputError("these parameters need a \"gl2\" section");
    return *gl2;
}

const SatakeGSp4& SatakeData::need_gsp4() const {
    if (!gsp4) throw InputError("these parameters need a \"gsp4\" section");
    return *gsp4;
}

ExteriorSquare exterior_square_satake(const SatakeGL4& s) {
    s.validate();
    const auto& a = s.alpha;
    ExteriorSquare out;
    int k = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            out.eigenvalues[static_cast<std::size_t>(k++)] =
                s.chi * a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(j)];
    out.nu = s.central();
    out.torus.y = {s.chi * a[0] * a[1], s.chi * a[0] * a[2], s.chi * a[1] * a[2]};
    out.torus.nu = out.nu;
    return out;
}

SatakeGL2 random_gl2(SplitMix64& rng) {
    SatakeGL2 s;
    s.beta[0] = LaurentPoly::constant(rng.small_rational());
    s.beta[1] = LaurentPoly::constant(rng.small_rational());
    return s;
}

SatakeGL4 random_gl4(SplitMix64& rng) {
    SatakeGL4 s;
    for (auto& a : s.alpha) a = LaurentPoly::constant(rng.small_rational());
    s.chi = LaurentPoly::constant(rng.small_rational());
    return s;
}

SatakeGSp4 random_gsp4(SplitMix64& rng) {
    SatakeGSp4 s;
    s.c0 = LaurentPoly::constant(rng.small_rational());
    s.c1 = LaurentPoly::constant(rng.small_rational());
    s.c2 = LaurentPoly::constant(rng.small_rational());
    return s;
}

} // namespace lforge
