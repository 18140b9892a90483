#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lforge/errors.hpp"
#include "lforge/euler.hpp"
#include "lforge/json_io.hpp"
#include "lforge/prng.hpp"
#include "lforge/satake.hpp"
#include "lforge/verify_nonarch.hpp"
#include "lforge/zeta.hpp"

using namespace lforge;

namespace {

LaurentPoly sym(const std::string& n) { return LaurentPoly::symbol(n); }

} // namespace

TEST_CASE("spherical Whittaker values at the first lattice points") {
    const SatakeGL2 s2_onesies = SatakeGL2::ones();
    const SatakeGL4 s4_onesies = SatakeGL4::ones();
    const SatakeGSp4 c_onesies = SatakeGSp4::ones();

    SUBCASE("unit at the identity") {
        CHECK(cs_whittaker_gl2(0, 0, SatakeGL2::symbolic()) == LaurentPoly::one());
        CHECK(cs_whittaker_gsp4(0, 0, SatakeGSp4::symbolic()) == LaurentPoly::one());
        CHECK(cs_whittaker_gl4(0, 0, SatakeGL4::symbolic()) == LaurentPoly::one());
    }
    SUBCASE("first minuscule step") {
        // dimensions 4, 6 against half-integral modulus powers
        CHECK(cs_whittaker_gsp4(0, 1, c_onesies) == LaurentPoly::monomial("qh", -4, Rational(4)));
        CHECK(cs_whittaker_gl4(0, 1, s4_onesies) == LaurentPoly::monomial("qh", -4, Rational(6)));
        CHECK(cs_whittaker_gl2(0, 1, SatakeGL2::symbolic()) ==
              LaurentPoly::monomial("qh", -1) * (sym("beta1") + sym("beta2")));
        CHECK(cs_whittaker_gl2(0, 1, s2_onesies) == LaurentPoly::monomial("qh", -1, Rational(2)));
    }
    SUBCASE("first long step") {
        CHECK(cs_whittaker_gsp4(1, 0, c_onesies) == LaurentPoly::monomial("qh", -6, Rational(5)));
        CHECK(cs_whittaker_gl4(1, 0, s4_onesies) == LaurentPoly::monomial("qh", -6, Rational(15)));
    }
    SUBCASE("negative indices rejected") {
        CHECK_THROWS_AS(cs_whittaker_gl2(-1, 0, s2_onesies), InputError);
        CHECK_THROWS_AS(cs_whittaker_gsp4(0, -2, c_onesies), InputError);
    }
}

TEST_CASE("symmetric square factor") {
    const EulerFactor f = lfactor_sym2(SatakeGL2::symbolic(), sym("chi"));
    CHECK(f.blocks.size() == 3);
    CHECK(f.degree() == 6);
    const TruncatedSeries s = f.expand(2);
    CHECK(s.coeff(0) == LaurentPoly::one());
    CHECK(s.coeff(1).is_zero());
    CHECK(s.coeff(2) ==
          sym("chi") * (sym("beta1") * sym("beta1") + sym("beta1") * sym("beta2") +
                        sym("beta2") * sym("beta2")));

    const EulerFactor ones = lfactor_sym2(SatakeGL2::ones(), LaurentPoly::one());
    CHECK(ones.expand(2).coeff(2).constant_value() == 3);
}

TEST_CASE("split exterior-square tensor factor") {
    const EulerFactor f = lfactor_wedge2_std2_split(SatakeGL4::symbolic(), SatakeGL2::symbolic());
    CHECK(f.blocks.size() == 12);
    CHECK(f.degree() == 12);

    SUBCASE("unit parameters reproduce the binomial expansion") {
        const EulerFactor ones = lfactor_wedge2_std2_split(SatakeGL4::ones(), SatakeGL2::ones());
        const TruncatedSeries s = ones.expand(2);
        CHECK(s.coeff(0).constant_value() == 1);
        CHECK(s.coeff(1).constant_value() == 12);
        CHECK(s.coeff(2).constant_value() == 78);
    }
    SUBCASE("root product is the sixth power of the central character") {
        const LaurentPoly omega_both =
            SatakeGL4::symbolic().central() * SatakeGL2::symbolic().central();
        CHECK(f.root_product() == omega_both.pow(6));
    }
    SUBCASE("exterior square eigenvalue product is the similitude cubed") {
        const ExteriorSquare ext = exterior_square_satake(SatakeGL4::symbolic());
        LaurentPoly prod = LaurentPoly::one();
        for (const auto& ev : ext.eigenvalues) prod = prod * ev;
        CHECK(prod == ext.nu.pow(3));
        // the torus coordinates pair up into the six eigenvalues
        const LaurentPoly nu = ext.nu;
        std::vector<LaurentPoly> listed{ext.torus.y[0], ext.torus.y[1], ext.torus.y[2],
                                        nu.exact_div(ext.torus.y[2]),
                                        nu.exact_div(ext.torus.y[1]),
                                        nu.exact_div(ext.torus.y[0])};
        for (const auto& t : listed) {
            bool found = false;
            for (const auto& ev : ext.eigenvalues) found = found || (t == ev);
            CHECK(found);
        }
    }
    SUBCASE("eigenvalue multiset is stable under permuting the four entries") {
        SplitMix64 rng(0x77u);
        SatakeGL4 s4 = random_gl4(rng);
        std::array<LaurentPoly, 4> perm{s4.alpha[2], s4.alpha[0], s4.alpha[3], s4.alpha[1]};
        SatakeGL4 s4p = s4;
        s4p.alpha = perm;
        auto sorted_terms = [](const SatakeGL4& s) {
            std::vector<std::string> v;
            for (const auto& ev : exterior_square_satake(s).eigenvalues) v.push_back(ev.str());
            std::sort(v.begin(), v.end());
            return v;
        };
        CHECK(sorted_terms(s4) == sorted_terms(s4p));
    }
}

TEST_CASE("inert avatar factor") {
    const EulerFactor f = lfactor_wedge2_std2_inert(SatakeGSp4::symbolic(), SatakeGL2::symbolic());
    CHECK(f.blocks.size() == 10);
    CHECK(f.degree() == 12);
    int quadratic = 0;
    for (const auto& b : f.blocks) quadratic += b.degree == 2 ? 1 : 0;
    CHECK(quadratic == 2);

    const EulerFactor ones = lfactor_wedge2_std2_inert(SatakeGSp4::ones(), SatakeGL2::ones());
    const TruncatedSeries s = ones.expand(2);
    // (1-T)^{-8} (1-T^2)^{-2}: 1 + 8T + (36 + 2) T^2
    CHECK(s.coeff(0).constant_value() == 1);
    CHECK(s.coeff(1).constant_value() == 8);
    CHECK(s.coeff(2).constant_value() == 38);
}

TEST_CASE("degree-8 tensor factor and its degenerations") {
    const EulerFactor f = lfactor_tensor_gsp4_gl2(SatakeGSp4::symbolic(), SatakeGL2::symbolic());
    CHECK(f.blocks.size() == 8);
    CHECK(f.degree() == 8);

    CHECK(lfactor_tensor_gsp4_gl2(SatakeGSp4::ones(), SatakeGL2::ones()).expand(1).coeff(1).constant_value() == 8);

    SatakeGL2 degenerate;
    degenerate.beta[0] = sym("beta1");
    degenerate.beta[1] = LaurentPoly::zero();
    const EulerFactor f4 = lfactor_tensor_gsp4_gl2(SatakeGSp4::symbolic(), degenerate);
    CHECK(f4.blocks.size() == 4);
}

TEST_CASE("standard degree-4 factor lives in the second deformation variable") {
    const EulerFactor f = lfactor_std4(SatakeGL4::symbolic());
    CHECK(f.var == "U");
    CHECK(f.blocks.size() == 4);
    const TruncatedSeries s = f.expand(1);
    CHECK(s.coeff(1) == sym("alpha1") + sym("alpha2") + sym("alpha3") + sym("alpha4"));
    CHECK(lfactor_std4(SatakeGL4::ones()).expand(3).coeff(3).constant_value() ==
          20); // C(3+3,3)
}

TEST_CASE("rank-one central product factor") {
    const EulerFactor f = lfactor_central_product(SatakeGSp4::symbolic(), SatakeGL2::symbolic());
    REQUIRE(f.blocks.size() == 1);
    CHECK(f.blocks[0].degree == 2);
    CHECK(f.blocks[0].lambda ==
          sym("c0") * sym("c0") * sym("c1") * sym("c2") * sym("beta1") * sym("beta2"));
    const TruncatedSeries rec = f.reciprocal_polynomial(4);
    CHECK(rec.coeff(0) == LaurentPoly::one());
    CHECK(rec.coeff(2) == -f.blocks[0].lambda);
    CHECK(ps_eq(ps_mul(rec, f.expand(4)), TruncatedSeries::one({"T"}, {4, 0})));
}

TEST_CASE("zeta series basics") {
    SatakeData ones = SatakeData::ones();
    ZetaSeriesConfig cfg;
    cfg.order_t = 4;
    for (const auto place : {PlaceType::Split, PlaceType::Inert}) {
        const TruncatedSeries z = zeta_series(place, ones, cfg);
        CHECK(z.coeff(0) == LaurentPoly::one());
        ZetaSeriesConfig raw = cfg;
        raw.normalized = false;
        CHECK(zeta_series(place, ones, raw).coeff(0) == LaurentPoly::one());
    }
    CHECK_THROWS_AS(zeta_series(PlaceType::Split, ones, ZetaSeriesConfig{0, 4, true}),
                    InputError);
    SatakeData missing;
    missing.gl2 = SatakeGL2::ones();
    CHECK_THROWS_AS(zeta_series(PlaceType::Split, missing, cfg), InputError);
}

TEST_CASE("split factorization identity") {
    SUBCASE("unit parameters") {
        const SeriesCheck chk = verify_split(SatakeGL4::ones(), SatakeGL2::ones(), 6);
        CHECK(chk.pass);
        CHECK(chk.identity == "split_wedge2_factorization");
        CHECK(!chk.mismatch.has_value());
    }
    SUBCASE("random rational parameters") {
        SplitMix64 rng(0x51u);
        for (int i = 0; i < 8; ++i) {
            SplitMix64 child = rng.split();
            const SeriesCheck chk = verify_split(random_gl4(child), random_gl2(child), 8);
            CHECK(chk.pass);
        }
    }
    SUBCASE("corrupted eigenvalue is caught immediately") {
        SplitMix64 rng(0x52u);
        const SeriesCheck chk =
            verify_split(random_gl4(rng), random_gl2(rng), 6, MutationFlag{true});
        CHECK_FALSE(chk.pass);
        REQUIRE(chk.mismatch.has_value());
        CHECK(chk.mismatch->degree.first <= 2);
    }
}

TEST_CASE("inert factorization identities") {
    SUBCASE("unit parameters") {
        for (const auto& chk : verify_inert(SatakeGSp4::ones(), SatakeGL2::ones(), 6))
            CHECK(chk.pass);
    }
    SUBCASE("random rational parameters") {
        SplitMix64 rng(0x53u);
        for (int i = 0; i < 8; ++i) {
            SplitMix64 child = rng.split();
            for (const auto& chk : verify_inert(random_gsp4(child), random_gl2(child), 8))
                CHECK(chk.pass);
        }
    }
    SUBCASE("both identities fail under corruption") {
        SplitMix64 rng(0x54u);
        const auto checks =
            verify_inert(random_gsp4(rng), random_gl2(rng), 6, MutationFlag{true});
        REQUIRE(checks.size() == 2);
        for (const auto& chk : checks) {
            CHECK_FALSE(chk.pass);
            REQUIRE(chk.mismatch.has_value());
            CHECK(chk.mismatch->degree.first <= 2);
        }
    }
}

TEST_CASE("symmetric-algebra expansion against symplectic characters") {
    SUBCASE("low degrees, fully symbolic") {
        const auto checks =
            verify_sym_alg_fact(SatakeGSp4::symbolic(), SatakeGL2::symbolic(), 4);
        REQUIRE(checks.size() == 5);
        for (const auto& chk : checks) CHECK(chk.pass);
    }
    SUBCASE("dimension count at degree two") {
        const auto checks = verify_sym_alg_fact(SatakeGSp4::ones(), SatakeGL2::ones(), 2);
        const auto& deg2 = checks.at(2);
        REQUIRE(deg2.pass);
        // h_2 of eight ones: C(9,7) = 36 = 1 + 10*3 + 5*1
        const EulerFactor f = lfactor_tensor_gsp4_gl2(SatakeGSp4::ones(), SatakeGL2::ones());
        CHECK(f.expand(2).coeff(2).constant_value() == 36);
    }
    SUBCASE("mutation is caught") {
        const auto checks = verify_sym_alg_fact(SatakeGSp4::ones(), SatakeGL2::ones(), 2,
                                                MutationFlag{true});
        CHECK_FALSE(checks.at(1).pass);
    }
}

TEST_CASE("separation-of-variables expansion against orthogonal characters") {
    SUBCASE("low degrees, fully symbolic") {
        const auto checks =
            verify_separation_split(SatakeGL4::symbolic(), SatakeGL2::symbolic(), 3);
        REQUIRE(checks.size() == 4);
        for (const auto& chk : checks) CHECK(chk.pass);
    }
    SUBCASE("dimension count at degree two") {
        const auto checks = verify_separation_split(SatakeGL4::ones(), SatakeGL2::ones(), 2);
        REQUIRE(checks.at(2).pass);
        // h_2 of twelve ones: C(13,11) = 78 = 3 + 20*3 + 15*1
        const EulerFactor f = lfactor_wedge2_std2_split(SatakeGL4::ones(), SatakeGL2::ones());
        CHECK(f.expand(2).coeff(2).constant_value() == 78);
    }
    SUBCASE("mutation is caught") {
        const auto checks = verify_separation_split(SatakeGL4::ones(), SatakeGL2::ones(), 2,
                                                    MutationFlag{true});
        CHECK_FALSE(checks.at(1).pass);
    }
}

TEST_CASE("two-variable product") {
    ZetaSeriesConfig cfg;
    cfg.order_t = 4;
    cfg.order_u = 3;

    SUBCASE("unit parameters") {
        const TruncatedSeries j = two_variable_factor(SatakeGL4::ones(), SatakeGL2::ones(), cfg);
        CHECK(j.coeff(0, 0) == LaurentPoly::one());
        CHECK(j.coeff(0, 1).constant_value() == 4);
        // T-coefficient must match the product expansion: 12 from the wedge
        // factor, nothing from the degree-two symmetric-square blocks
        CHECK(j.coeff(1, 0).constant_value() == 12);
    }
    SUBCASE("cross-checked associations and the Whittaker route") {
        SplitMix64 rng(0x55u);
        for (int i = 0; i < 4; ++i) {
            SplitMix64 child = rng.split();
            const auto checks =
                verify_two_variable(random_gl4(child), random_gl2(child), cfg);
            REQUIRE(checks.size() == 2);
            for (const auto& chk : checks) CHECK(chk.pass);
        }
    }
    SUBCASE("symmetry under swapping the linear pair and permuting the quadruple") {
        SplitMix64 rng(0x56u);
        const SatakeGL4 s4 = random_gl4(rng);
        const SatakeGL2 s2 = random_gl2(rng);
        const TruncatedSeries j = two_variable_factor(s4, s2, cfg);

        SatakeGL2 swapped = s2;
        std::swap(swapped.beta[0], swapped.beta[1]);
        CHECK(ps_eq(j, two_variable_factor(s4, swapped, cfg)));

        SatakeGL4 permuted = s4;
        permuted.alpha = {s4.alpha[3], s4.alpha[1], s4.alpha[0], s4.alpha[2]};
        CHECK(ps_eq(j, two_variable_factor(permuted, s2, cfg)));
    }
    SUBCASE("mutation is caught") {
        SplitMix64 rng(0x57u);
        const auto checks = verify_two_variable(random_gl4(rng), random_gl2(rng), cfg,
                                                MutationFlag{true});
        for (const auto& chk : checks) CHECK_FALSE(chk.pass);
    }
}

TEST_CASE("sweep drivers are deterministic in the seed") {
    const auto a = sweep_split(3, 4, 99);
    const auto b = sweep_split(3, 4, 99);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].params == b[i].params);
        CHECK(a[i].pass);
    }
    const auto c = sweep_inert(2, 4, 123);
    CHECK(c.size() == 4);
    for (const auto& chk : c) CHECK(chk.pass);
}

TEST_CASE("Satake JSON round trip") {
    const auto j = nlohmann::json::parse(R"({
        "gl4": {"alpha": ["1/2", "-3", "alpha3", 2], "chi": "chi"},
        "gl2": {"beta": ["2/7", "beta2"]},
        "gsp4": {"c0": "c0", "c1": "-1/4", "c2": 5}
    })");
    const SatakeData s = satake_from_json(j);
    REQUIRE(s.gl4.has_value());
    REQUIRE(s.gl2.has_value());
    REQUIRE(s.gsp4.has_value());
    CHECK(s.gl4->alpha[0] == LaurentPoly::constant(Rational(1, 2)));
    CHECK(s.gl4->alpha[2] == sym("alpha3"));
    CHECK(s.gl2->beta[1] == sym("beta2"));
    CHECK(s.gsp4->c2 == LaurentPoly::constant(Rational(5)));

    const SatakeData round = satake_from_json(satake_to_json(s));
    CHECK(round.gl4->alpha[0] == s.gl4->alpha[0]);
    CHECK(round.gl4->chi == s.gl4->chi);
    CHECK(round.gl2->beta[1] == s.gl2->beta[1]);
    CHECK(round.gsp4->c1 == s.gsp4->c1);

    CHECK_THROWS_AS(satake_from_json(nlohmann::json::parse(R"({"gl2": {"beta": ["x+y"]}})")),
                    InputError);
    CHECK_THROWS_AS(satake_from_json(nlohmann::json::parse("{}")), InputError);
}
