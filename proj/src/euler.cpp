#include "lforge/euler.hpp"

#include "lforge/errors.hpp"

namespace lforge {

namespace {

void push_block(std::vector<EulerBlock>& blocks, LaurentPoly lambda, int degree) {
    if (lambda.is_zero()) return;
    blocks.push_back({std::move(lambda), degree});
}

} // namespace

int EulerFactor::degree() const {
    int d = 0;
    for (const auto& b : blocks) d += b.degree;
    return d;
}

TruncatedSeries EulerFactor::expand(int N) const {
    std::vector<std::pair<LaurentPoly, int>> roots;
    roots.reserve(blocks.size());
    for (const auto& b : blocks) roots.emplace_back(b.lambda, b.degree);
    return ps_from_inverse_roots(roots, N, var);
}

TruncatedSeries EulerFactor::reciprocal_polynomial(int N) const {
    TruncatedSeries acc = TruncatedSeries::one({var}, {N, 0});
    for (const auto& b : blocks) {
        TruncatedSeries lin({var}, {N, 0});
        lin.set_coeff(0, 0, LaurentPoly::one());
        lin.add_to_coeff(b.degree, 0, -b.lambda);
        acc = ps_mul(acc, lin);
    }
    return acc;
}

LaurentPoly EulerFactor::root_product() const {
    LaurentPoly prod = LaurentPoly::one();
    for (const auto& b : blocks)
        for (int i = 0; i < b.degree; ++i) prod = prod * b.lambda;
    return prod;
}

EulerFactor lfactor_sym2(const SatakeGL2& s2, const LaurentPoly& twist) {
    s2.validate();
    if (twist.term_count() > 1) throw InputError("twist must be a single-term value");
    EulerFactor f;
    f.label = "sym2_twist";
    push_block(f.blocks, s2.beta[0] * s2.beta[0] * twist, 2);
    push_block(f.blocks, s2.beta[0] * s2.beta[1] * twist, 2);
    push_block(f.blocks, s2.beta[1] * s2.beta[1] * twist, 2);
    return f;
}

EulerFactor lfactor_wedge2_std2_split(const SatakeGL4& s4, const SatakeGL2& s2) {
    s2.validate();
    const ExteriorSquare ext = exterior_square_satake(s4);
    EulerFactor f;
    f.label = "wedge2_std2_split";
    for (const auto& ev : ext.eigenvalues)
        for (const auto& b : s2.beta) push_block(f.blocks, ev * b, 1);
    return f;
}

EulerFactor lfactor_wedge2_std2_inert(const SatakeGSp4& c, const SatakeGL2& s2) {
    c.validate();
    s2.validate();
    EulerFactor f;
    f.label = "wedge2_std2_inert";
    const LaurentPoly omega = c.central();
    for (const auto& b : s2.beta) {
        push_block(f.blocks, c.c0 * b, 1);
        push_block(f.blocks, c.c0 * c.c1 * b, 1);
        push_block(f.blocks, c.c0 * c.c2 * b, 1);
        push_block(f.blocks, c.c0 * c.c1 * c.c2 * b, 1);
        push_block(f.blocks, omega * b * b, 2);
    }
    return f;
}

EulerFactor lfactor_tensor_gsp4_gl2(const SatakeGSp4& c, const SatakeGL2& s2) {
    c.validate();
    s2.validate();
    EulerFactor f;
    f.label = "tensor8";
    for (const auto& e : c.eigenvalues())
        for (const auto& b : s2.beta) push_block(f.blocks, e * b, 1);
    return f;
}

EulerFactor lfactor_std4(const SatakeGL4& s4) {
    s4.validate();
    EulerFactor f;
    f.label = "std4";
    f.var = "U";
    for (const auto& a : s4.alpha) push_block(f.blocks, a, 1);
    return f;
}

EulerFactor lfactor_central_product(const SatakeGSp4& c, const SatakeGL2& s2) {
    c.validate();
    s2.validate();
    EulerFactor f;
    f.label = "central_product";
    push_block(f.blocks, c.central() * s2.central(), 2);
    return f;
}

} // namespace lforge
