#include "ffrl/closedform.hpp"

#include <cmath>

namespace ffrl {

namespace {

bool all_zero(std::span<const uint32_t> c) {
    for (uint32_t v : c)
        if (v != 0) return false;
    return true;
}

cd complex_int_pow(cd z, int e) {
    cd r{1.0, 0.0};
    for (int i = 0; i < e; ++i) r *= z;
    return r;
}

bool is_homogeneous_kind(VarietyKind k) {
    return k == VarietyKind::HomCone || k == VarietyKind::HomSphere;
}

}  // namespace

cd cone_fourier_closed(const FiniteField& F, int d, std::span<const uint32_t> mbar) {
    if (d % 2 != 0) throw OddDimension("cone closed form needs even d");
    if (static_cast<int>(mbar.size()) != d + 1)
        throw DimensionMismatch("frequency must have d+1 coordinates");
    uint32_t norm_prime = 0;  // |m'|^2 over the first d-1 coordinates
    for (int k = 0; k < d - 1; ++k) norm_prime = F.add(norm_prime, F.mul(mbar[k], mbar[k]));
    const uint32_t four = F.from_int(4);
    const uint32_t arg = F.sub(norm_prime, F.mul(four, F.mul(mbar[d - 1], mbar[d])));

    cd sum{};
    for (uint32_t t = 1; t < F.q(); ++t) {
        const uint32_t denom = F.neg(F.mul(four, t));
        sum += static_cast<double>(F.eta(t)) * F.chi(F.mul(arg, F.inv(denom)));
    }
    const double qd = std::pow(static_cast<double>(F.q()), d);
    cd out = complex_int_pow(gauss_sum(F, 1), d - 1) * sum / qd;
    if (all_zero(mbar)) out += 1.0;
    return out;
}

cd cone_fourier_closed(const FiniteField& F, int d, uint64_t mbar_index) {
    std::vector<uint32_t> c(d + 1);
    decode_point(mbar_index, F.q(), d + 1, c.data());
    return cone_fourier_closed(F, d, c);
}

cd hj_fourier_closed(const FiniteField& F, int d, uint32_t j, std::span<const uint32_t> mbar) {
    if (d % 2 != 0) throw OddDimension("H_j closed form needs even d");
    if (j == 0) throw ZeroRadius("H_j closed form needs j != 0");
    if (static_cast<int>(mbar.size()) != d + 1)
        throw DimensionMismatch("frequency must have d+1 coordinates");
    uint32_t norm_m = 0;  // |m|^2 over the first d coordinates
    for (int k = 0; k < d; ++k) norm_m = F.add(norm_m, F.mul(mbar[k], mbar[k]));
    const uint32_t last2 = F.mul(mbar[d], mbar[d]);
    const uint32_t arg = F.sub(last2, F.mul(j, norm_m));
    const uint32_t four_j = F.mul(F.from_int(4), j);

    cd sum{};
    for (uint32_t t = 1; t < F.q(); ++t)
        sum += static_cast<double>(F.eta(t)) * F.chi(F.mul(arg, F.inv(F.mul(four_j, t))));
    const double qd1 = std::pow(static_cast<double>(F.q()), d + 1);
    cd out = complex_int_pow(gauss_sum(F, 1), d + 1) * static_cast<double>(F.eta(F.neg(j))) *
             sum / qd1;
    if (all_zero(mbar)) out += 1.0;
    return out;
}

cd hj_fourier_closed(const FiniteField& F, int d, uint32_t j, uint64_t mbar_index) {
    std::vector<uint32_t> c(d + 1);
    decode_point(mbar_index, F.q(), d + 1, c.data());
    return hj_fourier_closed(F, d, j, c);
}

cd sigma_inv_brute(const Variety& V, uint64_t mbar_index) {
    const FiniteField& F = *V.field;
    const uint32_t q = F.q();
    const int d = V.ambient_dim;
    std::vector<uint32_t> mc(d), xc(d);
    decode_point(mbar_index, q, d, mc.data());
    cd acc{};
    for (uint64_t idx : V.points) {
        decode_point(idx, q, d, xc.data());
        acc += F.chi(dot(F, mc, xc));
    }
    return acc / static_cast<double>(V.cardinality());
}

DecayReport decay_max(const Variety& V) {
    if (!is_homogeneous_kind(V.kind))
        throw Error("decay_max is defined for the homogeneous varieties only");
    const int d = V.ambient_dim - 1;
    const GridFunction sig = sigma_inv_grid(V);

    DecayReport rep;
    rep.variety = V.label();
    rep.q = V.field->q();
    rep.d = d;
    rep.bound = std::pow(static_cast<double>(rep.q), -0.5 * d);
    rep.even_d = (d % 2 == 0);
    for (uint64_t m = 1; m < sig.size(); ++m) {
        const double a = std::abs(sig.values[m]);
        if (a > rep.max_nonzero_modulus) {
            rep.max_nonzero_modulus = a;
            rep.attaining_index = m;
        }
    }
    if (rep.even_d && rep.max_nonzero_modulus > rep.bound * (1.0 + 1e-9))
        throw Error("decay bound q^{-d/2} violated for " + rep.variety);
    return rep;
}

GridFunction k_kernel(const Variety& hom_variety) {
    if (!is_homogeneous_kind(hom_variety.kind))
        throw Error("k_kernel needs a homogeneous variety");
    if ((hom_variety.ambient_dim - 1) % 2 != 0)
        throw OddDimension("k_kernel needs even surface dimension");
    GridFunction K = sigma_inv_grid(hom_variety);
    K.values[0] -= 1.0;
    return K;
}

}  // namespace ffrl
