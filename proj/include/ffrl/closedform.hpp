#pragma once

#include "ffrl/varieties.hpp"

namespace ffrl {

/// Result of scanning |(dsigma)^| over all nonzero frequencies.
struct DecayReport {
    std::string variety;
    uint32_t q = 0;
    int d = 0;  // surface dimension: ambient - 1 for the homogeneous varieties
    double max_nonzero_modulus = 0.0;
    uint64_t attaining_index = 0;
    double bound = 0.0;  // q^{-d/2}
    bool even_d = false; // true when the bound is a proven guarantee
};

/// Gauss-sum closed form of (dsigma_c)^ for the cone
/// C = {x_1^2+...+x_{d-1}^2 = x_d x_{d+1}} in F_q^{d+1}, d even:
///   delta_0(m) + (G_1^{d-1} / q^d) sum_{t != 0} eta(t)
///                    chi((|m'|^2 - 4 m_d m_{d+1}) / (-4t)).
/// O(q) work per point.  Throws OddDimension for odd d.
cd cone_fourier_closed(const FiniteField& F, int d, std::span<const uint32_t> mbar);
cd cone_fourier_closed(const FiniteField& F, int d, uint64_t mbar_index);

/// Closed form of (dsigma_j)^ for H_j = {x_1^2+...+x_d^2 = j x_{d+1}^2},
/// d even, j != 0:
///   delta_0(m) + (G_1^{d+1} / q^{d+1}) eta(-j) sum_{t != 0} eta(t)
///                    chi((m_{d+1}^2 - j |m|^2) / (4 j t)).
cd hj_fourier_closed(const FiniteField& F, int d, uint32_t j, std::span<const uint32_t> mbar);
cd hj_fourier_closed(const FiniteField& F, int d, uint32_t j, uint64_t mbar_index);

/// Definition-level (dsigma)^(m) = (1/|V|) sum_{x in V} chi(m.x); the serial
/// reference the closed forms are checked against.
cd sigma_inv_brute(const Variety& V, uint64_t mbar_index);

/// Max of |(dsigma)^| over nonzero frequencies for a homogeneous variety
/// (cone or H_j).  For even surface dimension the q^{-d/2} bound is asserted;
/// a violation throws (it would mean a broken kernel, not bad data).
DecayReport decay_max(const Variety& V);

/// K = (dsigma_c)^ - delta_0 on (F_q^{d+1}, dm): the Bochner-Riesz-style
/// kernel driving the restriction chain.  K(0) = 0 and |K| <= q^{-d/2}.
GridFunction k_kernel(const Variety& hom_variety);

}  // namespace ffrl
