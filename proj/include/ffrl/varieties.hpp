#pragma once

#include <string>

#include "ffrl/space.hpp"

namespace ffrl {

enum class VarietyKind { Paraboloid, Sphere, HomCone, HomSphere, AffineSubspace };

/// A point set in F_q^d cut out by one of the supported quadratic equations,
/// or an affine subspace.  Points are found by full enumeration against the
/// defining equation, which is re-checked on construction; the normalized
/// surface measure dsigma assigns weight 1/|V| to each point.
struct Variety {
    FieldPtr field;
    int ambient_dim = 0;
    VarietyKind kind = VarietyKind::AffineSubspace;
    uint32_t j = 0;  // radius parameter for Sphere / HomSphere
    std::vector<uint64_t> points;     // ascending linear indices
    std::vector<uint8_t> membership;  // bitmap over the full grid

    // AffineSubspace provenance: H = base_point + span(basis).
    uint64_t base_point = 0;
    std::vector<std::vector<uint32_t>> basis;

    uint64_t cardinality() const { return points.size(); }
    bool contains(uint64_t index) const { return membership[index] != 0; }
    std::string label() const;
};

/// P = {x in F_q^d : x_1^2 + ... + x_{d-1}^2 = x_d}; |P| = q^{d-1}.
Variety paraboloid(FieldPtr F, int d);

/// S_j = {x in F_q^d : x_1^2 + ... + x_d^2 = j}, j != 0.  The constructor
/// checks the two-sided count bound |S_j| (q-1) in [q^d / 2, 2 q^d].
Variety sphere(FieldPtr F, int d, uint32_t j);

/// C = {(x, x_{d+1}) in F_q^{d+1} : x_1^2 + ... + x_{d-1}^2 = x_d x_{d+1}}.
Variety homogeneous_cone(FieldPtr F, int d);

/// H_j = {(x, x_{d+1}) in F_q^{d+1} : x_1^2 + ... + x_d^2 = j x_{d+1}^2}, j != 0.
Variety homogeneous_sphere(FieldPtr F, int d, uint32_t j);

/// All of F_q^d as an affine subspace (dsigma = dx); calibration anchor.
Variety full_space(FieldPtr F, int d);

/// Largest-available affine subspace H inside a paraboloid or sphere, built
/// from isotropic directions e_{2t} + i e_{2t+1} (i^2 = -1).  |H| is
/// q^{(d-2)/2} for even d and q^{(d-1)/2} for odd d.  Containment and
/// cardinality are re-verified point by point.  Throws MinusOneNotSquare
/// when the field has no sqrt(-1); SubspaceNotFound if no base point of a
/// sphere admits the full isotropic complement (possible for odd d only).
Variety max_affine_subspace(const Variety& V);

/// L^r norm on (V, dsigma) of values listed in V.points order; r = infinity
/// gives the max modulus.
double lr_norm_dsigma(const Variety& V, std::span<const cd> values_on_v, double r);

/// hat(g) evaluated only on V by direct summation (|V| q^d work, no full
/// transform).  Values are returned in V.points order.
std::vector<cd> restrict_hat(const GridFunction& g, const Variety& V);

/// Extension (g dsigma)^(m) = (1/|V|) sum_{x in V} chi(m.x) g(x), computed
/// through the tensorized inverse transform.
GridFunction extension(std::span<const cd> g_on_v, const Variety& V);

/// Serial direct-sum reference for `extension`.
GridFunction extension_direct(std::span<const cd> g_on_v, const Variety& V);

/// (dsigma)^ on the full grid: extension of the constant 1.
GridFunction sigma_inv_grid(const Variety& V);

/// Indices m with m . b = 0 for every basis vector b.
std::vector<uint64_t> perp_set(const FiniteField& F, int d,
                               const std::vector<std::vector<uint32_t>>& basis);

}  // namespace ffrl
