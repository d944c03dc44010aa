#pragma once

#include "ffrl/varieties.hpp"

namespace ffrl {

/// Partition of F_q^d into the scaling orbits of a test-function class.
/// Lay orbits: {(m', 0)} singletons and {(m', s u) : s != 0} for u != 0.
/// Hom orbits: {0} and the punctured lines through the origin.
struct OrbitIndex {
    FieldPtr field;
    int dim = 0;
    uint64_t count = 0;
    std::vector<uint32_t> orbit_of;  // orbit id per grid point

    /// Expands one value per orbit into a grid function (counting measure).
    GridFunction function_from(std::span<const cd> orbit_values) const;
    /// Averages a grid function over each orbit (the L^2 projection onto
    /// the class).
    GridFunction project(const GridFunction& g) const;
};

OrbitIndex lay_orbits(FieldPtr F, int d);
OrbitIndex hom_orbits(FieldPtr F, int d);

/// g(m', m_d) = g(m', s m_d) for every s != 0, up to tol (scaled by the max
/// modulus of g).
bool is_d_lay(const GridFunction& g, double tol = 1e-12);

/// g(s m) = g(m) for every s != 0.
bool is_homogeneous_zero(const GridFunction& g, double tol = 1e-12);

/// Seed-deterministic draws with independent values per orbit; the output
/// passes the matching predicate by construction.
GridFunction random_lay(FieldPtr F, int d, uint64_t seed,
                        Distribution dist = Distribution::gaussian());
GridFunction random_hom(FieldPtr F, int d, uint64_t seed,
                        Distribution dist = Distribution::gaussian());

/// Lift of a lay function to F_q^{d+1}:
///   G_g(m, l) = (g(m)/q) sum_{s != 0} chi(l s)
/// evaluated in closed form: g(m)(q-1)/q at l = 0 and -g(m)/q otherwise.
/// Its transform satisfies G_g^(x', x_d, s) = g^(x', x_d s) for s != 0 and
/// vanishes at s = 0.  Throws NotLayFunction.
GridFunction lift_lay(const GridFunction& g);

/// Lift of a homogeneous function: G_g(m, l) = g(m) [l = 0], so every
/// L^a norm is preserved exactly.  Throws NotHomogeneousZero.
GridFunction lift_hom(const GridFunction& g);

/// Norm bookkeeping for one lift, with the exact transfer quantities.
struct LiftReport {
    std::string kind;  // "lay" | "hom"
    uint32_t q = 0;
    int d = 0;
    uint64_t seed = 0;  // provenance, filled by callers that drew g
    double alpha = 0.0;
    double source_alpha_norm = 0.0;
    double lifted_alpha_norm = 0.0;
    double source_restricted_l2 = 0.0;  // ||g^||_{L^2(V, dsigma)}
    double lifted_restricted_l2 = 0.0;  // ||G_g^||_{L^2(W, dsigma_W)}
    double transfer_factor = 0.0;       // lifted^2 / source^2 when source != 0
    double expected_transfer = 0.0;     // (q-1)/q for lay; prefactor for hom
    double norm_bracket = 0.0;          // ||G||_a^a / ||g||_a^a
    double expected_bracket = 0.0;
    double end_to_end_ratio = 0.0;      // ||g^||_{L^2(V)} / ||g||_alpha
    double end_to_end_bound = 0.0;      // tracked constant, <= 4
};

/// Lifts g, checks the exact identity
///   ||G_g^||^2_{L^2(C)} = ((q-1)/q) ||g^||^2_{L^2(P)}
/// and the bracket formula ||G_g||_a^a = [((q-1)/q)^a + (q-1)/q^a] ||g||_a^a
/// (in particular <= 2 ||g||_a^a).  Violations throw.
LiftReport lay_transfer_check(const GridFunction& g, const Variety& P, const Variety& C);
LiftReport lay_transfer_check(const GridFunction& g);

/// Lifts g and checks
///   ||g^||^2_{L^2(S_j)} <= (q^d / (|S_j|(q-1))) ||G_g^||^2_{L^2(H_j)}
/// with the exact prefactor, plus the exact norm equality of the lift.
LiftReport hom_transfer_check(const GridFunction& g, const Variety& Sj, const Variety& Hj);
LiftReport hom_transfer_check(const GridFunction& g, uint32_t j);

/// (2d+4)/(d+4), the conjectured sharp restriction exponent for even d.
double alpha_exponent(int d);
/// (2d+2)/(d+3), the classical Stein-Tomas exponent.
double stein_tomas_exponent(int d);

/// Tracked end-to-end constants: restriction ratios of lay / hom functions
/// at p = alpha(d), r = 2 are bounded by these (both <= 4 for q >= 3).
double lay_theorem_bound(uint32_t q, int d);
double hom_theorem_bound(uint32_t q, int d, uint64_t sphere_cardinality);

}  // namespace ffrl
