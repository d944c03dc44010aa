#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "ffrl/field.hpp"

namespace ffrl {

/// Measure carried by a grid function.  Functions of m-type use the counting
/// measure dm; functions of x-type (Fourier side) use the normalized counting
/// measure dx.  Norms and transforms dispatch on this tag, so a value can
/// never be integrated against the wrong normalization silently.
enum class Measure { CountingDm, NormalizedDx };

/// Dense complex-valued function on F_q^d.  Point with coordinates
/// (c_0, ..., c_{d-1}) lives at linear index sum_k c_k q^k.
struct GridFunction {
    FieldPtr field;
    int dim = 0;
    Measure measure = Measure::CountingDm;
    std::vector<cd> values;

    uint64_t size() const { return values.size(); }
};

uint64_t grid_size(const FiniteField& F, int dim);

/// index <-> coordinate codec (base q, coordinate 0 least significant).
void decode_point(uint64_t index, uint32_t q, int dim, uint32_t* coords);
uint64_t encode_point(uint32_t q, int dim, const uint32_t* coords);

/// Dot product of two coordinate vectors in the field.
uint32_t dot(const FiniteField& F, std::span<const uint32_t> a, std::span<const uint32_t> b);

GridFunction make_grid(FieldPtr F, int dim, Measure measure, cd fill = cd{});
GridFunction delta(FieldPtr F, int dim, uint64_t at = 0);
GridFunction constant_one(FieldPtr F, int dim, Measure measure = Measure::CountingDm);

/// L^p norm under the function's measure tag: counting sums for dm,
/// q^{-d}-weighted sums for dx, max modulus at p = infinity.
/// Throws InvalidExponent for p < 1.
double lp_norm(const GridFunction& f, double p);

/// <f, g> = int f conj(g) under the shared measure (both tags must match).
cd inner_product(const GridFunction& f, const GridFunction& g);

GridFunction operator+(const GridFunction& f, const GridFunction& g);
GridFunction operator*(cd c, const GridFunction& f);
bool same_space(const GridFunction& f, const GridFunction& g);

enum class DistributionKind { ComplexGaussian, ZeroOneSparse, UniformPhase };
struct Distribution {
    DistributionKind kind = DistributionKind::ComplexGaussian;
    double density = 0.5;  // ZeroOneSparse only

    static Distribution gaussian() { return {DistributionKind::ComplexGaussian, 0.0}; }
    static Distribution sparse(double density) { return {DistributionKind::ZeroOneSparse, density}; }
    static Distribution uniform_phase() { return {DistributionKind::UniformPhase, 0.0}; }
};

/// Deterministic stream of uniforms/gaussians.  Built on mt19937_64 with
/// hand-rolled output maps so a seed reproduces bit-identical draws on every
/// platform (std::normal_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(uint64_t seed, uint64_t stream = 0);
    double uniform();             // [0, 1)
    double uniform_positive();    // (0, 1]
    cd gaussian();                // standard complex gaussian (Box-Muller)
    cd unit_phase();              // e^{2 pi i u}
    uint64_t integer(uint64_t bound);  // [0, bound)

private:
    uint64_t state_[2];
    uint64_t next_raw();
};

/// Seed-deterministic random function on F_q^d with the counting measure.
GridFunction random_function(FieldPtr F, int dim, uint64_t seed,
                             Distribution dist = Distribution::gaussian());

/// Columnar text serialization: one "index re im" row per point, preceded by
/// a header row "q dim measure".  Round-trips exactly at full precision.
void write_grid_text(std::ostream& os, const GridFunction& f);
GridFunction read_grid_text(std::istream& is);

}  // namespace ffrl
