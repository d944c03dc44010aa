#include "ffrl/space.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

namespace ffrl {

uint64_t grid_size(const FiniteField& F, int dim) {
    uint64_t n = 1;
    for (int k = 0; k < dim; ++k) n *= F.q();
    return n;
}

void decode_point(uint64_t index, uint32_t q, int dim, uint32_t* coords) {
    for (int k = 0; k < dim; ++k) {
        coords[k] = static_cast<uint32_t>(index % q);
        index /= q;
    }
}

uint64_t encode_point(uint32_t q, int dim, const uint32_t* coords) {
    uint64_t idx = 0;
    for (int k = dim - 1; k >= 0; --k) idx = idx * q + coords[k];
    return idx;
}

uint32_t dot(const FiniteField& F, std::span<const uint32_t> a, std::span<const uint32_t> b) {
    uint32_t s = 0;
    for (size_t k = 0; k < a.size(); ++k) s = F.add(s, F.mul(a[k], b[k]));
    return s;
}

GridFunction make_grid(FieldPtr F, int dim, Measure measure, cd fill) {
    GridFunction g;
    g.field = std::move(F);
    g.dim = dim;
    g.measure = measure;
    g.values.assign(grid_size(*g.field, dim), fill);
    return g;
}

GridFunction delta(FieldPtr F, int dim, uint64_t at) {
    GridFunction g = make_grid(std::move(F), dim, Measure::CountingDm);
    g.values[at] = 1.0;
    return g;
}

GridFunction constant_one(FieldPtr F, int dim, Measure measure) {
    return make_grid(std::move(F), dim, measure, cd{1.0, 0.0});
}

double lp_norm(const GridFunction& f, double p) {
    if (!(p >= 1.0))  // also rejects NaN
        throw InvalidExponent("L^p norm needs p >= 1, got " + std::to_string(p));
    if (std::isinf(p)) {
        double m = 0.0;
        for (const cd& v : f.values) m = std::max(m, std::abs(v));
        return m;
    }
    double s = 0.0;
    if (p == 2.0) {
        for (const cd& v : f.values) s += std::norm(v);
    } else if (p == 1.0) {
        for (const cd& v : f.values) s += std::abs(v);
    } else {
        const double half_p = 0.5 * p;
        for (const cd& v : f.values) s += std::pow(std::norm(v), half_p);
    }
    if (f.measure == Measure::NormalizedDx) s /= static_cast<double>(f.size());
    return std::pow(s, 1.0 / p);
}

cd inner_product(const GridFunction& f, const GridFunction& g) {
    if (!same_space(f, g)) throw DimensionMismatch("inner product on mismatched spaces");
    cd s{};
    for (uint64_t i = 0; i < f.size(); ++i) s += f.values[i] * std::conj(g.values[i]);
    if (f.measure == Measure::NormalizedDx) s /= static_cast<double>(f.size());
    return s;
}

bool same_space(const GridFunction& f, const GridFunction& g) {
    if (f.dim != g.dim || f.measure != g.measure) return false;
    if (f.field == g.field) return true;
    return f.field->p() == g.field->p() && f.field->n() == g.field->n() &&
           f.field->chi(1) == g.field->chi(1);
}

GridFunction operator+(const GridFunction& f, const GridFunction& g) {
    if (!same_space(f, g)) throw DimensionMismatch("adding functions on mismatched spaces");
    GridFunction r = f;
    for (uint64_t i = 0; i < r.size(); ++i) r.values[i] += g.values[i];
    return r;
}

GridFunction operator*(cd c, const GridFunction& f) {
    GridFunction r = f;
    for (cd& v : r.values) v *= c;
    return r;
}

namespace {
uint64_t splitmix64(uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
}  // namespace

Rng::Rng(uint64_t seed, uint64_t stream) {
    uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    state_[0] = splitmix64(x);
    state_[1] = splitmix64(x);
    if ((state_[0] | state_[1]) == 0) state_[1] = 0x6a09e667f3bcc909ULL;
}

uint64_t Rng::next_raw() {
    uint64_t s1 = state_[0];
    const uint64_t s0 = state_[1];
    state_[0] = s0;
    s1 ^= s1 << 23;
    state_[1] = s1 ^ s0 ^ (s1 >> 18) ^ (s0 >> 5);
    return state_[1] + s0;
}

double Rng::uniform() { return static_cast<double>(next_raw() >> 11) * 0x1.0p-53; }

double Rng::uniform_positive() {
    return (static_cast<double>(next_raw() >> 11) + 1.0) * 0x1.0p-53;
}

cd Rng::gaussian() {
    // Circularly symmetric with E|Z|^2 = 1, so |Z|^2 is Exp(1).
    double r = std::sqrt(-std::log(uniform_positive()));
    double th = 2.0 * std::numbers::pi * uniform();
    return {r * std::cos(th), r * std::sin(th)};
}

cd Rng::unit_phase() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

uint64_t Rng::integer(uint64_t bound) { return bound == 0 ? 0 : next_raw() % bound; }

GridFunction random_function(FieldPtr F, int dim, uint64_t seed, Distribution dist) {
    GridFunction g = make_grid(std::move(F), dim, Measure::CountingDm);
    Rng rng(seed);
    switch (dist.kind) {
        case DistributionKind::ComplexGaussian:
            for (cd& v : g.values) v = rng.gaussian();
            break;
        case DistributionKind::ZeroOneSparse:
            for (cd& v : g.values) v = rng.uniform() < dist.density ? cd{1.0, 0.0} : cd{};
            break;
        case DistributionKind::UniformPhase:
            for (cd& v : g.values) v = rng.unit_phase();
            break;
    }
    return g;
}

void write_grid_text(std::ostream& os, const GridFunction& f) {
    os.precision(17);
    os << "ffrl-grid " << f.field->p() << ' ' << f.field->n() << ' ' << f.dim << ' '
       << (f.measure == Measure::CountingDm ? "dm" : "dx") << '\n';
    for (uint64_t i = 0; i < f.size(); ++i)
        os << i << ' ' << f.values[i].real() << ' ' << f.values[i].imag() << '\n';
}

GridFunction read_grid_text(std::istream& is) {
    std::string magic, tag;
    uint32_t p = 0, n = 0;
    int dim = 0;
    if (!(is >> magic >> p >> n >> dim >> tag) || magic != "ffrl-grid")
        throw Error("not an ffrl-grid stream");
    GridFunction g = make_grid(make_field(p, n), dim,
                               tag == "dm" ? Measure::CountingDm : Measure::NormalizedDx);
    uint64_t idx = 0;
    double re = 0, im = 0;
    uint64_t rows = 0;
    while (is >> idx >> re >> im) {
        if (idx >= g.size()) throw Error("grid index out of range in stream");
        g.values[idx] = {re, im};
        ++rows;
    }
    if (rows != g.size()) throw Error("grid stream row count mismatch");
    return g;
}

}  // namespace ffrl
