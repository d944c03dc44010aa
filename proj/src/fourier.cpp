#include "ffrl/fourier.hpp"

#include <cstring>

namespace ffrl {

namespace {

// chi(a*b) as a dense q x q matrix; built per call from the field's chi
// table (q <= 2^10 in practice, so this is a few lookups per entry).
std::vector<cd> character_matrix(const FiniteField& F, bool conjugated) {
    const uint32_t q = F.q();
    std::vector<cd> M(static_cast<size_t>(q) * q);
    for (uint32_t a = 0; a < q; ++a)
        for (uint32_t b = 0; b < q; ++b) {
            cd v = F.chi(F.mul(a, b));
            M[static_cast<size_t>(a) * q + b] = conjugated ? std::conj(v) : v;
        }
    return M;
}

// Applies the q x q matrix M along every axis of the dense array in turn.
// One fiber (a length-q slice at stride q^axis) is always summed by a single
// thread in index order; parallelism is across fibers only.
void apply_all_axes(std::vector<cd>& values, const std::vector<cd>& M, uint32_t q, int dim) {
    const uint64_t n = values.size();
    const uint64_t nfib = n / q;
    std::vector<cd> scratch(n);
    uint64_t stride = 1;
    for (int axis = 0; axis < dim; ++axis) {
        const uint64_t block = stride * q;
#pragma omp parallel for schedule(static) if (nfib > 64)
        for (int64_t f = 0; f < static_cast<int64_t>(nfib); ++f) {
            const uint64_t outer = static_cast<uint64_t>(f) / stride;
            const uint64_t inner = static_cast<uint64_t>(f) % stride;
            const uint64_t base = outer * block + inner;
            for (uint32_t a = 0; a < q; ++a) {
                cd acc{};
                const cd* row = M.data() + static_cast<size_t>(a) * q;
                for (uint32_t b = 0; b < q; ++b) acc += row[b] * values[base + b * stride];
                scratch[base + a * stride] = acc;
            }
        }
        values.swap(scratch);
        stride *= q;
    }
}

}  // namespace

GridFunction hat(const GridFunction& g) {
    if (g.measure != Measure::CountingDm)
        throw WrongMeasureTag("hat expects a dm-measure function");
    GridFunction out = g;
    out.measure = Measure::NormalizedDx;
    const auto M = character_matrix(*g.field, /*conjugated=*/true);
    apply_all_axes(out.values, M, g.field->q(), g.dim);
    return out;
}

GridFunction inv(const GridFunction& f) {
    if (f.measure != Measure::NormalizedDx)
        throw WrongMeasureTag("inv expects a dx-measure function");
    GridFunction out = f;
    out.measure = Measure::CountingDm;
    const auto M = character_matrix(*f.field, /*conjugated=*/false);
    apply_all_axes(out.values, M, f.field->q(), f.dim);
    const double scale = 1.0 / static_cast<double>(f.size());
    for (cd& v : out.values) v *= scale;
    return out;
}

GridFunction naive_hat(const GridFunction& g) {
    if (g.measure != Measure::CountingDm)
        throw WrongMeasureTag("naive_hat expects a dm-measure function");
    const FiniteField& F = *g.field;
    const uint32_t q = F.q();
    const int d = g.dim;
    GridFunction out = make_grid(g.field, d, Measure::NormalizedDx);
    std::vector<uint32_t> xc(d), mc(d);
    for (uint64_t x = 0; x < out.size(); ++x) {
        decode_point(x, q, d, xc.data());
        cd acc{};
        for (uint64_t m = 0; m < g.size(); ++m) {
            decode_point(m, q, d, mc.data());
            acc += std::conj(F.chi(dot(F, mc, xc))) * g.values[m];
        }
        out.values[x] = acc;
    }
    return out;
}

GridFunction naive_inv(const GridFunction& f) {
    if (f.measure != Measure::NormalizedDx)
        throw WrongMeasureTag("naive_inv expects a dx-measure function");
    const FiniteField& F = *f.field;
    const uint32_t q = F.q();
    const int d = f.dim;
    GridFunction out = make_grid(f.field, d, Measure::CountingDm);
    std::vector<uint32_t> xc(d), mc(d);
    const double scale = 1.0 / static_cast<double>(f.size());
    for (uint64_t m = 0; m < out.size(); ++m) {
        decode_point(m, q, d, mc.data());
        cd acc{};
        for (uint64_t x = 0; x < f.size(); ++x) {
            decode_point(x, q, d, xc.data());
            acc += F.chi(dot(F, mc, xc)) * f.values[x];
        }
        out.values[m] = acc * scale;
    }
    return out;
}

GridFunction convolve_dm(const GridFunction& f, const GridFunction& g) {
    if (!same_space(f, g) || f.measure != Measure::CountingDm)
        throw DimensionMismatch("convolution needs two dm functions on the same space");
    GridFunction fh = hat(f);
    const GridFunction gh = hat(g);
    for (uint64_t i = 0; i < fh.size(); ++i) fh.values[i] *= gh.values[i];
    return inv(fh);
}

GridFunction naive_convolve_dm(const GridFunction& f, const GridFunction& g) {
    if (!same_space(f, g) || f.measure != Measure::CountingDm)
        throw DimensionMismatch("convolution needs two dm functions on the same space");
    const FiniteField& F = *f.field;
    const uint32_t q = F.q();
    const int d = f.dim;
    GridFunction out = make_grid(f.field, d, Measure::CountingDm);
    std::vector<uint32_t> mc(d), sc(d), diff(d);
    for (uint64_t m = 0; m < out.size(); ++m) {
        decode_point(m, q, d, mc.data());
        cd acc{};
        for (uint64_t s = 0; s < g.size(); ++s) {
            decode_point(s, q, d, sc.data());
            for (int k = 0; k < d; ++k) diff[k] = F.sub(mc[k], sc[k]);
            acc += f.values[encode_point(q, d, diff.data())] * g.values[s];
        }
        out.values[m] = acc;
    }
    return out;
}

}  // namespace ffrl
