#include "ffrl/varieties.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ffrl/fourier.hpp"

namespace ffrl {

namespace {

constexpr int kMaxAmbient = 16;

uint32_t sum_of_squares(const FiniteField& F, const uint32_t* c, int count) {
    uint32_t s = 0;
    for (int k = 0; k < count; ++k) s = F.add(s, F.mul(c[k], c[k]));
    return s;
}

// Fills membership in parallel from the defining equation, then collects the
// (automatically sorted) point list.
template <class Pred>
Variety enumerate_variety(FieldPtr F, int ambient, VarietyKind kind, uint32_t j, Pred pred) {
    Variety V;
    V.field = std::move(F);
    V.ambient_dim = ambient;
    V.kind = kind;
    V.j = j;
    const uint64_t n = grid_size(*V.field, ambient);
    const uint32_t q = V.field->q();
    V.membership.assign(n, 0);
#pragma omp parallel for schedule(static) if (n > 4096)
    for (int64_t idx = 0; idx < static_cast<int64_t>(n); ++idx) {
        uint32_t c[kMaxAmbient];
        decode_point(static_cast<uint64_t>(idx), q, ambient, c);
        if (pred(c)) V.membership[idx] = 1;
    }
    V.points.reserve(n / q);
    for (uint64_t idx = 0; idx < n; ++idx)
        if (V.membership[idx]) V.points.push_back(idx);
    return V;
}

}  // namespace

std::string Variety::label() const {
    switch (kind) {
        case VarietyKind::Paraboloid: return "paraboloid";
        case VarietyKind::Sphere: return "sphere(j=" + std::to_string(j) + ")";
        case VarietyKind::HomCone: return "cone";
        case VarietyKind::HomSphere: return "hom_sphere(j=" + std::to_string(j) + ")";
        case VarietyKind::AffineSubspace: return "affine_subspace";
    }
    return "?";
}

Variety paraboloid(FieldPtr F, int d) {
    if (d < 2) throw DimensionMismatch("paraboloid needs d >= 2");
    const FiniteField& Fr = *F;
    Variety V = enumerate_variety(F, d, VarietyKind::Paraboloid, 0, [&Fr, d](const uint32_t* c) {
        return sum_of_squares(Fr, c, d - 1) == c[d - 1];
    });
    if (V.cardinality() != grid_size(Fr, d - 1))
        throw Error("paraboloid count is not q^{d-1}");
    return V;
}

Variety sphere(FieldPtr F, int d, uint32_t j) {
    if (j == 0) throw ZeroRadius("sphere radius j must be nonzero");
    const FiniteField& Fr = *F;
    Variety V = enumerate_variety(F, d, VarietyKind::Sphere, j, [&Fr, d, j](const uint32_t* c) {
        return sum_of_squares(Fr, c, d) == j;
    });
    const double qd = static_cast<double>(grid_size(Fr, d));
    const double scaled = static_cast<double>(V.cardinality()) * (Fr.q() - 1);
    if (scaled < qd / 2 || scaled > 2 * qd)
        throw Error("sphere count violates |S_j|(q-1) ~ q^d");
    return V;
}

Variety homogeneous_cone(FieldPtr F, int d) {
    if (d < 2) throw DimensionMismatch("cone needs d >= 2");
    const FiniteField& Fr = *F;
    return enumerate_variety(F, d + 1, VarietyKind::HomCone, 0, [&Fr, d](const uint32_t* c) {
        return sum_of_squares(Fr, c, d - 1) == Fr.mul(c[d - 1], c[d]);
    });
}

Variety homogeneous_sphere(FieldPtr F, int d, uint32_t j) {
    if (j == 0) throw ZeroRadius("homogeneous sphere needs j != 0");
    const FiniteField& Fr = *F;
    return enumerate_variety(F, d + 1, VarietyKind::HomSphere, j, [&Fr, d, j](const uint32_t* c) {
        return sum_of_squares(Fr, c, d) == Fr.mul(j, Fr.mul(c[d], c[d]));
    });
}

Variety full_space(FieldPtr F, int d) {
    Variety V = enumerate_variety(F, d, VarietyKind::AffineSubspace, 0,
                                  [](const uint32_t*) { return true; });
    V.base_point = 0;
    V.basis.clear();
    for (int k = 0; k < d; ++k) {
        std::vector<uint32_t> e(d, 0);
        e[k] = 1;
        V.basis.push_back(std::move(e));
    }
    return V;
}

namespace {

// H = base + span(basis) as a Variety, with every point re-verified against
// the parent's membership bitmap.
Variety span_subspace(const Variety& parent, uint64_t base,
                      const std::vector<std::vector<uint32_t>>& basis) {
    const FiniteField& F = *parent.field;
    const uint32_t q = F.q();
    const int d = parent.ambient_dim;
    Variety H;
    H.field = parent.field;
    H.ambient_dim = d;
    H.kind = VarietyKind::AffineSubspace;
    H.base_point = base;
    H.basis = basis;
    H.membership.assign(grid_size(F, d), 0);

    uint64_t combos = 1;
    for (size_t i = 0; i < basis.size(); ++i) combos *= q;
    std::set<uint64_t> pts;
    std::vector<uint32_t> coeff(basis.size()), pt(d), basec(d);
    decode_point(base, q, d, basec.data());
    for (uint64_t t = 0; t < combos; ++t) {
        decode_point(t, q, static_cast<int>(basis.size()), coeff.data());
        pt = basec;
        for (size_t i = 0; i < basis.size(); ++i)
            for (int k = 0; k < d; ++k) pt[k] = F.add(pt[k], F.mul(coeff[i], basis[i][k]));
        pts.insert(encode_point(q, d, pt.data()));
    }
    if (pts.size() != combos) throw SubspaceNotFound("subspace generators are dependent");
    for (uint64_t idx : pts) {
        if (!parent.contains(idx))
            throw SubspaceNotFound("constructed subspace leaves the variety");
        H.points.push_back(idx);
        H.membership[idx] = 1;
    }
    return H;
}

// Greedy search for `want` pairwise-orthogonal isotropic directions lying in
// the orthogonal complement of `base` (all in the first `form_dim` coords of
// a d-dimensional ambient space for the paraboloid case, or all d coords for
// the sphere).  Candidates are scanned in index order, so the construction
// is deterministic.
bool greedy_isotropic(const FiniteField& F, int d, int form_dim,
                      const std::vector<uint32_t>& base, int want,
                      std::vector<std::vector<uint32_t>>& out) {
    const uint32_t q = F.q();
    out.clear();
    const uint64_t n = grid_size(F, form_dim);
    while (static_cast<int>(out.size()) < want) {
        bool found = false;
        std::vector<uint32_t> w(d, 0);
        for (uint64_t idx = 1; idx < n && !found; ++idx) {
            decode_point(idx, q, form_dim, w.data());
            if (sum_of_squares(F, w.data(), form_dim) != 0) continue;
            if (dot(F, std::span(w).first(form_dim), std::span(base).first(form_dim)) != 0)
                continue;
            bool ortho = true;
            for (const auto& v : out)
                if (dot(F, w, v) != 0) { ortho = false; break; }
            if (!ortho) continue;
            // independence from the current span
            uint64_t combos = 1;
            for (size_t i = 0; i < out.size(); ++i) combos *= q;
            bool in_span = false;
            std::vector<uint32_t> coeff(out.size()), pt(d);
            for (uint64_t t = 0; t < combos && !in_span; ++t) {
                decode_point(t, q, static_cast<int>(out.size()), coeff.data());
                std::fill(pt.begin(), pt.end(), 0);
                for (size_t i = 0; i < out.size(); ++i)
                    for (int k = 0; k < d; ++k) pt[k] = F.add(pt[k], F.mul(coeff[i], out[i][k]));
                if (pt == w) in_span = true;
            }
            if (in_span) continue;
            out.push_back(w);
            found = true;
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace

Variety max_affine_subspace(const Variety& V) {
    const FiniteField& F = *V.field;
    const uint32_t q = F.q();
    const int d = V.ambient_dim;
    auto root = F.sqrt_minus_one();
    if (!root) throw MinusOneNotSquare("-1 is not a square in F_" + std::to_string(q));
    const uint32_t i_unit = *root;
    const int k = (d % 2 == 0) ? (d - 2) / 2 : (d - 1) / 2;

    if (V.kind == VarietyKind::Paraboloid) {
        // Isotropic pairs e_{2t} + i e_{2t+1} inside the graph variables,
        // embedded with vanishing last coordinate.
        std::vector<std::vector<uint32_t>> basis;
        for (int t = 0; t < k; ++t) {
            std::vector<uint32_t> v(d, 0);
            v[2 * t] = 1;
            v[2 * t + 1] = i_unit;
            basis.push_back(std::move(v));
        }
        return span_subspace(V, 0, basis);
    }
    if (V.kind != VarietyKind::Sphere)
        throw Error("max_affine_subspace supports paraboloids and spheres");
    if (V.points.empty()) throw NoBasePointFound("sphere is empty");

    // Base points in index order, preferring those with the last two
    // coordinates zero; H = a + W with W isotropic and orthogonal to a.
    std::vector<uint64_t> candidates;
    for (uint64_t idx : V.points) {
        uint32_t c[kMaxAmbient];
        decode_point(idx, q, d, c);
        if (d >= 2 && c[d - 1] == 0 && c[d - 2] == 0) candidates.push_back(idx);
    }
    for (uint64_t idx : V.points)
        if (std::find(candidates.begin(), candidates.end(), idx) == candidates.end())
            candidates.push_back(idx);

    for (uint64_t base : candidates) {
        std::vector<uint32_t> a(d);
        decode_point(base, q, d, a.data());
        std::vector<std::vector<uint32_t>> basis;
        if (greedy_isotropic(F, d, d, a, k, basis)) return span_subspace(V, base, basis);
    }
    throw SubspaceNotFound("no base point admits " + std::to_string(k) +
                           " isotropic directions");
}

double lr_norm_dsigma(const Variety& V, std::span<const cd> values_on_v, double r) {
    if (!(r >= 1.0)) throw InvalidExponent("L^r norm needs r >= 1");
    if (values_on_v.size() != V.points.size())
        throw DimensionMismatch("value list does not match |V|");
    if (std::isinf(r)) {
        double m = 0.0;
        for (const cd& v : values_on_v) m = std::max(m, std::abs(v));
        return m;
    }
    double s = 0.0;
    if (r == 2.0) {
        for (const cd& v : values_on_v) s += std::norm(v);
    } else {
        const double half_r = 0.5 * r;
        for (const cd& v : values_on_v) s += std::pow(std::norm(v), half_r);
    }
    return std::pow(s / static_cast<double>(V.cardinality()), 1.0 / r);
}

std::vector<cd> restrict_hat(const GridFunction& g, const Variety& V) {
    if (g.dim != V.ambient_dim || g.field->q() != V.field->q())
        throw DimensionMismatch("function and variety live in different spaces");
    if (g.measure != Measure::CountingDm)
        throw WrongMeasureTag("restrict_hat expects a dm-measure function");
    const FiniteField& F = *g.field;
    const uint32_t q = F.q();
    const int d = g.dim;
    std::vector<cd> out(V.points.size());
#pragma omp parallel for schedule(static) if (V.points.size() > 16)
    for (int64_t i = 0; i < static_cast<int64_t>(V.points.size()); ++i) {
        uint32_t xc[kMaxAmbient], mc[kMaxAmbient];
        decode_point(V.points[i], q, d, xc);
        cd acc{};
        for (uint64_t m = 0; m < g.size(); ++m) {
            decode_point(m, q, d, mc);
            uint32_t s = 0;
            for (int t = 0; t < d; ++t) s = F.add(s, F.mul(mc[t], xc[t]));
            acc += std::conj(F.chi(s)) * g.values[m];
        }
        out[i] = acc;
    }
    return out;
}

GridFunction extension(std::span<const cd> g_on_v, const Variety& V) {
    if (g_on_v.size() != V.points.size())
        throw DimensionMismatch("value list does not match |V|");
    GridFunction f = make_grid(V.field, V.ambient_dim, Measure::NormalizedDx);
    const double density = static_cast<double>(f.size()) / static_cast<double>(V.cardinality());
    for (size_t i = 0; i < V.points.size(); ++i) f.values[V.points[i]] = density * g_on_v[i];
    return inv(f);
}

GridFunction extension_direct(std::span<const cd> g_on_v, const Variety& V) {
    if (g_on_v.size() != V.points.size())
        throw DimensionMismatch("value list does not match |V|");
    const FiniteField& F = *V.field;
    const uint32_t q = F.q();
    const int d = V.ambient_dim;
    GridFunction out = make_grid(V.field, d, Measure::CountingDm);
    std::vector<uint32_t> mc(d), xc(d);
    const double w = 1.0 / static_cast<double>(V.cardinality());
    for (uint64_t m = 0; m < out.size(); ++m) {
        decode_point(m, q, d, mc.data());
        cd acc{};
        for (size_t i = 0; i < V.points.size(); ++i) {
            decode_point(V.points[i], q, d, xc.data());
            acc += F.chi(dot(F, mc, xc)) * g_on_v[i];
        }
        out.values[m] = w * acc;
    }
    return out;
}

GridFunction sigma_inv_grid(const Variety& V) {
    std::vector<cd> ones(V.points.size(), cd{1.0, 0.0});
    return extension(ones, V);
}

std::vector<uint64_t> perp_set(const FiniteField& F, int d,
                               const std::vector<std::vector<uint32_t>>& basis) {
    const uint32_t q = F.q();
    std::vector<uint64_t> out;
    std::vector<uint32_t> mc(d);
    for (uint64_t m = 0; m < grid_size(F, d); ++m) {
        decode_point(m, q, d, mc.data());
        bool ok = true;
        for (const auto& b : basis)
            if (dot(F, mc, b) != 0) { ok = false; break; }
        if (ok) out.push_back(m);
    }
    return out;
}

}  // namespace ffrl
