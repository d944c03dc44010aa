#pragma once

#include "ffrl/space.hpp"

namespace ffrl {

/// Forward transform g^(x) = sum_m chi(-m.x) g(m), mapping (F_q^d, dm) to
/// (F_q^d, dx).  Tensorized: d passes of a q x q character-matrix multiply
/// per fiber, O(d q^{d+1}) total, fibers processed in parallel.  Summation
/// order within a fiber is fixed, so results do not depend on the thread
/// count.  Throws WrongMeasureTag unless g carries the counting measure.
GridFunction hat(const GridFunction& g);

/// Inverse transform f^(m) = q^{-d} sum_x chi(m.x) f(x), mapping dx back to
/// dm.  Throws WrongMeasureTag unless f carries the normalized measure.
GridFunction inv(const GridFunction& f);

/// O(q^{2d}) double-loop references; kept as the independent oracle for the
/// tensorized kernels and for the benchmark comparison.
GridFunction naive_hat(const GridFunction& g);
GridFunction naive_inv(const GridFunction& f);

/// Convolution under the counting measure, (f*g)(m) = sum_{m'} f(m-m') g(m'),
/// computed by transform-multiply-invert (so f * delta_0 = f exactly).
GridFunction convolve_dm(const GridFunction& f, const GridFunction& g);

/// Direct-sum reference for convolve_dm.
GridFunction naive_convolve_dm(const GridFunction& f, const GridFunction& g);

}  // namespace ffrl
