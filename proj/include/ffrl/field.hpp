#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ffrl/errors.hpp"

namespace ffrl {

using cd = std::complex<double>;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// F_q with q = p^n, p an odd prime.
///
/// Elements are encoded as indices in [0, q): an element with polynomial
/// coefficient vector (c_0, ..., c_{n-1}) over F_p has index
/// c_0 + c_1 p + ... + c_{n-1} p^{n-1}.  Index 0 is the zero element and
/// index 1 the unit.  Extension fields reduce modulo the lowest (in
/// lexicographic order of the coefficient tuple, leading coefficient first)
/// monic irreducible polynomial of degree n, found by deterministic search.
///
/// Multiplication uses discrete-log tables built from a fixed generator of
/// the (cyclic) multiplicative group, so all arithmetic is O(1) after
/// construction.  Instances are immutable and safe to share across threads.
class FiniteField {
public:
    /// Builds F_{p^n}.  Throws NotOddPrime for p = 2 or composite p,
    /// TooLarge when p^n exceeds size_limit, NoIrreduciblePolynomialFound
    /// if the modulus search fails (cannot happen for valid inputs).
    static FieldPtr make(uint32_t p, uint32_t n, uint64_t size_limit = uint64_t{1} << 20);

    uint32_t p() const { return p_; }
    uint32_t n() const { return n_; }
    uint32_t q() const { return q_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        uint32_t k = log_[a] + log_[b];
        if (k >= q_ - 1) k -= q_ - 1;
        return antilog_[k];
    }
    /// Multiplicative inverse; a must be nonzero.
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw Error("inverse of zero");
        uint32_t k = log_[a];
        return antilog_[k == 0 ? 0 : q_ - 1 - k];
    }
    uint32_t pow(uint32_t a, uint64_t e) const;
    /// Canonical image of an integer in the prime subfield.
    uint32_t from_int(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }

    /// Absolute trace Tr: F_q -> F_p, returned as an integer in [0, p).
    uint32_t trace(uint32_t a) const { return trace_[a]; }

    /// Additive character chi(a) = exp(2*pi*i * Tr(c*a) / p), where c is the
    /// twist (1 for fields made by `make`; see `twisted`).
    cd chi(uint32_t a) const { return chi_[a]; }

    /// Quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise.
    int eta(uint32_t a) const { return eta_[a]; }

    /// A fixed generator of the multiplicative group.
    uint32_t generator() const { return generator_; }

    /// i with i^2 = -1, when q = 1 (mod 4); absent otherwise.
    std::optional<uint32_t> sqrt_minus_one() const { return sqrt_minus_one_; }

    /// Same field with chi replaced by a |-> chi(c*a), c nonzero.  Used to
    /// check that results do not depend on the choice of additive character.
    FieldPtr twisted(uint32_t c) const;

    /// Coefficients (degree-ascending, monic) of the reduction modulus; for
    /// n = 1 this is just {0, 1} (the polynomial x).
    const std::vector<uint32_t>& modulus() const { return modulus_; }

private:
    FiniteField() = default;
    void build_tables();

    uint32_t p_ = 0, n_ = 0, q_ = 0;
    uint32_t twist_ = 1;
    uint32_t generator_ = 0;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> log_, antilog_;
    std::vector<uint32_t> trace_;
    std::vector<cd> chi_;
    std::vector<int8_t> eta_;
    std::optional<uint32_t> sqrt_minus_one_;
};

inline FieldPtr make_field(uint32_t p, uint32_t n, uint64_t size_limit = uint64_t{1} << 20) {
    return FiniteField::make(p, n, size_limit);
}

/// Gauss sum G_a = sum_{s != 0} eta(s) chi(a*s).  |G_a| = sqrt(q) for a != 0
/// and G_0 = 0.
cd gauss_sum(const FiniteField& F, uint32_t a);

/// eta(a) computed as a^{(q-1)/2}; identical to F.eta(a) and kept as the
/// definitional route for cross-checks.
int quadratic_character(const FiniteField& F, uint32_t a);

/// Closed form of the complete square sum
///   sum_s chi(a s^2 + b s) = G_1 eta(a) chi(b^2 / (-4a)),  a != 0.
/// Throws ZeroLeadingCoefficient for a = 0 (the sum degenerates to plain
/// character orthogonality there).
cd weil_square_sum(const FiniteField& F, uint32_t a, uint32_t b);

/// Term-by-term evaluation of sum_s chi(a s^2 + b s); serial reference used
/// to validate the closed form.
cd weil_square_sum_brute(const FiniteField& F, uint32_t a, uint32_t b);

/// Verifies, for every a, the orthogonality relations
///   sum_{s in F_q} chi(a s)   = q [a = 0]
///   sum_{s != 0}   eta(a s)   = (q-1) [a = 0]
/// to the given absolute tolerance.
bool character_orthogonality_check(const FiniteField& F, double tol = 1e-12);

std::optional<uint32_t> sqrt_of_minus_one(const FiniteField& F);

}  // namespace ffrl
