#include "ffrl/field.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ffrl {

namespace {

bool is_odd_prime(uint32_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (uint32_t d = 3; static_cast<uint64_t>(d) * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomial arithmetic over F_p, degree-ascending coefficients.
// Only used during construction; everything afterwards runs on tables.
using Poly = std::vector<uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p;
    trim(r);
    return r;
}

// Remainder of a modulo monic b.
Poly poly_mod(Poly a, const Poly& b, uint32_t p) {
    trim(a);
    const size_t db = b.size() - 1;
    while (a.size() > db) {
        uint32_t c = a.back();  // nonzero after trim
        size_t shift = a.size() - 1 - db;
        for (size_t i = 0; i + 1 < b.size(); ++i) {
            uint64_t sub = static_cast<uint64_t>(c) * b[i] % p;
            a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - sub) % p);
        }
        a.pop_back();  // monic leading term cancels exactly
        trim(a);
    }
    return a;
}

bool poly_is_zero(const Poly& a) { return a.empty(); }

// Trial division by every monic polynomial of degree 1..deg/2.
bool poly_irreducible(const Poly& f, uint32_t p) {
    const size_t deg = f.size() - 1;
    for (size_t dg = 1; 2 * dg <= deg; ++dg) {
        uint64_t count = 1;
        for (size_t i = 0; i < dg; ++i) count *= p;
        for (uint64_t k = 0; k < count; ++k) {
            Poly g(dg + 1, 0);
            uint64_t t = k;
            for (size_t i = 0; i < dg; ++i) {
                g[i] = static_cast<uint32_t>(t % p);
                t /= p;
            }
            g[dg] = 1;
            if (poly_is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

uint64_t poly_to_index(const Poly& a, uint32_t p) {
    uint64_t idx = 0, scale = 1;
    for (uint32_t c : a) {
        idx += c * scale;
        scale *= p;
    }
    return idx;
}

Poly index_to_poly(uint64_t idx, uint32_t p) {
    Poly a;
    while (idx) {
        a.push_back(static_cast<uint32_t>(idx % p));
        idx /= p;
    }
    return a;
}

std::vector<uint64_t> prime_factors(uint64_t m) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) out.push_back(m);
    return out;
}

}  // namespace

FieldPtr FiniteField::make(uint32_t p, uint32_t n, uint64_t size_limit) {
    if (!is_odd_prime(p))
        throw NotOddPrime("field characteristic must be an odd prime, got " + std::to_string(p));
    if (n < 1) throw Error("extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < n; ++i) {
        q *= p;
        if (q > size_limit)
            throw TooLarge("p^n = " + std::to_string(p) + "^" + std::to_string(n) +
                           " exceeds size limit " + std::to_string(size_limit));
    }

    auto F = std::shared_ptr<FiniteField>(new FiniteField());
    F->p_ = p;
    F->n_ = n;
    F->q_ = static_cast<uint32_t>(q);
    F->twist_ = 1;

    if (n == 1) {
        F->modulus_ = {0, 1};  // x
    } else {
        // Lowest monic irreducible of degree n: the coefficient tuple
        // (a_{n-1}, ..., a_0) is ordered lexicographically, which matches
        // enumerating k with a_{n-1} as its most significant base-p digit.
        bool found = false;
        uint64_t span = 1;
        for (uint32_t i = 0; i < n; ++i) span *= p;
        for (uint64_t k = 0; k < span && !found; ++k) {
            Poly g(n + 1, 0);
            uint64_t t = k;
            for (uint32_t i = 0; i < n; ++i) {
                g[i] = static_cast<uint32_t>(t % p);
                t /= p;
            }
            g[n] = 1;
            if (poly_irreducible(g, p)) {
                F->modulus_ = g;
                found = true;
            }
        }
        if (!found)
            throw NoIrreduciblePolynomialFound("no monic irreducible of degree " +
                                               std::to_string(n) + " over F_" + std::to_string(p));
    }

    F->build_tables();
    return F;
}

void FiniteField::build_tables() {
    const uint32_t p = p_, n = n_, q = q_;

    // Generator search + discrete-log tables.  Candidate order checked via
    // the prime factorization of q-1 using raw polynomial arithmetic.
    auto poly_pow_mod = [&](const Poly& base, uint64_t e) {
        Poly r = {1};
        Poly b = base;
        while (e) {
            if (e & 1) r = poly_mod(poly_mul(r, b, p), modulus_, p);
            b = poly_mod(poly_mul(b, b, p), modulus_, p);
            e >>= 1;
        }
        return r;
    };
    const auto factors = prime_factors(q - 1);
    generator_ = 0;
    for (uint32_t cand = 2; cand < q && generator_ == 0; ++cand) {
        Poly c = index_to_poly(cand, p);
        if (n > 1) c = poly_mod(c, modulus_, p);
        bool ok = true;
        for (uint64_t ell : factors) {
            Poly r = poly_pow_mod(c, (q - 1) / ell);
            if (poly_to_index(r, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) generator_ = cand;
    }
    if (generator_ == 0) throw Error("no multiplicative generator found");

    log_.assign(q, 0);
    antilog_.assign(q - 1, 0);
    Poly gp = index_to_poly(generator_, p);
    Poly acc = {1};
    for (uint32_t k = 0; k < q - 1; ++k) {
        uint64_t idx = poly_to_index(acc, p);
        if (idx == 0 || idx >= q) throw Error("generator walk left the field");
        if (k > 0 && idx == 1) throw Error("generator order too small");
        antilog_[k] = static_cast<uint32_t>(idx);
        log_[idx] = k;
        acc = poly_mod(poly_mul(acc, gp, p), modulus_, p);
    }
    if (poly_to_index(acc, p) != 1) throw Error("generator order mismatch");

    // Absolute trace by summing Frobenius powers; must land in F_p.
    trace_.assign(q, 0);
    bool trace_nontrivial = false;
    for (uint32_t a = 0; a < q; ++a) {
        uint32_t t = a, b = a;
        for (uint32_t i = 1; i < n; ++i) {
            b = pow(b, p);
            t = add(t, b);
        }
        if (t >= p) throw Error("trace left the prime subfield");
        trace_[a] = t;
        if (t != 0) trace_nontrivial = true;
    }
    if (!trace_nontrivial) throw Error("trace identically zero");

    chi_.assign(q, cd{});
    const double step = 2.0 * std::numbers::pi / p;
    for (uint32_t a = 0; a < q; ++a) {
        uint32_t t = trace_[mul(twist_, a)];
        chi_[a] = std::polar(1.0, step * t);
    }

    eta_.assign(q, 0);
    for (uint32_t k = 0; k < q - 1; ++k) eta_[antilog_[k]] = (k % 2 == 0) ? 1 : -1;

    sqrt_minus_one_.reset();
    const uint32_t minus_one = neg(1);
    if ((q - 1) % 4 == 0) {
        uint32_t i = antilog_[(q - 1) / 4];
        if (mul(i, i) != minus_one) throw Error("fourth root of unity is not sqrt(-1)");
        sqrt_minus_one_ = i;
    }

    // Spot-check the ring axioms on a deterministic sample of triples.
    const uint32_t stride = q <= 16 ? 1 : q / 16;
    for (uint32_t a = 0; a < q; a += stride)
        for (uint32_t b = 0; b < q; b += stride)
            for (uint32_t c = 0; c < q; c += stride) {
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                    throw Error("distributivity check failed");
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw Error("associativity check failed");
            }
}

uint32_t FiniteField::add(uint32_t a, uint32_t b) const {
    if (n_ == 1) {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t r = 0, scale = 1;
    for (uint32_t k = 0; k < n_; ++k) {
        uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

uint32_t FiniteField::neg(uint32_t a) const {
    if (n_ == 1) return a == 0 ? 0 : p_ - a;
    uint32_t r = 0, scale = 1;
    for (uint32_t k = 0; k < n_; ++k) {
        uint32_t d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * scale;
        a /= p_;
        scale *= p_;
    }
    return r;
}

uint32_t FiniteField::pow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    uint64_t k = static_cast<uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1);
    return antilog_[k];
}

FieldPtr FiniteField::twisted(uint32_t c) const {
    if (c == 0) throw Error("character twist must be nonzero");
    auto G = std::shared_ptr<FiniteField>(new FiniteField(*this));
    G->twist_ = mul(twist_, c);
    const double step = 2.0 * std::numbers::pi / p_;
    for (uint32_t a = 0; a < q_; ++a) G->chi_[a] = std::polar(1.0, step * trace_[mul(G->twist_, a)]);
    return G;
}

cd gauss_sum(const FiniteField& F, uint32_t a) {
    cd s{};
    for (uint32_t t = 1; t < F.q(); ++t)
        s += static_cast<double>(F.eta(t)) * F.chi(F.mul(a, t));
    return s;
}

int quadratic_character(const FiniteField& F, uint32_t a) {
    if (a == 0) return 0;
    uint32_t r = F.pow(a, (F.q() - 1) / 2);
    if (r == 1) return 1;
    if (r == F.neg(1)) return -1;
    throw Error("a^((q-1)/2) is not a sign");
}

cd weil_square_sum(const FiniteField& F, uint32_t a, uint32_t b) {
    if (a == 0)
        throw ZeroLeadingCoefficient("square sum needs a nonzero quadratic coefficient");
    const uint32_t minus_4a = F.neg(F.mul(F.from_int(4), a));
    const uint32_t arg = F.mul(F.mul(b, b), F.inv(minus_4a));
    return gauss_sum(F, 1) * static_cast<double>(F.eta(a)) * F.chi(arg);
}

cd weil_square_sum_brute(const FiniteField& F, uint32_t a, uint32_t b) {
    cd s{};
    for (uint32_t t = 0; t < F.q(); ++t)
        s += F.chi(F.add(F.mul(a, F.mul(t, t)), F.mul(b, t)));
    return s;
}

bool character_orthogonality_check(const FiniteField& F, double tol) {
    const uint32_t q = F.q();
    for (uint32_t a = 0; a < q; ++a) {
        // Kahan-compensated so the check stays sharp for large q.
        cd sum{}, comp{};
        for (uint32_t s = 0; s < q; ++s) {
            cd y = F.chi(F.mul(a, s)) - comp;
            cd t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        cd expect = (a == 0) ? cd{static_cast<double>(q), 0.0} : cd{};
        if (std::abs(sum - expect) > tol * q) return false;

        int64_t eta_sum = 0;
        for (uint32_t s = 1; s < q; ++s) eta_sum += F.eta(F.mul(a, s));
        int64_t eta_expect = (a == 0) ? static_cast<int64_t>(q) - 1 : 0;
        if (eta_sum != eta_expect) return false;
    }
    return true;
}

std::optional<uint32_t> sqrt_of_minus_one(const FiniteField& F) {
    return F.sqrt_minus_one();
}

}  // namespace ffrl
