#pragma once

#include <cstdint>
#include <vector>

#include "dscode/errors.hpp"

namespace dscode {

/// Coordinate vector over F_p, entries kept as least nonnegative residues.
using FpVector = std::vector<int>;

/// Largest modulus accepted anywhere; everything here is desk-scale exact
/// arithmetic, not cryptography.
inline constexpr int kMaxPrime = 97;

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Arithmetic context for the prime field F_p. Values are immutable after
/// construction; all member functions are const and safe to call
/// concurrently.
class PrimeField {
public:
    explicit PrimeField(int p) : p_(p) {
        if (p < 2) throw CodeError(Errc::too_small, "modulus must be at least 2");
        if (p > kMaxPrime)
            throw CodeError(Errc::scale_limit_exceeded,
                            "modulus exceeds configured limit " + std::to_string(kMaxPrime));
        if (!is_prime(p)) throw CodeError(Errc::not_prime, std::to_string(p) + " is composite");
        inverse_.assign(p, 0);
        for (int a = 1; a < p; ++a) {
            for (int b = 1; b < p; ++b) {
                if (a * b % p == 1) {
                    inverse_[a] = b;
                    break;
                }
            }
        }
    }

    int p() const noexcept { return p_; }

    int reduce(long long a) const noexcept {
        long long r = a % p_;
        return static_cast<int>(r < 0 ? r + p_ : r);
    }

    int add(int a, int b) const noexcept { return (a + b) % p_; }
    int sub(int a, int b) const noexcept { return (a - b + p_) % p_; }
    int mul(int a, int b) const noexcept { return a * b % p_; }
    int neg(int a) const noexcept { return (p_ - a) % p_; }

    int inv(int a) const {
        if (a % p_ == 0) throw CodeError(Errc::zero_vector, "zero has no inverse");
        return inverse_[a % p_];
    }

    bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

private:
    int p_;
    std::vector<int> inverse_;
};

inline bool is_zero_vector(const FpVector& v) {
    for (int x : v)
        if (x != 0) return false;
    return true;
}

/// Euclidean inner product sum x_i * y_i mod p.
inline int vec_dot(const PrimeField& f, const FpVector& x, const FpVector& y) {
    if (x.size() != y.size())
        throw CodeError(Errc::dimension_mismatch, "dot of lengths " + std::to_string(x.size()) +
                                                      " and " + std::to_string(y.size()));
    long long acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += static_cast<long long>(x[i]) * y[i];
    return f.reduce(acc);
}

inline FpVector vec_scale(const PrimeField& f, int lambda, const FpVector& v) {
    FpVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.mul(lambda, v[i]);
    return out;
}

inline FpVector vec_add(const PrimeField& f, const FpVector& a, const FpVector& b) {
    if (a.size() != b.size()) throw CodeError(Errc::dimension_mismatch, "vector add");
    FpVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

inline FpVector vec_sub(const PrimeField& f, const FpVector& a, const FpVector& b) {
    if (a.size() != b.size()) throw CodeError(Errc::dimension_mismatch, "vector sub");
    FpVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
    return out;
}

/// Rank over F_p of the matrix whose columns are the given vectors.
/// Gaussian elimination with deterministic first-nonzero pivoting.
inline int matrix_rank(const PrimeField& f, const std::vector<FpVector>& columns) {
    if (columns.empty()) throw CodeError(Errc::empty_input, "rank of empty column list");
    const std::size_t m = columns[0].size();
    for (const auto& c : columns)
        if (c.size() != m) throw CodeError(Errc::dimension_mismatch, "ragged columns");

    // Eliminate on the transpose: rows of the working matrix are the columns.
    std::vector<FpVector> rows = columns;
    int rank = 0;
    for (std::size_t col = 0; col < m && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const int inv = f.inv(rows[rank][col]);
        for (std::size_t j = col; j < m; ++j) rows[rank][j] = f.mul(rows[rank][j], inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || rows[r][col] == 0) continue;
            const int factor = rows[r][col];
            for (std::size_t j = col; j < m; ++j)
                rows[r][j] = f.sub(rows[r][j], f.mul(factor, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}

inline long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (1LL << 56) / (base > 0 ? base : 1))
            throw CodeError(Errc::overflow, "power exceeds 64-bit guard");
        r *= base;
    }
    return r;
}

}  // namespace dscode
