#ifndef UNITRING_MATRIX_HPP
#define UNITRING_MATRIX_HPP

// Dense square matrices over a coefficient ring, plus the two exact linear
// solvers used for group-ring inversion: ordinary Gauss-Jordan elimination
// over fields, and fraction-free (Bareiss/Montante) Gauss-Jordan over the
// integers, which keeps every intermediate entry integral and decides
// whether the rational solution is in fact integral.

#include "unitring/bigint.hpp"
#include "unitring/rings.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace unitring {

template <class R>
struct Matrix {
    using Value = typename R::Value;

    R ring;
    int n = 0;
    std::vector<Value> a; // row-major

    Matrix(R r, int size) : ring(std::move(r)), n(size) {
        a.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), ring.zero());
    }

    Value& at(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
    const Value& at(int i, int j) const { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }

    static Matrix identity(R r, int size) {
        Matrix m(std::move(r), size);
        for (int i = 0; i < size; ++i) m.at(i, i) = m.ring.one();
        return m;
    }

    Matrix mul(const Matrix& o) const {
        Matrix out(ring, n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const Value& aik = at(i, k);
                if (ring.is_zero(aik)) continue;
                for (int j = 0; j < n; ++j)
                    out.at(i, j) = ring.add(out.at(i, j), ring.mul(aik, o.at(k, j)));
            }
        return out;
    }

    bool equal(const Matrix& o) const {
        if (n != o.n) return false;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!ring.equal(a[i], o.a[i])) return false;
        return true;
    }
};

// Solves m·v = b over a field by Gauss-Jordan elimination with exact
// arithmetic; nullopt when m is singular.
template <class R>
std::optional<std::vector<typename R::Value>> field_solve(Matrix<R> m,
                                                          std::vector<typename R::Value> b) {
    static_assert(R::is_field, "field_solve requires a field ring");
    const R& ring = m.ring;
    const int n = m.n;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (!ring.is_zero(m.at(r, k))) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(pivot)]);
        }
        typename R::Value inv = ring.inv(m.at(k, k));
        for (int j = k; j < n; ++j) m.at(k, j) = ring.mul(m.at(k, j), inv);
        b[static_cast<std::size_t>(k)] = ring.mul(b[static_cast<std::size_t>(k)], inv);
        for (int i = 0; i < n; ++i) {
            if (i == k || ring.is_zero(m.at(i, k))) continue;
            typename R::Value f = m.at(i, k);
            for (int j = k; j < n; ++j)
                m.at(i, j) = ring.sub(m.at(i, j), ring.mul(f, m.at(k, j)));
            b[static_cast<std::size_t>(i)] =
                ring.sub(b[static_cast<std::size_t>(i)], ring.mul(f, b[static_cast<std::size_t>(k)]));
        }
    }
    return b;
}

template <class R>
int field_rank(Matrix<R> m) {
    static_assert(R::is_field, "field_rank requires a field ring");
    const R& ring = m.ring;
    const int n = m.n;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r)
            if (!ring.is_zero(m.at(r, col))) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < n; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        typename R::Value inv = ring.inv(m.at(rank, col));
        for (int j = col; j < n; ++j) m.at(rank, j) = ring.mul(m.at(rank, j), inv);
        for (int i = 0; i < n; ++i) {
            if (i == rank || ring.is_zero(m.at(i, col))) continue;
            typename R::Value f = m.at(i, col);
            for (int j = col; j < n; ++j)
                m.at(i, j) = ring.sub(m.at(i, j), ring.mul(f, m.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

// Solves m·v = b over the rationals using only integer arithmetic
// (fraction-free Gauss-Jordan with exact division by the previous pivot).
// Returns the solution iff it is integral; nullopt when m is singular or
// any coordinate is a proper fraction.
inline std::optional<std::vector<BigInt>> integer_solve(Matrix<IntRing> m, std::vector<BigInt> b) {
    const int n = m.n;
    BigInt prev = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (!m.at(r, k).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt; // singular
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(pivot)]);
        }
        const BigInt piv = m.at(k, k);
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            const BigInt f = m.at(i, k);
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                m.at(i, j) = (piv * m.at(i, j) - f * m.at(k, j)) / prev; // exact
            }
            b[static_cast<std::size_t>(i)] =
                (piv * b[static_cast<std::size_t>(i)] - f * b[static_cast<std::size_t>(k)]) / prev;
            m.at(i, k) = 0;
        }
        prev = piv;
    }
    // Diagonal system d_i·v_i = b_i; integral solution iff every d_i | b_i.
    std::vector<BigInt> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const BigInt& d = m.at(i, i);
        BigInt q = b[static_cast<std::size_t>(i)] / d;
        if (q * d != b[static_cast<std::size_t>(i)]) return std::nullopt; // fractional
        v.push_back(std::move(q));
    }
    return v;
}

} // namespace unitring

#endif
