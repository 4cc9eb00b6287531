// SPDX-License-Identifier: Apache-2.0
//
// zfbend - sum-rate bend-point analysis for zero-forcing multiuser MIMO
// Copyright (C) 2026 The zfbend authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace zfbend {

using Complex = std::complex<double>;

/// Thrown by lu_invert when elimination meets a pivot below the scale-aware
/// singularity threshold. Carries the offending elimination step.
class SingularMatrixError : public std::runtime_error {
  public:
    explicit SingularMatrixError(std::size_t pivot_index)
        : std::runtime_error("matrix is numerically singular at pivot " +
                             std::to_string(pivot_index)),
          pivot_index_(pivot_index) {}

    std::size_t pivot_index() const noexcept { return pivot_index_; }

  private:
    std::size_t pivot_index_;
};

/// Dense square complex matrix, row-major storage.
class ComplexMat {
  public:
    explicit ComplexMat(std::size_t dim) : dim_(dim), entries_(dim * dim) {
        if (dim == 0) throw std::invalid_argument("ComplexMat: dim must be >= 1");
    }

    static ComplexMat identity(std::size_t dim) {
        ComplexMat m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t dim() const noexcept { return dim_; }

    Complex& operator()(std::size_t row, std::size_t col) noexcept {
        return entries_[row * dim_ + col];
    }
    const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
        return entries_[row * dim_ + col];
    }

    std::span<Complex> entries() noexcept { return entries_; }
    std::span<const Complex> entries() const noexcept { return entries_; }

    friend bool operator==(const ComplexMat&, const ComplexMat&) = default;

  private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Standard complex matrix product a*b; dimensions must match.
inline ComplexMat mat_mul(const ComplexMat& a, const ComplexMat& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("mat_mul: dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
    const std::size_t n = a.dim();
    ComplexMat out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

/// Matrix inverse via LU decomposition with partial pivoting.
///
/// The singularity test is scale-aware: elimination step k fails when the
/// chosen pivot magnitude drops below 1e-12 times the largest magnitude the
/// input matrix had in column k.
inline ComplexMat lu_invert(const ComplexMat& m) {
    constexpr double kSingularRtol = 1e-12;
    const std::size_t n = m.dim();

    std::vector<double> col_scale(n, 0.0);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r)
            col_scale[c] = std::max(col_scale[c], std::abs(m(r, c)));

    ComplexMat lu = m;
    std::vector<std::size_t> swapped_with(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = k;
        double pivot_mag = std::abs(lu(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            const double mag = std::abs(lu(r, k));
            if (mag > pivot_mag) {
                pivot_mag = mag;
                pivot_row = r;
            }
        }
        if (pivot_mag == 0.0 || pivot_mag < kSingularRtol * col_scale[k])
            throw SingularMatrixError(k);
        swapped_with[k] = pivot_row;
        if (pivot_row != k)
            for (std::size_t c = 0; c < n; ++c) std::swap(lu(k, c), lu(pivot_row, c));
        const Complex pivot = lu(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const Complex factor = lu(r, k) / pivot;
            lu(r, k) = factor;
            for (std::size_t c = k + 1; c < n; ++c) lu(r, c) -= factor * lu(k, c);
        }
    }

    // Solve lu * x = P * e_j column by column.
    ComplexMat inv(n);
    std::vector<Complex> x(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(x.begin(), x.end(), Complex{});
        x[j] = 1.0;
        for (std::size_t k = 0; k < n; ++k)
            if (swapped_with[k] != k) std::swap(x[k], x[swapped_with[k]]);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0; k < i; ++k) x[i] -= lu(i, k) * x[k];
        for (std::size_t ii = n; ii-- > 0;) {
            for (std::size_t k = ii + 1; k < n; ++k) x[ii] -= lu(ii, k) * x[k];
            x[ii] /= lu(ii, ii);
        }
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = x[i];
    }
    return inv;
}

/// Squared Frobenius norm: sum of re^2 + im^2 over all entries.
///
/// Accumulates in ascending magnitude order, so the result is a function of
/// the entry multiset only, independent of storage order.
inline double frobenius_sq(const ComplexMat& m) {
    std::vector<double> sq;
    sq.reserve(m.entries().size());
    for (const Complex& e : m.entries()) sq.push_back(std::norm(e));
    std::sort(sq.begin(), sq.end());
    double sum = 0.0;
    for (double v : sq) sum += v;
    return sum;
}

inline bool all_finite(const ComplexMat& m) {
    for (const Complex& e : m.entries())
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    return true;
}

}  // namespace zfbend
