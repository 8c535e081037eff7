/**************************************************************************
 * matrix.hpp
 *
 * Copyright 2026 The mdscount Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/
#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "mds/error.hpp"
#include "mds/field.hpp"

namespace mds {

/// Dense row-major matrix over GF(q).
class MatrixGF {
public:
    MatrixGF(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    MatrixGF(Field field, std::initializer_list<std::initializer_list<Elem>> init)
        : field_(std::move(field)), rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            require(row.size() == cols_, ErrorKind::ShapeMismatch, "ragged matrix literal");
            for (Elem v : row) {
                require(v < field_->q(), ErrorKind::InvalidArgument, "entry outside the field");
                data_.push_back(v);
            }
        }
    }

    static MatrixGF identity(Field field, std::size_t n) {
        MatrixGF m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> data() const noexcept { return data_; }

    void append_row(std::span<const Elem> values) {
        require(values.size() == cols_, ErrorKind::ShapeMismatch, "row length mismatch");
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    MatrixGF transpose() const {
        MatrixGF t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend bool operator==(const MatrixGF& a, const MatrixGF& b) {
        return a.field_->same_as(*b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

inline MatrixGF operator*(const MatrixGF& a, const MatrixGF& b) {
    require(a.field()->same_as(*b.field()), ErrorKind::FieldMismatch, "matrix product across fields");
    require(a.cols() == b.rows(), ErrorKind::ShapeMismatch, "matrix product shape mismatch");
    const FieldSpec& f = *a.field();
    MatrixGF c(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Elem aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
        }
    return c;
}

struct RrefResult {
    MatrixGF matrix;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; zero rows are kept at the bottom.
inline RrefResult rref(MatrixGF m) {
    const FieldSpec& f = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t pr = lead;
        while (pr < m.rows() && m(pr, c) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != lead)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(lead, j));
        const Elem s = f.inv(m(lead, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(lead, j) = f.mul(m(lead, j), s);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead || m(r, c) == 0) continue;
            const Elem factor = m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(lead, j)));
        }
        pivots.push_back(c);
        ++lead;
    }
    return {std::move(m), lead, std::move(pivots)};
}

inline std::size_t rank(const MatrixGF& m) { return rref(m).rank; }

/// Determinant of a small square block held in a scratch buffer, by
/// elimination. `a` is destroyed.
inline Elem det_inplace(const FieldSpec& f, Elem* a, std::size_t n) {
    bool negate = false;
    Elem det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = c;
        while (pr < n && a[pr * n + c] == 0) ++pr;
        if (pr == n) return 0;
        if (pr != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(a[pr * n + j], a[c * n + j]);
            negate = !negate;
        }
        const Elem piv = a[c * n + c];
        det = f.mul(det, piv);
        const Elem pinv = f.inv(piv);
        for (std::size_t r = c + 1; r < n; ++r) {
            const Elem x = a[r * n + c];
            if (x == 0) continue;
            const Elem factor = f.mul(x, pinv);
            for (std::size_t j = c + 1; j < n; ++j) a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[c * n + j]));
        }
    }
    return negate ? f.neg(det) : det;
}

/// Closed forms for orders up to three, elimination above.
inline Elem small_det(const FieldSpec& f, Elem* a, std::size_t n) {
    switch (n) {
        case 0: return 1;
        case 1: return a[0];
        case 2: return f.sub(f.mul(a[0], a[3]), f.mul(a[1], a[2]));
        case 3: {
            const Elem t0 = f.mul(a[0], f.sub(f.mul(a[4], a[8]), f.mul(a[5], a[7])));
            const Elem t1 = f.mul(a[1], f.sub(f.mul(a[3], a[8]), f.mul(a[5], a[6])));
            const Elem t2 = f.mul(a[2], f.sub(f.mul(a[3], a[7]), f.mul(a[4], a[6])));
            return f.add(f.sub(t0, t1), t2);
        }
        default: return det_inplace(f, a, n);
    }
}

inline Elem determinant(const MatrixGF& m) {
    require(m.rows() == m.cols(), ErrorKind::ShapeMismatch, "determinant of a non-square matrix");
    std::vector<Elem> buf(m.data().begin(), m.data().end());
    return small_det(*m.field(), buf.data(), m.rows());
}

/// Basis (as rows) of the right null space {x : M x = 0}.
inline MatrixGF nullspace(const MatrixGF& m) {
    const FieldSpec& f = *m.field();
    auto [r, rk, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    MatrixGF basis(m.field(), 0, m.cols());
    std::vector<Elem> v(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < rk; ++i) v[pivots[i]] = f.neg(r(i, free));
        basis.append_row(v);
    }
    return basis;
}

/// Rows of `m` after RREF with zero rows dropped: a canonical basis of the row space.
inline MatrixGF row_space(const MatrixGF& m) {
    auto res = rref(m);
    MatrixGF out(m.field(), 0, m.cols());
    for (std::size_t i = 0; i < res.rank; ++i) out.append_row(res.matrix.row(i));
    return out;
}

inline MatrixGF stack(const MatrixGF& a, const MatrixGF& b) {
    require(a.cols() == b.cols(), ErrorKind::ShapeMismatch, "stacking matrices of different widths");
    MatrixGF out(a.field(), 0, a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) out.append_row(a.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i) out.append_row(b.row(i));
    return out;
}

/// Canonical basis of rowspace(a) + rowspace(b).
inline MatrixGF subspace_sum(const MatrixGF& a, const MatrixGF& b) { return row_space(stack(a, b)); }

/// Canonical basis of rowspace(a) ∩ rowspace(b); inputs need not be independent.
inline MatrixGF subspace_intersection(const MatrixGF& a, const MatrixGF& b) {
    const MatrixGF ra = row_space(a);
    const MatrixGF rb = row_space(b);
    MatrixGF out(a.field(), 0, a.cols());
    if (ra.rows() == 0 || rb.rows() == 0) return out;
    // x = s * A = t * B  <=>  [s | t] * [A; -B] = 0
    const FieldSpec& f = *a.field();
    MatrixGF sys(a.field(), ra.rows() + rb.rows(), a.cols());
    for (std::size_t i = 0; i < ra.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) sys(i, j) = ra(i, j);
    for (std::size_t i = 0; i < rb.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) sys(ra.rows() + i, j) = f.neg(rb(i, j));
    const MatrixGF coeffs = nullspace(sys.transpose());
    for (std::size_t s = 0; s < coeffs.rows(); ++s) {
        std::vector<Elem> x(a.cols(), 0);
        for (std::size_t i = 0; i < ra.rows(); ++i) {
            const Elem c = coeffs(s, i);
            if (c == 0) continue;
            for (std::size_t j = 0; j < a.cols(); ++j) x[j] = f.add(x[j], f.mul(c, ra(i, j)));
        }
        out.append_row(x);
    }
    return row_space(out);
}

/// True when rowspace(a) ⊆ rowspace(b).
inline bool subspace_contains(const MatrixGF& b, const MatrixGF& a) {
    return rank(stack(b, a)) == rank(b);
}

}  // namespace mds
