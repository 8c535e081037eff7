/**************************************************************************
 * grassmannian.hpp
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
#include <cstdint>
#include <span>
#include <vector>

#include "mds/bigint.hpp"
#include "mds/error.hpp"
#include "mds/field.hpp"
#include "mds/matrix.hpp"
#include "mds/multi_index.hpp"
#include "mds/parallel.hpp"

namespace mds {

/// Number of k-subspaces of GF(q)^n.
inline BigInt gaussian_binomial(unsigned k, unsigned n, std::uint64_t q) {
    require(k <= n, ErrorKind::OutOfRange, "gaussian_binomial needs k <= n");
    BigInt num = 1, den = 1;
    const BigInt bq = q;
    for (unsigned i = 0; i < k; ++i) {
        num *= big_pow(bq, n - i) - 1;
        den *= big_pow(bq, i + 1) - 1;
    }
    return num / den;
}

/// |GL(m, F_q)| = q^{m(m-1)/2} (q^m - 1) ... (q - 1).
inline BigInt gl_order(unsigned m, std::uint64_t q) {
    BigInt r = big_pow(BigInt(q), m * (m - 1) / 2);
    for (unsigned i = 1; i <= m; ++i) r *= big_pow(BigInt(q), i) - 1;
    return r;
}

/// k x k minor of a k x n row-major block on the columns of `cols`.
inline Elem minor_of(const FieldSpec& f, std::span<const Elem> rows, unsigned k, unsigned n, std::uint32_t cols) {
    Elem buf[kMaxAmbient * kMaxAmbient];
    unsigned c = 0;
    for (std::uint32_t m = cols; m != 0; m &= m - 1, ++c) {
        const unsigned col = static_cast<unsigned>(std::countr_zero(m));
        for (unsigned r = 0; r < k; ++r) buf[r * k + c] = rows[r * n + col];
    }
    return small_det(f, buf, k);
}

inline Elem minor(const MatrixGF& m, const MultiIndex& cols) {
    require(cols.n() == m.cols() && cols.k() == m.rows(), ErrorKind::BadIndex,
            "column set " + cols.to_string() + " does not fit a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    require(m.rows() <= kMaxAmbient, ErrorKind::BadIndex, "minor order above 16");
    return minor_of(*m.field(), m.data(), static_cast<unsigned>(m.rows()), static_cast<unsigned>(m.cols()), cols.mask());
}

/// Canonical representative of a k-subspace: its reduced row echelon basis.
class GrassmannPoint {
public:
    static GrassmannPoint from_basis(const MatrixGF& basis) {
        auto res = rref(basis);
        require(res.rank == basis.rows(), ErrorKind::RankDeficient,
                "basis of rank " + std::to_string(res.rank) + " for a " + std::to_string(basis.rows()) + "-space");
        std::uint32_t mask = 0;
        for (auto c : res.pivots) mask |= std::uint32_t{1} << c;
        return GrassmannPoint(std::move(res.matrix), MultiIndex(mask, static_cast<unsigned>(basis.cols())));
    }

    const MatrixGF& matrix() const noexcept { return rref_; }
    const MultiIndex& pivots() const noexcept { return pivots_; }
    unsigned k() const noexcept { return static_cast<unsigned>(rref_.rows()); }
    unsigned n() const noexcept { return static_cast<unsigned>(rref_.cols()); }

    friend bool operator==(const GrassmannPoint& a, const GrassmannPoint& b) { return a.rref_ == b.rref_; }

private:
    friend class GrassmannSpace;
    GrassmannPoint(MatrixGF m, MultiIndex piv) : rref_(std::move(m)), pivots_(piv) {}

    MatrixGF rref_;
    MultiIndex pivots_;
};

/// G(k,n) over GF(q), enumerated cell by cell. Pivot sets run in
/// lexicographic order; inside a cell the free entries (row-major) run as an
/// odometer whose last position turns fastest.
class GrassmannSpace {
public:
    GrassmannSpace(Field field, unsigned k, unsigned n, const ExecPolicy& policy = {})
        : field_(std::move(field)), k_(k), n_(n) {
        require(k <= n && n <= kMaxAmbient, ErrorKind::OutOfRange, "need 0 <= k <= n <= 16");
        check_budget(gaussian_binomial(k, n, field_->q()), policy, "enumerating G(" + std::to_string(k) + "," + std::to_string(n) + ")");
        const IndexTable& table = index_table(k, n);
        std::uint64_t offset = 0;
        for (std::uint32_t mask : table.masks()) {
            Cell cell;
            cell.pivots = mask;
            unsigned r = 0;
            for (unsigned c = 0; c < n; ++c) {
                if ((mask >> c) & 1u) {
                    cell.pivot_col.push_back(c);
                    ++r;
                } else {
                    // rows whose pivot lies left of column c
                    for (unsigned row = 0; row < r; ++row) cell.free.push_back(row * n + c);
                }
            }
            std::sort(cell.free.begin(), cell.free.end());
            cell.offset = offset;
            std::uint64_t count = 1;
            for (std::size_t i = 0; i < cell.free.size(); ++i) count *= field_->q();
            cell.count = count;
            offset += count;
            cells_.push_back(std::move(cell));
        }
        size_ = offset;
    }

    const Field& field() const noexcept { return field_; }
    unsigned k() const noexcept { return k_; }
    unsigned n() const noexcept { return n_; }
    std::uint64_t size() const noexcept { return size_; }

    GrassmannPoint point(std::uint64_t index) const {
        require(index < size_, ErrorKind::OutOfRange, "point index out of range");
        MatrixGF m(field_, k_, n_);
        std::vector<Elem> rows(std::size_t(k_) * n_);
        fill(index, rows);
        for (unsigned r = 0; r < k_; ++r)
            for (unsigned c = 0; c < n_; ++c) m(r, c) = rows[r * n_ + c];
        return GrassmannPoint(std::move(m), MultiIndex(cell_of(index).pivots, n_));
    }

    /// Calls fn(rows) for every point with index in [begin, end); `rows` is
    /// the k x n RREF matrix, row-major, valid only during the call.
    template <class Fn>
    void for_range(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
        if (begin >= end) return;
        std::vector<Elem> rows(std::size_t(k_) * n_);
        std::vector<Elem> digits;
        std::uint64_t idx = begin;
        while (idx < end) {
            const std::size_t ci = cell_index(idx);
            const Cell& cell = cells_[ci];
            fill(idx, rows);
            const std::size_t nf = cell.free.size();
            digits.assign(nf, 0);
            std::uint64_t local = idx - cell.offset;
            for (std::size_t i = nf; i-- > 0;) {
                digits[i] = static_cast<Elem>(local % field_->q());
                local /= field_->q();
            }
            const std::uint64_t stop = std::min(end, cell.offset + cell.count);
            for (;;) {
                fn(std::span<const Elem>(rows));
                if (++idx >= stop) break;
                for (std::size_t i = nf; i-- > 0;) {
                    if (++digits[i] < field_->q()) {
                        rows[cell.free[i]] = digits[i];
                        break;
                    }
                    digits[i] = 0;
                    rows[cell.free[i]] = 0;
                }
            }
        }
    }

    template <class Fn>
    void for_each(Fn&& fn) const { for_range(0, size_, std::forward<Fn>(fn)); }

    std::vector<GrassmannPoint> points() const {
        std::vector<GrassmannPoint> out;
        out.reserve(size_);
        for (std::uint64_t i = 0; i < size_; ++i) out.push_back(point(i));
        return out;
    }

private:
    struct Cell {
        std::uint32_t pivots = 0;
        std::vector<unsigned> pivot_col;
        std::vector<unsigned> free;  // flat positions row * n + col
        std::uint64_t offset = 0;
        std::uint64_t count = 0;
    };

    std::size_t cell_index(std::uint64_t idx) const {
        std::size_t lo = 0, hi = cells_.size();
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            if (cells_[mid].offset <= idx) lo = mid; else hi = mid;
        }
        return lo;
    }

    const Cell& cell_of(std::uint64_t idx) const { return cells_[cell_index(idx)]; }

    void fill(std::uint64_t idx, std::span<Elem> rows) const {
        const Cell& cell = cell_of(idx);
        std::fill(rows.begin(), rows.end(), 0);
        for (unsigned r = 0; r < k_; ++r) rows[r * n_ + cell.pivot_col[r]] = 1;
        std::uint64_t local = idx - cell.offset;
        for (std::size_t i = cell.free.size(); i-- > 0;) {
            rows[cell.free[i]] = static_cast<Elem>(local % field_->q());
            local /= field_->q();
        }
    }

    Field field_;
    unsigned k_;
    unsigned n_;
    std::vector<Cell> cells_;
    std::uint64_t size_ = 0;
};

/// Plücker vectors of every point of G(k,n), one row of N = C(n,k)
/// coordinates per point, in enumeration order.
class PluckerTable {
public:
    PluckerTable(Field field, unsigned k, unsigned n, const ExecPolicy& policy = {})
        : space_(std::move(field), k, n, policy), width_(index_table(k, n).size()) {
        check_budget(BigInt(space_.size()) * width_, policy, "tabulating Plücker coordinates");
        coords_.resize(space_.size() * width_);
        const IndexTable& table = index_table(k, n);
        const FieldSpec& f = *space_.field();
        const RangeSplit split(space_.size(), chunks_for(policy.workers));
        parallel_reduce<int>(split.chunks, policy.workers, 0, [&](std::size_t c) {
            std::uint64_t idx = split.begin(c);
            space_.for_range(split.begin(c), split.end(c), [&](std::span<const Elem> rows) {
                Elem* out = coords_.data() + idx * width_;
                for (std::size_t i = 0; i < width_; ++i) out[i] = minor_of(f, rows, k, n, table.mask(i));
                ++idx;
            });
            return 0;
        }, [](int a, int) { return a; });
    }

    const GrassmannSpace& space() const noexcept { return space_; }
    const Field& field() const noexcept { return space_.field(); }
    unsigned k() const noexcept { return space_.k(); }
    unsigned n() const noexcept { return space_.n(); }
    std::uint64_t size() const noexcept { return space_.size(); }
    std::size_t width() const noexcept { return width_; }
    std::span<const Elem> point(std::uint64_t i) const { return {coords_.data() + i * width_, width_}; }

private:
    GrassmannSpace space_;
    std::size_t width_;
    std::vector<Elem> coords_;
};

}  // namespace mds
