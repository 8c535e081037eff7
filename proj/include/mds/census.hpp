/**************************************************************************
 * census.hpp
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

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mds/bigint.hpp"
#include "mds/error.hpp"
#include "mds/field.hpp"
#include "mds/grassmannian.hpp"
#include "mds/matrix.hpp"
#include "mds/parallel.hpp"

namespace mds {

enum class CensusMethod { MatrixScan, GrassmannianFilter };

constexpr std::string_view to_string(CensusMethod m) noexcept {
    return m == CensusMethod::MatrixScan ? "scan" : "filter";
}

struct CensusResult {
    unsigned k = 0, n = 0;
    std::uint64_t q = 0;
    BigInt gamma;
    BigInt gamma_tilde;
    CensusMethod method = CensusMethod::MatrixScan;
    std::chrono::milliseconds elapsed{0};
    unsigned workers = 1;
};

/// γ / (q-1)^{n-1}; the quotient is the normalized n-arc count and must be exact.
inline BigInt arc_count_from_gamma(const BigInt& gamma, unsigned n, std::uint64_t q) {
    const BigInt d = big_pow(BigInt(q - 1), n - 1);
    require(gamma % d == 0, ErrorKind::DivisibilityViolation,
            "gamma = " + gamma.str() + " is not divisible by (q-1)^(n-1) = " + d.str());
    return gamma / d;
}

namespace detail {

inline void check_census_shape(unsigned k, unsigned n) {
    require(k >= 1 && k < n && n <= kMaxAmbient, ErrorKind::OutOfRange, "census needs 1 <= k < n <= 16");
}

/// Search over A ∈ F_q^{k×(n-k)} with [I_k | A] MDS, i.e. every square
/// submatrix of A nonsingular. Entries are filled row-major; each square
/// submatrix is tested as soon as its last entry is placed, smallest first.
class SuperregularScan {
public:
    SuperregularScan(const FieldSpec& f, unsigned rows, unsigned cols) : f_(f), rows_(rows), cols_(cols), checks_(rows * cols) {
        // Enumerate all square submatrices of order >= 2 and file each under
        // the position of its bottom-right entry.
        const unsigned maxs = std::min(rows, cols);
        for (unsigned s = 2; s <= maxs; ++s) {
            for (std::uint32_t rm = 0; rm < (1u << rows); ++rm) {
                if (static_cast<unsigned>(std::popcount(rm)) != s) continue;
                for (std::uint32_t cm = 0; cm < (1u << cols); ++cm) {
                    if (static_cast<unsigned>(std::popcount(cm)) != s) continue;
                    Minor mnr;
                    mnr.order = s;
                    for (unsigned r = 0; r < rows; ++r)
                        if ((rm >> r) & 1u)
                            for (unsigned c = 0; c < cols; ++c)
                                if ((cm >> c) & 1u) mnr.cells.push_back(r * cols + c);
                    const unsigned last_row = 31 - static_cast<unsigned>(std::countl_zero(rm));
                    const unsigned last_col = 31 - static_cast<unsigned>(std::countl_zero(cm));
                    checks_[last_row * cols + last_col].push_back(std::move(mnr));
                }
            }
        }
    }

    unsigned positions() const noexcept { return rows_ * cols_; }

    /// Number of completions of `a` whose first `prefix` entries are fixed.
    Counter count_from(std::vector<Elem>& a, unsigned prefix) const {
        for (unsigned pos = 0; pos < prefix; ++pos)
            if (a[pos] == 0 || !passes(a, pos)) return 0;
        return descend(a, prefix);
    }

private:
    struct Minor {
        unsigned order = 0;
        std::vector<unsigned> cells;
    };

    bool passes(const std::vector<Elem>& a, unsigned pos) const {
        Elem buf[kMaxAmbient * kMaxAmbient];
        for (const Minor& m : checks_[pos]) {
            for (std::size_t i = 0; i < m.cells.size(); ++i) buf[i] = a[m.cells[i]];
            if (small_det(f_, buf, m.order) == 0) return false;
        }
        return true;
    }

    Counter descend(std::vector<Elem>& a, unsigned pos) const {
        if (pos == positions()) return 1;
        Counter total = 0;
        const Elem q = f_.q();
        for (Elem v = 1; v < q; ++v) {
            a[pos] = v;
            if (passes(a, pos)) total += descend(a, pos + 1);
        }
        a[pos] = 0;
        return total;
    }

    const FieldSpec& f_;
    unsigned rows_, cols_;
    std::vector<std::vector<Minor>> checks_;
};

}  // namespace detail

/// γ(k,n) by scanning the big cell: matrices [I_k | A] with all k×k minors
/// nonzero. Every MDS code has p_{(1..k)} ≠ 0, so the cell holds them all.
inline CensusResult count_mds_matrix_scan(unsigned k, unsigned n, const Field& field, const ExecPolicy& policy = {}) {
    detail::check_census_shape(k, n);
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t q = field->q();
    check_budget(big_pow(BigInt(q), k * (n - k)), policy, "matrix scan for (" + std::to_string(k) + "," + std::to_string(n) + ")");
    const detail::SuperregularScan scan(*field, k, n - k);
    const unsigned positions = scan.positions();
    // Fix the first t entries per chunk, t chosen so there are about
    // 64 chunks per worker.
    unsigned t = 0;
    std::uint64_t chunks = 1;
    const std::uint64_t wanted = chunks_for(policy.workers);
    while (t < positions && chunks < wanted && q > 2) {
        chunks *= (q - 1);
        ++t;
    }
    const Counter total = parallel_reduce<Counter>(chunks, policy.workers, 0, [&](std::size_t c) {
        std::vector<Elem> a(positions, 0);
        std::uint64_t rest = c;
        for (unsigned i = t; i-- > 0;) {
            a[i] = static_cast<Elem>(1 + rest % (q - 1));
            rest /= (q - 1);
        }
        return scan.count_from(a, t);
    }, [](Counter x, Counter y) { return x + y; });
    CensusResult r;
    r.k = k;
    r.n = n;
    r.q = q;
    r.gamma = to_big(total);
    r.gamma_tilde = arc_count_from_gamma(r.gamma, n, q);
    r.method = CensusMethod::MatrixScan;
    r.workers = policy.workers;
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return r;
}

/// γ(k,n) by walking all of G(k,n) and keeping points whose Plücker
/// coordinates are all nonzero.
inline CensusResult count_mds_grassmannian_filter(unsigned k, unsigned n, const Field& field, const ExecPolicy& policy = {}) {
    detail::check_census_shape(k, n);
    const auto start = std::chrono::steady_clock::now();
    const GrassmannSpace space(field, k, n, policy);
    const IndexTable& t = index_table(k, n);
    const FieldSpec& f = *field;
    const RangeSplit split(space.size(), chunks_for(policy.workers));
    const Counter total = parallel_reduce<Counter>(split.chunks, policy.workers, 0, [&](std::size_t c) {
        Counter cnt = 0;
        space.for_range(split.begin(c), split.end(c), [&](std::span<const Elem> rows) {
            for (std::uint32_t mask : t.masks())
                if (minor_of(f, rows, k, n, mask) == 0) return;
            ++cnt;
        });
        return cnt;
    }, [](Counter x, Counter y) { return x + y; });
    CensusResult r;
    r.k = k;
    r.n = n;
    r.q = field->q();
    r.gamma = to_big(total);
    r.gamma_tilde = arc_count_from_gamma(r.gamma, n, r.q);
    r.method = CensusMethod::GrassmannianFilter;
    r.workers = policy.workers;
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return r;
}

inline CensusResult count_mds(unsigned k, unsigned n, const Field& field, CensusMethod method, const ExecPolicy& policy = {}) {
    return method == CensusMethod::MatrixScan ? count_mds_matrix_scan(k, n, field, policy)
                                              : count_mds_grassmannian_filter(k, n, field, policy);
}

/// Normalized n-arc count γ̃(k,n) = γ(k,n) / (q-1)^{n-1}.
inline BigInt arc_count(unsigned k, unsigned n, const Field& field, const ExecPolicy& policy = {}) {
    return count_mds_matrix_scan(k, n, field, policy).gamma_tilde;
}

/// γ(1,n) = (q-1)^{n-1}.
inline BigInt gamma_k1_closed_form(unsigned n, std::uint64_t q) { return big_pow(BigInt(q - 1), n - 1); }

/// γ(2,n) = (q-1)^{n-1} (q-2)(q-3)...(q-n+2): the n-2 columns (a, b) of A
/// need a, b ≠ 0 and pairwise distinct slopes b/a.
inline BigInt gamma_k2_closed_form(unsigned n, std::uint64_t q) {
    BigInt r = big_pow(BigInt(q - 1), n - 1);
    for (unsigned i = 2; i + 2 <= n; ++i) {
        if (q <= i) return 0;
        r *= (q - i);
    }
    return r;
}

}  // namespace mds
