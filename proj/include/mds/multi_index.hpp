/**************************************************************************
 * multi_index.hpp
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

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "mds/error.hpp"

namespace mds {

inline constexpr unsigned kMaxAmbient = 16;

/// A strictly increasing index tuple 1 <= i_1 < ... < i_k <= n, stored as a
/// bitmask (bit i-1 set for index i).
class MultiIndex {
public:
    MultiIndex() = default;

    MultiIndex(std::uint32_t mask, unsigned n) : mask_(mask), n_(n) {
        require(n <= kMaxAmbient, ErrorKind::BadIndex, "ambient dimension above 16");
        require(n == 32 || (mask >> n) == 0, ErrorKind::BadIndex, "index exceeds ambient dimension");
    }

    /// From 1-based indices; they must be strictly increasing.
    static MultiIndex from_indices(const std::vector<unsigned>& idx, unsigned n) {
        std::uint32_t mask = 0;
        unsigned prev = 0;
        for (unsigned i : idx) {
            require(i >= 1 && i <= n, ErrorKind::BadIndex, "index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
            require(i > prev, ErrorKind::BadIndex, "indices must be strictly increasing");
            prev = i;
            mask |= std::uint32_t{1} << (i - 1);
        }
        return MultiIndex(mask, n);
    }

    std::uint32_t mask() const noexcept { return mask_; }
    unsigned n() const noexcept { return n_; }
    unsigned k() const noexcept { return static_cast<unsigned>(std::popcount(mask_)); }
    bool contains(unsigned i) const noexcept { return (mask_ >> (i - 1)) & 1u; }

    /// 1-based indices in increasing order.
    std::vector<unsigned> indices() const {
        std::vector<unsigned> out;
        for (unsigned i = 0; i < n_; ++i)
            if ((mask_ >> i) & 1u) out.push_back(i + 1);
        return out;
    }

    std::string to_string() const {
        std::string s = "(";
        bool first = true;
        for (unsigned i : indices()) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
        return s + ")";
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) noexcept { return a.mask_ == b.mask_ && a.n_ == b.n_; }

    /// Lexicographic order on the index tuples.
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) noexcept {
        const auto ia = a.indices();
        const auto ib = b.indices();
        return ia <=> ib;
    }

private:
    std::uint32_t mask_ = 0;
    unsigned n_ = 0;
};

/// Sign of e_I ∧ e_J relative to e_{I∪J}: (-1)^{#{(i,j) : i∈I, j∈J, i>j}}.
/// Returns 0 when I and J overlap.
inline int wedge_sign(std::uint32_t i_mask, std::uint32_t j_mask) noexcept {
    if (i_mask & j_mask) return 0;
    unsigned inversions = 0;
    for (std::uint32_t j = j_mask; j != 0; j &= j - 1) {
        const unsigned bit = static_cast<unsigned>(std::countr_zero(j));
        const std::uint32_t above = bit >= 31 ? 0u : (~std::uint32_t{0} << (bit + 1));
        inversions += static_cast<unsigned>(std::popcount(i_mask & above));
    }
    return (inversions & 1u) ? -1 : 1;
}

/// I_{k,n} in lexicographic order together with the inverse rank map.
class IndexTable {
public:
    IndexTable(unsigned k, unsigned n) : k_(k), n_(n), rank_(std::size_t{1} << n, -1) {
        require(n <= kMaxAmbient, ErrorKind::BadIndex, "ambient dimension above 16");
        require(k <= n, ErrorKind::BadIndex, "degree above ambient dimension");
        std::vector<unsigned> cur;
        build(0, cur);
        for (std::size_t r = 0; r < masks_.size(); ++r) rank_[masks_[r]] = static_cast<std::int32_t>(r);
    }

    unsigned k() const noexcept { return k_; }
    unsigned n() const noexcept { return n_; }
    std::size_t size() const noexcept { return masks_.size(); }
    std::uint32_t mask(std::size_t r) const noexcept { return masks_[r]; }
    MultiIndex at(std::size_t r) const { return MultiIndex(masks_[r], n_); }
    const std::vector<std::uint32_t>& masks() const noexcept { return masks_; }

    /// Lexicographic rank, or -1 when the mask is not a k-subset.
    std::int32_t rank_of(std::uint32_t mask) const noexcept { return mask < rank_.size() ? rank_[mask] : -1; }

    std::size_t rank_of(const MultiIndex& idx) const {
        require(idx.n() == n_ && idx.k() == k_, ErrorKind::BadIndex, "multi-index " + idx.to_string() + " has wrong shape");
        return static_cast<std::size_t>(rank_[idx.mask()]);
    }

private:
    void build(unsigned start, std::vector<unsigned>& cur) {
        if (cur.size() == k_) {
            std::uint32_t m = 0;
            for (unsigned i : cur) m |= std::uint32_t{1} << i;
            masks_.push_back(m);
            return;
        }
        for (unsigned i = start; i + (k_ - cur.size()) <= n_; ++i) {
            cur.push_back(i);
            build(i + 1, cur);
            cur.pop_back();
        }
    }

    unsigned k_;
    unsigned n_;
    std::vector<std::uint32_t> masks_;
    std::vector<std::int32_t> rank_;
};

/// Shared, lazily built tables; safe to call from worker threads.
inline const IndexTable& index_table(unsigned k, unsigned n) {
    static std::mutex mutex;
    static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<IndexTable>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{k, n}];
    if (!slot) slot = std::make_unique<IndexTable>(k, n);
    return *slot;
}

}  // namespace mds
