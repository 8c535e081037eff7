/**************************************************************************
 * grassmann_code.hpp
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

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "mds/bigint.hpp"
#include "mds/error.hpp"
#include "mds/exterior.hpp"
#include "mds/form_weight.hpp"
#include "mds/grassmannian.hpp"
#include "mds/matrix.hpp"
#include "mds/parallel.hpp"
#include "mds/sections.hpp"

namespace mds {

/// Reproducible uniform draw in [0, bound) from a 64-bit Mersenne twister
/// by rejection; unlike std::uniform_int_distribution the sequence is the
/// same on every standard library.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

inline DualForm random_form(const Field& field, unsigned k, unsigned n, std::mt19937_64& rng) {
    DualForm w(field, k, n);
    for (Elem& c : w.coeffs()) c = static_cast<Elem>(draw_below(rng, field->q()));
    return w;
}

inline DualForm random_nonzero_form(const Field& field, unsigned k, unsigned n, std::mt19937_64& rng) {
    for (;;) {
        DualForm w = random_form(field, k, n, rng);
        if (!w.is_zero()) return w;
    }
}

/// θ_1 ∧ ... ∧ θ_k for random linearly independent θ_i ∈ V*.
inline DualForm random_decomposable_form(const Field& field, unsigned k, unsigned n, std::mt19937_64& rng) {
    for (;;) {
        DualForm acc(field, 0, n);
        acc.coeffs()[0] = 1;
        for (unsigned i = 0; i < k; ++i) acc = wedge(acc, random_form(field, 1, n, rng));
        if (!acc.is_zero()) return acc;
    }
}

/// ω_r = e^1∧e^2 + e^3∧e^4 + ... + e^{2r-1}∧e^{2r}.
inline DualForm nogin_form(const Field& field, unsigned n, unsigned r) {
    require(r >= 1 && 2 * r <= n, ErrorKind::OutOfRange, "need 1 <= r <= n/2");
    DualForm w(field, 2, n);
    for (unsigned i = 0; i < r; ++i) w += DualForm::basis(field, n, {2 * i + 1, 2 * i + 2});
    return w;
}

/// The Grassmann code C(k,n): length |G(k,n)|, dimension C(n,k); codewords
/// are k-forms evaluated at the Grassmann points.
class GrassmannCode {
public:
    GrassmannCode(Field field, unsigned k, unsigned n, const ExecPolicy& policy = {})
        : table_(std::make_shared<const PluckerTable>(std::move(field), k, n, policy)) {}

    const Field& field() const noexcept { return table_->field(); }
    unsigned k() const noexcept { return table_->k(); }
    unsigned n() const noexcept { return table_->n(); }
    std::uint64_t length() const noexcept { return table_->size(); }
    std::size_t dimension() const noexcept { return table_->width(); }
    const PluckerTable& table() const noexcept { return *table_; }

    /// k̃ x ñ generator: entry (i, j) is the i-th Plücker coordinate of the j-th point.
    MatrixGF generator() const {
        MatrixGF g(field(), dimension(), static_cast<std::size_t>(length()));
        for (std::uint64_t j = 0; j < length(); ++j) {
            const auto col = table_->point(j);
            for (std::size_t i = 0; i < dimension(); ++i) g(i, static_cast<std::size_t>(j)) = col[i];
        }
        return g;
    }

private:
    std::shared_ptr<const PluckerTable> table_;
};

inline GrassmannCode build_code(unsigned k, unsigned n, const Field& field, const ExecPolicy& policy = {}) {
    GrassmannCode code(field, k, n, policy);
    require(rank(code.generator()) == code.dimension(), ErrorKind::RankDeficient,
            "generator matrix does not have full row rank");
    return code;
}

inline std::uint64_t codeword_weight(const GrassmannCode& code, const DualForm& omega, unsigned workers = 1) {
    require(omega.k() == code.k() && omega.n() == code.n(), ErrorKind::ShapeMismatch, "form does not match the code");
    if (omega.is_zero()) return 0;
    return form_weight(code.table(), omega, workers);
}

struct SpectrumMode {
    enum Kind { Exhaustive, Sample } kind = Exhaustive;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;

    static SpectrumMode exhaustive() { return {}; }
    static SpectrumMode sample(std::uint64_t count, std::uint64_t seed) { return {Sample, count, seed}; }
};

using WeightSpectrum = std::map<std::uint64_t, std::uint64_t>;

/// Histogram weight -> multiplicity over the nonzero codewords (exhaustive)
/// or over `count` uniform nonzero draws (sample).
inline WeightSpectrum weight_spectrum(const GrassmannCode& code, SpectrumMode mode, const ExecPolicy& policy = {}) {
    const FieldSpec& f = *code.field();
    const std::size_t dim = code.dimension();
    auto merge = [](WeightSpectrum a, WeightSpectrum b) {
        for (const auto& [w, m] : b) a[w] += m;
        return a;
    };
    if (mode.kind == SpectrumMode::Sample) {
        check_budget(BigInt(mode.count) * code.length() * dim, policy, "sampled spectrum");
        std::mt19937_64 rng(mode.seed);
        std::vector<DualForm> draws;
        draws.reserve(mode.count);
        for (std::uint64_t i = 0; i < mode.count; ++i) draws.push_back(random_nonzero_form(code.field(), code.k(), code.n(), rng));
        const RangeSplit split(mode.count, chunks_for(policy.workers));
        return parallel_reduce<WeightSpectrum>(split.chunks, policy.workers, {}, [&](std::size_t c) {
            WeightSpectrum h;
            for (std::uint64_t i = split.begin(c); i < split.end(c); ++i) ++h[form_weight(code.table(), draws[i])];
            return h;
        }, merge);
    }
    const BigInt words = big_pow(BigInt(f.q()), static_cast<unsigned>(dim));
    check_budget(words * code.length(), policy, "exhaustive spectrum");
    const std::uint64_t total = static_cast<std::uint64_t>(words);
    const RangeSplit split(total - 1, chunks_for(policy.workers));
    return parallel_reduce<WeightSpectrum>(split.chunks, policy.workers, {}, [&](std::size_t c) {
        WeightSpectrum h;
        DualForm w(code.field(), code.k(), code.n());
        for (std::uint64_t idx = split.begin(c) + 1; idx < split.end(c) + 1; ++idx) {
            std::uint64_t x = idx;
            for (std::size_t i = 0; i < dim; ++i) {
                w.coeffs()[i] = static_cast<Elem>(x % f.q());
                x /= f.q();
            }
            ++h[form_weight(code.table(), w)];
        }
        return h;
    }, merge);
}

enum class HigherWeightMode { Exhaustive, Structured };

/// Minimum ||L|| over codimension-r sections. Exhaustive: every r-dimensional
/// subspace of ∧^k V*. Structured: coordinate sections whose annihilator
/// sits in some π_α or π^γ, giving an upper-bound certificate.
inline std::uint64_t higher_weight_search(const GrassmannCode& code, unsigned r, HigherWeightMode mode,
                                          const ExecPolicy& policy = {}) {
    const std::size_t dim = code.dimension();
    require(r >= 1 && r <= dim, ErrorKind::OutOfRange, "need 1 <= r <= C(n,k)");
    std::uint64_t best = UINT64_MAX;
    if (mode == HigherWeightMode::Exhaustive) {
        const GrassmannSpace subspaces(code.field(), r, static_cast<unsigned>(dim), policy);
        check_budget(BigInt(subspaces.size()) * code.length() * r, policy, "exhaustive higher weight");
        const RangeSplit split(subspaces.size(), chunks_for(policy.workers));
        return parallel_reduce<std::uint64_t>(split.chunks, policy.workers, UINT64_MAX, [&](std::size_t c) {
            std::uint64_t local = UINT64_MAX;
            subspaces.for_range(split.begin(c), split.end(c), [&](std::span<const Elem> rows) {
                std::vector<DualForm> basis;
                for (unsigned i = 0; i < r; ++i)
                    basis.emplace_back(code.field(), code.k(), code.n(), std::vector<Elem>(rows.begin() + i * dim, rows.begin() + (i + 1) * dim));
                const LinearSection s(code.field(), code.k(), code.n(), std::move(basis));
                local = std::min(local, section_norm(code.table(), s, NormMethod::PointScan));
            });
            return local;
        }, [](std::uint64_t a, std::uint64_t b) { return std::min(a, b); });
    }
    // Structured: Ann(L) spanned by r coordinate forms e^I sharing a
    // (k-1)-core K (inside π_α) or lying in a (k+1)-hull (inside π^γ).
    const unsigned k = code.k(), n = code.n();
    const IndexTable& t = index_table(k, n);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    auto evaluate = [&](const std::vector<std::uint32_t>& masks) {
        std::vector<std::size_t> ranks;
        for (auto m : masks) ranks.push_back(static_cast<std::size_t>(t.rank_of(m)));
        best = std::min(best, section_norm(code.table(), LinearSection::coordinate(code.field(), k, n, ranks), NormMethod::PointScan));
    };
    bool found = false;
    if (k >= 1 && r <= n - k + 1) {
        const std::uint32_t core = (std::uint32_t{1} << (k - 1)) - 1;
        std::vector<std::uint32_t> masks;
        for (unsigned j = k - 1; j < n && masks.size() < r; ++j) masks.push_back(core | (std::uint32_t{1} << j));
        evaluate(masks);
        found = true;
    }
    if (r <= k + 1 && k + 1 <= n) {
        const std::uint32_t hull = (std::uint32_t{1} << (k + 1)) - 1;
        std::vector<std::uint32_t> masks;
        for (unsigned drop = 0; drop <= k && masks.size() < r; ++drop) masks.push_back(hull & full & ~(std::uint32_t{1} << drop));
        evaluate(masks);
        found = true;
    }
    require(found, ErrorKind::OutOfRange, "no linear subspace of G of that dimension (r > max(n-k+1, k+1))");
    return best;
}

}  // namespace mds
