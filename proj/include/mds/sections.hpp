/**************************************************************************
 * sections.hpp
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
#include <cstdint>
#include <map>
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

namespace mds {

/// Codimension-r linear subspace L of P(∧^k V), held as a basis of Ann(L).
class LinearSection {
public:
    LinearSection(Field field, unsigned k, unsigned n, std::vector<DualForm> ann_basis)
        : field_(std::move(field)), k_(k), n_(n), ann_(std::move(ann_basis)) {
        MatrixGF m(field_, 0, index_table(k, n).size());
        for (const DualForm& w : ann_) {
            require(w.k() == k && w.n() == n, ErrorKind::ShapeMismatch, "annihilator form of wrong shape");
            require(w.field()->same_as(*field_), ErrorKind::FieldMismatch, "annihilator form over another field");
            m.append_row(w.coeffs());
        }
        require(rank(m) == ann_.size(), ErrorKind::RankDeficient, "annihilator basis is linearly dependent");
    }

    /// Section where the Plücker coordinates with the given lexicographic
    /// ranks vanish: Ann(L) = span{e^I : I in the subset}.
    static LinearSection coordinate(const Field& field, unsigned k, unsigned n, const std::vector<std::size_t>& ranks) {
        std::vector<DualForm> basis;
        for (std::size_t r : ranks) {
            require(r < index_table(k, n).size(), ErrorKind::BadIndex, "coordinate rank out of range");
            DualForm e(field, k, n);
            e.coeffs()[r] = 1;
            basis.push_back(std::move(e));
        }
        return LinearSection(field, k, n, std::move(basis));
    }

    static LinearSection coordinate_mask(const Field& field, unsigned k, unsigned n, std::uint64_t subset) {
        std::vector<std::size_t> ranks;
        for (std::uint64_t s = subset; s != 0; s &= s - 1) ranks.push_back(static_cast<std::size_t>(std::countr_zero(s)));
        return coordinate(field, k, n, ranks);
    }

    const Field& field() const noexcept { return field_; }
    unsigned k() const noexcept { return k_; }
    unsigned n() const noexcept { return n_; }
    std::size_t codim() const noexcept { return ann_.size(); }
    const std::vector<DualForm>& ann_basis() const noexcept { return ann_; }

private:
    Field field_;
    unsigned k_, n_;
    std::vector<DualForm> ann_;
};

/// Calls fn(coeffs) once per projective point of F_q^dim: vectors whose
/// first nonzero entry is 1, in odometer order.
template <class Fn>
void for_each_projective_point(std::uint64_t q, unsigned dim, Fn&& fn) {
    std::vector<Elem> v(dim, 0);
    for (unsigned lead = 0; lead < dim; ++lead) {
        std::fill(v.begin(), v.end(), 0);
        v[lead] = 1;
        for (;;) {
            fn(std::span<const Elem>(v));
            bool advanced = false;
            for (unsigned i = dim; i > lead + 1 && !advanced;) {
                --i;
                if (++v[i] < q) advanced = true;
                else v[i] = 0;
            }
            if (!advanced) break;
        }
    }
}

/// Linear combination Σ c_i rows_i.
template <class Tag>
ExteriorElement<Tag> combine(const std::vector<ExteriorElement<Tag>>& basis, std::span<const Elem> c) {
    ExteriorElement<Tag> out(basis.front().field(), basis.front().k(), basis.front().n());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (c[i] != 0) out += basis[i].scaled(c[i]);
    return out;
}

enum class NormMethod { PointScan, AnnihilatorSum };

/// ||L|| = |G_k(V) \ L| computed by either route.
inline std::uint64_t section_norm(const PluckerTable& table, const LinearSection& section, NormMethod method,
                                  unsigned workers = 1) {
    require(section.k() == table.k() && section.n() == table.n(), ErrorKind::ShapeMismatch, "section does not match the table");
    const FieldSpec& f = *table.field();
    const auto& ann = section.ann_basis();
    if (ann.empty()) return 0;
    if (method == NormMethod::PointScan) {
        const RangeSplit split(table.size(), workers > 1 ? chunks_for(workers) : 1);
        return parallel_reduce<std::uint64_t>(split.chunks, workers, 0, [&](std::size_t c) {
            std::uint64_t outside = 0;
            for (std::uint64_t i = split.begin(c); i < split.end(c); ++i) {
                const auto p = table.point(i);
                for (const DualForm& w : ann)
                    if (dot(f, w.coeffs(), p) != 0) {
                        ++outside;
                        break;
                    }
            }
            return outside;
        }, [](std::uint64_t a, std::uint64_t b) { return a + b; });
    }
    // ||L|| = q^{-(r-1)} Σ_{[ω] ∈ Ann(L)} ||ω||
    BigInt sum = 0;
    for_each_projective_point(f.q(), static_cast<unsigned>(ann.size()), [&](std::span<const Elem> c) {
        sum += form_weight(table, combine(ann, c), workers);
    });
    const BigInt d = big_pow(BigInt(f.q()), static_cast<unsigned>(ann.size() - 1));
    require(sum % d == 0, ErrorKind::ExactnessViolation, "annihilator weight sum " + sum.str() + " not divisible by " + d.str());
    return static_cast<std::uint64_t>(sum / d);
}

inline std::uint64_t section_norm(const LinearSection& section, NormMethod method, const ExecPolicy& policy = {}) {
    const PluckerTable table(section.field(), section.k(), section.n(), policy);
    return section_norm(table, section, method, policy.workers);
}

/// |L ∩ G_k(V)| for L = P(span of the given multivectors).
inline std::uint64_t section_cardinality(const std::vector<MultiVector>& spanning, const ExecPolicy& policy = {}) {
    require(!spanning.empty(), ErrorKind::ZeroInput, "empty spanning set");
    const MultiVector& first = spanning.front();
    MatrixGF m(first.field(), 0, first.size());
    for (const auto& v : spanning) {
        first.check_shape(v);
        m.append_row(v.coeffs());
    }
    const MatrixGF basis_rows = row_space(m);
    const unsigned dim = static_cast<unsigned>(basis_rows.rows());
    if (dim == 0) return 0;
    check_budget(big_pow(BigInt(first.field()->q()), dim), policy, "section point enumeration");
    std::vector<MultiVector> basis;
    for (std::size_t i = 0; i < basis_rows.rows(); ++i) {
        auto row = basis_rows.row(i);
        basis.emplace_back(first.field(), first.k(), first.n(), std::vector<Elem>(row.begin(), row.end()));
    }
    std::uint64_t count = 0;
    for_each_projective_point(first.field()->q(), dim, [&](std::span<const Elem> c) { count += satisfies_plucker(combine(basis, c)); });
    return count;
}

/// Number of points of P^{d-1} over F_q: 1 + q + ... + q^{d-1}.
inline BigInt projective_size(std::uint64_t q, unsigned d) {
    BigInt s = 0, t = 1;
    for (unsigned i = 0; i < d; ++i) {
        s += t;
        t *= q;
    }
    return s;
}

/// q^δ + q^{δ-1} + ... + q^{δ-r+1}.
inline BigInt nogin_norm(std::uint64_t q, unsigned delta, unsigned r) {
    require(r >= 1 && r <= delta + 1, ErrorKind::OutOfRange, "need 1 <= r <= delta + 1");
    BigInt s = 0;
    for (unsigned i = 0; i < r; ++i) s += big_pow(BigInt(q), delta - i);
    return s;
}

/// 1 + q + 2q^2 + q^3 + ... + q^{ℓ-1}: the bound on |L ∩ G| for an
/// ℓ-dimensional L ⊄ G, ℓ >= 3.
inline BigInt section_point_bound(std::uint64_t q, unsigned ell) {
    return projective_size(q, ell) + big_pow(BigInt(q), 2);
}

/// Whether span{e^I : I ∈ subset} lies in G_k(V*): every pair shares k-1
/// indices, i.e. the subset has a common (k-1)-core or a (k+1)-hull.
inline bool coordinate_ann_in_grassmannian(const std::vector<std::uint32_t>& masks, unsigned k) {
    if (masks.size() <= 1) return true;
    std::uint32_t inter = ~std::uint32_t{0}, uni = 0;
    for (std::uint32_t m : masks) {
        inter &= m;
        uni |= m;
    }
    return static_cast<unsigned>(std::popcount(inter)) + 1 == k || static_cast<unsigned>(std::popcount(uni)) == k + 1;
}

inline bool coordinate_ann_in_grassmannian(unsigned k, unsigned n, std::uint64_t subset) {
    const IndexTable& t = index_table(k, n);
    std::vector<std::uint32_t> masks;
    for (std::uint64_t s = subset; s != 0; s &= s - 1) masks.push_back(t.mask(static_cast<std::size_t>(std::countr_zero(s))));
    return coordinate_ann_in_grassmannian(masks, k);
}

/// Zero patterns of the Plücker vectors over G(k,n). For a coordinate
/// subset S, |G ∩ L_S| counts the points whose coordinates in S all vanish.
class ZeroPatternHistogram {
public:
    explicit ZeroPatternHistogram(const PluckerTable& table) : width_(table.width()), total_(table.size()) {
        require(width_ <= 64, ErrorKind::OutOfRange, "more than 64 Plücker coordinates");
        for (std::uint64_t i = 0; i < table.size(); ++i) {
            const auto p = table.point(i);
            std::uint64_t zero = 0;
            for (std::size_t j = 0; j < width_; ++j)
                if (p[j] == 0) zero |= std::uint64_t{1} << j;
            ++hist_[zero];
        }
    }

    std::size_t width() const noexcept { return width_; }
    std::uint64_t total() const noexcept { return total_; }
    const std::map<std::uint64_t, std::uint64_t>& patterns() const noexcept { return hist_; }

    std::uint64_t inside(std::uint64_t subset) const {
        std::uint64_t c = 0;
        for (const auto& [zero, count] : hist_)
            if ((zero & subset) == subset) c += count;
        return c;
    }

    /// ||L_S|| = |C_{I_1} ∪ ... ∪ C_{I_r}|.
    std::uint64_t norm(std::uint64_t subset) const { return total_ - inside(subset); }

    /// |G ∩ L_S| for every subset S of the N coordinates (superset sums).
    std::vector<std::uint64_t> all_inside(const ExecPolicy& policy = {}) const {
        require(width_ <= 24, ErrorKind::BudgetExceeded, "exhaustive subset table limited to N <= 24");
        check_budget(BigInt(std::uint64_t{1} << width_) * width_, policy, "subset transform");
        std::vector<std::uint64_t> f(std::size_t{1} << width_, 0);
        for (const auto& [zero, count] : hist_) f[zero] += count;
        for (std::size_t b = 0; b < width_; ++b)
            for (std::size_t s = 0; s < f.size(); ++s)
                if (!((s >> b) & 1u)) f[s] += f[s | (std::size_t{1} << b)];
        return f;
    }

private:
    std::size_t width_;
    std::uint64_t total_;
    std::map<std::uint64_t, std::uint64_t> hist_;
};

struct InclusionExclusionReport {
    unsigned k = 0, n = 0;
    std::uint64_t q = 0;
    std::vector<BigInt> e_terms;  // e_terms[r-1] = E_r
    BigInt gamma_reconstructed;
    std::vector<BigInt> c1_by_r;  // indexed by r, 0..N
    std::vector<BigInt> c2_by_r;
};

struct StructuredCounts {
    std::vector<BigInt> c1_by_r;
    std::vector<BigInt> c2_by_r;
};

/// c_1(r) = C(n,k-1) C(n-k+1,r) and c_2(r) = C(n,k+1) C(k+1,r) for
/// 2 <= r <= N, zero elsewhere.
inline StructuredCounts structured_counts(unsigned k, unsigned n) {
    require(k >= 1 && k < n, ErrorKind::OutOfRange, "structured counts need 1 <= k < n");
    const std::size_t N = static_cast<std::size_t>(binomial_u64(n, k));
    StructuredCounts s{std::vector<BigInt>(N + 1, 0), std::vector<BigInt>(N + 1, 0)};
    for (std::size_t r = 2; r <= N; ++r) {
        if (r <= n - k + 1) s.c1_by_r[r] = binomial(n, k - 1) * binomial(n - k + 1, static_cast<unsigned>(r));
        if (r <= k + 1) s.c2_by_r[r] = binomial(n, k + 1) * binomial(k + 1, static_cast<unsigned>(r));
    }
    return s;
}

inline constexpr std::size_t kInclusionExclusionMaxN = 12;

/// γ(k,n) = E_1 - E_2 + ... + (-1)^{N-1} E_N with E_r the sum of ||L|| over
/// the coordinate sections of codimension r.
inline InclusionExclusionReport inclusion_exclusion(unsigned k, unsigned n, const Field& field, const ExecPolicy& policy = {}) {
    require(k >= 1 && k < n, ErrorKind::OutOfRange, "inclusion-exclusion needs 1 <= k < n");
    const std::size_t N = static_cast<std::size_t>(binomial_u64(n, k));
    require(N <= kInclusionExclusionMaxN, ErrorKind::BudgetExceeded,
            "full inclusion-exclusion is limited to N <= 12 (here N = " + std::to_string(N) + ")");
    const PluckerTable table(field, k, n, policy);
    const ZeroPatternHistogram hist(table);
    const auto inside = hist.all_inside(policy);
    InclusionExclusionReport rep;
    rep.k = k;
    rep.n = n;
    rep.q = field->q();
    rep.e_terms.assign(N, 0);
    for (std::uint64_t s = 1; s < inside.size(); ++s)
        rep.e_terms[static_cast<std::size_t>(std::popcount(s)) - 1] += hist.total() - inside[s];
    rep.gamma_reconstructed = 0;
    for (std::size_t r = 1; r <= N; ++r) {
        if (r % 2 == 1) rep.gamma_reconstructed += rep.e_terms[r - 1];
        else rep.gamma_reconstructed -= rep.e_terms[r - 1];
    }
    auto sc = structured_counts(k, n);
    rep.c1_by_r = std::move(sc.c1_by_r);
    rep.c2_by_r = std::move(sc.c2_by_r);
    return rep;
}

}  // namespace mds
