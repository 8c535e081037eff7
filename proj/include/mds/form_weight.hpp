/**************************************************************************
 * form_weight.hpp
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
#include <span>
#include <vector>

#include "mds/bigint.hpp"
#include "mds/error.hpp"
#include "mds/exterior.hpp"
#include "mds/grassmannian.hpp"
#include "mds/parallel.hpp"

namespace mds {

enum class WeightMethod { Direct, Recursive };

/// How ω_u = ι_u ω is written on V/(F_q u): drop the leading or the
/// trailing nonzero coordinate of u and keep the remaining standard basis
/// vectors as the quotient basis.
enum class QuotientBasis { DropLeading, DropTrailing };

/// ||ω|| = number of Grassmann points P with ⟨ω, P⟩ ≠ 0, read off a
/// precomputed Plücker table.
inline std::uint64_t form_weight(const PluckerTable& table, const DualForm& omega, unsigned workers = 1) {
    require(omega.k() == table.k() && omega.n() == table.n(), ErrorKind::ShapeMismatch, "form does not match the table");
    require(omega.field()->same_as(*table.field()), ErrorKind::FieldMismatch, "form and table over different fields");
    const FieldSpec& f = *table.field();
    const RangeSplit split(table.size(), workers > 1 ? chunks_for(workers) : 1);
    return parallel_reduce<std::uint64_t>(split.chunks, workers, 0, [&](std::size_t c) {
        std::uint64_t w = 0;
        for (std::uint64_t i = split.begin(c); i < split.end(c); ++i) w += dot(f, omega.coeffs(), table.point(i)) != 0;
        return w;
    }, [](std::uint64_t a, std::uint64_t b) { return a + b; });
}

/// Direct count streaming the Grassmannian without a table.
inline std::uint64_t form_weight_direct(const DualForm& omega, const ExecPolicy& policy = {}) {
    require(!omega.is_zero(), ErrorKind::ZeroInput, "weight of the zero form");
    const unsigned k = omega.k(), n = omega.n();
    GrassmannSpace space(omega.field(), k, n, policy);
    check_budget(BigInt(space.size()) * omega.size(), policy, "direct weight");
    const IndexTable& t = index_table(k, n);
    const FieldSpec& f = *omega.field();
    std::vector<std::uint32_t> support;
    std::vector<Elem> coeff;
    for (std::size_t i = 0; i < omega.size(); ++i)
        if (omega.coeffs()[i] != 0) {
            support.push_back(t.mask(i));
            coeff.push_back(omega.coeffs()[i]);
        }
    const RangeSplit split(space.size(), chunks_for(policy.workers));
    return parallel_reduce<std::uint64_t>(split.chunks, policy.workers, 0, [&](std::size_t c) {
        std::uint64_t w = 0;
        space.for_range(split.begin(c), split.end(c), [&](std::span<const Elem> rows) {
            Elem acc = 0;
            for (std::size_t s = 0; s < support.size(); ++s) acc = f.add(acc, f.mul(coeff[s], minor_of(f, rows, k, n, support[s])));
            w += acc != 0;
        });
        return w;
    }, [](std::uint64_t a, std::uint64_t b) { return a + b; });
}

namespace detail {

/// Removes bit p from every index mask: coordinates on V/(F_q u) where u
/// has a nonzero p-th coordinate.
inline DualForm quotient_form(const DualForm& contracted, unsigned p) {
    const unsigned k = contracted.k(), n = contracted.n();
    const IndexTable& src = index_table(k, n);
    const IndexTable& dst = index_table(k, n - 1);
    DualForm out(contracted.field(), k, n - 1);
    const std::uint32_t low = (std::uint32_t{1} << p) - 1;
    for (std::size_t i = 0; i < src.size(); ++i) {
        const std::uint32_t m = src.mask(i);
        if ((m >> p) & 1u) continue;
        const std::uint32_t squeezed = (m & low) | ((m >> 1) & ~low);
        out.coeffs()[static_cast<std::size_t>(dst.rank_of(squeezed))] = contracted.coeffs()[i];
    }
    return out;
}

inline std::uint64_t recursive_weight(const DualForm& omega, QuotientBasis basis) {
    const unsigned k = omega.k(), n = omega.n();
    const FieldSpec& f = *omega.field();
    const Elem q = f.q();
    if (k == 1) {
        // points of P^{n-1} off the hyperplane ω = 0
        GrassmannSpace line_space(omega.field(), 1, n, ExecPolicy{1, UINT64_MAX});
        std::uint64_t w = 0;
        line_space.for_each([&](std::span<const Elem> row) { w += dot(f, omega.coeffs(), row) != 0; });
        return w;
    }
    std::vector<Elem> u(n, 0);
    std::uint64_t total = 0;
    for (;;) {
        // next nonzero u in odometer order
        unsigned i = 0;
        while (i < n && ++u[i] == q) u[i++] = 0;
        if (i == n) break;
        const DualForm c = interior(as_degree_one<PrimalTag>(omega.field(), u), omega);
        if (c.is_zero()) continue;  // u ∈ V_ω
        unsigned p = 0;
        if (basis == QuotientBasis::DropLeading) {
            while (u[p] == 0) ++p;
        } else {
            p = n - 1;
            while (u[p] == 0) --p;
        }
        total += recursive_weight(quotient_form(c, p), basis);
    }
    std::uint64_t qk = 1;
    for (unsigned j = 0; j < k; ++j) qk *= q;
    require(total % (qk - 1) == 0, ErrorKind::ExactnessViolation, "recursive weight sum not divisible by q^k - 1");
    return total / (qk - 1);
}

}  // namespace detail

/// ||ω|| as (1/(q^k - 1)) Σ_{u ∉ V_ω} ||ω_u||, recursing down to linear forms.
inline std::uint64_t form_weight_recursive(const DualForm& omega, QuotientBasis basis = QuotientBasis::DropLeading,
                                           const ExecPolicy& policy = {}) {
    require(!omega.is_zero(), ErrorKind::ZeroInput, "weight of the zero form");
    require(omega.k() >= 1, ErrorKind::DegreeMismatch, "weight needs degree >= 1");
    BigInt cost = 1;
    const BigInt q = omega.field()->q();
    for (unsigned level = 0; level + 1 < omega.k(); ++level) cost *= big_pow(q, omega.n() - level);
    cost *= big_pow(q, omega.n() - omega.k() + 1);
    check_budget(cost, policy, "recursive weight");
    return detail::recursive_weight(omega, basis);
}

inline std::uint64_t form_weight(const DualForm& omega, WeightMethod method, const ExecPolicy& policy = {}) {
    return method == WeightMethod::Direct ? form_weight_direct(omega, policy)
                                          : form_weight_recursive(omega, QuotientBasis::DropLeading, policy);
}

}  // namespace mds
