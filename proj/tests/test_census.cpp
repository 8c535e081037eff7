/**************************************************************************
 * test_census.cpp
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
#include <gtest/gtest.h>

#include <numeric>

#include "mds/census.hpp"
#include "mds/parallel.hpp"

using namespace mds;

namespace {

// Independent oracle: every k x (n-k) matrix A, with [I | A] tested by
// computing all k x k minors through the library's generic determinant.
BigInt brute_gamma(unsigned k, unsigned n, std::uint64_t q) {
    const Field F = make_field_of_order(q);
    const unsigned cols = n - k;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < k * cols; ++i) total *= q;
    const IndexTable& t = index_table(k, n);
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        MatrixGF g(F, k, n);
        std::uint64_t x = code;
        for (unsigned r = 0; r < k; ++r) {
            g(r, r) = 1;
            for (unsigned c = 0; c < cols; ++c) {
                g(r, k + c) = static_cast<Elem>(x % q);
                x /= q;
            }
        }
        bool ok = true;
        for (std::size_t i = 0; i < t.size() && ok; ++i) ok = minor(g, t.at(i)) != 0;
        count += ok;
    }
    return count;
}

}  // namespace

TEST(Census, KnownValues) {
    EXPECT_EQ(count_mds_matrix_scan(2, 3, make_field(2, 1)).gamma, 1);
    auto r = count_mds_matrix_scan(2, 4, make_field(3, 1));
    EXPECT_EQ(r.gamma, 8);
    EXPECT_EQ(r.gamma_tilde, 1);
    EXPECT_EQ(count_mds_matrix_scan(3, 6, make_field(2, 1)).gamma, 0);
    EXPECT_EQ(count_mds_grassmannian_filter(2, 4, make_field(3, 1)).gamma, 8);
    EXPECT_EQ(count_mds_grassmannian_filter(1, 3, make_field(3, 1)).gamma, 4);
    EXPECT_EQ(count_mds_grassmannian_filter(2, 4, make_field(2, 1)).gamma, 0);
}

TEST(Census, ArcCounts) {
    EXPECT_EQ(arc_count(2, 4, make_field(3, 1)), 1);
    // Five points of PG(1,4): gamma = 162 = 2 (q-1)^4, so two normalized arcs.
    EXPECT_EQ(count_mds_matrix_scan(2, 5, make_field(2, 2)).gamma, 162);
    EXPECT_EQ(arc_count(2, 5, make_field(2, 2)), 2);
    for (std::uint64_t q : {2u, 3u, 5u, 7u})
        for (unsigned n = 2; n <= 6; ++n) EXPECT_EQ(arc_count(1, n, make_field_of_order(q)), 1);
    try {
        arc_count_from_gamma(5, 3, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DivisibilityViolation);
    }
}

TEST(Census, ScanMatchesBruteForce) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u})
        for (unsigned n = 2; n <= 5; ++n)
            for (unsigned k = 1; k < n; ++k) {
                if (k * (n - k) > 6 && q > 3) continue;
                EXPECT_EQ(count_mds_matrix_scan(k, n, make_field_of_order(q)).gamma, brute_gamma(k, n, q))
                    << k << "," << n << "," << q;
            }
}

TEST(Census, ScanMatchesFilter) {
    for (std::uint64_t q : {2u, 3u, 4u})
        for (unsigned n = 2; n <= 6; ++n)
            for (unsigned k = 1; k <= std::min(3u, n - 1); ++k) {
                auto F = make_field_of_order(q);
                EXPECT_EQ(count_mds_matrix_scan(k, n, F).gamma, count_mds_grassmannian_filter(k, n, F).gamma)
                    << k << "," << n << "," << q;
            }
}

TEST(Census, Duality) {
    for (std::uint64_t q : {2u, 3u, 4u}) {
        auto F = make_field_of_order(q);
        for (auto [k, n] : {std::pair{1u, 3u}, {2u, 4u}, {2u, 5u}})
            EXPECT_EQ(count_mds_matrix_scan(k, n, F).gamma, count_mds_matrix_scan(n - k, n, F).gamma);
    }
}

TEST(Census, ClosedForms) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
        for (unsigned n = 2; n <= 6; ++n) {
            auto F = make_field_of_order(q);
            EXPECT_EQ(count_mds_matrix_scan(1, n, F).gamma, gamma_k1_closed_form(n, q));
            if (n >= 3) {
                EXPECT_EQ(count_mds_matrix_scan(2, n, F).gamma, gamma_k2_closed_form(n, q)) << n << "," << q;
            }
        }
}

TEST(Census, WorkerCountDoesNotChangeResult) {
    auto F = make_field_of_order(5);
    const auto base = count_mds_matrix_scan(3, 6, F, ExecPolicy{1});
    for (unsigned w : {2u, 3u, 8u}) {
        EXPECT_EQ(count_mds_matrix_scan(3, 6, F, ExecPolicy{w}).gamma, base.gamma);
        EXPECT_EQ(count_mds_grassmannian_filter(2, 5, F, ExecPolicy{w}).gamma, count_mds_grassmannian_filter(2, 5, F).gamma);
    }
}

TEST(Census, RejectsBadShapesAndBudget) {
    auto F = make_field_of_order(3);
    EXPECT_THROW(count_mds_matrix_scan(3, 3, F), Error);
    EXPECT_THROW(count_mds_matrix_scan(0, 3, F), Error);
    try {
        count_mds_matrix_scan(3, 8, make_field_of_order(16));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
    }
}

TEST(Parallel, ReduceFoldsInChunkOrder) {
    // String concatenation is not commutative; the result must still be fixed.
    for (unsigned w : {1u, 2u, 4u, 8u}) {
        const std::string s = parallel_reduce<std::string>(26, w, "", [](std::size_t c) { return std::string(1, char('a' + c)); },
                                                           [](std::string a, const std::string& b) { return a + b; });
        EXPECT_EQ(s, "abcdefghijklmnopqrstuvwxyz");
    }
}

TEST(Parallel, ExceptionsPropagate) {
    EXPECT_THROW(parallel_reduce<int>(
                     16, 4, 0,
                     [](std::size_t c) -> int {
                         if (c == 7) fail(ErrorKind::InvalidArgument, "boom");
                         return 1;
                     },
                     [](int a, int b) { return a + b; }),
                 Error);
}

TEST(Parallel, RangeSplitCoversExactly) {
    for (std::uint64_t total : {0u, 1u, 5u, 64u, 1000u}) {
        const RangeSplit s(total, 64);
        std::uint64_t covered = 0;
        for (std::size_t c = 0; c < s.chunks; ++c) {
            EXPECT_LE(s.begin(c), s.end(c));
            covered += s.end(c) - s.begin(c);
            if (c + 1 < s.chunks) {
                EXPECT_EQ(s.end(c), s.begin(c + 1));
            }
        }
        EXPECT_EQ(covered, total);
    }
}
