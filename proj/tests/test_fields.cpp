/**************************************************************************
 * test_fields.cpp
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

#include "mds/field.hpp"

using namespace mds;

TEST(Field, PrimeFieldHasLinearModulus) {
    auto f = make_field(2, 1);
    EXPECT_EQ(f->q(), 2u);
    EXPECT_EQ(f->modulus_string(), "x");
}

TEST(Field, CanonicalModuli) {
    EXPECT_EQ(make_field(2, 2)->modulus_string(), "x^2+x+1");
    // Monic quadratics over GF(3) in order: x^2 (reducible), x^2+1 (no root).
    EXPECT_EQ(make_field(3, 2)->modulus_string(), "x^2+1");
    EXPECT_EQ(make_field(2, 3)->modulus_string(), "x^3+x+1");
    EXPECT_EQ(make_field(2, 4)->modulus_string(), "x^4+x+1");
}

namespace {

// Product of base-p digit polynomials a, b reduced mod the monic f, all as
// digit vectors; written independently of the library's reduction code.
std::vector<unsigned> mulmod(const std::vector<unsigned>& a, const std::vector<unsigned>& b, const std::vector<unsigned>& f, unsigned p) {
    const std::size_t m = f.size() - 1;
    std::vector<unsigned> prod(2 * m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (std::size_t d = 2 * m - 1; d >= m; --d) {
        const unsigned c = prod[d];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= m; ++i) prod[d - m + i] = (prod[d - m + i] + (p - c) * f[i]) % p;
    }
    prod.resize(m);
    return prod;
}

std::vector<unsigned> digits(std::uint64_t x, unsigned p, std::size_t len) {
    std::vector<unsigned> d(len);
    for (auto& v : d) {
        v = static_cast<unsigned>(x % p);
        x /= p;
    }
    return d;
}

// f is irreducible iff F_p[x]/(f) has no zero divisors.
bool no_zero_divisors(const std::vector<unsigned>& f, unsigned p) {
    const std::size_t m = f.size() - 1;
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < m; ++i) q *= p;
    const std::vector<unsigned> zero(m, 0);
    for (std::uint64_t a = 1; a < q; ++a)
        for (std::uint64_t b = a; b < q; ++b)
            if (mulmod(digits(a, p, m), digits(b, p, m), f, p) == zero) return false;
    return true;
}

}  // namespace

TEST(Field, ModulusIsSmallestIrreducible) {
    for (auto [p, m] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 2u}, {3u, 3u}, {2u, 5u}}) {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < m; ++i) q *= p;
        std::vector<unsigned> first;
        for (std::uint64_t low = 0; low < q && first.empty(); ++low) {
            auto cand = digits(low, p, m);
            cand.push_back(1);
            if (no_zero_divisors(cand, p)) first = cand;
        }
        EXPECT_EQ(make_field(p, m)->modulus(), first) << "p=" << p << " m=" << m;
    }
}

TEST(Field, RejectsBadParameters) {
    EXPECT_THROW(make_field(4, 1), Error);
    try {
        make_field(6, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonPrimeCharacteristic);
    }
    try {
        make_field(2, 21);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedSize);
    }
    try {
        make_field_of_order(12);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonPrimePower);
    }
    EXPECT_THROW(make_field_of_order(1), Error);
}

TEST(Field, KnownValues) {
    auto f2 = make_field(2, 1);
    EXPECT_EQ(f2->add(1, 1), 0u);
    EXPECT_EQ(f2->inv(1), 1u);
    auto f4 = make_field(2, 2);
    // x is encoded 2, x+1 is 3.
    EXPECT_EQ(f4->mul(2, 3), 1u);
    EXPECT_EQ(f4->inv(2), 3u);
    auto f5 = make_field(5, 1);
    EXPECT_EQ(f5->mul(2, 3), 1u);
    EXPECT_EQ(f5->inv(2), 3u);
}

TEST(Field, InverseOfZeroThrows) {
    auto f = make_field(3, 1);
    try {
        f->inv(0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
    }
}

TEST(Field, ElementsInCanonicalOrder) {
    for (std::uint64_t q : {2u, 3u, 4u, 9u, 16u}) {
        auto els = elements(make_field_of_order(q));
        ASSERT_EQ(els.size(), q);
        for (std::uint64_t i = 0; i < q; ++i) EXPECT_EQ(els[i].value(), i);
    }
    auto f4 = make_field(2, 2);
    EXPECT_EQ(f4->coeffs(2), (std::vector<unsigned>{0, 1}));
    EXPECT_EQ(f4->coeffs(3), (std::vector<unsigned>{1, 1}));
}

TEST(Field, AxiomsExhaustiveUpTo16) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        const auto F = make_field_of_order(q);
        const FieldSpec& f = *F;
        for (Elem a = 0; a < q; ++a) {
            EXPECT_EQ(f.add(a, 0), a);
            EXPECT_EQ(f.mul(a, 1), a);
            EXPECT_EQ(f.add(a, f.neg(a)), 0u);
            EXPECT_EQ(f.mul(a, f.pow(a, q - 1)), a);
            if (a != 0) {
                EXPECT_EQ(f.inv(f.inv(a)), a);
            }
            for (Elem b = 0; b < q; ++b) {
                ASSERT_EQ(f.add(a, b), f.add(b, a));
                ASSERT_EQ(f.mul(a, b), f.mul(b, a));
                ASSERT_EQ(f.sub(f.add(a, b), b), a);
                for (Elem c = 0; c < q; ++c) {
                    ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST(Field, TablesAgreeWithPolynomialArithmetic) {
    // Orders above 256 use the polynomial path; spot-check it against Fermat.
    for (std::uint64_t q : {343u, 625u, 729u, 961u}) {
        const auto F = make_field_of_order(q);
        EXPECT_FALSE(F->tabulated());
        for (Elem a = 1; a < q; a += 37) {
            EXPECT_EQ(F->mul(a, F->inv(a)), 1u);
            EXPECT_EQ(F->pow(a, q), a);
        }
    }
    EXPECT_TRUE(make_field_of_order(256)->tabulated());
}

TEST(Field, CheckedElementsRejectMixedFields) {
    FieldElem a(make_field(2, 2), 2);
    FieldElem b(make_field(2, 2), 3);
    EXPECT_EQ((a * b).value(), 1u);
    FieldElem c(make_field(3, 1), 1);
    try {
        (void)(a + c);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::FieldMismatch);
    }
}

TEST(Field, SameFieldByValue) {
    EXPECT_TRUE(make_field(3, 2)->same_as(*make_field_of_order(9)));
    EXPECT_FALSE(make_field(2, 3)->same_as(*make_field(3, 2)));
}
