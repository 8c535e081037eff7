/**************************************************************************
 * test_code.cpp
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

#include <random>

#include "mds/grassmann_code.hpp"

using namespace mds;

TEST(GrassmannCode, LengthAndDimension) {
    auto F2 = make_field(2, 1);
    auto c = build_code(2, 4, F2);
    EXPECT_EQ(c.length(), 35u);
    EXPECT_EQ(c.dimension(), 6u);
    auto c5 = build_code(2, 5, F2);
    EXPECT_EQ(c5.length(), 155u);
    EXPECT_EQ(c5.dimension(), 10u);
    for (std::uint64_t q : {2u, 3u, 4u}) {
        auto c1 = build_code(1, 4, make_field_of_order(q));
        EXPECT_EQ(c1.length(), (q * q * q * q - 1) / (q - 1));
        EXPECT_EQ(c1.dimension(), 4u);
    }
}

TEST(GrassmannCode, CodewordWeights) {
    auto F2 = make_field(2, 1);
    GrassmannCode c(F2, 2, 4);
    EXPECT_EQ(codeword_weight(c, DualForm::basis(F2, 4, {1, 2})), 16u);
    EXPECT_EQ(codeword_weight(c, DualForm::basis(F2, 4, {1, 2}) + DualForm::basis(F2, 4, {3, 4})), 20u);
    EXPECT_EQ(codeword_weight(c, DualForm(F2, 2, 4)), 0u);
    try {
        codeword_weight(c, DualForm(F2, 2, 5));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
    }
}

TEST(GrassmannCode, WeightViaGeneratorEqualsFormWeight) {
    // Multiply the coefficient vector through the generator matrix and count
    // nonzero entries: an independent route to the Hamming weight.
    std::mt19937_64 rng(77);
    for (auto [k, n, q] : {std::tuple{2u, 4u, 2u}, {2u, 4u, 3u}, {2u, 5u, 2u}}) {
        auto F = make_field_of_order(q);
        GrassmannCode c(F, k, n);
        const MatrixGF g = c.generator();
        for (int t = 0; t < 500; ++t) {
            const DualForm w = random_form(F, k, n, rng);
            std::uint64_t hw = 0;
            for (std::size_t j = 0; j < g.cols(); ++j) {
                Elem acc = 0;
                for (std::size_t i = 0; i < g.rows(); ++i) acc = F->add(acc, F->mul(w.coeffs()[i], g(i, j)));
                hw += acc != 0;
            }
            ASSERT_EQ(codeword_weight(c, w), hw);
            if (!w.is_zero()) {
                ASSERT_EQ(codeword_weight(c, w), form_weight_direct(w));
            }
        }
    }
}

TEST(GrassmannCode, SpectrumAt242) {
    auto spec = weight_spectrum(GrassmannCode(make_field(2, 1), 2, 4), SpectrumMode::exhaustive());
    EXPECT_EQ(spec, (WeightSpectrum{{16, 35}, {20, 28}}));
}

TEST(GrassmannCode, SpectrumAt252AndMinimumWords) {
    auto F2 = make_field(2, 1);
    GrassmannCode c(F2, 2, 5);
    auto spec = weight_spectrum(c, SpectrumMode::exhaustive());
    ASSERT_EQ(spec.size(), 2u);
    EXPECT_EQ(spec.begin()->first, 64u);
    EXPECT_EQ(spec.rbegin()->first, 80u);
    EXPECT_EQ(spec[64] + spec[80], 1023u);
    EXPECT_EQ(spec[64], 155u);
    // Minimum-weight codewords are exactly the decomposable forms.
    for (std::uint32_t code = 1; code < 1024; ++code) {
        DualForm w(F2, 2, 5);
        for (unsigned i = 0; i < 10; ++i) w.coeffs()[i] = (code >> i) & 1u;
        ASSERT_EQ(codeword_weight(c, w) == 64u, satisfies_plucker(w));
    }
}

TEST(GrassmannCode, SpectrumSupportForTwoForms) {
    // For k = 2 the support is {q^δ + q^{δ-2} + ... + q^{δ-2r+2} : 1 <= r <= n/2}.
    for (auto [n, q] : {std::pair{4u, 3u}, {5u, 3u}, {6u, 2u}}) {
        auto spec = weight_spectrum(GrassmannCode(make_field_of_order(q), 2, n), SpectrumMode::exhaustive());
        std::set<std::uint64_t> expect;
        const unsigned delta = 2 * (n - 2);
        for (unsigned r = 1; r <= n / 2; ++r) {
            BigInt s = 0;
            for (unsigned i = 0; i < r; ++i) s += big_pow(BigInt(q), delta - 2 * i);
            expect.insert(static_cast<std::uint64_t>(s));
        }
        std::set<std::uint64_t> got;
        for (auto [w, m] : spec) got.insert(w);
        EXPECT_EQ(got, expect) << n << "," << q;
    }
}

TEST(GrassmannCode, NoginFormsHaveExpectedWeight) {
    for (std::uint64_t q : {2u, 3u}) {
        auto F = make_field_of_order(q);
        for (unsigned r = 1; r <= 3; ++r) {
            const DualForm w = nogin_form(F, 6, r);
            BigInt expect = 0;
            for (unsigned i = 0; i < r; ++i) expect += big_pow(BigInt(q), 8 - 2 * i);
            EXPECT_EQ(BigInt(form_weight_direct(w)), expect);
        }
    }
    EXPECT_THROW(nogin_form(make_field(2, 1), 5, 3), Error);
}

TEST(GrassmannCode, SampledSpectrumReproducible) {
    GrassmannCode c(make_field(2, 1), 3, 6);
    const auto a = weight_spectrum(c, SpectrumMode::sample(2000, 42));
    const auto b = weight_spectrum(c, SpectrumMode::sample(2000, 42), ExecPolicy{4});
    EXPECT_EQ(a, b);
    std::uint64_t total = 0;
    for (auto [w, m] : a) total += m;
    EXPECT_EQ(total, 2000u);
    EXPECT_EQ(a.begin()->first, 512u);
}

TEST(GrassmannCode, DecomposableDrawsAttainMinimum) {
    auto F2 = make_field(2, 1);
    GrassmannCode c(F2, 3, 6);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) EXPECT_EQ(codeword_weight(c, random_decomposable_form(F2, 3, 6, rng)), 512u);
}

TEST(GrassmannCode, SubcodeWeightIdentity) {
    // ||D|| = (1/(q^r - q^{r-1})) Σ_{c ∈ D} ||c|| for random r-dim subcodes.
    auto F2 = make_field(2, 1);
    const PluckerTable t(F2, 2, 4);
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned r = 1 + static_cast<unsigned>(draw_below(rng, 4));
        std::vector<DualForm> basis;
        MatrixGF m(F2, 0, 6);
        while (basis.size() < r) {
            DualForm w = random_nonzero_form(F2, 2, 4, rng);
            MatrixGF trial_m = m;
            trial_m.append_row(w.coeffs());
            if (rank(trial_m) == basis.size() + 1) {
                m = trial_m;
                basis.push_back(w);
            }
        }
        // support of D: points where some basis form is nonzero
        const std::uint64_t support = section_norm(t, LinearSection(F2, 2, 4, basis), NormMethod::PointScan);
        std::uint64_t sum = 0;
        const std::uint64_t words = std::uint64_t{1} << r;
        for (std::uint64_t x = 1; x < words; ++x) {
            std::vector<Elem> c(r);
            for (unsigned i = 0; i < r; ++i) c[i] = (x >> i) & 1u;
            sum += form_weight(t, combine(basis, c));
        }
        const std::uint64_t denom = (std::uint64_t{1} << r) - (std::uint64_t{1} << (r - 1));
        ASSERT_EQ(sum % denom, 0u);
        EXPECT_EQ(sum / denom, support);
    }
}

TEST(HigherWeights, ExhaustiveD2) {
    GrassmannCode c(make_field(2, 1), 2, 4);
    EXPECT_EQ(GrassmannSpace(make_field(2, 1), 2, 6).size(), 651u);
    EXPECT_EQ(higher_weight_search(c, 2, HigherWeightMode::Exhaustive), 24u);
    EXPECT_EQ(higher_weight_search(c, 1, HigherWeightMode::Exhaustive), 16u);
}

TEST(HigherWeights, StructuredCertificates) {
    for (std::uint64_t q : {2u, 3u}) {
        GrassmannCode c(make_field_of_order(q), 2, 4);
        for (unsigned r = 1; r <= 3; ++r)
            EXPECT_EQ(BigInt(higher_weight_search(c, r, HigherWeightMode::Structured)), nogin_norm(q, 4, r));
    }
    GrassmannCode c(make_field(2, 1), 2, 5);
    for (unsigned r = 1; r <= 4; ++r) EXPECT_EQ(BigInt(higher_weight_search(c, r, HigherWeightMode::Structured)), nogin_norm(2, 6, r));
    EXPECT_THROW(higher_weight_search(c, 5, HigherWeightMode::Structured), Error);
}
