/**************************************************************************
 * asymptotics.hpp
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
#include <string>
#include <vector>

#include "mds/bigint.hpp"
#include "mds/census.hpp"
#include "mds/error.hpp"
#include "mds/field.hpp"
#include "mds/parallel.hpp"

namespace mds {

/// Coefficients of γ(k,n) = q^δ + (1-N) q^{δ-1} + a_2 q^{δ-2} + O(q^{δ-3})
/// and of the arc-count expansion q^{δ-n+1} - b_1 q^{δ-n+2} + b_2 q^{δ-n+3}.
struct AsymptoticParams {
    unsigned k = 0, n = 0;
    unsigned delta = 0;
    BigInt big_n;
    Rational a2_exact;
    BigInt a2;
    BigInt b1;
    BigInt b2;
};

inline BigInt rational_to_integer(const Rational& r, const std::string& what) {
    require(boost::multiprecision::denominator(r) == 1, ErrorKind::ExactnessViolation, what + " is not an integer: " + r.str());
    return boost::multiprecision::numerator(r);
}

inline AsymptoticParams params(unsigned k, unsigned n) {
    require(k >= 1 && k + 1 <= n, ErrorKind::OutOfRange, "params need 1 <= k <= n-1");
    AsymptoticParams p;
    p.k = k;
    p.n = n;
    p.delta = k * (n - k);
    p.big_n = binomial(n, k);
    const Rational N(p.big_n);
    const Rational kk(k), nn(n);
    // a_2 = N δ (k^2 - nk + n + 3) / (2 (k+1)(n-k+1)) + N^2/2 - 5N/2 + 2
    p.a2_exact = N * Rational(p.delta) * (kk * kk - nn * kk + nn + 3) / (Rational(2) * (kk + 1) * (nn - kk + 1)) +
                 N * N / 2 - Rational(5) * N / 2 + 2;
    p.a2 = rational_to_integer(p.a2_exact, "a2");
    p.b1 = p.big_n - n;
    const BigInt bn(n);
    p.b2 = p.a2 - (bn - 1) * (p.big_n - bn) - (bn * bn - 3 * bn + 2) / 2;
    return p;
}

/// The k-specific polynomials for a_2 at k = 1 and k = 2.
inline BigInt a2_closed_form(unsigned k, unsigned n) {
    const BigInt b(n);
    if (k == 1) return (b * b - 3 * b + 2) / 2;
    if (k == 2) {
        const BigInt num = 3 * b * b * b * b - 10 * b * b * b + 9 * b * b - 26 * b + 48;
        require(num % 24 == 0, ErrorKind::ExactnessViolation, "a2(2,n) numerator not divisible by 24");
        return num / 24;
    }
    fail(ErrorKind::OutOfRange, "closed forms for a2 exist only for k = 1, 2");
}

/// q^δ + (1-N) q^{δ-1} + a_2 q^{δ-2}, exactly.
inline BigInt predicted_gamma(unsigned k, unsigned n, std::uint64_t q) {
    const AsymptoticParams p = params(k, n);
    const Rational qq(q);
    auto qpow = [&](int e) {
        Rational r = 1;
        for (int i = 0; i < std::abs(e); ++i) r *= qq;
        return e >= 0 ? r : Rational(1) / r;
    };
    const int d = static_cast<int>(p.delta);
    const Rational v = qpow(d) + Rational(1 - p.big_n) * qpow(d - 1) + Rational(p.a2) * qpow(d - 2);
    return rational_to_integer(v, "predicted gamma");
}

struct ConvergenceRow {
    std::uint64_t q = 0;
    BigInt gamma_exact;
    BigInt predicted;
    BigInt residual;
    Rational normalized;  // residual / q^{δ-3}
    std::string source;   // "census" or "closed-form"

    double normalized_value() const { return static_cast<double>(normalized); }
};

struct ConvergenceReport {
    unsigned k = 0, n = 0;
    std::vector<ConvergenceRow> rows;
    bool bounded = false;
    Rational max_abs_lower;
    Rational max_abs_upper;
    /// Window factor of the boundedness heuristic; an artifact choice, not a
    /// proven constant.
    static constexpr int kWindowFactor = 2;
};

namespace detail {

inline Rational rabs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// Exact γ from the k = 1, 2 closed forms (or their duals), if available.
inline bool closed_form_gamma(unsigned k, unsigned n, std::uint64_t q, BigInt& out) {
    const unsigned small = std::min(k, n - k);
    if (small == 1) {
        out = gamma_k1_closed_form(n, q);
        return true;
    }
    if (small == 2) {
        out = gamma_k2_closed_form(n, q);
        return true;
    }
    return false;
}

}  // namespace detail

inline constexpr std::uint64_t kOracleValidationMaxQ = 5;

/// Compares exact γ(k,n;q) with the three-term prediction across qList.
/// When min(k, n-k) <= 2 the closed form is used after it has been checked
/// against the matrix scan for every prime power q <= 5.
inline ConvergenceReport convergence(unsigned k, unsigned n, std::vector<std::uint64_t> q_list, const ExecPolicy& policy = {}) {
    require(k >= 1 && k < n, ErrorKind::OutOfRange, "convergence needs 1 <= k < n");
    require(!q_list.empty(), ErrorKind::InvalidArgument, "empty q list");
    std::sort(q_list.begin(), q_list.end());
    for (auto q : q_list) require(is_prime_power(q), ErrorKind::NonPrimePower, std::to_string(q) + " is not a prime power");
    const AsymptoticParams p = params(k, n);

    BigInt probe;
    const bool use_oracle = detail::closed_form_gamma(k, n, 2, probe);
    if (use_oracle) {
        for (std::uint64_t q = 2; q <= kOracleValidationMaxQ; ++q) {
            if (!is_prime_power(q)) continue;
            BigInt oracle;
            detail::closed_form_gamma(k, n, q, oracle);
            const BigInt brute = count_mds_matrix_scan(k, n, make_field_of_order(q), policy).gamma;
            require(brute == oracle, ErrorKind::ExactnessViolation,
                    "closed form disagrees with brute force at q = " + std::to_string(q));
        }
    }

    ConvergenceReport rep;
    rep.k = k;
    rep.n = n;
    for (auto q : q_list) {
        ConvergenceRow row;
        row.q = q;
        if (use_oracle) {
            detail::closed_form_gamma(k, n, q, row.gamma_exact);
            row.source = "closed-form";
        } else {
            row.gamma_exact = count_mds_matrix_scan(k, n, make_field_of_order(q), policy).gamma;
            row.source = "census";
        }
        row.predicted = predicted_gamma(k, n, q);
        row.residual = row.gamma_exact - row.predicted;
        const int e = static_cast<int>(p.delta) - 3;
        Rational scale = 1;
        for (int i = 0; i < std::abs(e); ++i) scale *= q;
        row.normalized = e >= 0 ? Rational(row.residual) / scale : Rational(row.residual) * scale;
        rep.rows.push_back(std::move(row));
    }
    const std::size_t half = rep.rows.size() / 2;
    rep.max_abs_lower = 0;
    rep.max_abs_upper = 0;
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const Rational a = detail::rabs(rep.rows[i].normalized);
        if (i < half) rep.max_abs_lower = std::max(rep.max_abs_lower, a);
        else rep.max_abs_upper = std::max(rep.max_abs_upper, a);
    }
    // A single q cannot show growth; treat it as its own lower window.
    if (half == 0) rep.max_abs_lower = rep.max_abs_upper;
    rep.bounded = rep.max_abs_upper <= ConvergenceReport::kWindowFactor * rep.max_abs_lower;
    return rep;
}

}  // namespace mds
