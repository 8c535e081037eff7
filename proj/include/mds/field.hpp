/**************************************************************************
 * field.hpp
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
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mds/error.hpp"

namespace mds {

/// Canonical integer encoding of a field element: sum coeffs[i] * p^i.
using Elem = std::uint32_t;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over GF(p), little-endian, trailing zeros trimmed.
using Poly = std::vector<unsigned>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline unsigned inv_mod(unsigned a, unsigned p) {
    // p is prime and small; Fermat is plenty.
    std::uint64_t r = 1, b = a % p;
    for (unsigned e = p - 2; e > 0; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<unsigned>(r);
}

inline Poly poly_mod(Poly a, const Poly& m, unsigned p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const unsigned lead_inv = inv_mod(m.back(), p);
    while (a.size() > dm) {
        const unsigned c = static_cast<unsigned>(std::uint64_t(a.back()) * lead_inv % p);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = static_cast<unsigned>((a[shift + i] + std::uint64_t(p - c) * m[i]) % p);
        trim(a);
    }
    return a;
}

inline Poly poly_from_code(std::uint64_t code, unsigned p, unsigned len) {
    Poly r(len);
    for (unsigned i = 0; i < len; ++i) {
        r[i] = static_cast<unsigned>(code % p);
        code /= p;
    }
    return r;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const Poly& f, unsigned p) {
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g = poly_from_code(code, p, d);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/// GF(p^m) arithmetic context. Immutable after construction; shared freely
/// between worker threads.
class FieldSpec {
public:
    static constexpr Elem kTableLimit = 256;
    static constexpr Elem kMaxOrder = Elem{1} << 20;

    FieldSpec(unsigned p, unsigned m, std::vector<unsigned> modulus)
        : p_(p), m_(m), modulus_(std::move(modulus)) {
        q_ = 1;
        for (unsigned i = 0; i < m_; ++i) q_ *= p_;
        pow_p_.resize(m_ + 1);
        pow_p_[0] = 1;
        for (unsigned i = 1; i <= m_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;
        if (q_ <= kTableLimit) build_tables();
    }

    unsigned p() const noexcept { return p_; }
    unsigned m() const noexcept { return m_; }
    Elem q() const noexcept { return q_; }
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
    bool tabulated() const noexcept { return !mul_.empty(); }

    bool same_as(const FieldSpec& o) const noexcept {
        return this == &o || (p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_);
    }

    Elem add(Elem a, Elem b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (m_ == 1) {
            const Elem s = a + b;
            return s >= q_ ? s - q_ : s;
        }
        if (tabulated()) return add_[a * q_ + b];
        return digitwise(a, b, false);
    }

    Elem neg(Elem a) const noexcept {
        if (p_ == 2 || a == 0) return a;
        if (m_ == 1) return q_ - a;
        Elem r = 0;
        for (unsigned i = 0; i < m_; ++i) {
            const Elem d = (a / pow_p_[i]) % p_;
            r += (d == 0 ? 0 : p_ - d) * pow_p_[i];
        }
        return r;
    }

    Elem sub(Elem a, Elem b) const noexcept {
        if (p_ == 2) return a ^ b;
        if (m_ == 1) return a >= b ? a - b : a + q_ - b;
        if (tabulated()) return add_[a * q_ + neg_[b]];
        return digitwise(a, b, true);
    }

    Elem mul(Elem a, Elem b) const noexcept {
        if (tabulated()) return mul_[a * q_ + b];
        if (m_ == 1) return static_cast<Elem>(std::uint64_t(a) * b % p_);
        return poly_mul(a, b);
    }

    Elem inv(Elem a) const {
        require(a != 0, ErrorKind::DivisionByZero, "inverse of zero");
        if (tabulated()) return inv_[a];
        return pow(a, std::uint64_t(q_) - 2);
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, std::uint64_t e) const noexcept {
        Elem r = 1;
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::vector<unsigned> coeffs(Elem a) const {
        std::vector<unsigned> c(m_);
        for (unsigned i = 0; i < m_; ++i) {
            c[i] = a % p_;
            a /= p_;
        }
        return c;
    }

    Elem encode(std::span<const unsigned> coeffs) const {
        require(coeffs.size() == m_, ErrorKind::InvalidArgument, "coefficient vector has wrong length");
        Elem r = 0;
        for (unsigned i = 0; i < m_; ++i) {
            require(coeffs[i] < p_, ErrorKind::InvalidArgument, "coefficient out of range");
            r += coeffs[i] * pow_p_[i];
        }
        return r;
    }

    /// Human readable modulus, e.g. "x^2+x+1".
    std::string modulus_string() const {
        std::string s;
        for (std::size_t i = modulus_.size(); i-- > 0;) {
            const unsigned c = modulus_[i];
            if (c == 0) continue;
            if (!s.empty()) s += "+";
            if (c != 1 || i == 0) s += std::to_string(c);
            if (i >= 1) s += "x";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }

private:
    Elem digitwise(Elem a, Elem b, bool subtract) const noexcept {
        Elem r = 0;
        for (unsigned i = 0; i < m_; ++i) {
            const Elem da = (a / pow_p_[i]) % p_;
            const Elem db = (b / pow_p_[i]) % p_;
            r += ((subtract ? da + p_ - db : da + db) % p_) * pow_p_[i];
        }
        return r;
    }

    Elem poly_mul(Elem a, Elem b) const noexcept {
        unsigned da[16] = {}, db[16] = {}, prod[32] = {};
        for (unsigned i = 0; i < m_; ++i) {
            da[i] = a % p_;
            a /= p_;
            db[i] = b % p_;
            b /= p_;
        }
        for (unsigned i = 0; i < m_; ++i) {
            if (da[i] == 0) continue;
            for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        }
        // modulus is monic of degree m
        for (unsigned d = 2 * m_ - 1; d-- > m_;) {
            const unsigned c = prod[d];
            if (c == 0) continue;
            const unsigned shift = d - m_;
            for (unsigned i = 0; i <= m_; ++i) prod[shift + i] = (prod[shift + i] + (p_ - c) * modulus_[i]) % p_;
        }
        Elem r = 0;
        for (unsigned i = 0; i < m_; ++i) r += prod[i] * pow_p_[i];
        return r;
    }

    void build_tables() {
        add_.assign(std::size_t(q_) * q_, 0);
        mul_.assign(std::size_t(q_) * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        for (Elem a = 0; a < q_; ++a) {
            neg_[a] = static_cast<std::uint8_t>(neg(a));
            for (Elem b = 0; b < q_; ++b) {
                add_[a * q_ + b] = static_cast<std::uint8_t>(digitwise(a, b, false));
                mul_[a * q_ + b] = static_cast<std::uint8_t>(m_ == 1 ? a * b % p_ : poly_mul(a, b));
            }
        }
        for (Elem a = 1; a < q_; ++a)
            for (Elem b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) {
                    inv_[a] = static_cast<std::uint8_t>(b);
                    break;
                }
    }

    unsigned p_;
    unsigned m_;
    Elem q_;
    std::vector<unsigned> modulus_;
    std::vector<Elem> pow_p_;
    std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

using Field = std::shared_ptr<const FieldSpec>;

/// GF(p^m) with the lexicographically smallest monic irreducible modulus,
/// comparing coefficients from the highest degree down.
inline Field make_field(unsigned p, unsigned m) {
    require(detail::is_prime(p), ErrorKind::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    require(m >= 1 && m <= 8, ErrorKind::UnsupportedSize, "extension degree must be in [1, 8]");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) q *= p;
    require(q <= FieldSpec::kMaxOrder, ErrorKind::UnsupportedSize, "field order " + std::to_string(q) + " exceeds 2^20");
    // Counting codes 0..p^m-1 with x^i as digit i visits monic polynomials
    // in exactly that order.
    for (std::uint64_t code = 0; code < q; ++code) {
        detail::Poly f = detail::poly_from_code(code, p, m);
        f.push_back(1);
        if (detail::is_irreducible(f, p)) return std::make_shared<const FieldSpec>(p, m, f);
    }
    fail(ErrorKind::UnsupportedSize, "no irreducible polynomial found");  // unreachable
}

/// Factorizes q = p^m; rejects non-prime-powers.
inline Field make_field_of_order(std::uint64_t q) {
    require(q >= 2, ErrorKind::NonPrimePower, std::to_string(q) + " is not a prime power");
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    unsigned m = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    require(rest == 1, ErrorKind::NonPrimePower, std::to_string(q) + " is not a prime power");
    require(q <= FieldSpec::kMaxOrder, ErrorKind::UnsupportedSize, "field order " + std::to_string(q) + " exceeds 2^20");
    return make_field(static_cast<unsigned>(p), m);
}

inline bool is_prime_power(std::uint64_t q) {
    if (q < 2) return false;
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    while (q % p == 0) q /= p;
    return q == 1;
}

/// Checked element handle for API-level arithmetic; kernels use raw Elem.
class FieldElem {
public:
    FieldElem(Field field, Elem value) : field_(std::move(field)), value_(value) {
        require(value_ < field_->q(), ErrorKind::InvalidArgument, "element encoding out of range");
    }

    const Field& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }
    std::vector<unsigned> coeffs() const { return field_->coeffs(value_); }
    bool is_zero() const noexcept { return value_ == 0; }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        check(a, b);
        return {a.field_, a.field_->add(a.value_, b.value_)};
    }
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
        check(a, b);
        return {a.field_, a.field_->sub(a.value_, b.value_)};
    }
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        check(a, b);
        return {a.field_, a.field_->mul(a.value_, b.value_)};
    }
    FieldElem operator-() const { return {field_, field_->neg(value_)}; }
    FieldElem inv() const { return {field_, field_->inv(value_)}; }

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        return a.field_->same_as(*b.field_) && a.value_ == b.value_;
    }

private:
    static void check(const FieldElem& a, const FieldElem& b) {
        require(a.field_->same_as(*b.field_), ErrorKind::FieldMismatch, "operands belong to different fields");
    }

    Field field_;
    Elem value_;
};

inline FieldElem add(const FieldElem& a, const FieldElem& b) { return a + b; }
inline FieldElem mul(const FieldElem& a, const FieldElem& b) { return a * b; }
inline FieldElem neg(const FieldElem& a) { return -a; }
inline FieldElem inv(const FieldElem& a) { return a.inv(); }

/// All q elements in increasing encoding order (0, 1, ...).
inline std::vector<FieldElem> elements(const Field& field) {
    std::vector<FieldElem> out;
    out.reserve(field->q());
    for (Elem a = 0; a < field->q(); ++a) out.emplace_back(field, a);
    return out;
}

}  // namespace mds
