/**************************************************************************
 * exterior.hpp
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
#include <string>
#include <type_traits>
#include <vector>

#include "mds/error.hpp"
#include "mds/field.hpp"
#include "mds/grassmannian.hpp"
#include "mds/matrix.hpp"
#include "mds/multi_index.hpp"

namespace mds {

struct PrimalTag {};
struct DualTag {};

template <class Tag>
using OtherTag = std::conditional_t<std::is_same_v<Tag, PrimalTag>, DualTag, PrimalTag>;

/// An element of ∧^k V (PrimalTag, basis e_I) or ∧^k V* (DualTag, basis
/// e^I), stored densely over I_{k,n} in lexicographic order.
template <class Tag>
class ExteriorElement {
public:
    ExteriorElement(Field field, unsigned k, unsigned n)
        : field_(std::move(field)), k_(k), n_(n), coeffs_(index_table(k, n).size(), 0) {}

    ExteriorElement(Field field, unsigned k, unsigned n, std::vector<Elem> coeffs)
        : field_(std::move(field)), k_(k), n_(n), coeffs_(std::move(coeffs)) {
        require(coeffs_.size() == index_table(k, n).size(), ErrorKind::ShapeMismatch, "coefficient vector has wrong length");
        for (Elem c : coeffs_) require(c < field_->q(), ErrorKind::InvalidArgument, "coefficient outside the field");
    }

    /// Basis element e_I (or e^I).
    static ExteriorElement basis(Field field, const MultiIndex& idx) {
        ExteriorElement e(std::move(field), idx.k(), idx.n());
        e.coeffs_[index_table(idx.k(), idx.n()).rank_of(idx)] = 1;
        return e;
    }

    static ExteriorElement basis(Field field, unsigned n, const std::vector<unsigned>& indices) {
        return basis(std::move(field), MultiIndex::from_indices(indices, n));
    }

    const Field& field() const noexcept { return field_; }
    unsigned k() const noexcept { return k_; }
    unsigned n() const noexcept { return n_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::span<const Elem> coeffs() const noexcept { return coeffs_; }
    std::span<Elem> coeffs() noexcept { return coeffs_; }

    Elem operator[](const MultiIndex& idx) const { return coeffs_[index_table(k_, n_).rank_of(idx)]; }
    Elem& operator[](const MultiIndex& idx) { return coeffs_[index_table(k_, n_).rank_of(idx)]; }

    bool is_zero() const noexcept {
        for (Elem c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    ExteriorElement& operator+=(const ExteriorElement& o) {
        check_shape(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = field_->add(coeffs_[i], o.coeffs_[i]);
        return *this;
    }

    friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }

    ExteriorElement scaled(Elem c) const {
        ExteriorElement r = *this;
        for (Elem& x : r.coeffs_) x = field_->mul(x, c);
        return r;
    }

    ExteriorElement operator-() const { return scaled(field_->neg(1)); }

    friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
        return a.k_ == b.k_ && a.n_ == b.n_ && a.field_->same_as(*b.field_) && a.coeffs_ == b.coeffs_;
    }

    void check_shape(const ExteriorElement& o) const {
        require(field_->same_as(*o.field_), ErrorKind::FieldMismatch, "exterior elements over different fields");
        require(k_ == o.k_ && n_ == o.n_, ErrorKind::ShapeMismatch, "exterior elements of different shape");
    }

    std::string to_string() const {
        const IndexTable& t = index_table(k_, n_);
        std::string s;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            if (coeffs_[i] != 1) s += std::to_string(coeffs_[i]) + "*";
            s += (std::is_same_v<Tag, DualTag> ? "e^" : "e_") + t.at(i).to_string();
        }
        return s.empty() ? "0" : s;
    }

private:
    Field field_;
    unsigned k_;
    unsigned n_;
    std::vector<Elem> coeffs_;
};

using MultiVector = ExteriorElement<PrimalTag>;
using DualForm = ExteriorElement<DualTag>;

/// Vector of V (or V*) as a degree-one element.
template <class Tag = PrimalTag>
ExteriorElement<Tag> as_degree_one(const Field& field, std::span<const Elem> v) {
    return ExteriorElement<Tag>(field, 1, static_cast<unsigned>(v.size()), std::vector<Elem>(v.begin(), v.end()));
}

/// a ∧ b for elements on the same side.
template <class Tag>
ExteriorElement<Tag> wedge(const ExteriorElement<Tag>& a, const ExteriorElement<Tag>& b) {
    require(a.field()->same_as(*b.field()), ErrorKind::FieldMismatch, "wedge across fields");
    require(a.n() == b.n(), ErrorKind::ShapeMismatch, "wedge of elements in different ambient spaces");
    require(a.k() + b.k() <= a.n(), ErrorKind::DegreeMismatch, "wedge degree exceeds ambient dimension");
    const FieldSpec& f = *a.field();
    const IndexTable& ta = index_table(a.k(), a.n());
    const IndexTable& tb = index_table(b.k(), b.n());
    const IndexTable& tr = index_table(a.k() + b.k(), a.n());
    ExteriorElement<Tag> r(a.field(), a.k() + b.k(), a.n());
    auto out = r.coeffs();
    for (std::size_t i = 0; i < ta.size(); ++i) {
        const Elem ai = a.coeffs()[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < tb.size(); ++j) {
            const Elem bj = b.coeffs()[j];
            if (bj == 0) continue;
            const int s = wedge_sign(ta.mask(i), tb.mask(j));
            if (s == 0) continue;
            const std::size_t t = static_cast<std::size_t>(tr.rank_of(ta.mask(i) | tb.mask(j)));
            const Elem term = f.mul(ai, bj);
            out[t] = s > 0 ? f.add(out[t], term) : f.sub(out[t], term);
        }
    }
    return r;
}

/// Interior product ι_ξ ω, defined by ⟨ι_ξ ω, ζ⟩ = ⟨ω, ξ ∧ ζ⟩. On basis
/// elements ι_{e_i} e^I = (-1)^{t-1} e^{I∖i} when i is the t-th index of I.
/// Works in both directions: a primal ξ acting on a form, or a dual ξ acting
/// on a multivector.
template <class Tag>
ExteriorElement<Tag> interior(const ExteriorElement<OtherTag<Tag>>& xi, const ExteriorElement<Tag>& omega) {
    require(xi.field()->same_as(*omega.field()), ErrorKind::FieldMismatch, "interior product across fields");
    require(xi.n() == omega.n(), ErrorKind::ShapeMismatch, "interior product in different ambient spaces");
    require(xi.k() <= omega.k(), ErrorKind::DegreeMismatch, "interior product degree exceeds form degree");
    const FieldSpec& f = *xi.field();
    const unsigned m = omega.k() - xi.k();
    const IndexTable& tx = index_table(xi.k(), xi.n());
    const IndexTable& tw = index_table(omega.k(), omega.n());
    const IndexTable& tr = index_table(m, omega.n());
    ExteriorElement<Tag> r(omega.field(), m, omega.n());
    auto out = r.coeffs();
    for (std::size_t j = 0; j < tr.size(); ++j) {
        const std::uint32_t jm = tr.mask(j);
        Elem acc = 0;
        for (std::size_t i = 0; i < tx.size(); ++i) {
            const Elem x = xi.coeffs()[i];
            if (x == 0) continue;
            const int s = wedge_sign(tx.mask(i), jm);
            if (s == 0) continue;
            const Elem w = omega.coeffs()[static_cast<std::size_t>(tw.rank_of(tx.mask(i) | jm))];
            if (w == 0) continue;
            const Elem term = f.mul(x, w);
            acc = s > 0 ? f.add(acc, term) : f.sub(acc, term);
        }
        out[j] = acc;
    }
    return r;
}

/// ⟨ω, λ⟩ = Σ_I ω_I λ_I.
inline Elem pairing(const DualForm& omega, const MultiVector& lambda) {
    require(omega.field()->same_as(*lambda.field()), ErrorKind::FieldMismatch, "pairing across fields");
    require(omega.k() == lambda.k() && omega.n() == lambda.n(), ErrorKind::ShapeMismatch, "pairing of mismatched degrees");
    const FieldSpec& f = *omega.field();
    Elem acc = 0;
    for (std::size_t i = 0; i < omega.size(); ++i) acc = f.add(acc, f.mul(omega.coeffs()[i], lambda.coeffs()[i]));
    return acc;
}

inline Elem dot(const FieldSpec& f, std::span<const Elem> a, std::span<const Elem> b) noexcept {
    Elem acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

/// Plücker vector of the row space of a full-rank k x n matrix.
inline MultiVector plucker_embed(const MatrixGF& m) {
    require(m.rows() <= m.cols() && m.cols() <= kMaxAmbient, ErrorKind::ShapeMismatch, "need k <= n <= 16");
    require(rank(m) == m.rows(), ErrorKind::RankDeficient, "matrix does not have full row rank");
    const unsigned k = static_cast<unsigned>(m.rows()), n = static_cast<unsigned>(m.cols());
    const IndexTable& t = index_table(k, n);
    MultiVector r(m.field(), k, n);
    for (std::size_t i = 0; i < t.size(); ++i) r.coeffs()[i] = minor_of(*m.field(), m.data(), k, n, t.mask(i));
    return r;
}

inline MultiVector plucker_embed(const GrassmannPoint& p) { return plucker_embed(p.matrix()); }

/// Plücker relations (ι_{e^K} λ) ∧ λ = 0 for every K ∈ I_{k-1,n}. For
/// a nonzero λ this holds exactly when λ is decomposable. Works for forms as
/// well, since ∧^k V* is itself an exterior power.
template <class Tag>
bool satisfies_plucker(const ExteriorElement<Tag>& lambda) {
    require(!lambda.is_zero(), ErrorKind::ZeroInput, "Plücker test of the zero element");
    const unsigned k = lambda.k(), n = lambda.n();
    if (k <= 1 || k + 1 >= n) return true;
    const FieldSpec& f = *lambda.field();
    const IndexTable& tk = index_table(k, n);
    const IndexTable& tkm1 = index_table(k - 1, n);
    const IndexTable& tkp1 = index_table(k + 1, n);
    auto lam = lambda.coeffs();
    std::vector<Elem> v(n), out(tkp1.size());
    for (std::size_t kk = 0; kk < tkm1.size(); ++kk) {
        const std::uint32_t km = tkm1.mask(kk);
        // v = ι_{e^K} λ: v_j = sign(K, j) λ_{K∪j}
        bool any = false;
        for (unsigned j = 0; j < n; ++j) {
            const std::uint32_t jm = std::uint32_t{1} << j;
            const int s = wedge_sign(km, jm);
            if (s == 0) {
                v[j] = 0;
                continue;
            }
            const Elem c = lam[static_cast<std::size_t>(tk.rank_of(km | jm))];
            v[j] = s > 0 ? c : f.neg(c);
            any = any || c != 0;
        }
        if (!any) continue;
        std::fill(out.begin(), out.end(), 0);
        for (unsigned j = 0; j < n; ++j) {
            if (v[j] == 0) continue;
            const std::uint32_t jm = std::uint32_t{1} << j;
            for (std::size_t i = 0; i < tk.size(); ++i) {
                if (lam[i] == 0) continue;
                const int s = wedge_sign(jm, tk.mask(i));
                if (s == 0) continue;
                const std::size_t t = static_cast<std::size_t>(tkp1.rank_of(jm | tk.mask(i)));
                const Elem term = f.mul(v[j], lam[i]);
                out[t] = s > 0 ? f.add(out[t], term) : f.sub(out[t], term);
            }
        }
        for (Elem x : out)
            if (x != 0) return false;
    }
    return true;
}

/// Zero counts as decomposable (0 = 0 ∧ ...).
template <class Tag>
bool is_decomposable(const ExteriorElement<Tag>& x) {
    return x.is_zero() || satisfies_plucker(x);
}

struct FormProfile {
    DualForm form;
    MatrixGF v_omega;  // rows: basis of V_ω ⊂ V
    MatrixGF u_omega;  // rows: basis of U_ω ⊂ V*
    bool decomposable;
};

/// Matrix whose i-th row is ι_{e_i} ω, in the basis of ∧^{k-1} V*.
inline MatrixGF contraction_matrix(const DualForm& omega) {
    const unsigned n = omega.n();
    MatrixGF m(omega.field(), n, index_table(omega.k() - 1, n).size());
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Elem> e(n, 0);
        e[i] = 1;
        const DualForm c = interior(as_degree_one<PrimalTag>(omega.field(), e), omega);
        for (std::size_t j = 0; j < c.size(); ++j) m(i, j) = c.coeffs()[j];
    }
    return m;
}

/// V_ω = {v : ι_v ω = 0}, U_ω = its annihilator in V*, plus decomposability.
inline FormProfile form_profile(const DualForm& omega) {
    require(!omega.is_zero(), ErrorKind::ZeroInput, "profile of the zero form");
    require(omega.k() >= 1, ErrorKind::DegreeMismatch, "profile needs a form of degree >= 1");
    MatrixGF v = nullspace(contraction_matrix(omega).transpose());
    MatrixGF u = v.rows() == 0 ? MatrixGF::identity(omega.field(), omega.n()) : nullspace(v);
    return {omega, std::move(v), std::move(u), satisfies_plucker(omega)};
}

/// π_α: the k-spaces containing a fixed (k-1)-space α.
inline std::vector<GrassmannPoint> pi_alpha(const GrassmannPoint& alpha, unsigned k, const ExecPolicy& policy = {}) {
    require(alpha.k() + 1 == k, ErrorKind::DimensionMismatch, "π_α needs dim α = k - 1");
    GrassmannSpace space(alpha.matrix().field(), k, alpha.n(), policy);
    std::vector<GrassmannPoint> out;
    for (std::uint64_t i = 0; i < space.size(); ++i) {
        GrassmannPoint beta = space.point(i);
        if (subspace_contains(beta.matrix(), alpha.matrix())) out.push_back(std::move(beta));
    }
    return out;
}

/// π^γ: the k-spaces contained in a fixed (k+1)-space γ.
inline std::vector<GrassmannPoint> pi_gamma(const GrassmannPoint& gamma, unsigned k, const ExecPolicy& policy = {}) {
    require(gamma.k() == k + 1, ErrorKind::DimensionMismatch, "π^γ needs dim γ = k + 1");
    GrassmannSpace space(gamma.matrix().field(), k, gamma.n(), policy);
    std::vector<GrassmannPoint> out;
    for (std::uint64_t i = 0; i < space.size(); ++i) {
        GrassmannPoint beta = space.point(i);
        if (subspace_contains(gamma.matrix(), beta.matrix())) out.push_back(std::move(beta));
    }
    return out;
}

}  // namespace mds
