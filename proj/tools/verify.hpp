/**************************************************************************
 * verify.hpp
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

#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mds/mds.hpp"

namespace mds::verify {

enum class Scale { Quick, Full };

struct Check {
    std::string suite;
    std::string name;
    std::string anchor;  // where the checked statement comes from
    bool passed = false;
    std::string detail;
};

using Report = std::vector<Check>;

namespace detail {

inline Check make(const std::string& suite, const std::string& name, const std::string& anchor,
                  const std::function<std::string(bool&)>& body) {
    Check c{suite, name, anchor, false, {}};
    try {
        c.detail = body(c.passed);
    } catch (const std::exception& e) {
        c.passed = false;
        c.detail = std::string("exception: ") + e.what();
    }
    return c;
}

inline std::vector<std::uint64_t> field_orders(Scale s) {
    if (s == Scale::Quick) return {2, 3, 4, 5, 7, 8, 9};
    return {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 125, 128, 243, 256};
}

}  // namespace detail

inline Report fields_suite(Scale scale) {
    Report out;
    out.push_back(detail::make("fields", "field axioms", "finite field arithmetic", [&](bool& ok) {
        ok = true;
        std::ostringstream bad;
        for (std::uint64_t q : detail::field_orders(scale)) {
            const Field F = make_field_of_order(q);
            const FieldSpec& f = *F;
            for (Elem a = 0; a < q && ok; ++a) {
                if (f.add(a, f.neg(a)) != 0) ok = false;
                if (a != 0 && f.mul(a, f.inv(a)) != 1) ok = false;
                if (f.pow(a, q) != a) ok = false;
                for (Elem b = 0; b < q && q <= 32 && ok; ++b) {
                    if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a)) ok = false;
                    const Elem c = static_cast<Elem>((a * 7 + b * 3) % q);
                    if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) ok = false;
                }
            }
            if (!ok) bad << "q=" << q;
        }
        return ok ? std::string("all orders pass") : "fails at " + bad.str();
    }));
    out.push_back(detail::make("fields", "canonical moduli", "smallest monic irreducible", [&](bool& ok) {
        ok = make_field(2, 2)->modulus_string() == "x^2+x+1" && make_field(2, 3)->modulus_string() == "x^3+x+1" &&
             make_field(3, 2)->modulus_string() == "x^2+1" && make_field(2, 8)->modulus_string() == "x^8+x^4+x^3+x+1";
        return make_field(2, 8)->modulus_string();
    }));
    out.push_back(detail::make("fields", "multiplicative group cyclic", "F_q^* is cyclic", [&](bool& ok) {
        ok = true;
        for (std::uint64_t q : detail::field_orders(scale)) {
            const Field F = make_field_of_order(q);
            const FieldSpec& f = *F;
            bool found = false;
            for (Elem g = 1; g < q && !found; ++g) {
                Elem x = g;
                std::uint64_t order = 1;
                while (x != 1) {
                    x = f.mul(x, g);
                    ++order;
                }
                found = order == q - 1;
            }
            ok = ok && found;
        }
        return std::string(ok ? "generator found for every order" : "no generator for some order");
    }));
    return out;
}

inline Report plucker_suite(Scale scale) {
    Report out;
    struct P {
        unsigned k, n;
        std::uint64_t q;
    };
    std::vector<P> params{{2, 4, 2}};
    if (scale == Scale::Full) params.insert(params.end(), {{2, 4, 3}, {2, 5, 2}, {3, 6, 2}});
    for (const P& p : params) {
        const std::string tag = "(" + std::to_string(p.k) + "," + std::to_string(p.n) + "," + std::to_string(p.q) + ")";
        const Field F = make_field_of_order(p.q);
        const PluckerTable table(F, p.k, p.n);
        out.push_back(detail::make("plucker", "point count " + tag, "Gaussian binomial", [&](bool& ok) {
            const BigInt expect = gaussian_binomial(p.k, p.n, p.q);
            ok = BigInt(table.size()) == expect;
            return "|G| = " + std::to_string(table.size()) + ", expected " + expect.str();
        }));
        out.push_back(detail::make("plucker", "embedding injective and decomposable " + tag, "Plücker relations", [&](bool& ok) {
            ok = true;
            std::set<std::vector<Elem>> seen;
            for (std::uint64_t i = 0; i < table.size(); ++i) {
                const auto pt = table.point(i);
                MultiVector v(F, p.k, p.n, std::vector<Elem>(pt.begin(), pt.end()));
                ok = ok && satisfies_plucker(v);
                seen.insert(std::vector<Elem>(pt.begin(), pt.end()));
            }
            ok = ok && seen.size() == table.size();
            return std::to_string(seen.size()) + " distinct normalized vectors";
        }));
        out.push_back(detail::make("plucker", "interior adjointness " + tag, "<i_x w, z> = <w, x ^ z>", [&](bool& ok) {
            ok = true;
            std::mt19937_64 rng(17);
            for (int t = 0; t < 100; ++t) {
                DualForm w(F, p.k, p.n);
                for (Elem& c : w.coeffs()) c = static_cast<Elem>(draw_below(rng, p.q));
                MultiVector x(F, 1, p.n), z(F, p.k - 1, p.n);
                for (Elem& c : x.coeffs()) c = static_cast<Elem>(draw_below(rng, p.q));
                for (Elem& c : z.coeffs()) c = static_cast<Elem>(draw_below(rng, p.q));
                ok = ok && pairing(interior(x, w), z) == pairing(w, wedge(x, z));
            }
            return std::string("100 random triples");
        }));
    }
    out.push_back(detail::make("plucker", "decomposable count in P(^2 F_2^4)", "Plücker quadric", [&](bool& ok) {
        const Field F = make_field(2, 1);
        std::uint64_t dec = 0, total = 0;
        for_each_projective_point(2, 6, [&](std::span<const Elem> c) {
            ++total;
            dec += satisfies_plucker(MultiVector(F, 2, 4, std::vector<Elem>(c.begin(), c.end())));
        });
        ok = dec == 35 && total == 63;
        return std::to_string(dec) + " of " + std::to_string(total);
    }));
    return out;
}

inline Report weights_suite(Scale scale) {
    Report out;
    struct P {
        unsigned k, n;
        std::uint64_t q;
        int draws;
    };
    std::vector<P> params{{2, 4, 3, 50}, {2, 5, 2, 50}};
    if (scale == Scale::Full) params = {{2, 4, 3, 200}, {2, 5, 2, 200}, {3, 6, 2, 200}};
    for (const P& p : params) {
        const std::string tag = "(" + std::to_string(p.k) + "," + std::to_string(p.n) + "," + std::to_string(p.q) + ")";
        out.push_back(detail::make("weights", "direct = recursive " + tag, "weight recursion through contractions", [&](bool& ok) {
            const Field F = make_field_of_order(p.q);
            const PluckerTable table(F, p.k, p.n);
            std::mt19937_64 rng(2024);
            ok = true;
            for (int i = 0; i < p.draws; ++i) {
                const DualForm w = random_nonzero_form(F, p.k, p.n, rng);
                ok = ok && form_weight(table, w) == form_weight_recursive(w);
            }
            return std::to_string(p.draws) + " random forms";
        }));
    }
    out.push_back(detail::make("weights", "spectrum of C(2,4;2)", "minimum weight and two-form classification", [&](bool& ok) {
        const auto spec = weight_spectrum(GrassmannCode(make_field(2, 1), 2, 4), SpectrumMode::exhaustive());
        ok = spec == WeightSpectrum{{16, 35}, {20, 28}};
        std::string s;
        for (auto [w, m] : spec) s += std::to_string(w) + ":" + std::to_string(m) + " ";
        return s;
    }));
    out.push_back(detail::make("weights", "decomposable weight q^delta", "minimum weight codewords", [&](bool& ok) {
        ok = true;
        std::mt19937_64 rng(5);
        for (auto [k, n, q] : {std::tuple{2u, 5u, 3u}, std::tuple{3u, 6u, 2u}}) {
            const Field F = make_field_of_order(q);
            const PluckerTable table(F, k, n);
            for (int i = 0; i < 20; ++i)
                ok = ok && BigInt(form_weight(table, random_decomposable_form(F, k, n, rng))) == big_pow(BigInt(q), k * (n - k));
        }
        return std::string("20 draws each at (2,5,3), (3,6,2)");
    }));
    return out;
}

inline Report sections_suite(Scale scale) {
    Report out;
    out.push_back(detail::make("sections", "point-scan = annihilator-sum, (2,4,2)", "annihilator weight identity", [&](bool& ok) {
        const Field F = make_field(2, 1);
        const PluckerTable table(F, 2, 4);
        ok = true;
        for (std::uint64_t s = 1; s < 64; ++s) {
            const auto L = LinearSection::coordinate_mask(F, 2, 4, s);
            ok = ok && section_norm(table, L, NormMethod::PointScan) == section_norm(table, L, NormMethod::AnnihilatorSum);
        }
        return std::string("63 coordinate sections");
    }));
    std::vector<std::pair<unsigned, std::uint64_t>> ie{{4, 2}};
    if (scale == Scale::Full) ie = {{4, 2}, {4, 3}, {5, 2}};
    for (auto [n, q] : ie) {
        const std::string tag = "(2," + std::to_string(n) + "," + std::to_string(q) + ")";
        out.push_back(detail::make("sections", "inclusion-exclusion = census " + tag, "alternating sum of E_r", [&](bool& ok) {
            const Field F = make_field_of_order(q);
            const BigInt a = inclusion_exclusion(2, n, F).gamma_reconstructed;
            const BigInt b = count_mds_matrix_scan(2, n, F).gamma;
            ok = a == b;
            return "reconstructed " + a.str() + ", census " + b.str();
        }));
    }
    out.push_back(detail::make("sections", "structured counts by classification, (2,5)", "c1(r), c2(r) tables", [&](bool& ok) {
        const auto sc = structured_counts(2, 5);
        const IndexTable& t = index_table(2, 5);
        std::vector<BigInt> core(11, 0), hull(11, 0);
        for (std::uint64_t s = 1; s < (1u << 10); ++s) {
            const unsigned r = static_cast<unsigned>(std::popcount(s));
            if (r < 3) continue;
            std::uint32_t inter = ~0u, uni = 0;
            for (std::uint64_t x = s; x; x &= x - 1) {
                inter &= t.mask(static_cast<std::size_t>(std::countr_zero(x)));
                uni |= t.mask(static_cast<std::size_t>(std::countr_zero(x)));
            }
            if (std::popcount(inter) == 1) core[r] += 1;
            if (std::popcount(uni) == 3) hull[r] += 1;
        }
        ok = true;
        for (unsigned r = 3; r <= 10; ++r) ok = ok && core[r] == sc.c1_by_r[r] && hull[r] == sc.c2_by_r[r];
        return "c1(3) = " + sc.c1_by_r[3].str() + ", c2(3) = " + sc.c2_by_r[3].str();
    }));
    return out;
}

inline Report asymptotics_suite(Scale scale) {
    Report out;
    out.push_back(detail::make("asymptotics", "a2 table for k = 3", "second coefficient, n = 6..9", [&](bool& ok) {
        std::string s;
        ok = true;
        const int expect[] = {152, 506, 1360, 3158};
        for (unsigned n = 6; n <= 9; ++n) {
            const BigInt a2 = params(3, n).a2;
            ok = ok && a2 == expect[n - 6];
            s += a2.str() + " ";
        }
        return s;
    }));
    out.push_back(detail::make("asymptotics", "a2 closed forms k = 1, 2", "k = 1, 2 polynomials in n", [&](bool& ok) {
        ok = true;
        for (unsigned n = 3; n <= 12; ++n) ok = ok && params(1, n).a2 == a2_closed_form(1, n) && params(2, n).a2 == a2_closed_form(2, n);
        return std::string("3 <= n <= 12");
    }));
    out.push_back(detail::make("asymptotics", "arc-count coefficients", "b1, b2 at (3,10) and (4,8)", [&](bool& ok) {
        const auto a = params(3, 10), b = params(4, 8);
        ok = a.b1 == 110 && a.b2 == 5561 && b.b1 == 62 && b.b2 == 1710;
        return "(" + a.b1.str() + "," + a.b2.str() + ") (" + b.b1.str() + "," + b.b2.str() + ")";
    }));
    std::vector<std::uint64_t> qs = scale == Scale::Quick ? std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16}
                                                          : std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47, 49, 53, 59, 61, 64};
    out.push_back(detail::make("asymptotics", "convergence (2,5)", "three-term expansion of gamma", [&](bool& ok) {
        const auto rep = convergence(2, 5, qs);
        ok = rep.bounded;
        return "max |r| lower " + std::to_string(static_cast<double>(rep.max_abs_lower)) + ", upper " +
               std::to_string(static_cast<double>(rep.max_abs_upper));
    }));
    if (scale == Scale::Full) {
        out.push_back(detail::make("asymptotics", "convergence (3,6)", "three-term expansion of gamma", [&](bool& ok) {
            const auto rep = convergence(3, 6, {2, 3, 4, 5, 7});
            ok = rep.bounded;
            return "max |r| lower " + std::to_string(static_cast<double>(rep.max_abs_lower)) + ", upper " +
                   std::to_string(static_cast<double>(rep.max_abs_upper));
        }));
    }
    return out;
}

inline Report run(const std::string& suite, Scale scale) {
    Report out;
    auto add = [&](Report r) { out.insert(out.end(), r.begin(), r.end()); };
    const bool all = suite == "all";
    if (all || suite == "fields") add(fields_suite(scale));
    if (all || suite == "plucker") add(plucker_suite(scale));
    if (all || suite == "weights") add(weights_suite(scale));
    if (all || suite == "sections") add(sections_suite(scale));
    if (all || suite == "asymptotics") add(asymptotics_suite(scale));
    return out;
}

}  // namespace mds::verify
