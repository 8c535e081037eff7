/**************************************************************************
 * mds.cpp
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
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mds/mds.hpp"
#include "verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace mds;

enum class Format { Json, Csv, Table };

struct RunConfig {
    unsigned k = 0, n = 0;
    std::uint64_t q = 0;
    unsigned threads = 1;
    std::uint64_t budget = 0;
    std::string format = "json";
    std::uint64_t seed = 0;
    std::string output;
    bool no_timing = false;

    ExecPolicy policy() const { return {threads, budget}; }
    Format fmt() const {
        if (format == "csv") return Format::Csv;
        if (format == "table") return Format::Table;
        return Format::Json;
    }
};

std::string dec(const BigInt& v) { return v.str(); }

std::uint64_t parse_u64(std::string_view s, const std::string& what);

std::string rational_str(const Rational& r, int digits = 6) {
    std::ostringstream os;
    os.precision(digits);
    os << std::fixed << static_cast<double>(r);
    return os.str();
}

/// Left-aligned fixed-width table with a header row.
std::string render_table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w(head.size());
    for (std::size_t i = 0; i < head.size(); ++i) w[i] = head[i].size();
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            os << r[i];
            if (i + 1 < r.size()) os << std::string(w[i] - r[i].size() + 2, ' ');
        }
        os << '\n';
    };
    line(head);
    for (const auto& r : rows) line(r);
    return os.str();
}

std::string render_csv(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
        os << '\n';
    };
    line(head);
    for (const auto& r : rows) line(r);
    return os.str();
}

std::string render(Format f, const ordered_json& j, const std::vector<std::string>& head,
                   const std::vector<std::vector<std::string>>& rows) {
    if (f == Format::Csv) return render_csv(head, rows);
    if (f == Format::Table) return render_table(head, rows);
    return j.dump(2) + "\n";
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    require(static_cast<bool>(out), ErrorKind::InvalidArgument, "cannot open output file " + cfg.output);
    out << text;
}

Field field_for(const RunConfig& cfg) { return make_field_of_order(cfg.q); }

std::vector<std::uint64_t> parse_q_list(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        out.push_back(parse_u64(tok, "q in list"));
    }
    return out;
}

ordered_json census_json(const CensusResult& r, bool no_timing) {
    return ordered_json{{"k", r.k},
                        {"n", r.n},
                        {"q", r.q},
                        {"gamma", dec(r.gamma)},
                        {"gamma_tilde", dec(r.gamma_tilde)},
                        {"method", std::string(to_string(r.method))},
                        {"elapsed_ms", no_timing ? 0 : r.elapsed.count()}};
}

int cmd_count(const RunConfig& cfg, const std::string& method) {
    const Field F = field_for(cfg);
    std::vector<CensusResult> results;
    if (method == "scan" || method == "both") results.push_back(count_mds_matrix_scan(cfg.k, cfg.n, F, cfg.policy()));
    if (method == "filter" || method == "both") results.push_back(count_mds_grassmannian_filter(cfg.k, cfg.n, F, cfg.policy()));
    if (results.size() == 2)
        require(results[0].gamma == results[1].gamma, ErrorKind::ExactnessViolation,
                "scan and filter disagree: " + dec(results[0].gamma) + " vs " + dec(results[1].gamma));
    ordered_json j = results.size() == 1 ? census_json(results[0], cfg.no_timing) : ordered_json::array();
    if (results.size() == 2)
        for (const auto& r : results) j.push_back(census_json(r, cfg.no_timing));
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : results)
        rows.push_back({std::to_string(r.k), std::to_string(r.n), std::to_string(r.q), dec(r.gamma), dec(r.gamma_tilde),
                        std::string(to_string(r.method)), std::to_string(cfg.no_timing ? 0 : r.elapsed.count())});
    emit(cfg, render(cfg.fmt(), j, {"k", "n", "q", "gamma", "gamma_tilde", "method", "elapsed_ms"}, rows));
    return 0;
}

int cmd_grassmann_count(const RunConfig& cfg) {
    require(cfg.k <= cfg.n, ErrorKind::OutOfRange, "need k <= n");
    require(is_prime_power(cfg.q), ErrorKind::NonPrimePower, std::to_string(cfg.q) + " is not a prime power");
    const BigInt count = gaussian_binomial(cfg.k, cfg.n, cfg.q);
    ordered_json j{{"k", cfg.k}, {"n", cfg.n}, {"q", cfg.q}, {"count", dec(count)}};
    emit(cfg, render(cfg.fmt(), j, {"k", "n", "q", "count"},
                     {{std::to_string(cfg.k), std::to_string(cfg.n), std::to_string(cfg.q), dec(count)}}));
    return 0;
}

int cmd_sections(const RunConfig& cfg, unsigned max_r, bool exhaustive) {
    const Field F = field_for(cfg);
    const PluckerTable table(F, cfg.k, cfg.n, cfg.policy());
    const std::size_t N = table.width();
    require(N <= 24, ErrorKind::BudgetExceeded, "section listing is limited to N <= 24 coordinates");
    require(max_r >= 1, ErrorKind::InvalidArgument, "--max-r must be at least 1");
    const ZeroPatternHistogram hist(table);
    const IndexTable& t = index_table(cfg.k, cfg.n);
    check_budget(BigInt(std::uint64_t{1} << N), cfg.policy(), "section listing");
    std::vector<std::vector<std::string>> rows;
    ordered_json arr = ordered_json::array();
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << N); ++s) {
        const unsigned r = static_cast<unsigned>(std::popcount(s));
        if (r > max_r) continue;
        const std::uint64_t norm = hist.norm(s);
        bool in_g = coordinate_ann_in_grassmannian(cfg.k, cfg.n, s);
        if (exhaustive) {
            // Test every projective point of Ann(L) against the Plücker relations.
            const LinearSection L = LinearSection::coordinate_mask(F, cfg.k, cfg.n, s);
            bool all = true;
            for_each_projective_point(F->q(), r, [&](std::span<const Elem> c) { all = all && satisfies_plucker(combine(L.ann_basis(), c)); });
            require(all == in_g, ErrorKind::ExactnessViolation, "combinatorial Ann-in-G test disagrees with the Plücker test");
            in_g = all;
        }
        std::string members;
        for (std::uint64_t x = s; x; x &= x - 1) {
            if (!members.empty()) members += " ";
            members += t.at(static_cast<std::size_t>(std::countr_zero(x))).to_string();
        }
        rows.push_back({std::to_string(r), std::to_string(s), std::to_string(norm), in_g ? "1" : "0"});
        arr.push_back(ordered_json{{"r", r}, {"subset_id", s}, {"subset", members}, {"norm", std::to_string(norm)}, {"ann_in_g", in_g}});
    }
    const ordered_json j{{"k", cfg.k}, {"n", cfg.n}, {"q", cfg.q}, {"sections", arr}};
    emit(cfg, render(cfg.fmt(), j, {"r", "subset_id", "norm", "ann_in_g"}, rows));
    return 0;
}

int cmd_incl_excl(const RunConfig& cfg, bool verify_census) {
    const Field F = field_for(cfg);
    const auto rep = inclusion_exclusion(cfg.k, cfg.n, F, cfg.policy());
    ordered_json e = ordered_json::array();
    std::vector<std::vector<std::string>> rows;
    for (std::size_t r = 0; r < rep.e_terms.size(); ++r) {
        e.push_back(dec(rep.e_terms[r]));
        rows.push_back({std::to_string(r + 1), dec(rep.e_terms[r]), dec(rep.c1_by_r[r + 1]), dec(rep.c2_by_r[r + 1])});
    }
    ordered_json j{{"k", rep.k}, {"n", rep.n}, {"q", rep.q}, {"e_terms", e}, {"gamma_reconstructed", dec(rep.gamma_reconstructed)}};
    int status = 0;
    if (verify_census) {
        const BigInt census = count_mds_matrix_scan(cfg.k, cfg.n, F, cfg.policy()).gamma;
        j["census_gamma"] = dec(census);
        j["agrees"] = census == rep.gamma_reconstructed;
        if (census != rep.gamma_reconstructed) {
            std::cerr << "mds: inclusion-exclusion gives " << dec(rep.gamma_reconstructed) << " but census gives " << dec(census) << "\n";
            status = 1;
        }
    }
    emit(cfg, render(cfg.fmt(), j, {"r", "E_r", "c1", "c2"}, rows));
    return status;
}

int cmd_asympt(const RunConfig& cfg, const std::string& q_list) {
    const AsymptoticParams p = params(cfg.k, cfg.n);
    ordered_json j{{"k", p.k},         {"n", p.n},         {"delta", p.delta}, {"N", dec(p.big_n)},
                   {"a2", dec(p.a2)}, {"b1", dec(p.b1)}, {"b2", dec(p.b2)}};
    std::vector<std::vector<std::string>> rows;
    if (!q_list.empty()) {
        const auto rep = convergence(cfg.k, cfg.n, parse_q_list(q_list), cfg.policy());
        ordered_json arr = ordered_json::array();
        for (const auto& r : rep.rows) {
            arr.push_back(ordered_json{{"q", r.q},
                                       {"gamma", dec(r.gamma_exact)},
                                       {"predicted", dec(r.predicted)},
                                       {"residual", dec(r.residual)},
                                       {"normalized_residual", rational_str(r.normalized)},
                                       {"source", r.source}});
            rows.push_back({std::to_string(r.q), dec(r.gamma_exact), dec(r.predicted), dec(r.residual), rational_str(r.normalized)});
        }
        j["rows"] = arr;
        j["bounded"] = rep.bounded;
        j["max_abs_lower"] = rational_str(rep.max_abs_lower);
        j["max_abs_upper"] = rational_str(rep.max_abs_upper);
    }
    emit(cfg, render(cfg.fmt(), j, {"q", "gamma", "predicted", "residual", "normalized_residual"}, rows));
    return 0;
}

std::uint64_t parse_u64(std::string_view s, const std::string& what) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    require(ec == std::errc{} && ptr == s.data() + s.size() && !s.empty(), ErrorKind::InvalidArgument, "bad " + what + ": " + std::string(s));
    return v;
}

/// "exhaustive", "sample:COUNT:SEED", or "sample:COUNT" (seed from --seed).
SpectrumMode parse_spectrum(const std::string& s, std::uint64_t default_seed) {
    if (s == "exhaustive") return SpectrumMode::exhaustive();
    require(s.rfind("sample:", 0) == 0, ErrorKind::InvalidArgument, "spectrum must be 'exhaustive' or 'sample:COUNT:SEED', got " + s);
    const std::string_view rest = std::string_view(s).substr(7);
    const auto colon = rest.find(':');
    const std::uint64_t count = parse_u64(rest.substr(0, colon), "sample count");
    const std::uint64_t seed = colon == std::string_view::npos ? default_seed : parse_u64(rest.substr(colon + 1), "sample seed");
    require(count > 0, ErrorKind::InvalidArgument, "sample count must be positive");
    return SpectrumMode::sample(count, seed);
}

int cmd_code(const RunConfig& cfg, const std::string& spectrum, unsigned dr, const std::string& dr_mode) {
    const GrassmannCode code = build_code(cfg.k, cfg.n, field_for(cfg), cfg.policy());
    ordered_json j{{"k", cfg.k}, {"n", cfg.n}, {"q", cfg.q}, {"length", code.length()}, {"dimension", code.dimension()}};
    std::vector<std::vector<std::string>> rows;
    if (!spectrum.empty()) {
        const auto spec = weight_spectrum(code, parse_spectrum(spectrum, cfg.seed), cfg.policy());
        ordered_json arr = ordered_json::array();
        for (auto [w, m] : spec) {
            arr.push_back(ordered_json{{"weight", w}, {"multiplicity", m}});
            rows.push_back({std::to_string(w), std::to_string(m)});
        }
        j["spectrum"] = arr;
    }
    if (dr > 0) {
        const auto mode = dr_mode == "exhaustive" ? HigherWeightMode::Exhaustive : HigherWeightMode::Structured;
        j["d_r"] = ordered_json{{"r", dr}, {"mode", dr_mode}, {"value", higher_weight_search(code, dr, mode, cfg.policy())}};
    }
    if (cfg.fmt() != Format::Json && rows.empty()) {
        rows.push_back({"length", std::to_string(code.length())});
        rows.push_back({"dimension", std::to_string(code.dimension())});
        if (dr > 0) rows.push_back({"d_" + std::to_string(dr), j["d_r"]["value"].dump()});
        emit(cfg, render(cfg.fmt(), j, {"key", "value"}, rows));
        return 0;
    }
    emit(cfg, render(cfg.fmt(), j, {"weight", "multiplicity"}, rows));
    return 0;
}

DualForm parse_form(const Field& F, unsigned k, unsigned n, const std::string& text) {
    ordered_json terms;
    try {
        terms = ordered_json::parse(text);
    } catch (const std::exception& e) {
        fail(ErrorKind::InvalidArgument, std::string("form is not valid JSON: ") + e.what());
    }
    require(terms.is_array(), ErrorKind::InvalidArgument, "form must be a JSON array of terms");
    DualForm w(F, k, n);
    for (const auto& term : terms) {
        require(term.is_object() && term.contains("index") && term["index"].is_array(), ErrorKind::InvalidArgument,
                "each term needs an 'index' array");
        std::vector<unsigned> idx;
        for (const auto& i : term["index"]) {
            require(i.is_number_integer() && i.get<long long>() >= 1, ErrorKind::BadIndex, "indices are positive integers");
            idx.push_back(i.get<unsigned>());
        }
        require(idx.size() == k, ErrorKind::DegreeMismatch, "term has " + std::to_string(idx.size()) + " indices, expected k = " + std::to_string(k));
        const long long c = term.value("coeff", 1LL);
        require(c >= 0 && static_cast<std::uint64_t>(c) < F->q(), ErrorKind::InvalidArgument, "coefficient outside 0..q-1");
        // A repeated or unsorted index list is normalized with its sign.
        std::uint32_t mask = 0;
        for (unsigned i : idx) {
            require(i <= n, ErrorKind::BadIndex, "index " + std::to_string(i) + " exceeds n");
            require(!((mask >> (i - 1)) & 1u), ErrorKind::BadIndex, "repeated index in term");
            mask |= std::uint32_t{1} << (i - 1);
        }
        unsigned inversions = 0;
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b) inversions += idx[a] > idx[b];
        const Elem coeff = inversions % 2 ? F->neg(static_cast<Elem>(c)) : static_cast<Elem>(c);
        w += DualForm::basis(F, MultiIndex(mask, n)).scaled(coeff);
    }
    return w;
}

int cmd_weight(const RunConfig& cfg, const std::string& form, const std::string& method) {
    const Field F = field_for(cfg);
    const DualForm w = parse_form(F, cfg.k, cfg.n, form);
    ordered_json j{{"k", cfg.k}, {"n", cfg.n}, {"q", cfg.q}, {"form", w.to_string()}};
    std::uint64_t weight = 0;
    if (w.is_zero()) {
        weight = 0;
    } else if (method == "both") {
        const auto a = form_weight(w, WeightMethod::Direct, cfg.policy());
        const auto b = form_weight(w, WeightMethod::Recursive, cfg.policy());
        require(a == b, ErrorKind::ExactnessViolation, "direct and recursive weights disagree");
        weight = a;
    } else {
        weight = form_weight(w, method == "recursive" ? WeightMethod::Recursive : WeightMethod::Direct, cfg.policy());
    }
    const bool decomposable = is_decomposable(w);
    j["weight"] = std::to_string(weight);
    j["decomposable"] = decomposable;
    j["method"] = method;
    emit(cfg, render(cfg.fmt(), j, {"weight", "decomposable"}, {{std::to_string(weight), decomposable ? "1" : "0"}}));
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, const std::string& scale) {
    const auto report = verify::run(suite, scale == "full" ? verify::Scale::Full : verify::Scale::Quick);
    bool all = true;
    ordered_json arr = ordered_json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : report) {
        all = all && c.passed;
        arr.push_back(ordered_json{{"suite", c.suite}, {"check", c.name}, {"anchor", c.anchor}, {"passed", c.passed}, {"detail", c.detail}});
        rows.push_back({c.passed ? "PASS" : "FAIL", c.suite, c.name, c.anchor, c.detail});
    }
    const ordered_json j{{"suite", suite}, {"scale", scale}, {"passed", all}, {"checks", arr}};
    emit(cfg, render(cfg.fmt(), j, {"status", "suite", "check", "anchor", "detail"}, rows));
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counting MDS codes and Grassmann linear sections over finite fields"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.budget = 0;

    auto common = [&](CLI::App* sub, bool needs_q) {
        sub->add_option("--k", cfg.k, "subspace dimension")->required()->check(CLI::Range(1u, kMaxAmbient));
        sub->add_option("--n", cfg.n, "ambient dimension")->required()->check(CLI::Range(1u, kMaxAmbient));
        if (needs_q) sub->add_option("--q", cfg.q, "field order (prime power)")->required()->check(CLI::PositiveNumber);
        sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--budget", cfg.budget, "candidate cap (default: MDS_BUDGET or 2^32)")->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
        sub->add_option("--seed", cfg.seed, "PRNG seed");
        sub->add_option("--output", cfg.output, "write output to this file");
        sub->add_flag("--no-timing", cfg.no_timing, "report elapsed_ms as 0");
    };

    std::string method = "scan";
    auto* count = app.add_subcommand("count", "count MDS codes gamma(k,n) and arcs");
    common(count, true);
    count->add_option("--method", method, "scan, filter or both")->check(CLI::IsMember({"scan", "filter", "both"}));

    auto* gcount = app.add_subcommand("grassmann-count", "number of points of G(k,n) over F_q");
    common(gcount, true);

    unsigned max_r = 2;
    bool exhaustive = false;
    auto* sections = app.add_subcommand("sections", "norms of coordinate linear sections");
    common(sections, true);
    sections->add_option("--max-r", max_r, "largest codimension");
    sections->add_flag("--exhaustive", exhaustive, "confirm ann-in-G flags by testing every point of Ann(L)");

    bool verify_census = false;
    auto* ie = app.add_subcommand("incl-excl", "reconstruct gamma by inclusion-exclusion");
    common(ie, true);
    ie->add_flag("--verify-against-census", verify_census, "compare with the matrix scan");

    std::string q_list;
    auto* asympt = app.add_subcommand("asympt", "asymptotic coefficients and convergence table");
    common(asympt, false);
    asympt->add_option("--q-list", q_list, "comma separated field orders");

    std::string spectrum, dr_mode = "structured";
    unsigned dr = 0;
    auto* code = app.add_subcommand("code", "Grassmann code parameters and weights");
    common(code, true);
    code->add_option("--spectrum", spectrum, "exhaustive or sample:COUNT:SEED");
    code->add_option("--dr", dr, "higher weight d_r");
    code->add_option("--dr-mode", dr_mode, "structured or exhaustive")->check(CLI::IsMember({"structured", "exhaustive"}));

    std::string form, weight_method = "direct";
    auto* weight = app.add_subcommand("weight", "weight of a k-form");
    common(weight, true);
    weight->add_option("--form", form, "JSON terms, e.g. [{\"index\":[1,2],\"coeff\":1}]")->required();
    weight->add_option("--method", weight_method, "direct, recursive or both")->check(CLI::IsMember({"direct", "recursive", "both"}));

    std::string suite = "all", scale = "quick";
    auto* verify = app.add_subcommand("verify", "run property suites");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"fields", "plucker", "weights", "sections", "asymptotics", "all"}));
    verify->add_option("--scale", scale)->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv", "table"}));
    verify->add_option("--output", cfg.output);
    verify->add_option("--seed", cfg.seed);
    verify->add_option("--threads", cfg.threads)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (cfg.budget == 0) cfg.budget = default_budget();
        // Per-command default formats when --format is absent.
        for (auto [sub, fmt] : {std::pair{sections, "csv"}, std::pair{code, "csv"}, std::pair{verify, "table"}})
            if (app.got_subcommand(sub) && sub->get_option("--format")->count() == 0) cfg.format = fmt;
        if (app.got_subcommand(count)) {
            require(cfg.k < cfg.n, ErrorKind::OutOfRange, "census needs k < n");
            return cmd_count(cfg, method);
        }
        if (app.got_subcommand(gcount)) return cmd_grassmann_count(cfg);
        if (app.got_subcommand(sections)) return cmd_sections(cfg, max_r, exhaustive);
        if (app.got_subcommand(ie)) return cmd_incl_excl(cfg, verify_census);
        if (app.got_subcommand(asympt)) return cmd_asympt(cfg, q_list);
        if (app.got_subcommand(code)) return cmd_code(cfg, spectrum, dr, dr_mode);
        if (app.got_subcommand(weight)) return cmd_weight(cfg, form, weight_method);
        if (app.got_subcommand(verify)) return cmd_verify(cfg, suite, scale);
    } catch (const Error& e) {
        std::cerr << "mds: " << e.what() << "\n";
        return e.kind() == ErrorKind::BudgetExceeded ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "mds: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
