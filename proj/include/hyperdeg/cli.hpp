#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "hyperdeg/cache.hpp"
#include "hyperdeg/json_io.hpp"
#include "hyperdeg/verify.hpp"
#include "hyperdeg/zonotope.hpp"

namespace hyperdeg::cli {

inline void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cannot open output path: " + path);
    out << text;
}

inline KFamily load_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open family file: " + path);
    json j;
    in >> j;
    return family_from_json(j);
}

inline std::vector<int> parse_ints(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

inline int run_cli(int argc, const char* const* argv) {
    CLI::App app{"hyperdeg: exact computations on k-family degree sequences"};
    app.require_subcommand(1);

    CacheConfig cache = CacheConfig::from_environment();
    CacheStats cache_stats;
    std::string cache_dir_flag;
    bool no_cache = false;
    bool stats = false;
    int threads = 1;
    app.add_option("--cache-dir", cache_dir_flag, "cache directory (overrides HYPERDEG_CACHE)");
    app.add_flag("--no-cache", no_cache, "disable the enumeration cache");
    app.add_flag("--stats", stats, "print cache statistics to stderr");
    app.add_option("--threads", threads, "worker threads for exhaustive sweeps")
        ->check(CLI::PositiveNumber);

    std::string out_path, family_path, format = "json";

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "hierarchy report for a family");
    int budget_t = 3;
    classify_cmd->add_option("--family", family_path, "family JSON file")->required();
    classify_cmd->add_option("--budget-t", budget_t, "check CC_t/DCC_t up to this t");
    classify_cmd->add_option("--out", out_path, "output path");

    // count-degseq
    auto* count_cmd = app.add_subcommand("count-degseq", "count degree sequences on [n]");
    int n_opt = 0, k_opt = 0;
    count_cmd->add_option("--n", n_opt)->required();
    count_cmd->add_option("--k", k_opt)->required();
    count_cmd->add_option("--out", out_path, "write the distinct degree partitions as CSV");

    // check-degseq
    auto* check_cmd = app.add_subcommand("check-degseq", "is a vector a degree sequence?");
    std::string d_csv;
    check_cmd->add_option("--k", k_opt)->required();
    check_cmd->add_option("--d", d_csv, "comma-separated degrees")->required();

    // enumerate-shifted
    auto* enum_cmd = app.add_subcommand("enumerate-shifted", "all shifted k-families of size m");
    int m_opt = 0;
    enum_cmd->add_option("--k", k_opt)->required();
    enum_cmd->add_option("--m", m_opt)->required();
    enum_cmd->add_option("--out", out_path, "output path (JSON lines)");

    // swing
    auto* swing_cmd = app.add_subcommand("swing", "apply one swing to a family");
    std::string a_csv;
    int i_opt = 0, j_opt = 0;
    swing_cmd->add_option("--family", family_path)->required();
    swing_cmd->add_option("--a", a_csv, "the fixed (k-1)-set, comma-separated")->required();
    swing_cmd->add_option("--i", i_opt)->required();
    swing_cmd->add_option("--j", j_opt)->required();
    swing_cmd->add_option("--out", out_path);

    // cubes
    auto* cubes_cmd = app.add_subcommand("cubes", "cube-decomposition equivalence report");
    bool check_flag = false, dump_cells = false;
    cubes_cmd->add_option("--family", family_path)->required();
    cubes_cmd->add_flag("--check", check_flag, "run the four-way equivalence check");
    cubes_cmd->add_flag("--dump-cells", dump_cells, "include the cell sets");
    cubes_cmd->add_option("--out", out_path);

    // holes
    auto* holes_cmd = app.add_subcommand("holes", "search for non-realizable lattice points");
    holes_cmd->add_option("--n", n_opt)->required();
    holes_cmd->add_option("--k", k_opt)->required();
    holes_cmd->add_option("--out", out_path, "CSV output (empty file = no holes)");

    // plethysm
    auto* plet_cmd = app.add_subcommand("plethysm", "Schur expansion of e_m[e_k]");
    std::string basis = "schur";
    int max_weight = 12;
    plet_cmd->add_option("--m", m_opt)->required();
    plet_cmd->add_option("--k", k_opt)->required();
    plet_cmd->add_option("--basis", basis)->check(CLI::IsMember({"schur", "monomial"}));
    plet_cmd->add_option("--max-weight", max_weight, "km budget");
    plet_cmd->add_option("--out", out_path);

    // phi
    auto* phi_cmd = app.add_subcommand("phi", "sum of s_d(K) over shifted k-families of size m");
    phi_cmd->add_option("--k", k_opt)->required();
    phi_cmd->add_option("--m", m_opt)->required();
    phi_cmd->add_option("--out", out_path);

    // upsilon
    auto* ups_cmd = app.add_subcommand("upsilon", "the recursive plethysm correction");
    bool check_positivity = false;
    ups_cmd->add_option("--k", k_opt)->required();
    ups_cmd->add_option("--m", m_opt)->required();
    ups_cmd->add_flag("--check-positivity", check_positivity,
                      "also report whether (-1)^m upsilon is Schur-positive");
    ups_cmd->add_option("--max-weight", max_weight, "km budget");
    ups_cmd->add_option("--out", out_path);

    // hwv
    auto* hwv_cmd = app.add_subcommand("hwv", "highest-weight multiplicity of a partition");
    std::string lambda_csv;
    bool verify_shifted = false;
    hwv_cmd->add_option("--lambda", lambda_csv, "partition, comma-separated")->required();
    hwv_cmd->add_option("--k", k_opt)->required();
    hwv_cmd->add_option("--n", n_opt, "number of vertices (defaults to the partition length)");
    hwv_cmd->add_flag("--verify-shifted", verify_shifted,
                      "exhaustively recheck highest weight == shifted on [5]");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
    std::string tier = "desk";
    verify_cmd->add_option("--tier", tier)->check(CLI::IsMember({"desk", "extended"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (no_cache) {
        cache.enabled = false;
    } else if (!cache_dir_flag.empty()) {
        cache.dir = cache_dir_flag;
        cache.enabled = true;
    }

    auto print_stats = [&]() {
        if (stats)
            std::cerr << "cache: " << cache_stats.hits << " hits, " << cache_stats.misses
                      << " misses, " << cache_stats.rebuilds << " rebuilds\n";
    };

    try {
        if (app.got_subcommand(classify_cmd)) {
            KFamily K = load_family(family_path);
            HierarchyReport rep = hierarchy_report(K);
            json j = hierarchy_report_to_json(rep);
            json cc = json::array(), dcc = json::array();
            for (int t = 1; t <= budget_t; ++t) {
                cc.push_back(satisfies_cc(K, t).ok);
                dcc.push_back(satisfies_dcc(K, t).ok);
            }
            j["cc_up_to_budget"] = cc;
            j["dcc_up_to_budget"] = dcc;
            write_output(out_path, j.dump(2));
        } else if (app.got_subcommand(count_cmd)) {
            std::string payload = cache_get_or_build(
                cache, "degseq-n" + std::to_string(n_opt) + "-k" + std::to_string(k_opt),
                [&]() {
                    std::ostringstream csv;
                    for_each_degree_partition(n_opt, k_opt, [&](const Partition& p) {
                        for (std::size_t i = 0; i < p.size(); ++i)
                            csv << (i ? "," : "") << p[i];
                        csv << "\n";
                    });
                    return csv.str();
                },
                &cache_stats);
            // the count is the rearrangement total over the cached partitions
            mpz_class total = 0;
            std::stringstream ss(payload);
            std::string line;
            while (std::getline(ss, line))
                total += rearrangement_count(parse_ints(line), n_opt);
            if (payload.empty()) total = count_degree_sequences(n_opt, k_opt);
            std::cout << total.get_str() << "\n";
            if (!out_path.empty()) write_output(out_path, payload);
            print_stats();
        } else if (app.got_subcommand(check_cmd)) {
            std::vector<int> d = parse_ints(d_csv);
            bool ok = is_degree_sequence(d, k_opt);
            std::cout << (ok ? "yes" : "no") << "\n";
        } else if (app.got_subcommand(enum_cmd)) {
            std::string payload = cache_get_or_build(
                cache, "shifted-k" + std::to_string(k_opt) + "-m" + std::to_string(m_opt),
                [&]() {
                    std::ostringstream lines;
                    for_each_shifted_sized(k_opt, m_opt, [&](const KFamily& K) {
                        lines << family_to_json(K).dump() << "\n";
                    });
                    return lines.str();
                },
                &cache_stats);
            write_output(out_path, payload);
            print_stats();
        } else if (app.got_subcommand(swing_cmd)) {
            KFamily K = load_family(family_path);
            KFamily R = swing(K, parse_ints(a_csv), i_opt, j_opt);
            write_output(out_path, family_to_json(R).dump(2));
        } else if (app.got_subcommand(cubes_cmd)) {
            KFamily K = load_family(family_path);
            json j;
            if (check_flag || !dump_cells) {
                GeometryReport rep = shifted_equivalence_check(K);
                j["shifted"] = rep.shifted;
                j["subfacet_ideal"] = rep.subfacet_ideal;
                j["vertex_ideal"] = rep.vertex_ideal;
                j["sectors_match"] = rep.sectors_match;
                j["mismatched_sectors"] = rep.mismatched_sectors;
            }
            if (dump_cells) {
                j["vertex_cells"] = cellset_to_json(vertex_decomposition(K));
                j["subfacet_cells"] = cellset_to_json(subfacet_decomposition(K));
                json alphas = json::array();
                for (const auto& a : sector_families(K)) alphas.push_back(family_to_json(a));
                j["sector_families"] = alphas;
            }
            write_output(out_path, j.dump(2));
        } else if (app.got_subcommand(holes_cmd)) {
            auto rep = holes_report(n_opt, k_opt);
            std::ostringstream csv;
            csv << "vector,member,realizable\n";
            for (const auto& d : rep.holes) {
                for (std::size_t i = 0; i < d.size(); ++i) csv << (i ? " " : "") << d[i];
                csv << ",1,0\n";
            }
            write_output(out_path, csv.str());
            std::cerr << "scanned " << rep.candidates << " candidates, " << rep.realizable
                      << " realizable, " << rep.holes.size() << " holes\n";
        } else if (app.got_subcommand(plet_cmd)) {
            SymPoly p = plethysm_em_ek(m_opt, k_opt, max_weight);
            if (basis == "monomial") p = schur_to_mono(p);
            write_output(out_path, sympoly_to_json(p).dump(2));
        } else if (app.got_subcommand(phi_cmd)) {
            write_output(out_path, sympoly_to_json(phi(k_opt, m_opt)).dump(2));
        } else if (app.got_subcommand(ups_cmd)) {
            SymPoly u = upsilon(k_opt, m_opt, max_weight);
            json j = sympoly_to_json(u);
            if (check_positivity) {
                SymPoly alt = sym_scale(u, (m_opt % 2 == 0) ? 1 : -1);
                j["alternating_schur_positive"] = is_schur_positive(alt).positive;
            }
            write_output(out_path, j.dump(2));
        } else if (app.got_subcommand(hwv_cmd)) {
            Partition lambda = normalized_partition(parse_ints(lambda_csv));
            int n = n_opt > 0 ? n_opt : static_cast<int>(lambda.size());
            long long dim = hw_space_dimension(lambda, k_opt, n);
            std::cout << dim << "\n";
            if (verify_shifted) {
                for (int k : {2, 3}) {
                    std::uint64_t total = binomial(5, k);
                    std::uint64_t bad = verify_detail::count_violations(
                        std::uint64_t(1) << total, threads, [&](std::uint64_t mask) {
                            KFamily K = verify_detail::family_from_mask(5, k, mask);
                            return is_highest_weight(K) == is_shifted(K);
                        });
                    std::cout << "highest-weight sweep k=" << k << ": "
                              << (bad == 0 ? "ok" : "FAILED") << "\n";
                    if (bad) return 3;
                }
            }
        } else if (app.got_subcommand(verify_cmd)) {
            bool extended = tier == "extended";
            auto results = run_acceptance(extended, threads);
            bool all = true;
            for (const auto& r : results) {
                char line[64];
                std::snprintf(line, sizeof line, "criterion %02d %-4s", r.id,
                              r.pass ? "PASS" : "FAIL");
                std::cout << line << r.name << " (" << std::fixed << std::setprecision(2)
                          << r.seconds << "s)" << (r.detail.empty() ? "" : ": ") << r.detail
                          << "\n";
                all = all && r.pass;
            }
            return all ? 0 : 1;
        }
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const InternalCheckError& e) {
        std::cerr << "internal consistency violation: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace hyperdeg::cli
