#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gspectra/generators.hpp"
#include "runner.hpp"

namespace {

using namespace gspectra;
using namespace gspectra::cli;

constexpr int kExitOk = 0;
constexpr int kExitOperational = 1;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write: " + out_path);
    f << content;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct FamilyFlags {
    std::string family;  // planar|outerplanar|book:K|cycle:K
    double c = -1.0;
    double eps = -1.0;

    std::optional<FamilyParams> resolve() const {
        if (!family.empty()) {
            if (family == "planar") return corollary_class(CorollaryTag::Planar).fp;
            if (family == "outerplanar") return corollary_class(CorollaryTag::Outerplanar).fp;
            if (family.rfind("book:", 0) == 0) {
                return corollary_class(CorollaryTag::BookFree, std::stoi(family.substr(5))).fp;
            }
            if (family.rfind("cycle:", 0) == 0) {
                return corollary_class(CorollaryTag::CycleFree, std::stoi(family.substr(6))).fp;
            }
            throw UsageError("unknown family tag: " + family);
        }
        if (c > 0.0 && eps > 0.0) return FamilyParams{eps, c};
        if (c > 0.0 || eps > 0.0) throw UsageError("--c and --eps must be given together");
        return std::nullopt;
    }
};

int cmd_analyze(const std::string& input, const std::string& out_path, double zero_tol_scale) {
    Graph g;
    std::string text;
    if (input == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else if (std::filesystem::exists(input)) {
        std::ifstream f(input);
        std::stringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    } else {
        text = input;  // graph6 literal
    }
    const size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw UsageError("empty input");
    try {
        if (std::isdigit(static_cast<unsigned char>(text[first]))) {
            g = parse_edge_list_text(text);
        } else {
            // a file may hold the graph6 on its first line
            std::string line = text.substr(first);
            if (auto nl = line.find('\n'); nl != std::string::npos) line = line.substr(0, nl);
            g = parse_graph6(line);
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    CheckOptions opt;
    opt.zero_tol_scale = zero_tol_scale;
    GraphRecord r = make_record(g, kAllChecks, opt);
    write_output(out_path, record_to_json(r).dump(2) + "\n");
    return kExitOk;
}

int cmd_verify(const std::string& corpus_name, const std::string& checks_csv,
               const FamilyFlags& fam, int k, int workers, double zero_tol_scale,
               const std::string& out_path, const std::string& format) {
    CheckOptions opt;
    opt.fp = fam.resolve();
    opt.k = k;
    opt.zero_tol_scale = zero_tol_scale;
    std::vector<std::string> checks = checks_csv.empty() ? kAllChecks : split_list(checks_csv);
    for (const auto& c : checks) {
        if (!is_known_check(c)) throw UsageError("unknown check name: " + c);
    }
    std::vector<Graph> corpus = load_corpus(corpus_name);
    const bool want_csv = format == "csv";
    VerifyResult res = run_verify(corpus, checks, opt, workers, want_csv);
    if (want_csv) {
        write_output(out_path, res.csv);
        if (!out_path.empty() && out_path != "-") {
            std::cout << summary_to_json(res).dump(2) << "\n";
        }
    } else {
        write_output(out_path, summary_to_json(res).dump(2) + "\n");
    }
    return res.any_failure ? kExitViolation : kExitOk;
}

int cmd_generate(const std::string& family, long long count, uint64_t seed,
                 const std::string& out_path) {
    std::string out;
    for (long long i = 0; i < count; ++i) {
        GeneratorSpec spec = parse_generator_spec(family, seed + static_cast<uint64_t>(i));
        out += encode_graph6(generate(spec));
        out += '\n';
    }
    write_output(out_path, out);
    return kExitOk;
}

int cmd_scan(int n, long long budget, uint64_t seed, const std::string& objective,
             const FamilyFlags& fam, int k, double zero_tol_scale, const std::string& out_path) {
    if (!is_known_check(objective)) throw UsageError("unknown objective: " + objective);
    if (n > 64) throw UsageError("scan supports n <= 64");
    if (budget < 1) throw UsageError("budget must be >= 1");
    CheckOptions opt;
    opt.fp = fam.resolve();
    opt.k = k;
    opt.zero_tol_scale = zero_tol_scale;

    static constexpr double kPGrid[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    struct Hit {
        double margin;
        std::string graph6;
    };
    std::vector<Hit> hits;
    for (long long i = 0; i < budget; ++i) {
        GeneratorSpec spec;
        spec.family = Family::Gnp;
        spec.params = {n};
        spec.p = kPGrid[i % 9];
        spec.seed = seed + static_cast<uint64_t>(i);
        Graph g = generate(spec);
        GraphRecord r = make_record(g, {objective}, opt);
        for (const auto& nv : r.verdicts) {
            if (nv.v.state == VerdictState::NotApplicable) continue;
            if (nv.v.state == VerdictState::Fails) {
                nlohmann::ordered_json j;
                j["counterexample"] = record_to_json(r);
                write_output(out_path, j.dump(2) + "\n");
                return kExitViolation;
            }
            hits.push_back({nv.v.margin(), r.graph6});
        }
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
        return a.margin != b.margin ? a.margin < b.margin : a.graph6 < b.graph6;
    });
    if (hits.size() > 10) hits.resize(10);
    nlohmann::ordered_json j;
    j["objective"] = objective;
    j["n"] = n;
    j["budget"] = budget;
    j["seed"] = seed;
    nlohmann::ordered_json top = nlohmann::ordered_json::array();
    for (const auto& h : hits) {
        top.push_back({{"margin", std::strtod(fmt12(h.margin).c_str(), nullptr)},
                       {"graph6", h.graph6}});
    }
    j["tightest"] = std::move(top);
    write_output(out_path, j.dump(2) + "\n");
    return kExitOk;
}

int cmd_thresholds(const std::string& out_path) {
    std::vector<CorollaryClass> rows = {
        corollary_class(CorollaryTag::Planar),
        corollary_class(CorollaryTag::Outerplanar),
        corollary_class(CorollaryTag::BookFree, 2),
        corollary_class(CorollaryTag::BookFree, 3),
        corollary_class(CorollaryTag::CycleFree, 4),
        corollary_class(CorollaryTag::CycleFree, 5),
    };
    std::string out;
    char line[160];
    std::snprintf(line, sizeof(line), "%-16s %-15s %-6s %-10s %-8s %s\n", "class", "c", "eps",
                  "omega_cap", "edges", "triangle_bound");
    out += line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof(line), "%-16s %-15s %-6s %-10d %-8lld %s\n", r.tag.c_str(),
                      fmt12(r.fp.c).c_str(), fmt12(r.fp.epsilon).c_str(), r.omega_cap,
                      r.edge_threshold, r.triangle_bound.c_str());
        out += line;
    }
    write_output(out_path, out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-spectra inequality verification toolkit"};
    app.require_subcommand(1);

    std::string out_path, format = "json", checks, corpus, input, family_str, objective = "bn";
    FamilyFlags fam;
    int workers = 1, k = 1, scan_n = 8;
    long long count = 1, budget = 1000;
    uint64_t seed = 0;
    double zero_tol_scale = 1.0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "output path, '-' for stdout");
        sub->add_option("--zero-tol-scale", zero_tol_scale,
                        "multiplier on the default eigenvalue zero tolerance");
    };
    auto add_family = [&](CLI::App* sub) {
        sub->add_option("--family", fam.family, "planar|outerplanar|book:K|cycle:K");
        sub->add_option("--c", fam.c, "triangle budget constant c");
        sub->add_option("--eps", fam.eps, "triangle budget exponent epsilon");
        sub->add_option("--k", k, "exponent for the eigenvalue-ratio threshold check");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full report for one graph");
    analyze->add_option("input", input, "graph6 string, edge-list file, or '-'")->required();
    add_common(analyze);

    CLI::App* verify = app.add_subcommand("verify", "run checks over a corpus");
    verify->add_option("corpus", corpus, "graph6 file, '-', or all3..all6")->required();
    verify->add_option("--checks", checks, "comma list: t11,bn,general,lemma22,thm14,thm31,thm16");
    verify->add_option("--workers", workers, "worker thread count");
    verify->add_option("--format", format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    add_family(verify);
    add_common(verify);

    CLI::App* generate = app.add_subcommand("generate", "emit graph6 lines for a family");
    generate->add_option("family", family_str, "e.g. fan:5, gnp:10:0.5, petersen")->required();
    generate->add_option("--count", count, "number of graphs");
    generate->add_option("--seed", seed, "base seed for random families");
    add_common(generate);

    CLI::App* scan = app.add_subcommand("scan", "random search for near-tight instances");
    scan->add_option("--n", scan_n, "vertex count (<= 64)");
    scan->add_option("--budget", budget, "graph evaluations");
    scan->add_option("--seed", seed, "base seed");
    scan->add_option("--objective", objective, "check whose margin to minimize");
    add_family(scan);
    add_common(scan);

    CLI::App* thresholds = app.add_subcommand("thresholds", "derived corollary-class table");
    add_common(thresholds);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*analyze) return cmd_analyze(input, out_path, zero_tol_scale);
        if (*verify) {
            return cmd_verify(corpus, checks, fam, k, workers, zero_tol_scale, out_path, format);
        }
        if (*generate) return cmd_generate(family_str, count, seed, out_path);
        if (*scan) {
            return cmd_scan(scan_n, budget, seed, objective, fam, k, zero_tol_scale, out_path);
        }
        if (*thresholds) return cmd_thresholds(out_path);
    } catch (const gspectra::cli::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOperational;
    }
    return kExitUsage;
}
