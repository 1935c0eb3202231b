#include "runner.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace gspectra::cli {

std::string fmt12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

const std::vector<std::string> kAllChecks = {"t11",    "bn",    "general", "lemma22",
                                             "thm14",  "thm31", "thm16"};

bool is_known_check(const std::string& name) {
    for (const auto& c : kAllChecks)
        if (c == name) return true;
    return false;
}

std::vector<NamedVerdict> run_checks(const GraphFacts& f, const std::vector<std::string>& checks,
                                     const CheckOptions& opt) {
    std::vector<NamedVerdict> out;
    auto na_family = [] {
        Verdict v;
        v.state = VerdictState::NotApplicable;
        v.note = "family parameters not supplied";
        return v;
    };
    for (const auto& name : checks) {
        if (name == "t11") {
            out.push_back({name, check_theorem_1_1(f)});
        } else if (name == "bn") {
            out.push_back({name, check_conjecture_bn(f)});
        } else if (name == "general") {
            out.push_back({name, check_conjecture_general(f)});
        } else if (name == "lemma22") {
            std::vector<Verdict> vs = check_lemma22(f);
            for (size_t i = 0; i < vs.size(); ++i) {
                out.push_back({"lemma22:" + std::to_string(i + 1), vs[i]});
            }
            if (vs.empty() && f.g.m() == 0) {
                Verdict v;
                v.state = VerdictState::NotApplicable;
                v.note = "edgeless graph";
                out.push_back({"lemma22:1", v});
            }
        } else if (name == "thm14") {
            out.push_back({name, opt.fp ? check_theorem14(f, *opt.fp, opt.k) : na_family()});
        } else if (name == "thm31") {
            out.push_back({name, check_theorem31(f)});
        } else if (name == "thm16") {
            out.push_back({name, opt.fp ? check_theorem16(f, *opt.fp) : na_family()});
        } else {
            throw UsageError("unknown check name: " + name);
        }
    }
    return out;
}

GraphRecord make_record(const Graph& g, const std::vector<std::string>& checks,
                        const CheckOptions& opt) {
    GraphFacts f = analyze_graph(g, opt.zero_tol_scale);
    GraphRecord r;
    r.graph6 = encode_graph6(g);
    r.n = g.n();
    r.m = g.m();
    r.t = f.t;
    r.omega = f.clique.omega;
    r.omega_exact = f.clique.exact;
    r.in = f.in;
    r.lambda1 = f.spectrum.lambda(1);
    r.lambda2 = g.n() >= 2 ? f.spectrum.lambda(2) : 0.0;
    r.s1 = square_sum(f.spectrum, 1);
    r.s2 = g.n() >= 2 ? square_sum(f.spectrum, 2) : r.s1;
    r.ell = std::min(f.in.n_plus, f.clique.omega);
    if (g.m() >= 1 && r.ell >= 1) r.l_ell = lambda_ratio(f.spectrum, r.ell, g.m());
    r.verdicts = run_checks(f, checks, opt);
    return r;
}

namespace {

const char* state_name(VerdictState s) {
    switch (s) {
        case VerdictState::Holds: return "holds";
        case VerdictState::Fails: return "fails";
        case VerdictState::NotApplicable: return "not_applicable";
    }
    return "?";
}

// round-trip through the 12-digit text form so JSON numbers match CSV
double round12(double v) { return std::strtod(fmt12(v).c_str(), nullptr); }

}  // namespace

nlohmann::ordered_json record_to_json(const GraphRecord& r) {
    nlohmann::ordered_json j;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["m"] = r.m;
    j["t"] = r.t;
    j["omega"] = r.omega;
    j["omega_exact"] = r.omega_exact;
    j["inertia"] = {{"n_plus", r.in.n_plus}, {"n_zero", r.in.n_zero}, {"n_minus", r.in.n_minus}};
    j["lambda1"] = round12(r.lambda1);
    j["lambda2"] = round12(r.lambda2);
    j["s1"] = round12(r.s1);
    j["s2"] = round12(r.s2);
    j["ell"] = r.ell;
    j["Lell"] = round12(r.l_ell);
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& nv : r.verdicts) {
        nlohmann::ordered_json c;
        c["check"] = nv.check;
        c["state"] = state_name(nv.v.state);
        if (nv.v.state != VerdictState::NotApplicable) {
            c["lhs"] = round12(nv.v.lhs);
            c["rhs"] = round12(nv.v.rhs);
            c["margin"] = round12(nv.v.margin());
            if (nv.v.ell) c["ell"] = nv.v.ell;
            if (nv.v.omega) c["omega"] = nv.v.omega;
            if (nv.v.k) c["k"] = nv.v.k;
        } else {
            c["note"] = nv.v.note;
        }
        if (!nv.v.warnings.empty()) c["warnings"] = nv.v.warnings;
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    return j;
}

const char kCsvHeader[] = "graph6,n,m,t,omega,nplus,lambda1,lambda2,Lell,check,holds,margin\n";

void append_csv_rows(std::string& out, const GraphRecord& r) {
    std::string prefix = r.graph6 + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',' +
                         std::to_string(r.t) + ',' + std::to_string(r.omega) + ',' +
                         std::to_string(r.in.n_plus) + ',' + fmt12(r.lambda1) + ',' +
                         fmt12(r.lambda2) + ',' + fmt12(r.l_ell) + ',';
    for (const auto& nv : r.verdicts) {
        out += prefix;
        out += nv.check;
        out += ',';
        if (nv.v.state == VerdictState::NotApplicable) {
            out += "na,";
        } else {
            out += nv.v.holds() ? "1," : "0,";
            out += fmt12(nv.v.margin());
        }
        out += '\n';
    }
}

namespace {

// lemma22:k rows aggregate under plain "lemma22"
std::string summary_key(const std::string& check) {
    auto pos = check.find(':');
    return pos == std::string::npos ? check : check.substr(0, pos);
}

void fold_into_summary(VerifyResult& res, const GraphRecord& r) {
    for (const auto& nv : r.verdicts) {
        CheckSummary& s = res.by_check[summary_key(nv.check)];
        switch (nv.v.state) {
            case VerdictState::Holds: ++s.holds; break;
            case VerdictState::Fails:
                ++s.fails;
                res.any_failure = true;
                break;
            case VerdictState::NotApplicable: ++s.not_applicable; continue;
        }
        const double margin = nv.v.margin();
        // ties broken by lexicographic graph6 so the witness is stable
        if (!s.has_margin || margin < s.min_margin ||
            (margin == s.min_margin && r.graph6 < s.witness)) {
            s.has_margin = true;
            s.min_margin = margin;
            s.witness = r.graph6;
        }
    }
}

}  // namespace

VerifyResult run_verify(const std::vector<Graph>& corpus, const std::vector<std::string>& checks,
                        const CheckOptions& opt, int workers, bool want_csv) {
    for (const auto& c : checks) {
        if (!is_known_check(c)) throw UsageError("unknown check name: " + c);
    }
    if (workers < 1) throw UsageError("workers must be >= 1");

    std::vector<GraphRecord> records(corpus.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= corpus.size()) break;
            records[i] = make_record(corpus[i], checks, opt);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    VerifyResult res;
    res.corpus_size = static_cast<long long>(corpus.size());
    if (want_csv) res.csv = kCsvHeader;
    for (const auto& r : records) {
        fold_into_summary(res, r);
        if (want_csv) append_csv_rows(res.csv, r);
    }
    return res;
}

nlohmann::ordered_json summary_to_json(const VerifyResult& r) {
    nlohmann::ordered_json j;
    j["corpus_size"] = r.corpus_size;
    nlohmann::ordered_json checks;
    for (const auto& [name, s] : r.by_check) {
        nlohmann::ordered_json c;
        c["holds"] = s.holds;
        c["fails"] = s.fails;
        c["not_applicable"] = s.not_applicable;
        if (s.has_margin) {
            c["min_margin"] = std::strtod(fmt12(s.min_margin).c_str(), nullptr);
            c["witness"] = s.witness;
        }
        checks[name] = std::move(c);
    }
    j["checks"] = std::move(checks);
    j["any_failure"] = r.any_failure;
    return j;
}

std::vector<Graph> load_corpus(const std::string& name) {
    std::vector<Graph> corpus;
    if (name.size() == 4 && name.rfind("all", 0) == 0 && name[3] >= '3' && name[3] <= '6') {
        const int n = name[3] - '0';
        corpus.reserve(labeled_graph_count(n));
        for_each_labeled_graph(n, [&](const Graph& g) { corpus.push_back(g); });
        return corpus;
    }
    std::istream* in = &std::cin;
    std::ifstream file;
    if (name != "-") {
        file.open(name);
        if (!file) throw std::runtime_error("cannot open corpus file: " + name);
        in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        corpus.push_back(parse_graph6(line));
    }
    return corpus;
}

}  // namespace gspectra::cli
