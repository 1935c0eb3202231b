#ifndef GSPECTRA_TOOLS_RUNNER_HPP
#define GSPECTRA_TOOLS_RUNNER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gspectra/bounds.hpp"
#include "gspectra/graph.hpp"

namespace gspectra::cli {

/// Errors that should surface as exit code 2 (usage) instead of 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Doubles are serialized with 12 significant digits everywhere.
std::string fmt12(double v);

struct CheckOptions {
    std::optional<FamilyParams> fp;
    int k = 1;  // exponent for the eigenvalue-ratio threshold check
    double zero_tol_scale = 1.0;
};

struct NamedVerdict {
    std::string check;
    Verdict v;
};

extern const std::vector<std::string> kAllChecks;  // t11,bn,general,lemma22,thm14,thm31,thm16

bool is_known_check(const std::string& name);

/// Runs the selected checks; lemma22 expands to one verdict per k.
std::vector<NamedVerdict> run_checks(const GraphFacts& f, const std::vector<std::string>& checks,
                                     const CheckOptions& opt);

/// Per-graph record used by analyze (JSON) and verify (CSV rows).
struct GraphRecord {
    std::string graph6;
    int n = 0;
    long long m = 0;
    long long t = 0;
    int omega = 0;
    bool omega_exact = true;
    Inertia in;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    int ell = 0;
    double l_ell = 0.0;  // Lambda_ell, 0 when m = 0
    std::vector<NamedVerdict> verdicts;
};

GraphRecord make_record(const Graph& g, const std::vector<std::string>& checks,
                        const CheckOptions& opt);

nlohmann::ordered_json record_to_json(const GraphRecord& r);

/// CSV header and rows, one row per (graph, check):
/// graph6,n,m,t,omega,nplus,lambda1,lambda2,Lell,check,holds,margin
extern const char kCsvHeader[];
void append_csv_rows(std::string& out, const GraphRecord& r);

struct CheckSummary {
    long long holds = 0;
    long long fails = 0;
    long long not_applicable = 0;
    bool has_margin = false;
    double min_margin = 0.0;
    std::string witness;  // graph6 of the min-margin graph
};

struct VerifyResult {
    long long corpus_size = 0;
    std::map<std::string, CheckSummary> by_check;  // lemma22 aggregated over k
    std::string csv;
    bool any_failure = false;
};

/// Parallel map over the corpus with a deterministic, index-ordered merge.
VerifyResult run_verify(const std::vector<Graph>& corpus, const std::vector<std::string>& checks,
                        const CheckOptions& opt, int workers, bool want_csv);

nlohmann::ordered_json summary_to_json(const VerifyResult& r);

/// Corpus input: a graph6 file path, "-" for stdin, or all3..all6.
std::vector<Graph> load_corpus(const std::string& name);

}  // namespace gspectra::cli

#endif
