#ifndef GSPECTRA_BOUNDS_HPP
#define GSPECTRA_BOUNDS_HPP

#include <string>
#include <vector>

#include "gspectra/counting.hpp"
#include "gspectra/graph.hpp"
#include "gspectra/spectral.hpp"

namespace gspectra {

enum class VerdictState { Holds, Fails, NotApplicable };

/// Outcome of one inequality check, with the values and parameters used.
struct Verdict {
    VerdictState state = VerdictState::NotApplicable;
    double lhs = 0.0;
    double rhs = 0.0;
    int ell = 0;    // prefix length used, 0 when irrelevant
    int omega = 0;  // clique number used, 0 when irrelevant
    int k = 0;      // exponent parameter, 0 when irrelevant
    long long m = 0;
    long long t = 0;
    std::string note;  // reason when not applicable
    std::vector<std::string> warnings;

    double margin() const { return rhs - lhs; }
    bool holds() const { return state == VerdictState::Holds; }
};

/// Comparison slack for "<=" checks: 1e-9 * max(1, |rhs|). Strictness
/// assertions require margin above the same slack.
double verdict_slack(double rhs);

/// Everything the checks need about one graph, computed once.
struct GraphFacts {
    Graph g;
    Spectrum spectrum;
    Inertia in;
    Inertia in_10x;  // inertia at 10x zero_tol, for sensitivity warnings
    long long t = 0;
    CliqueResult clique;
};

GraphFacts analyze_graph(const Graph& g, double zero_tol_scale = 1.0,
                         long long clique_budget = kDefaultCliqueBudget);

/// 2 * (1 - 1/omega), the Turán-type right-hand side. omega >= 2.
double turan_bound(int omega);

/// Lambda_1 <= 2(1 - 1/omega).
Verdict check_theorem_1_1(const GraphFacts& f);

/// Lambda_2 <= 2(1 - 1/omega) for G != K_n.
Verdict check_conjecture_bn(const GraphFacts& f);

/// Lambda_ell <= 2(1 - 1/omega) with ell = min(n+, omega).
Verdict check_conjecture_general(const GraphFacts& f);

/// (1/sqrt(k)) * s_k^(3/2) - (2m - s_k)^(3/2); may be negative.
double lemma22_lower_bound(double s_k, long long m, int k);

/// 6 t(G) >= lemma22_lower_bound(s_k, m, k) for every k in [1, n+].
std::vector<Verdict> check_lemma22(const GraphFacts& f);

/// 2 * (omega^(1/3) / (1 + omega^(1/3)) + 1/omega^k), omega >= 3, k >= 1.
double thm14_bound(int omega, int k);

/// Edge threshold (2.2 c omega^(2k))^(1/epsilon).
double thm14_threshold(const FamilyParams& fp, int omega, int k);

/// Lambda_ell < thm14_bound(omega, k), applicable when omega >= 3, the
/// triangle budget holds, and m >= thm14_threshold.
Verdict check_theorem14(const GraphFacts& f, const FamilyParams& fp, int k);

/// Edge threshold (10.06 c sqrt(omega))^(1/epsilon).
double remark24_threshold(const FamilyParams& fp, int omega);

struct CorollaryClass {
    std::string tag;
    FamilyParams fp;
    int omega_cap = 0;
    long long edge_threshold = 0;  // ceiling of the remark24 formula
    std::string triangle_bound;    // human-readable description
};

enum class CorollaryTag { Planar, Outerplanar, BookFree, CycleFree };

/// Derived (c, epsilon, omega cap, edge threshold) for the four graph
/// classes. book_free requires k >= 2, cycle_free requires k >= 4.
CorollaryClass corollary_class(CorollaryTag tag, int k_param = 0);

/// m + (3t)^(2/3), for m >= 2.
double thm31_bound(long long m, long long t);

/// lambda_1^2 + lambda_2^2 <= m + (3t)^(2/3); strict when t > 0.
Verdict check_theorem31(const GraphFacts& f);

/// 1 + (3c)^(2/3) * m^(-2 epsilon / 3), for m >= 2.
double thm16_bound(long long m, const FamilyParams& fp);

/// Lambda_2 <= thm16_bound(m, fp), applicable under the triangle budget.
Verdict check_theorem16(const GraphFacts& f, const FamilyParams& fp);

}  // namespace gspectra

#endif
