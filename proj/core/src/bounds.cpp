#include "gspectra/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace gspectra {

double verdict_slack(double rhs) { return 1e-9 * std::max(1.0, std::abs(rhs)); }

namespace {

Verdict not_applicable(std::string why) {
    Verdict v;
    v.state = VerdictState::NotApplicable;
    v.note = std::move(why);
    return v;
}

Verdict compare_leq(double lhs, double rhs) {
    Verdict v;
    v.lhs = lhs;
    v.rhs = rhs;
    v.state = lhs <= rhs + verdict_slack(rhs) ? VerdictState::Holds : VerdictState::Fails;
    return v;
}

Verdict compare_strict(double lhs, double rhs) {
    Verdict v;
    v.lhs = lhs;
    v.rhs = rhs;
    v.state = rhs - lhs > verdict_slack(rhs) ? VerdictState::Holds : VerdictState::Fails;
    return v;
}

void add_inertia_warning(const GraphFacts& f, Verdict& v) {
    if (f.in.n_plus != f.in_10x.n_plus) {
        v.warnings.push_back("n_plus changes under 10x zero_tol (" +
                             std::to_string(f.in.n_plus) + " vs " +
                             std::to_string(f.in_10x.n_plus) + ")");
    }
}

// Conjecture checks need the exact clique number; a budget-truncated
// omega is only a lower bound, so the verdict is conservative.
bool omega_unknown(const GraphFacts& f, Verdict& out) {
    if (!f.clique.exact) {
        out = not_applicable("clique search hit budget; omega is only a lower bound");
        out.warnings.push_back("omega is lower bound");
        return true;
    }
    return false;
}

}  // namespace

GraphFacts analyze_graph(const Graph& g, double zero_tol_scale, long long clique_budget) {
    GraphFacts f;
    f.g = g;
    f.spectrum = eigenvalues(g, zero_tol_scale);
    f.in = inertia(f.spectrum);
    f.in_10x = inertia_at(f.spectrum, 10.0 * f.spectrum.zero_tol);
    f.t = triangles_by_intersection(g);
    f.clique = clique_number(g, clique_budget);
    return f;
}

double turan_bound(int omega) {
    if (omega < 2) throw std::invalid_argument("turan_bound: omega must be >= 2");
    return 2.0 * (1.0 - 1.0 / omega);
}

Verdict check_theorem_1_1(const GraphFacts& f) {
    if (f.g.m() < 1) return not_applicable("edgeless graph");
    Verdict v;
    if (omega_unknown(f, v)) return v;
    v = compare_leq(lambda_ratio(f.spectrum, 1, f.g.m()), turan_bound(f.clique.omega));
    v.ell = 1;
    v.omega = f.clique.omega;
    v.m = f.g.m();
    v.t = f.t;
    return v;
}

Verdict check_conjecture_bn(const GraphFacts& f) {
    if (f.g.m() < 1) return not_applicable("edgeless graph");
    if (f.g.is_complete()) return not_applicable("complete graph excluded");
    Verdict v;
    if (omega_unknown(f, v)) return v;
    v = compare_leq(lambda_ratio(f.spectrum, 2, f.g.m()), turan_bound(f.clique.omega));
    v.ell = 2;
    v.omega = f.clique.omega;
    v.m = f.g.m();
    v.t = f.t;
    return v;
}

Verdict check_conjecture_general(const GraphFacts& f) {
    if (f.g.m() < 1) return not_applicable("edgeless graph");
    Verdict v;
    if (omega_unknown(f, v)) return v;
    const int ell = std::min(f.in.n_plus, f.clique.omega);
    v = compare_leq(lambda_ratio(f.spectrum, ell, f.g.m()), turan_bound(f.clique.omega));
    v.ell = ell;
    v.omega = f.clique.omega;
    v.m = f.g.m();
    v.t = f.t;
    add_inertia_warning(f, v);
    return v;
}

double lemma22_lower_bound(double s_k, long long m, int k) {
    if (k < 1) throw std::invalid_argument("lemma22_lower_bound: k must be >= 1");
    if (s_k < 0.0 || s_k > 2.0 * static_cast<double>(m) + 1e-6) {
        throw std::invalid_argument("lemma22_lower_bound: s_k outside [0, 2m]");
    }
    const double tail = std::max(0.0, 2.0 * static_cast<double>(m) - s_k);
    return std::pow(s_k, 1.5) / std::sqrt(static_cast<double>(k)) - std::pow(tail, 1.5);
}

std::vector<Verdict> check_lemma22(const GraphFacts& f) {
    std::vector<Verdict> out;
    const long long m = f.g.m();
    for (int k = 1; k <= f.in.n_plus; ++k) {
        Verdict v = compare_leq(lemma22_lower_bound(square_sum(f.spectrum, k), m, k),
                                6.0 * static_cast<double>(f.t));
        v.ell = k;
        v.m = m;
        v.t = f.t;
        out.push_back(std::move(v));
    }
    return out;
}

double thm14_bound(int omega, int k) {
    if (omega < 3) throw std::invalid_argument("thm14_bound: omega must be >= 3");
    if (k < 1) throw std::invalid_argument("thm14_bound: k must be >= 1");
    const double w3 = std::cbrt(static_cast<double>(omega));
    return 2.0 * (w3 / (1.0 + w3) + std::pow(static_cast<double>(omega), -k));
}

double thm14_threshold(const FamilyParams& fp, int omega, int k) {
    return std::pow(2.2 * fp.c * std::pow(static_cast<double>(omega), 2.0 * k),
                    1.0 / fp.epsilon);
}

Verdict check_theorem14(const GraphFacts& f, const FamilyParams& fp, int k) {
    if (f.g.m() < 1) return not_applicable("edgeless graph");
    Verdict v;
    if (omega_unknown(f, v)) return v;
    const int omega = f.clique.omega;
    if (omega < 3) return not_applicable("omega < 3");
    if (!triangle_budget_ok(f.g, fp)) return not_applicable("triangle budget exceeded");
    const double threshold = thm14_threshold(fp, omega, k);
    if (static_cast<double>(f.g.m()) < threshold) {
        return not_applicable("m below edge threshold");
    }
    const int ell = std::min(f.in.n_plus, omega);
    v = compare_strict(lambda_ratio(f.spectrum, ell, f.g.m()), thm14_bound(omega, k));
    v.ell = ell;
    v.omega = omega;
    v.k = k;
    v.m = f.g.m();
    v.t = f.t;
    add_inertia_warning(f, v);
    return v;
}

double remark24_threshold(const FamilyParams& fp, int omega) {
    if (omega < 3) throw std::invalid_argument("remark24_threshold: omega must be >= 3");
    return std::pow(10.06 * fp.c * std::sqrt(static_cast<double>(omega)), 1.0 / fp.epsilon);
}

CorollaryClass corollary_class(CorollaryTag tag, int k_param) {
    CorollaryClass cc;
    switch (tag) {
        case CorollaryTag::Planar:
            cc.tag = "planar";
            cc.fp = {0.5, 1.0};
            cc.omega_cap = 4;
            cc.triangle_bound = "t <= m - 2";
            break;
        case CorollaryTag::Outerplanar:
            cc.tag = "outerplanar";
            cc.fp = {0.5, 0.5};
            cc.omega_cap = 3;
            cc.triangle_bound = "t <= (m - 1)/2";
            break;
        case CorollaryTag::BookFree:
            if (k_param < 2) throw std::invalid_argument("book_free requires k >= 2");
            cc.tag = "book_free(" + std::to_string(k_param) + ")";
            cc.fp = {0.5, (k_param - 1) / 3.0};
            cc.omega_cap = k_param + 1;
            cc.triangle_bound = "t <= (k-1)m/3";
            break;
        case CorollaryTag::CycleFree:
            if (k_param < 4) throw std::invalid_argument("cycle_free requires k >= 4");
            cc.tag = "cycle_free(" + std::to_string(k_param) + ")";
            cc.fp = {0.5, (k_param - 3) / 3.0};
            cc.omega_cap = k_param;
            cc.triangle_bound = "t <= (k-3)m/3";
            break;
    }
    cc.edge_threshold =
        static_cast<long long>(std::ceil(remark24_threshold(cc.fp, cc.omega_cap)));
    return cc;
}

double thm31_bound(long long m, long long t) {
    if (m < 2) throw std::invalid_argument("thm31_bound: m must be >= 2");
    return static_cast<double>(m) + std::pow(3.0 * static_cast<double>(t), 2.0 / 3.0);
}

Verdict check_theorem31(const GraphFacts& f) {
    if (f.g.m() < 2) return not_applicable("m < 2");
    const double l1 = f.spectrum.lambda(1);
    const double l2 = f.spectrum.lambda(2);
    const double lhs = l1 * l1 + l2 * l2;
    const double rhs = thm31_bound(f.g.m(), f.t);
    Verdict v = f.t > 0 ? compare_strict(lhs, rhs) : compare_leq(lhs, rhs);
    if (f.t > 0 && v.state == VerdictState::Fails) {
        v.warnings.push_back("strictness required (t > 0) but margin within slack");
    }
    v.ell = 2;
    v.m = f.g.m();
    v.t = f.t;
    return v;
}

double thm16_bound(long long m, const FamilyParams& fp) {
    if (m < 2) throw std::invalid_argument("thm16_bound: m must be >= 2");
    return 1.0 + std::pow(3.0 * fp.c, 2.0 / 3.0) *
                     std::pow(static_cast<double>(m), -2.0 * fp.epsilon / 3.0);
}

Verdict check_theorem16(const GraphFacts& f, const FamilyParams& fp) {
    if (f.g.m() < 2) return not_applicable("m < 2");
    if (!triangle_budget_ok(f.g, fp)) return not_applicable("triangle budget exceeded");
    Verdict v = compare_leq(lambda_ratio(f.spectrum, 2, f.g.m()), thm16_bound(f.g.m(), fp));
    v.ell = 2;
    v.m = f.g.m();
    v.t = f.t;
    return v;
}

}  // namespace gspectra
