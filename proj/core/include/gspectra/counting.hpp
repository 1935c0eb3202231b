#ifndef GSPECTRA_COUNTING_HPP
#define GSPECTRA_COUNTING_HPP

#include <cstdint>

#include "gspectra/graph.hpp"
#include "gspectra/spectral.hpp"

namespace gspectra {

/// Triangle count by three independent routes; the combinatorial pair
/// must always agree, the trace route verifies the eigensolver.
struct TriangleReport {
    long long by_intersection = 0;
    long long by_neighborhood = 0;
    long long by_trace = 0;
    double trace_residual = 0.0;
    bool agree = false;
};

/// Sum over edges {u,v} of |N(u) ∩ N(v)|, divided by 3. Exact.
long long triangles_by_intersection(const Graph& g);

/// One third of the sum over vertices of the edge count inside the
/// induced neighborhood. Exact. Throws std::logic_error if the sum is
/// not divisible by 3 (internal-consistency failure).
long long triangles_by_neighborhood(const Graph& g);

struct TraceTriangles {
    long long count = 0;
    double residual = 0.0;  // |sum(lambda^3)/6 - count|
};

/// round(sum of lambda_i^3 / 6). residual > 0.01 signals eigensolver
/// accuracy failure.
TraceTriangles triangles_by_trace(const Spectrum& s);

TriangleReport triangle_report(const Graph& g, const Spectrum& s);

struct CliqueResult {
    int omega = 0;
    bool exact = true;  // false: budget hit, omega is only a lower bound
};

constexpr long long kDefaultCliqueBudget = 10'000'000;

/// Exact maximum clique via Bron-Kerbosch with pivoting on bit rows,
/// vertices pre-ordered by degeneracy. When the recursion budget runs
/// out the result degrades to a lower bound with exact = false.
CliqueResult clique_number(const Graph& g, long long budget = kDefaultCliqueBudget);

struct FamilyParams {
    double epsilon = 0.0;  // in (0, 1.5]
    double c = 0.0;        // positive
};

/// t(G) <= c * m^(1.5 - epsilon), with t from triangles_by_intersection.
bool triangle_budget_ok(const Graph& g, const FamilyParams& fp);

}  // namespace gspectra

#endif
