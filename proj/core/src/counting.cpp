#include "gspectra/counting.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gspectra {

long long triangles_by_intersection(const Graph& g) {
    long long sum = 0;
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.has_edge(u, v)) sum += g.common_neighbors(u, v);
        }
    }
    return sum / 3;
}

long long triangles_by_neighborhood(const Graph& g) {
    // m(G[N(v)]) = (1/2) sum over u in N(v) of |N(u) ∩ N(v)|
    long long total = 0;
    for (int v = 0; v < g.n(); ++v) {
        long long twice_edges = 0;
        for (int u = 0; u < g.n(); ++u) {
            if (u != v && g.has_edge(u, v)) twice_edges += g.common_neighbors(u, v);
        }
        total += twice_edges / 2;
        if (twice_edges % 2 != 0) {
            throw std::logic_error("neighborhood edge count not integral");
        }
    }
    if (total % 3 != 0) throw std::logic_error("neighborhood triangle sum not divisible by 3");
    return total / 3;
}

TraceTriangles triangles_by_trace(const Spectrum& s) {
    const double cube_sum = power_sum(s, 3) / 6.0;
    TraceTriangles t;
    t.count = std::llround(cube_sum);
    t.residual = std::abs(cube_sum - static_cast<double>(t.count));
    return t;
}

TriangleReport triangle_report(const Graph& g, const Spectrum& s) {
    TriangleReport r;
    r.by_intersection = triangles_by_intersection(g);
    r.by_neighborhood = triangles_by_neighborhood(g);
    const TraceTriangles tt = triangles_by_trace(s);
    r.by_trace = tt.count;
    r.trace_residual = tt.residual;
    r.agree = r.by_intersection == r.by_neighborhood && r.by_intersection == r.by_trace;
    return r;
}

namespace {

// Degeneracy ordering by repeated min-degree removal, lowest index first.
std::vector<int> degeneracy_order(const Graph& g) {
    const int n = g.n();
    std::vector<int> deg(n), order;
    std::vector<bool> removed(n, false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        }
        removed[best] = true;
        order.push_back(best);
        for (int u = 0; u < n; ++u) {
            if (!removed[u] && g.has_edge(best, u)) --deg[u];
        }
    }
    return order;
}

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int words) : w_(words, 0) {}

    void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void clear(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    bool empty() const {
        for (uint64_t x : w_)
            if (x) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }
    int intersect_count(const uint64_t* row) const {
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & row[i]);
        return c;
    }
    Bitset intersect(const uint64_t* row) const {
        Bitset r(static_cast<int>(w_.size()));
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & row[i];
        return r;
    }
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i) {
            if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
        }
        return -1;
    }
    template <typename Fn>
    void for_each(Fn fn) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t x = w_[i];
            while (x) {
                fn(static_cast<int>(i * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

private:
    std::vector<uint64_t> w_;
};

struct CliqueSearch {
    const Graph& g;
    long long budget;
    long long nodes = 0;
    int best = 0;
    bool truncated = false;

    void expand(Bitset p, Bitset x, int depth) {
        if (++nodes > budget) {
            truncated = true;
            return;
        }
        if (p.empty()) {
            if (x.empty()) best = std::max(best, depth);
            return;
        }
        if (depth + p.count() <= best) return;

        // pivot: vertex of P ∪ X with the most neighbors in P
        int pivot = -1, pivot_deg = -1;
        auto consider = [&](int v) {
            int d = p.intersect_count(g.row(v));
            if (d > pivot_deg) {
                pivot_deg = d;
                pivot = v;
            }
        };
        p.for_each(consider);
        x.for_each(consider);

        Bitset candidates = p;
        if (pivot >= 0) {
            const uint64_t* prow = g.row(pivot);
            Bitset keep(g.words_per_row());
            candidates.for_each([&](int v) {
                if (!((prow[v >> 6] >> (v & 63)) & 1u)) keep.set(v);
            });
            candidates = keep;
        }
        candidates.for_each([&](int v) {
            if (truncated) return;
            expand(p.intersect(g.row(v)), x.intersect(g.row(v)), depth + 1);
            p.clear(v);
            x.set(v);
        });
    }
};

}  // namespace

CliqueResult clique_number(const Graph& g, long long budget) {
    if (g.n() < 1) throw std::invalid_argument("clique_number: empty graph");
    if (g.m() == 0) return {1, true};

    CliqueSearch search{g, budget};
    search.best = 1;
    const std::vector<int> order = degeneracy_order(g);
    std::vector<bool> processed(g.n(), false);
    for (int v : order) {
        Bitset p(g.words_per_row()), x(g.words_per_row());
        for (int u = 0; u < g.n(); ++u) {
            if (g.has_edge(v, u)) (processed[u] ? x : p).set(u);
        }
        search.expand(std::move(p), std::move(x), 1);
        processed[v] = true;
        if (search.truncated) break;
    }
    return {search.best, !search.truncated};
}

bool triangle_budget_ok(const Graph& g, const FamilyParams& fp) {
    if (g.m() < 1) throw std::invalid_argument("triangle_budget_ok: m must be >= 1");
    const double budget = fp.c * std::pow(static_cast<double>(g.m()), 1.5 - fp.epsilon);
    return static_cast<double>(triangles_by_intersection(g)) <= budget;
}

}  // namespace gspectra
