#ifndef GSPECTRA_GRAPH_HPP
#define GSPECTRA_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gspectra {

/// Undirected simple graph stored as packed adjacency bit rows.
/// Rows are 64-bit words; neighborhood intersection is word-wise AND +
/// popcount, which is what makes the triangle/clique kernels cheap.
class Graph {
public:
    static constexpr int kMaxVertices = 4096;

    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    long long m() const { return m_; }
    int words_per_row() const { return words_; }

    bool has_edge(int u, int v) const {
        return (rows_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    void add_edge(int u, int v);

    const uint64_t* row(int v) const { return rows_.data() + static_cast<size_t>(v) * words_; }
    int degree(int v) const;

    /// |N(u) ∩ N(v)|, the number of triangles through edge {u,v}.
    int common_neighbors(int u, int v) const;

    bool is_complete() const { return m_ == static_cast<long long>(n_) * (n_ - 1) / 2; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && rows_ == other.rows_;
    }

private:
    int n_ = 0;
    int words_ = 0;
    long long m_ = 0;
    std::vector<uint64_t> rows_;
};

/// Builds a graph from an explicit edge list. Duplicate edges collapse.
/// Throws std::invalid_argument on out-of-range endpoints or self-loops.
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

/// Parses the text edge-list format: first line "n m", then one "u v"
/// pair per line, 0-indexed.
Graph parse_edge_list_text(const std::string& text);

/// Decodes a graph6 string (optional ">>graph6<<" header tolerated).
/// Throws std::invalid_argument on malformed input or n > 4096.
Graph parse_graph6(const std::string& text);

/// Canonical graph6 encoding; parse_graph6(encode_graph6(g)) == g.
std::string encode_graph6(const Graph& g);

/// Max over edges {u,v} of |N(u) ∩ N(v)|. 0 for edgeless graphs.
/// A graph is B_k-free iff this is < k.
int max_triangles_per_edge(const Graph& g);

/// True iff g contains a k-cycle as a subgraph, 3 <= k <= 12.
/// Bounded DFS path enumeration; throws std::invalid_argument outside range.
bool has_cycle_of_length(const Graph& g, int k);

/// Number of labeled graphs on n vertices, n <= 6.
uint64_t labeled_graph_count(int n);

/// The graph on n vertices whose upper-triangle bits, in row-major pair
/// order (0,1),(0,2),...,(n-2,n-1), equal the bits of mask.
Graph labeled_graph(int n, uint64_t mask);

/// Yields all labeled graphs on n vertices in lexicographic bitmask order.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn);

}  // namespace gspectra

#endif
