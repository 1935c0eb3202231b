#include "gspectra/graph.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace gspectra {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0 || n > kMaxVertices) {
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    }
    rows_.assign(static_cast<size_t>(n_) * words_, 0);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
        throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) {
        throw std::invalid_argument("self-loop rejected");
    }
    uint64_t& a = rows_[static_cast<size_t>(u) * words_ + (v >> 6)];
    if (!((a >> (v & 63)) & 1u)) {
        a |= uint64_t{1} << (v & 63);
        rows_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
        ++m_;
    }
}

int Graph::degree(int v) const {
    const uint64_t* r = row(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

int Graph::common_neighbors(int u, int v) const {
    const uint64_t* a = row(u);
    const uint64_t* b = row(v);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
    return c;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph parse_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    int n = 0;
    long long m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    Graph g(n);
    for (long long i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated");
        g.add_edge(u, v);
    }
    return g;
}

namespace {

constexpr char kGraph6Header[] = ">>graph6<<";

void append_sextets(std::string& out, const std::vector<bool>& bits) {
    for (size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (size_t j = 0; j < 6; ++j) {
            v <<= 1;
            if (i + j < bits.size() && bits[i + j]) v |= 1;
        }
        out.push_back(static_cast<char>(v + 63));
    }
}

int sextet(char c) {
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: invalid character");
    return c - 63;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    // strip whitespace and the optional format header
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.rfind(kGraph6Header, 0) == 0) s = s.substr(sizeof(kGraph6Header) - 1);
    if (s.empty()) throw std::invalid_argument("graph6: empty input");

    size_t pos = 0;
    long long n = 0;
    if (s[pos] == 126) {
        if (s.size() >= 2 && s[1] == 126) {
            throw std::invalid_argument("graph6: n exceeds 4096 cap");
        }
        if (s.size() < 4) throw std::invalid_argument("graph6: truncated size field");
        n = (static_cast<long long>(sextet(s[1])) << 12) |
            (static_cast<long long>(sextet(s[2])) << 6) | sextet(s[3]);
        pos = 4;
    } else {
        n = sextet(s[pos]);
        pos = 1;
    }
    if (n > Graph::kMaxVertices) throw std::invalid_argument("graph6: n exceeds 4096 cap");

    Graph g(static_cast<int>(n));
    long long nbits = n * (n - 1) / 2;
    long long nchars = (nbits + 5) / 6;
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) != nchars) {
        throw std::invalid_argument("graph6: payload length mismatch");
    }
    // bits run column-major over the upper triangle: (0,1),(0,2),(1,2),(0,3),...
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int v = sextet(s[pos + bit / 6]);
            if ((v >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    const int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
    }
    append_sextets(out, bits);
    return out;
}

int max_triangles_per_edge(const Graph& g) {
    int best = 0;
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.has_edge(u, v)) best = std::max(best, g.common_neighbors(u, v));
        }
    }
    return best;
}

namespace {

bool cycle_dfs(const Graph& g, int start, int cur, int depth, int k, std::vector<bool>& used) {
    if (depth == k - 1) return g.has_edge(cur, start);
    for (int w = start + 1; w < g.n(); ++w) {
        if (!used[w] && g.has_edge(cur, w)) {
            used[w] = true;
            if (cycle_dfs(g, start, w, depth + 1, k, used)) return true;
            used[w] = false;
        }
    }
    return false;
}

}  // namespace

bool has_cycle_of_length(const Graph& g, int k) {
    if (k < 3 || k > 12) throw std::invalid_argument("cycle length must be in [3, 12]");
    std::vector<bool> used(g.n(), false);
    // only search cycles whose minimum vertex is the start
    for (int s = 0; s + k <= g.n(); ++s) {
        used[s] = true;
        if (cycle_dfs(g, s, s, 0, k, used)) return true;
        used[s] = false;
    }
    return false;
}

uint64_t labeled_graph_count(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("labeled enumeration supports 1 <= n <= 6");
    return uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph(int n, uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) {
            if ((mask >> bit) & 1u) g.add_edge(i, j);
        }
    }
    return g;
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn) {
    const uint64_t total = labeled_graph_count(n);
    for (uint64_t mask = 0; mask < total; ++mask) fn(labeled_graph(n, mask));
}

}  // namespace gspectra
