#include "gspectra/generators.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "gspectra/rng.hpp"

namespace gspectra {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

long long param(const GeneratorSpec& spec, size_t i, const char* what) {
    if (i >= spec.params.size()) bad(std::string("missing parameter: ") + what);
    return spec.params[i];
}

Graph make_complete(long long n) {
    Graph g(static_cast<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph make_cycle(long long n) {
    if (n < 3) bad("cycle requires n >= 3");
    Graph g(static_cast<int>(n));
    for (int i = 0; i < n; ++i) g.add_edge(i, static_cast<int>((i + 1) % n));
    return g;
}

Graph make_path(long long n) {
    Graph g(static_cast<int>(n));
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

// Book B_k: two adjacent hubs, each adjacent to all k page vertices.
Graph make_book(long long k) {
    if (k < 1) bad("book requires k >= 1");
    Graph g(static_cast<int>(k + 2));
    g.add_edge(0, 1);
    for (int p = 0; p < k; ++p) {
        g.add_edge(0, 2 + p);
        g.add_edge(1, 2 + p);
    }
    return g;
}

// Fan: path v_1..v_{n-1} plus an apex adjacent to every path vertex.
// Maximal outerplanar, m = 2n - 3.
Graph make_fan(long long n) {
    if (n < 3) bad("fan requires n >= 3");
    Graph g(static_cast<int>(n));
    for (int i = 1; i + 1 < n; ++i) g.add_edge(i, i + 1);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

// Apollonian construction: start from K_4, repeatedly insert a vertex
// into a uniformly chosen triangular face. Maximal planar, m = 3n - 6.
Graph make_stacked_planar(long long n, uint64_t seed) {
    if (n < 4) bad("stacked_planar requires n >= 4");
    Graph g(static_cast<int>(n));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
    std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    SplitMix64 rng(seed);
    for (int v = 4; v < n; ++v) {
        size_t f = rng.next_below(faces.size());
        auto [a, b, c] = faces[f];
        g.add_edge(v, a);
        g.add_edge(v, b);
        g.add_edge(v, c);
        faces[f] = {a, b, v};
        faces.push_back({a, c, v});
        faces.push_back({b, c, v});
    }
    return g;
}

Graph make_gnp(long long n, double p, uint64_t seed) {
    if (p < 0.0 || p > 1.0) bad("gnp requires 0 <= p <= 1");
    Graph g(static_cast<int>(n));
    SplitMix64 rng(seed);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_double() < p) g.add_edge(i, j);
    return g;
}

// Kneser graph K(a, b): vertices are the b-subsets of [a] in lexicographic
// bitmask order, edges between disjoint subsets.
Graph make_kneser(long long a, long long b) {
    if (a < 1 || b < 1 || b > a) bad("kneser requires 1 <= b <= a");
    if (a > 24) bad("kneser ground set capped at 24");
    std::vector<uint32_t> subsets;
    for (uint32_t s = 0; s < (1u << a); ++s) {
        if (__builtin_popcount(s) == b) subsets.push_back(s);
    }
    if (subsets.size() > static_cast<size_t>(Graph::kMaxVertices)) bad("kneser graph too large");
    Graph g(static_cast<int>(subsets.size()));
    for (size_t i = 0; i < subsets.size(); ++i)
        for (size_t j = i + 1; j < subsets.size(); ++j)
            if ((subsets[i] & subsets[j]) == 0)
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph make_complete_multipartite(const std::vector<long long>& parts) {
    if (parts.empty()) bad("complete_multipartite requires part sizes");
    long long n = 0;
    for (long long s : parts) {
        if (s < 1) bad("part sizes must be positive");
        n += s;
    }
    Graph g(static_cast<int>(n));
    std::vector<int> part_of(n);
    int v = 0;
    for (size_t pi = 0; pi < parts.size(); ++pi)
        for (long long i = 0; i < parts[pi]; ++i) part_of[v++] = static_cast<int>(pi);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) g.add_edge(i, j);
    return g;
}

}  // namespace

Graph generate(const GeneratorSpec& spec) {
    switch (spec.family) {
        case Family::Complete:
            return make_complete(param(spec, 0, "n"));
        case Family::Cycle:
            return make_cycle(param(spec, 0, "n"));
        case Family::Path:
            return make_path(param(spec, 0, "n"));
        case Family::Book:
            return make_book(param(spec, 0, "k"));
        case Family::Fan:
            return make_fan(param(spec, 0, "n"));
        case Family::StackedPlanar:
            return make_stacked_planar(param(spec, 0, "n"), spec.seed);
        case Family::Gnp:
            return make_gnp(param(spec, 0, "n"), spec.p, spec.seed);
        case Family::Petersen:
            return make_kneser(5, 2);
        case Family::Kneser:
            return make_kneser(param(spec, 0, "a"), param(spec, 1, "b"));
        case Family::CompleteMultipartite:
            return make_complete_multipartite(spec.params);
    }
    bad("unknown family");
}

GeneratorSpec parse_generator_spec(const std::string& text, uint64_t seed) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (ch == ':') {
            tokens.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    tokens.push_back(cur);
    if (tokens.empty() || tokens[0].empty()) bad("empty family spec");

    GeneratorSpec spec;
    spec.seed = seed;
    const std::string& name = tokens[0];
    auto int_arg = [&](size_t i) {
        if (i >= tokens.size()) bad("family '" + name + "': missing parameter");
        return std::stoll(tokens[i]);
    };

    if (name == "complete") {
        spec.family = Family::Complete;
        spec.params = {int_arg(1)};
    } else if (name == "cycle") {
        spec.family = Family::Cycle;
        spec.params = {int_arg(1)};
    } else if (name == "path") {
        spec.family = Family::Path;
        spec.params = {int_arg(1)};
    } else if (name == "book") {
        spec.family = Family::Book;
        spec.params = {int_arg(1)};
    } else if (name == "fan") {
        spec.family = Family::Fan;
        spec.params = {int_arg(1)};
    } else if (name == "stacked_planar") {
        spec.family = Family::StackedPlanar;
        spec.params = {int_arg(1)};
    } else if (name == "gnp") {
        spec.family = Family::Gnp;
        spec.params = {int_arg(1)};
        if (tokens.size() < 3) bad("gnp requires n and p");
        spec.p = std::stod(tokens[2]);
    } else if (name == "petersen") {
        spec.family = Family::Petersen;
    } else if (name == "kneser") {
        spec.family = Family::Kneser;
        spec.params = {int_arg(1), int_arg(2)};
    } else if (name == "complete_multipartite") {
        spec.family = Family::CompleteMultipartite;
        if (tokens.size() < 2) bad("complete_multipartite requires part sizes");
        std::stringstream ss(tokens[1]);
        std::string item;
        while (std::getline(ss, item, ',')) spec.params.push_back(std::stoll(item));
    } else {
        bad("unknown family: " + name);
    }
    return spec;
}

}  // namespace gspectra
