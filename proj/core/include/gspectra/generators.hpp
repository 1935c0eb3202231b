#ifndef GSPECTRA_GENERATORS_HPP
#define GSPECTRA_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gspectra/graph.hpp"

namespace gspectra {

enum class Family {
    Complete,
    Cycle,
    Path,
    Book,
    Fan,
    StackedPlanar,
    Gnp,
    Petersen,
    Kneser,
    CompleteMultipartite,
};

/// Parameters for one deterministic graph family.
///   complete(n), cycle(n >= 3), path(n), book(k >= 1), fan(n >= 3),
///   stacked_planar(n >= 4, seed), gnp(n, p, seed), petersen,
///   kneser(a, b), complete_multipartite(part sizes).
struct GeneratorSpec {
    Family family = Family::Complete;
    std::vector<long long> params;
    double p = 0.0;
    uint64_t seed = 0;
};

/// Validates parameters and builds the graph. Deterministic for a fixed
/// spec and seed. Throws std::invalid_argument on bad parameters.
Graph generate(const GeneratorSpec& spec);

/// Parses a family string such as "fan:5", "gnp:10:0.5", "kneser:5:2",
/// "complete_multipartite:2,3,4", "petersen". The seed for random
/// families is supplied separately.
GeneratorSpec parse_generator_spec(const std::string& text, uint64_t seed);

}  // namespace gspectra

#endif
