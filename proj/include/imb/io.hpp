#pragma once

#include "imb/graph.hpp"
#include "imb/succinct.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace imb {

// Explicit graph text format: header `graph <n> <m>`, then m lines
// `e <u> <v>` with 1 <= u < v <= n, then optionally one line
// `cover <id> <id> ...`. ASCII, LF line endings.
struct GraphFile {
    Graph graph;
    std::optional<TwinCover> cover;
};

GraphFile parse_graph(std::istream& in);
void write_graph(const Graph& g, const std::optional<TwinCover>& cover,
                 std::ostream& out);

// Succinct format: header `succinct <k> <r>`, then cover edges as
// `he <u> <v>` (1 <= u < v <= k), then r lines `c <size> <t> <u_1> ... <u_t>`
// in clique order. Sizes are unbounded decimal integers.
SuccinctGraph parse_succinct(std::istream& in);
void write_succinct(const SuccinctGraph& sg, std::ostream& out);

// Certificate: line `pi <k ids>`, line `loc <r values>`.
Certificate parse_certificate(std::istream& in);
void write_certificate(const Certificate& cert, std::ostream& out);

/// Peeks at the first token of a file to distinguish the two instance
/// formats. Returns "graph" or "succinct"; throws ParseError otherwise.
std::string sniff_format(std::istream& in);

/// Deterministic instance with a planted twin cover: vertices 1..k form the
/// cover with a random subgraph, the remaining n-k vertices are split into
/// cliques of random sizes <= max_clique with random types.
GraphFile gen_random(int n, int k, int max_clique, std::uint64_t seed);

/// Explicit + cover -> succinct, by validation. Cover ids are renumbered to
/// 1..k in ascending order; clique order is the decomposition order.
SuccinctGraph compress_to_succinct(const Graph& g, const TwinCover& cover);

} // namespace imb
