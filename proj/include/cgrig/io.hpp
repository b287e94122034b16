#pragma once

#include "cgrig/direction_network.hpp"
#include "cgrig/graph.hpp"
#include "cgrig/matrix.hpp"
#include "cgrig/rigidity.hpp"
#include "cgrig/sparsity.hpp"

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

namespace cgrig {

using Json = nlohmann::ordered_json;

/// Parses the `.cg` text format:
///
///     cg 2 <n> <m>
///     <tail> <head> <g1> <g2>     (m lines)
///
/// '#' starts a comment; blank lines are ignored. Throws ParseError with the
/// 1-based line and column of the offending token.
ColoredGraph parse_colored_graph(std::string_view text);

/// Reads and parses a file; throws ParseError (line 0) when it cannot be read.
ColoredGraph read_colored_graph(const std::filesystem::path& path);

/// Canonical text: header and one edge line per edge, no comments.
std::string serialize_colored_graph(const ColoredGraph& g);

/// `mat <rows> <cols> <mode>` then one line per row.
std::string dump_matrix(const MatrixFp& m);
std::string dump_matrix(const MatrixD& m);

Json realization_json(const Realization& r, const std::vector<EdgeStatus>& status, std::uint64_t seed);
Json counts_json(const CountReport& c);
Json circuit_json(const CircuitReport& c);
Json verdict_json(const RigidityVerdict& v);

} // namespace cgrig
