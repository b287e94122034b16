#pragma once

#include "cgrig/core_graph.hpp"
#include "cgrig/direction_network.hpp"
#include "cgrig/graph.hpp"

#include <string>

namespace cgrig {

/// Units per lattice cell in development drawings.
inline constexpr double svg_cell = 100.0;

/// Development drawing: unit-cell grid, shaded fundamental domain, lattice
/// arrows, vertices as circles and edges as segments, colored by predicted
/// component class. The y axis points up.
std::string development_svg(const ColoredGraph& g, const DevelopmentWindow& dev);

/// Realization drawing: lattice arrows L_1, L_2 from the origin, the
/// fundamental parallelogram, points p_i and one segment p_i -> p_j + L gamma
/// per edge. Scaled so the longer lattice vector is svg_cell long.
std::string realization_svg(const ColoredGraph& g, const Realization& r);

} // namespace cgrig
