#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ducci/cycle.hpp"

namespace ducci {

/// Transition graph around the basic cycle: the cycle itself plus `depth`
/// layers of predecessors. Nodes are stored in construction order (cycle
/// first, then breadth-first layers); every node has out-degree exactly one
/// within the graph.
struct TransitionGraph {
  std::vector<ZmTuple> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (u, D(u)) indices
  std::size_t cycle_count = 0;  // nodes[0 .. cycle_count) form the cycle
  std::uint32_t depth = 0;

  bool is_cycle_node(std::size_t i) const { return i < cycle_count; }
};

/// Builds the graph for Z_m^n: the cycle of the basic tuple, then `depth`
/// backward layers via predecessor enumeration (n must be even; expansion
/// frontiers are processed in lexicographic tuple order for determinism).
TransitionGraph basic_cycle_graph(std::uint32_t n, std::uint32_t m,
                                  std::uint32_t depth,
                                  const Budget& budget = {});

/// Deterministic DOT rendering: digraph, node label/shape, edge statements.
/// Cycle nodes are doublecircle. Byte-identical for identical graphs.
std::string to_dot(const TransitionGraph& g);

}  // namespace ducci
