#include "ducci/graph.hpp"

#include <algorithm>
#include <unordered_map>

#include "ducci/predecessor.hpp"

namespace ducci {

TransitionGraph basic_cycle_graph(std::uint32_t n, std::uint32_t m,
                                  std::uint32_t depth, const Budget& budget) {
  if (n % 2 != 0) {
    throw OddLength("predecessor expansion requires even n");
  }
  const CycleInfo info = lp_values(n, m, budget);

  TransitionGraph g;
  g.depth = depth;
  g.cycle_count = info.per;
  std::unordered_map<std::string, std::size_t> index;

  ZmTuple state = ducci_iterate(basic_tuple(n, m), info.len);
  for (std::uint64_t i = 0; i < info.per; ++i) {
    index.emplace(state.key(), g.nodes.size());
    g.nodes.push_back(state);
    state = ducci_step(state);
  }
  for (std::size_t i = 0; i < g.cycle_count; ++i) {
    g.edges.emplace_back(i, (i + 1) % g.cycle_count);
  }

  std::vector<std::size_t> frontier(g.cycle_count);
  for (std::size_t i = 0; i < g.cycle_count; ++i) frontier[i] = i;

  for (std::uint32_t layer = 0; layer < depth; ++layer) {
    std::sort(frontier.begin(), frontier.end(),
              [&](std::size_t a, std::size_t b) {
                return g.nodes[a] < g.nodes[b];
              });
    std::vector<std::size_t> next;
    for (std::size_t target : frontier) {
      const PredecessorFamily family = all_predecessors(g.nodes[target]);
      for (const ZmTuple& pred : family.members) {
        if (index.contains(pred.key())) continue;  // already linked
        if (g.nodes.size() >= budget.max_states) {
          throw BudgetExceeded("graph outgrew max_states=" +
                                   std::to_string(budget.max_states),
                               0);
        }
        const std::size_t id = g.nodes.size();
        index.emplace(pred.key(), id);
        g.nodes.push_back(pred);
        g.edges.emplace_back(id, target);
        next.push_back(id);
      }
    }
    frontier = std::move(next);
  }
  return g;
}

std::string to_dot(const TransitionGraph& g) {
  std::string out = "digraph ducci {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + g.nodes[i].to_text() +
           "\",shape=" + (g.is_cycle_node(i) ? "doublecircle" : "circle") +
           "];\n";
  }
  for (const auto& [from, to] : g.edges) {
    out += "  n" + std::to_string(from) + " -> n" + std::to_string(to) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ducci
