#include "ducci/predecessor.hpp"

namespace ducci {

namespace {

// y_1 = seed, then y_{j+1} = x_j - y_j for j = 1..n-1.
std::vector<std::uint32_t> forward_substitute(const ZmTuple& u,
                                              std::uint32_t seed) {
  const std::uint32_t m = u.modulus();
  std::vector<std::uint32_t> y(u.size());
  y[0] = seed;
  for (std::uint32_t j = 1; j < u.size(); ++j) {
    std::uint64_t d = std::uint64_t(u[j - 1]) + m - y[j - 1];
    y[j] = static_cast<std::uint32_t>(d >= m ? d - m : d);
  }
  return y;
}

bool wrap_holds(const ZmTuple& u, const std::vector<std::uint32_t>& y) {
  const std::uint32_t m = u.modulus();
  std::uint64_t s = std::uint64_t(y[u.size() - 1]) + y[0];
  return (s >= m ? s - m : s) == u[u.size() - 1];
}

}  // namespace

bool has_predecessor(const ZmTuple& u) {
  return alternating_sum(u).value == 0;
}

ZmTuple construct_predecessor(const ZmTuple& u) {
  if (alternating_sum(u).value != 0) {
    throw NoPredecessor("tuple " + u.to_text() +
                        " has nonzero alternating sum");
  }
  return ZmTuple(u.modulus(), forward_substitute(u, 0));
}

PredecessorFamily all_predecessors(const ZmTuple& u) {
  if (!has_predecessor(u)) {
    return PredecessorFamily{u, {}};
  }
  const std::uint32_t m = u.modulus();
  const ZmTuple anchor = construct_predecessor(u);
  PredecessorFamily family{u, {}};
  family.members.reserve(m);
  for (std::uint32_t z = 0; z < m; ++z) {
    std::vector<std::uint32_t> shifted(u.size());
    for (std::uint32_t i = 0; i < u.size(); ++i) {
      // +z on odd positions (1-based), -z on even positions
      std::uint64_t v = (i % 2 == 0) ? std::uint64_t(anchor[i]) + z
                                     : std::uint64_t(anchor[i]) + m - z;
      shifted[i] = static_cast<std::uint32_t>(v >= m ? v - m : v);
    }
    family.members.emplace_back(m, std::move(shifted));
  }
  return family;
}

PredecessorFamily solve_predecessors_general(const ZmTuple& u) {
  const std::uint32_t m = u.modulus();
  PredecessorFamily family{u, {}};
  for (std::uint32_t seed = 0; seed < m; ++seed) {
    std::vector<std::uint32_t> y = forward_substitute(u, seed);
    if (wrap_holds(u, y)) {
      family.members.emplace_back(m, std::move(y));
    }
  }
  return family;
}

}  // namespace ducci
