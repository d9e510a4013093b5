#pragma once

#include <vector>

#include "ducci/zmod.hpp"

namespace ducci {

/// All predecessors of one target tuple. For even n the member count is
/// either 0 or exactly m; members map to the target under ducci_step and are
/// pairwise distinct.
struct PredecessorFamily {
  ZmTuple target;
  std::vector<ZmTuple> members;

  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
};

/// True iff the alternating sum vanishes (n even; throws OddLength).
bool has_predecessor(const ZmTuple& u);

/// The anchored predecessor y with y_1 = 0, y_{j+1} = x_j - y_j mod m.
/// Throws NoPredecessor when the alternating sum is nonzero, OddLength for
/// odd n.
ZmTuple construct_predecessor(const ZmTuple& u);

/// The full family: the anchored predecessor shifted by every z in Z_m with
/// alternating signs (+z, -z, ..., -z), ordered z = 0, 1, ..., m-1. Empty
/// when u has no predecessor. Throws OddLength for odd n.
PredecessorFamily all_predecessors(const ZmTuple& u);

/// Brute-force solver: scans every y_1 in Z_m, forward-substitutes and keeps
/// solutions satisfying the wrap equation. Works for odd n too.
PredecessorFamily solve_predecessors_general(const ZmTuple& u);

}  // namespace ducci
