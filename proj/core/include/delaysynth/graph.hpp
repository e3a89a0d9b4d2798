#pragma once

#include <cstdint>
#include <vector>

namespace ds {

/// Iterative Tarjan SCC. Returns component id per node (reverse
/// topological: edges go from higher ids to lower or within) and the
/// number of components.
int sccDecompose(const std::vector<std::vector<int>>& adj,
                 std::vector<int>& comp);

/// Nodes reachable from `start`.
std::vector<char> reachableFrom(const std::vector<std::vector<int>>& adj,
                                int start);

struct CycleEdgeFlags {
  // when non-null, the witness cycle's SCC must contain at least one
  // internal edge with each required flag set
  const std::vector<std::vector<uint8_t>>* flags = nullptr;
  uint8_t requiredMask = 0;
};

/// True iff some node flagged in `from` can reach a cycle whose maximum
/// node priority is even (max parity acceptance). The reachability part
/// uses the full graph; the cycle is searched in priority-restricted
/// subgraphs. With edge flags, the SCC hosting the cycle must contain an
/// internal edge for every bit of requiredMask.
bool evenDominatedCycleReachable(const std::vector<std::vector<int>>& adj,
                                 const std::vector<int>& priority,
                                 const std::vector<char>& from,
                                 const CycleEdgeFlags& req = {});

/// Per-node: can an accepting (even-dominated) cycle be reached from it.
std::vector<char> liveNodes(const std::vector<std::vector<int>>& adj,
                            const std::vector<int>& priority);

}  // namespace ds
