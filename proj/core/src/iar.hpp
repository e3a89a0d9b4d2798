#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "delaysynth/errors.hpp"

namespace ds::detail {

/// Deterministic transition structure with Rabin acceptance: pair i
/// accepts a run iff good_i holds infinitely often and bad_i finitely
/// often. good/bad are per transition (bitmask over pairs).
struct RabinSystem {
  int stateCount = 0;
  int symCount = 0;
  int pairCount = 0;
  int initial = 0;
  std::vector<std::vector<int>> next;       // [state][sym]
  std::vector<std::vector<uint64_t>> good;  // [state][sym]
  std::vector<std::vector<uint64_t>> bad;
};

struct IarResult {
  int initial = 0;
  std::vector<std::vector<int>> next;  // [state][sym]
  std::vector<int> priority;           // per state (max-even acceptance)
};

/// Index-appearance-record expansion: states (rabin state, permutation,
/// last emitted priority). Position 1 is the front; pairs hit bad move
/// to the front. With the deepest bad position B and deepest good
/// position G (both 0 when no hit), a step emits 2B+1 when B >= G > 0,
/// 2G when G > B, and 1 otherwise.
inline IarResult iarExpand(const RabinSystem& rs, std::size_t maxStates) {
  if (rs.pairCount > 64)
    throw StateBudgetExceeded("more than 64 acceptance pairs");
  const int k = rs.pairCount;

  struct St {
    int rabin;
    std::vector<int> perm;  // perm[0] = front
    int last;
    bool operator<(const St& o) const {
      if (rabin != o.rabin) return rabin < o.rabin;
      if (perm != o.perm) return perm < o.perm;
      return last < o.last;
    }
  };
  std::map<St, int> id;
  std::vector<St> states;
  auto intern = [&](St s) {
    auto [it, fresh] = id.insert({s, static_cast<int>(states.size())});
    if (fresh) {
      if (states.size() >= maxStates)
        throw StateBudgetExceeded("parity expansion exceeds state budget");
      states.push_back(std::move(s));
    }
    return it->second;
  };
  std::vector<int> pi0(k);
  for (int i = 0; i < k; ++i) pi0[i] = i;
  IarResult r;
  r.initial = intern({rs.initial, pi0, 1});

  for (std::size_t s = 0; s < states.size(); ++s) {
    r.next.emplace_back(rs.symCount);
    for (int a = 0; a < rs.symCount; ++a) {
      const St cur = states[s];
      uint64_t g = rs.good[cur.rabin][a];
      uint64_t b = rs.bad[cur.rabin][a];
      int maxB = 0, maxG = 0;
      for (int pos = 1; pos <= k; ++pos) {
        int pair = cur.perm[pos - 1];
        if (b >> pair & 1) maxB = pos;
        if (g >> pair & 1) maxG = pos;
      }
      int prio;
      if (maxB == 0 && maxG == 0)
        prio = 1;
      else if (maxB >= maxG)
        prio = 2 * maxB + 1;
      else
        prio = 2 * maxG;
      std::vector<int> np;
      np.reserve(k);
      for (int i = 0; i < k; ++i)
        if (b >> cur.perm[i] & 1) np.push_back(cur.perm[i]);
      for (int i = 0; i < k; ++i)
        if (!(b >> cur.perm[i] & 1)) np.push_back(cur.perm[i]);
      r.next[s][a] = intern({rs.next[cur.rabin][a], std::move(np), prio});
    }
  }
  r.priority.resize(states.size());
  for (std::size_t s = 0; s < states.size(); ++s)
    r.priority[s] = states[s].last;
  return r;
}

}  // namespace ds::detail
