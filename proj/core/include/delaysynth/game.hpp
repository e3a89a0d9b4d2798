#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "delaysynth/automata.hpp"
#include "delaysynth/determinize.hpp"
#include "delaysynth/profiles.hpp"
#include "delaysynth/transducer.hpp"

namespace ds {

enum class DelayMode { Unbounded, Bounded };

struct GameAction {
  enum class Kind { Letter, Skip, Produce, Halt };
  Kind kind = Kind::Skip;
  Symbol letter = 0;          // Kind::Letter
  ProfileTriple triple{};     // Kind::Produce
};

/// Delay-game vertex (q, c, P1, P2, r) x {Adam, Eve}. Profiles are
/// indices into the embedded ProfileAutomaton. `halted` marks the sink
/// component entered when Eve has no legal action (bounded mode only);
/// there only the domain state r keeps evolving.
struct GameVertex {
  int q = 0;
  int c = kBottomPriority;  // -1 when no transformation was chosen
  int p1 = 0;
  int p2 = 0;
  int r = 0;
  bool eveTurn = false;
  bool halted = false;
  auto operator<=>(const GameVertex&) const = default;
};

struct ArenaOptions {
  std::size_t maxVertices = 1000000;
};

struct Arena {
  DelayMode mode = DelayMode::Unbounded;
  std::vector<GameVertex> vertices;
  struct Edge {
    GameAction action;
    int target;
  };
  std::vector<std::vector<Edge>> out;
  int initial = 0;
  ProfileAutomaton profiles;
  std::vector<int> domainPriority;  // c_D per domain state

  /// Observable pair (c_D(r), c) of a vertex.
  std::pair<int, int> observable(int v) const {
    return {domainPriority[vertices[v].r], vertices[v].c};
  }
  int edgeIndex(int v, const GameAction& a) const;
};

Arena buildArena(const Transducer& t, const Dpa& domain, DelayMode mode,
                 const ArenaOptions& opt = {});

/// DPA over pairs (d, t) accepting exactly the pair-words with
/// max Inf(d) odd or max Inf(t) even; built by the index-appearance-
/// record translation of the per-priority Rabin pairs.
PairDpa buildWinAutomaton(const std::set<int>& domainPriorities,
                          const std::set<int>& transducerPriorities);

struct ParityGame {
  std::vector<char> eveOwned;
  std::vector<int> priority;
  std::vector<std::vector<int>> succ;
  int initial = 0;
};

struct ProductGame {
  ParityGame game;
  // product vertex -> (arena vertex, win-automaton state)
  std::vector<std::pair<int, int>> origin;
};

/// Product of the arena with the win automaton reading observable
/// pairs. Eve wins the product from its initial vertex iff she wins
/// (arena, Win).
ProductGame composeParityGame(const Arena& arena, const PairDpa& win);

/// Longest run of consecutive Skip actions over all arena paths
/// (infinity reported as -1; cannot happen in bounded mode).
int longestSkipRun(const Arena& arena);

}  // namespace ds
