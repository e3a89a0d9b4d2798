#pragma once

#include <unordered_map>
#include <vector>

#include "delaysynth/game.hpp"

namespace ds {

struct SolveResult {
  std::vector<char> eveWins;     // per vertex
  std::vector<int> eveStrategy;  // successor index, -1 outside Eve region
};

/// Zielonka's recursive algorithm with positional strategy extraction.
/// Winner is exact on every vertex (parity games are determined).
SolveResult solveParity(const ParityGame& g);

/// Finite-memory Eve strategy over the arena: memory = win-automaton
/// states, update-then-act discipline (memory is updated with the
/// current vertex before the next action is looked up).
struct StrategyAutomaton {
  PairDpa win;
  int initialMemory = 0;
  // key: memory * arenaVertexCount + eveVertex (memory already updated
  // with that vertex) -> chosen action
  std::unordered_map<long long, GameAction> action;
  int arenaVertexCount = 0;

  int updateMemory(const Arena& a, int memory, int vertex) const;
  const GameAction& nextAction(int memory, int eveVertex) const;
};

/// Package the positional product strategy as a strategy automaton.
/// Throws NotWinning if Adam wins the product from its initial vertex.
StrategyAutomaton makeStrategyAutomaton(const Arena& arena,
                                        const PairDpa& win,
                                        const ProductGame& product,
                                        const SolveResult& solve);

}  // namespace ds
