#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "delaysynth/errors.hpp"
#include "delaysynth/words.hpp"

namespace ds {

/// Nondeterministic parity automaton, max-even acceptance on state
/// priorities.
struct ParityAutomaton {
  int stateCount = 0;
  std::vector<Symbol> alphabet;
  int initial = 0;
  std::vector<int> priority;  // per state, >= 0
  struct Trans {
    int from;
    Symbol sym;
    int to;
  };
  std::vector<Trans> transitions;

  void validate() const;
  int symIndex(Symbol a) const;
  /// adjacency [state][symIdx] -> successor list
  std::vector<std::vector<std::vector<int>>> successors() const;
};

/// Deterministic parity automaton over an arbitrary symbol domain.
template <typename Sym>
struct BasicDpa {
  std::vector<Sym> alphabet;
  int initial = 0;
  std::vector<std::vector<int>> next;  // [state][symIdx]
  std::vector<int> priority;           // per state

  int stateCount() const { return static_cast<int>(next.size()); }

  int symIndex(const Sym& a) const {
    auto it = std::find(alphabet.begin(), alphabet.end(), a);
    if (it == alphabet.end())
      throw ValidationError("symbol not in automaton alphabet");
    return static_cast<int>(it - alphabet.begin());
  }

  int step(int state, const Sym& a) const { return next[state][symIndex(a)]; }
};

using Dpa = BasicDpa<Symbol>;
using PairDpa = BasicDpa<std::pair<int, int>>;

/// Some run on prefix.period^omega satisfies max Inf(priority) even?
bool npaLassoMembership(const ParityAutomaton& a, const Lasso& w);

bool dpaLassoMembership(const Dpa& d, const Lasso& w);
bool dpaLassoMembership(const PairDpa& d, const PriorityPairLasso& w);

}  // namespace ds
