#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "delaysynth/automata.hpp"
#include "delaysynth/words.hpp"

namespace ds {

/// Nondeterministic parity transducer (1NFT). Transition labels are
/// finite input/output words; acceptance is max Inf of state priorities
/// even, over infinite runs.
struct Transducer {
  std::vector<std::string> stateNames;  // index = state id
  std::vector<int> priority;
  int initial = 0;
  std::vector<Symbol> inputAlphabet;
  std::vector<Symbol> outputAlphabet;
  struct Trans {
    int from;
    Word in;
    Word out;
    int to;
  };
  std::vector<Trans> transitions;

  int stateCount() const { return static_cast<int>(stateNames.size()); }
  int minPriority() const;
  void validate() const;
  bool isNormalized() const;  // every transition consumes <= 1 input letter
  int addState(const std::string& name, int prio);
};

/// Split multi-letter input labels so every transition consumes at most
/// one input letter. Fresh intermediate states get priority min(C_T),
/// leaving max-over-run and max-Inf unchanged.
Transducer normalize(const Transducer& t);

/// NPA over the input alphabet recognizing dom(R(t)). Output-only moves
/// are eliminated by epsilon-closure; closure states carry the maximum
/// priority passed through as (state, pending-max) pairs.
ParityAutomaton projectInput(const Transducer& t);

struct PairSearchOptions {
  std::size_t maxConfigurations = 1000000;
};

/// (input, output) in R(t)? Accepting-lasso search in the synchronized
/// configuration graph (state, input phase, output phase).
bool pairLassoAcceptance(const Transducer& t, const PairLasso& p,
                         const PairSearchOptions& opt = {});

/// Output letters g such that some accepted output lasso for `input`
/// starts with g. Used for branch-point divergence witnesses.
std::set<Symbol> firstOutputLetters(const Transducer& t, const Lasso& input,
                                    const PairSearchOptions& opt = {});

}  // namespace ds
