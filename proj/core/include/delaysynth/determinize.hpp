#pragma once

#include <cstddef>

#include "delaysynth/automata.hpp"
#include "delaysynth/transducer.hpp"

namespace ds {

struct DeterminizeOptions {
  std::size_t maxStates = 1000000;
};

struct DeterminizeStats {
  int buchiStates = 0;
  int rabinStates = 0;   // reachable Safra-tree states
  int rabinPairs = 0;    // after pruning never-marked names
  int safraNodeCap = 0;  // name pool size
  int dpaStates = 0;
  int prioritiesUsed = 0;
};

/// NPA -> DPA with L preserved. Pipeline: parity -> nondeterministic
/// Buchi (guess the maximal even priority seen infinitely often), Buchi
/// -> deterministic Rabin via Safra trees, Rabin -> parity via index
/// appearance records.
Dpa determinize(const ParityAutomaton& a, const DeterminizeOptions& opt = {},
                DeterminizeStats* stats = nullptr);

/// determinize(projectInput(t)); recognizes dom(R(t)).
Dpa buildDomainAutomaton(const Transducer& t,
                         const DeterminizeOptions& opt = {},
                         DeterminizeStats* stats = nullptr);

/// Topological closedness of L(d) under the Cantor distance: trim to
/// states on some accepting run, take the safety closure, check
/// L(closure) subseteq L(d) via the priority-shift complement.
bool isDomainClosed(const Dpa& d);

}  // namespace ds
