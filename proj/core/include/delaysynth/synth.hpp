#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "delaysynth/determinize.hpp"
#include "delaysynth/game.hpp"
#include "delaysynth/solver.hpp"
#include "delaysynth/transducer.hpp"

namespace ds {

/// Lexicographically least output word v such that t: src --u1/v--> dst
/// with max run priority exactly c, among runs visiting each
/// (state, input position) configuration at most once (bounds |v|
/// linearly in |u1|). Throws NoWitness if no such run exists.
Word chooseOutput(const Transducer& t, int src, int dst, int c,
                  const Word& u1);

struct ExecResult {
  bool periodic = false;
  Lasso output;        // valid when periodic
  std::string partial; // emitted output otherwise
  std::size_t steps = 0;
};

/// Streaming executor: plays the delay game along the input lasso with
/// Eve driven by the strategy automaton, materializing output blocks.
/// Detects ultimate periodicity by configuration repetition; returns
/// the finite emission when none is found within maxSteps (the input is
/// then outside the domain, or maxSteps is too small).
ExecResult runExecutor(const Transducer& t, const Arena& arena,
                       const StrategyAutomaton& strat, const Lasso& input,
                       std::size_t maxSteps = 100000);

/// Input-deterministic one-way transducer.
struct OneWayDft {
  int stateCount = 0;
  std::vector<Symbol> inputAlphabet;
  int initial = 0;
  // [state][symIdx] -> (output word, target)
  std::vector<std::vector<std::pair<Word, int>>> delta;
  std::vector<int> priority;

  int symIndex(Symbol a) const;
};

/// Bounded-delay extraction: embeds (strategy memory, game vertex,
/// input buffers of length <= ell+1) into 1DFT states. Throws
/// NotBoundedStrategy if a reachable state needs a longer buffer.
OneWayDft extract1Dft(const Transducer& t, const Arena& boundedArena,
                      const StrategyAutomaton& strat, int ell);

ExecResult run1Dft(const OneWayDft& dft, const Lasso& input,
                   std::size_t maxSteps = 100000);

enum class SpecClass { Aut, Drat, Unknown };
std::string to_string(SpecClass c);

/// Syntactic classification: DRAT when input/output states partition
/// the state space with letter-functional transitions, AUT when the
/// transitions additionally strictly alternate.
SpecClass checkSyntacticClass(const Transducer& t);

struct PcpInstance {
  // tile words over {a, b}
  std::vector<std::pair<Word, Word>> pairs;
};

/// Total-domain rational relation from a PCP instance: valid inputs
/// i_1..i_k alpha' pair with u_{i1}..u_{ik} a^omega when alpha' has
/// infinitely many a, and with any output not starting with
/// v_{i1}..v_{ik} otherwise; invalid inputs pair with every output.
Transducer pcpToSpec(const PcpInstance& inst);

struct SynthesisOptions {
  DelayMode mode = DelayMode::Unbounded;
  ArenaOptions arena;
  DeterminizeOptions determinize;
};

struct SynthesisReport {
  SpecClass specClass = SpecClass::Unknown;
  bool domainClosed = false;
  int domainStates = 0;
  int arenaVertices = 0;
  int arenaEdges = 0;
  int productVertices = 0;
  int ell = -1;  // bounded mode only
  bool eveWins = false;
  std::optional<StrategyAutomaton> strategy;
  std::optional<OneWayDft> dft;  // bounded mode, Eve-win only
  // kept for callers that re-run the pipeline pieces
  std::optional<Arena> arenaData;
  std::optional<Dpa> domain;
};

/// End-to-end driver. An Eve loss means "not synthesizable by this
/// sound procedure", never "no computable uniformizer exists".
SynthesisReport synthesize(const Transducer& t,
                           const SynthesisOptions& opt = {});

struct DivergenceWitness {
  Lasso inputA, inputB;
  std::set<Symbol> firstLettersA, firstLettersB;
  bool disjoint = false;
};

/// For a PCP spec: two domain lassos sharing the prefix of the first
/// index whose admissible first output letters are disjoint (exists for
/// instances with a solution tile, e.g. (a, a)).
std::optional<DivergenceWitness> pcpDivergenceWitness(const PcpInstance& inst,
                                                      const Transducer& spec);

}  // namespace ds
