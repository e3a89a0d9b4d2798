#pragma once

#include <string>
#include <vector>

#include "delaysynth/sampling.hpp"
#include "delaysynth/spec_io.hpp"
#include "delaysynth/transducer.hpp"

#ifndef DS_FIXTURE_DIR
#error "DS_FIXTURE_DIR must be defined by the build"
#endif

namespace fixtures {

inline ds::Transducer load(const std::string& name) {
  return ds::parseSpecFile(std::string(DS_FIXTURE_DIR) + "/" + name +
                           ".spec");
}

inline std::vector<std::string> eveWinNames() {
  return {"id", "shift", "f1", "r1"};
}

inline std::vector<std::string> adamWinNames() { return {"f2", "fivestate"}; }

inline std::vector<std::string> allNames() {
  return {"id", "shift", "f1", "f2", "fivestate", "r1", "drat", "mixed"};
}

// regression parity automata for the determinization suite

inline ds::ParityAutomaton npaInfA() {
  ds::ParityAutomaton a;
  a.stateCount = 2;
  a.alphabet = {'a', 'b'};
  a.initial = 0;
  a.priority = {2, 1};  // 0: just read a, 1: just read b
  a.transitions = {{0, 'a', 0}, {0, 'b', 1}, {1, 'a', 0}, {1, 'b', 1}};
  return a;
}

inline ds::ParityAutomaton npaFinA() {
  ds::ParityAutomaton a = npaInfA();
  a.priority = {1, 0};
  return a;
}

// guesses the point from which only b occurs
inline ds::ParityAutomaton npaEventuallyB() {
  ds::ParityAutomaton a;
  a.stateCount = 2;
  a.alphabet = {'a', 'b'};
  a.initial = 0;
  a.priority = {1, 0};
  a.transitions = {{0, 'a', 0}, {0, 'b', 0}, {0, 'b', 1}, {1, 'b', 1}};
  return a;
}

// infinitely many "ab" factors, via a nondeterministic marker
inline ds::ParityAutomaton npaInfAb() {
  ds::ParityAutomaton a;
  a.stateCount = 2;
  a.alphabet = {'a', 'b'};
  a.initial = 0;
  a.priority = {1, 2};
  a.transitions = {{0, 'a', 0}, {0, 'b', 0}, {0, 'a', 1}, {1, 'b', 0}};
  return a;
}

// three priorities: max-inf priority of {visits to a=2, b=1, c=0}
inline ds::ParityAutomaton npaThreePriorities() {
  ds::ParityAutomaton a;
  a.stateCount = 3;
  a.alphabet = {'a', 'b', 'c'};
  a.initial = 0;
  a.priority = {2, 1, 0};
  for (int s = 0; s < 3; ++s) {
    a.transitions.push_back({s, 'a', 0});
    a.transitions.push_back({s, 'b', 1});
    a.transitions.push_back({s, 'c', 2});
  }
  return a;
}

inline std::vector<ds::ParityAutomaton> regressionNpas() {
  return {npaInfA(), npaFinA(), npaEventuallyB(), npaInfAb(),
          npaThreePriorities(), ds::projectInput(load("f1")),
          ds::projectInput(load("r1"))};
}

}  // namespace fixtures
