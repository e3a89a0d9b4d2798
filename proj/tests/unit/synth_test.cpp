#include <doctest.h>

#include "../fixtures.hpp"
#include "../oracles.hpp"
#include "delaysynth/sampling.hpp"
#include "delaysynth/synth.hpp"

using namespace ds;

TEST_CASE("output selection produces witnessed runs") {
  Transducer id = normalize(fixtures::load("id"));
  Word v = chooseOutput(id, 0, 0, id.priority[0], "ab");
  CHECK(v == "ab");
  CHECK(oracles::runExists(id, 0, 0, id.priority[0], "ab", v));

  Transducer f1 = normalize(fixtures::load("f1"));
  int s0 = 0, B = 2;
  REQUIRE(f1.stateNames[B] == "B");
  Word w = chooseOutput(f1, s0, B, 1, "ab");
  CHECK(w == "");  // both steps of the only run emit nothing
  CHECK(oracles::runExists(f1, s0, B, 1, "ab", w));
  CHECK_THROWS_AS(chooseOutput(f1, s0, B, 0, "ab"), NoWitness);
  CHECK_THROWS_AS(chooseOutput(f1, B, s0, 1, "a"), NoWitness);
}

TEST_CASE("output selection is lexicographically least") {
  Transducer t;
  t.inputAlphabet = {'a'};
  t.outputAlphabet = {'x', 'y'};
  t.addState("p", 1);
  t.addState("q", 1);
  t.transitions.push_back({0, "a", "y", 1});
  t.transitions.push_back({0, "a", "x", 1});
  t.initial = 0;
  t.validate();
  CHECK(chooseOutput(t, 0, 1, 1, "a") == "x");
}

TEST_CASE("syntactic classification") {
  CHECK(checkSyntacticClass(fixtures::load("r1")) == SpecClass::Aut);
  CHECK(checkSyntacticClass(fixtures::load("drat")) == SpecClass::Drat);
  CHECK(checkSyntacticClass(fixtures::load("mixed")) == SpecClass::Unknown);
  CHECK(to_string(SpecClass::Aut) == "AUT");
}

TEST_CASE("classified fixtures satisfy unique continuation") {
  CHECK(oracles::boundedUniqueContinuation(fixtures::load("r1"), 4, 4));
  CHECK(oracles::boundedUniqueContinuation(fixtures::load("drat"), 4, 4));
}

TEST_CASE("synthesis verdicts on the fixture corpus") {
  for (const auto& name : fixtures::eveWinNames()) {
    CAPTURE(name);
    auto report = synthesize(fixtures::load(name));
    CHECK(report.eveWins);
    CHECK(report.strategy.has_value());
  }
  for (const auto& name : fixtures::adamWinNames()) {
    CAPTURE(name);
    auto report = synthesize(fixtures::load(name));
    CHECK(!report.eveWins);
    CHECK(!report.strategy.has_value());
  }
}

TEST_CASE("executor output is accepted by the spec") {
  Transducer spec = fixtures::load("f1");
  auto report = synthesize(spec);
  REQUIRE(report.eveWins);
  Transducer t = normalize(spec);
  for (const char* text : {"ab|a", "ac|a", "aaab|a", "aaaaac|a", "ab|aa"}) {
    Lasso input = parseLasso(text);
    ExecResult res = runExecutor(t, *report.arenaData, *report.strategy, input);
    CAPTURE(text);
    REQUIRE(res.periodic);
    CHECK(pairLassoAcceptance(spec, {input, res.output}));
  }
}

TEST_CASE("bounded synthesis yields a matching one-way transducer") {
  for (const char* name : {"id", "shift"}) {
    CAPTURE(name);
    Transducer spec = fixtures::load(name);
    SynthesisOptions opt;
    opt.mode = DelayMode::Bounded;
    auto report = synthesize(spec, opt);
    REQUIRE(report.eveWins);
    REQUIRE(report.dft.has_value());
    CHECK(report.ell == 0);
    Transducer t = normalize(spec);
    Rng rng(53);
    for (int i = 0; i < 50; ++i) {
      Lasso input = randomLasso(t.inputAlphabet, rng, 4, 3);
      ExecResult viaGame =
          runExecutor(t, *report.arenaData, *report.strategy, input);
      ExecResult viaDft = run1Dft(*report.dft, input);
      REQUIRE(viaGame.periodic);
      REQUIRE(viaDft.periodic);
      CHECK(sameOmegaWord(viaGame.output, viaDft.output));
      CHECK(pairLassoAcceptance(spec, {input, viaDft.output}));
    }
  }
}

TEST_CASE("shift spec actually shifts") {
  auto report = synthesize(fixtures::load("shift"));
  REQUIRE(report.eveWins);
  Transducer t = normalize(fixtures::load("shift"));
  ExecResult res =
      runExecutor(t, *report.arenaData, *report.strategy, parseLasso("ab|ba"));
  REQUIRE(res.periodic);
  CHECK(sameOmegaWord(res.output, parseLasso("b|ba")));
}

TEST_CASE("pcp specs") {
  PcpInstance solvable{{{"a", "a"}}};
  Transducer specS = pcpToSpec(solvable);
  specS.validate();
  // index then a-tail: output must copy the tile and continue with a^w
  CHECK(pairLassoAcceptance(specS, {parseLasso("1|a"), parseLasso("a|a")}));
  // with infinitely many a the deviation branch is off the table
  CHECK(!pairLassoAcceptance(specS, {parseLasso("1|a"), parseLasso("b|a")}));
  auto witness = pcpDivergenceWitness(solvable, specS);
  REQUIRE(witness.has_value());
  CHECK(witness->disjoint);

  PcpInstance unsolvable{{{"a", "b"}}};
  Transducer specU = pcpToSpec(unsolvable);
  specU.validate();
  auto report = synthesize(specU);
  CHECK(report.eveWins);
  CHECK(!pcpDivergenceWitness(unsolvable, specU).has_value());
}
