#include <doctest.h>

#include <random>

#include "../fixtures.hpp"
#include "../oracles.hpp"
#include "delaysynth/determinize.hpp"
#include "delaysynth/game.hpp"
#include "delaysynth/sampling.hpp"

using namespace ds;

TEST_CASE("win automaton matches the implication condition") {
  std::set<int> domainPrios{0, 1, 2};
  std::set<int> transPrios{kBottomPriority, 0, 1, 2};
  PairDpa win = buildWinAutomaton(domainPrios, transPrios);

  std::vector<std::pair<int, int>> pairs;
  for (int d : domainPrios)
    for (int t : transPrios) pairs.push_back({d, t});

  Rng rng(31);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(pairs.size()) - 1);
  std::uniform_int_distribution<int> len(1, 5);
  for (int i = 0; i < 1000; ++i) {
    PriorityPairLasso w;
    int np = len(rng) - 1, nq = len(rng);
    for (int j = 0; j < np; ++j) w.prefix.push_back(pairs[pick(rng)]);
    for (int j = 0; j < nq; ++j) w.period.push_back(pairs[pick(rng)]);
    CHECK(dpaLassoMembership(win, w) == oracles::winConditionHolds(w));
  }
}

TEST_CASE("no transformation never satisfies the condition on live domains") {
  PairDpa win = buildWinAutomaton({0, 1}, {kBottomPriority, 0, 1});
  PriorityPairLasso allBottom{{}, {{0, kBottomPriority}}};
  CHECK(!dpaLassoMembership(win, allBottom));
  PriorityPairLasso deadDomain{{}, {{1, kBottomPriority}}};
  CHECK(dpaLassoMembership(win, deadDomain));
}

static Arena arenaFor(const std::string& name, DelayMode mode) {
  Transducer t = normalize(fixtures::load(name));
  Dpa domain = buildDomainAutomaton(t);
  return buildArena(t, domain, mode);
}

TEST_CASE("arena shape on the identity spec") {
  Arena a = arenaFor("id", DelayMode::Unbounded);
  REQUIRE(!a.vertices.empty());
  const GameVertex& v0 = a.vertices[a.initial];
  CHECK(!v0.eveTurn);
  CHECK(v0.c == kBottomPriority);

  bool sawProduce = false, sawSkip = false;
  for (std::size_t v = 0; v < a.vertices.size(); ++v) {
    CHECK(!a.out[v].empty());  // the game is total
    for (const auto& e : a.out[v]) {
      const GameVertex& w = a.vertices[e.target];
      switch (e.action.kind) {
        case GameAction::Kind::Letter:
          CHECK(!a.vertices[v].eveTurn);
          CHECK(w.eveTurn);
          break;
        case GameAction::Kind::Produce:
          sawProduce = true;
          CHECK(a.vertices[v].eveTurn);
          CHECK(!w.eveTurn);
          CHECK(w.c >= kBottomPriority);
          CHECK(w.p2 == a.profiles.initial);
          break;
        case GameAction::Kind::Skip:
          sawSkip = true;
          CHECK(a.vertices[v].eveTurn);
          CHECK(w.q == a.vertices[v].q);
          CHECK(w.p1 == a.vertices[v].p1);
          break;
        case GameAction::Kind::Halt:
          CHECK(w.halted);
          break;
      }
    }
  }
  CHECK(sawProduce);
  CHECK(sawSkip);
  CHECK(longestSkipRun(a) == -1);
}

TEST_CASE("bounded arenas forbid unbounded skipping") {
  // every nonempty input of these specs has an infinite profile class,
  // so the bounded arena never offers a skip at all
  for (const char* name : {"id", "shift"}) {
    Arena a = arenaFor(name, DelayMode::Bounded);
    for (const auto& edges : a.out)
      for (const auto& e : edges) CHECK(e.action.kind != GameAction::Kind::Skip);
    CHECK(longestSkipRun(a) == 0);
  }
}

TEST_CASE("skip run length counting") {
  Arena a = arenaFor("r1", DelayMode::Bounded);
  int run = longestSkipRun(a);
  CHECK(run >= 0);
  CHECK(run <= computeEll(a.profiles));
}

TEST_CASE("vertex budget is enforced") {
  Transducer t = normalize(fixtures::load("f2"));
  Dpa domain = buildDomainAutomaton(t);
  CHECK_THROWS_AS(buildArena(t, domain, DelayMode::Unbounded, {.maxVertices = 2}),
                  VertexBudgetExceeded);
}

TEST_CASE("product game reads observables") {
  Arena a = arenaFor("id", DelayMode::Unbounded);
  std::set<int> dp(a.domainPriority.begin(), a.domainPriority.end());
  Transducer t = normalize(fixtures::load("id"));
  std::set<int> tp(t.priority.begin(), t.priority.end());
  tp.insert(kBottomPriority);
  PairDpa win = buildWinAutomaton(dp, tp);
  ProductGame pg = composeParityGame(a, win);
  REQUIRE(!pg.game.succ.empty());
  CHECK(pg.origin.size() == pg.game.succ.size());
  for (std::size_t v = 0; v < pg.game.succ.size(); ++v) {
    auto [av, m] = pg.origin[v];
    CHECK(pg.game.eveOwned[v] == a.vertices[av].eveTurn);
    CHECK(pg.game.priority[v] == win.priority[m]);
    CHECK(pg.game.succ[v].size() == a.out[av].size());
  }
}
