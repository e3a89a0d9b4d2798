#include "delaysynth/game.hpp"

#include <algorithm>
#include <map>

#include "delaysynth/errors.hpp"
#include "delaysynth/graph.hpp"
#include "iar.hpp"

namespace ds {

namespace {

bool sameAction(const GameAction& a, const GameAction& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case GameAction::Kind::Letter:
      return a.letter == b.letter;
    case GameAction::Kind::Produce:
      return a.triple == b.triple;
    default:
      return true;
  }
}

}  // namespace

int Arena::edgeIndex(int v, const GameAction& a) const {
  for (std::size_t i = 0; i < out[v].size(); ++i)
    if (sameAction(out[v][i].action, a)) return static_cast<int>(i);
  throw ValidationError("action not available at vertex");
}

Arena buildArena(const Transducer& t, const Dpa& domain, DelayMode mode,
                 const ArenaOptions& opt) {
  if (!t.isNormalized())
    throw ValidationError("arena construction requires a normalized "
                          "transducer");
  Arena a;
  a.mode = mode;
  a.profiles = buildProfileAutomaton(t);
  a.domainPriority = domain.priority;

  std::map<GameVertex, int> id;
  auto intern = [&](const GameVertex& v) {
    auto [it, fresh] = id.insert({v, static_cast<int>(a.vertices.size())});
    if (fresh) {
      if (a.vertices.size() >= opt.maxVertices)
        throw VertexBudgetExceeded("arena exceeds vertex budget");
      a.vertices.push_back(v);
    }
    return it->second;
  };

  GameVertex init;
  init.q = t.initial;
  init.c = kBottomPriority;
  init.p1 = a.profiles.initial;
  init.p2 = a.profiles.initial;
  init.r = domain.initial;
  init.eveTurn = false;
  a.initial = intern(init);

  for (std::size_t vi = 0; vi < a.vertices.size(); ++vi) {
    const GameVertex v = a.vertices[vi];
    a.out.emplace_back();
    if (v.halted) {
      if (!v.eveTurn) {
        for (Symbol sym : t.inputAlphabet) {
          GameVertex w = v;
          w.r = domain.step(v.r, sym);
          w.eveTurn = true;
          a.out[vi].push_back(
              {{GameAction::Kind::Letter, sym, {}}, intern(w)});
        }
      } else {
        GameVertex w = v;
        w.eveTurn = false;
        a.out[vi].push_back({{GameAction::Kind::Halt, 0, {}}, intern(w)});
      }
      continue;
    }
    if (!v.eveTurn) {
      for (Symbol sym : t.inputAlphabet) {
        GameVertex w = v;
        w.c = kBottomPriority;
        w.p2 = a.profiles.next[v.p2][a.profiles.symIndex(sym)];
        w.r = domain.step(v.r, sym);
        w.eveTurn = true;
        a.out[vi].push_back({{GameAction::Kind::Letter, sym, {}}, intern(w)});
      }
      continue;
    }
    // Eve's choices
    bool skipAllowed =
        mode == DelayMode::Unbounded || a.profiles.finiteClass[v.p2];
    if (skipAllowed) {
      GameVertex w = v;
      w.eveTurn = false;
      a.out[vi].push_back({{GameAction::Kind::Skip, 0, {}}, intern(w)});
    }
    for (const auto& tr : a.profiles.profiles[v.p1].triples) {
      if (tr.src != v.q) continue;
      GameVertex w;
      w.q = tr.dst;
      w.c = bestPriority(a.profiles.profiles[v.p1], tr.src, tr.dst);
      w.p1 = v.p2;
      w.p2 = a.profiles.initial;
      w.r = v.r;
      w.eveTurn = false;
      GameAction act{GameAction::Kind::Produce, 0,
                     {tr.src, tr.dst, w.c}};
      bool dup = false;
      for (const auto& e : a.out[vi])
        if (sameAction(e.action, act)) dup = true;
      if (!dup) a.out[vi].push_back({act, intern(w)});
    }
    if (a.out[vi].empty()) {
      GameVertex w;
      w.r = v.r;
      w.eveTurn = false;
      w.halted = true;
      a.out[vi].push_back({{GameAction::Kind::Halt, 0, {}}, intern(w)});
    }
  }
  return a;
}

PairDpa buildWinAutomaton(const std::set<int>& domainPriorities,
                          const std::set<int>& transducerPriorities) {
  std::vector<std::pair<int, int>> alphabet;
  for (int d : domainPriorities)
    for (int t : transducerPriorities) alphabet.push_back({d, t});

  // one pair per odd domain priority and per even transformation
  // priority; the run is winning when max Inf(d) is odd or max Inf(t)
  // is even
  struct PairSpec {
    bool onDomain;
    int value;
  };
  std::vector<PairSpec> pairs;
  for (int d : domainPriorities)
    if (d % 2 != 0) pairs.push_back({true, d});
  for (int t : transducerPriorities)
    if (t >= 0 && t % 2 == 0) pairs.push_back({false, t});

  detail::RabinSystem rs;
  rs.stateCount = 1;
  rs.symCount = static_cast<int>(alphabet.size());
  rs.pairCount = static_cast<int>(pairs.size());
  rs.initial = 0;
  rs.next = {std::vector<int>(alphabet.size(), 0)};
  rs.good = {std::vector<uint64_t>(alphabet.size(), 0)};
  rs.bad = {std::vector<uint64_t>(alphabet.size(), 0)};
  for (std::size_t s = 0; s < alphabet.size(); ++s) {
    auto [d, t] = alphabet[s];
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      int obs = pairs[i].onDomain ? d : t;
      if (obs == pairs[i].value) rs.good[0][s] |= 1ull << i;
      if (obs > pairs[i].value) rs.bad[0][s] |= 1ull << i;
    }
  }

  auto iar = detail::iarExpand(rs, 10000000);
  PairDpa w;
  w.alphabet = alphabet;
  w.initial = iar.initial;
  w.next = iar.next;
  w.priority = iar.priority;
  return w;
}

ProductGame composeParityGame(const Arena& arena, const PairDpa& win) {
  ProductGame pg;
  std::map<std::pair<int, int>, int> id;
  auto intern = [&](int v, int m) {
    auto [it, fresh] =
        id.insert({{v, m}, static_cast<int>(pg.origin.size())});
    if (fresh) pg.origin.push_back({v, m});
    return it->second;
  };
  pg.game.initial =
      intern(arena.initial,
             win.step(win.initial, arena.observable(arena.initial)));
  for (std::size_t s = 0; s < pg.origin.size(); ++s) {
    auto [v, m] = pg.origin[s];
    pg.game.eveOwned.push_back(arena.vertices[v].eveTurn);
    pg.game.priority.push_back(win.priority[m]);
    pg.game.succ.emplace_back();
    for (const auto& e : arena.out[v])
      pg.game.succ[s].push_back(
          intern(e.target, win.step(m, arena.observable(e.target))));
  }
  return pg;
}

int longestSkipRun(const Arena& arena) {
  const int n = static_cast<int>(arena.vertices.size());
  std::vector<std::vector<int>> full(n);
  for (int v = 0; v < n; ++v)
    for (const auto& e : arena.out[v]) full[v].push_back(e.target);
  auto reach = reachableFrom(full, arena.initial);

  // produce-free subgraph over reachable vertices
  std::vector<std::vector<int>> adj(n);
  std::vector<std::vector<char>> skip(n);
  for (int v = 0; v < n; ++v) {
    if (!reach[v]) continue;
    for (const auto& e : arena.out[v]) {
      if (e.action.kind == GameAction::Kind::Produce) continue;
      adj[v].push_back(e.target);
      skip[v].push_back(e.action.kind == GameAction::Kind::Skip);
    }
  }

  std::vector<int> comp;
  int comps = sccDecompose(adj, comp);
  std::vector<int> size(comps, 0);
  for (int v = 0; v < n; ++v)
    if (reach[v]) ++size[comp[v]];
  for (int v = 0; v < n; ++v)
    for (std::size_t i = 0; i < adj[v].size(); ++i) {
      int w = adj[v][i];
      if (comp[w] != comp[v] || !skip[v][i]) continue;
      if (w == v || size[comp[v]] > 1) return -1;  // skip cycle, no produce
    }

  // longest skip-counting path over the condensation; only edges
  // crossing components can carry skips now, and component ids come out
  // of the decomposition in reverse topological order
  std::vector<int> best(comps, -1);
  for (int v = 0; v < n; ++v)
    if (reach[v]) best[comp[v]] = 0;
  std::vector<std::vector<std::pair<int, int>>> cadj(comps);
  for (int v = 0; v < n; ++v)
    for (std::size_t i = 0; i < adj[v].size(); ++i)
      if (comp[adj[v][i]] != comp[v])
        cadj[comp[v]].push_back({comp[adj[v][i]], skip[v][i] ? 1 : 0});
  int result = 0;
  for (int c = comps - 1; c >= 0; --c) {
    if (best[c] < 0) continue;
    result = std::max(result, best[c]);
    for (auto [w, cost] : cadj[c])
      best[w] = std::max(best[w], best[c] + cost);
  }
  return result;
}

}  // namespace ds
