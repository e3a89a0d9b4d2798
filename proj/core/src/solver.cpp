#include "delaysynth/solver.hpp"

#include <algorithm>

#include "delaysynth/errors.hpp"

namespace ds {

namespace {

// 0 = Eve (even priorities), 1 = Adam
struct Zielonka {
  const ParityGame& g;
  std::vector<std::vector<int>> pred;
  std::vector<char> winner;   // player index per vertex
  std::vector<int> strat;     // successor index chosen by the owner

  explicit Zielonka(const ParityGame& game) : g(game) {
    const int n = static_cast<int>(g.succ.size());
    pred.resize(n);
    winner.assign(n, 0);
    strat.assign(n, -1);
    for (int v = 0; v < n; ++v) {
      if (g.succ[v].empty())
        throw ValidationError("parity game vertex without successor");
      for (int w : g.succ[v]) pred[w].push_back(v);
    }
  }

  int owner(int v) const { return g.eveOwned[v] ? 0 : 1; }

  // attractor of `target` for `player` within `alive`; records the
  // player's pulling move in `strat` for newly attracted own vertices
  std::vector<char> attract(int player, const std::vector<char>& target,
                            const std::vector<char>& alive) {
    const int n = static_cast<int>(g.succ.size());
    std::vector<char> in(n, 0);
    std::vector<int> escapes(n, 0);
    for (int v = 0; v < n; ++v)
      if (alive[v])
        for (int w : g.succ[v])
          if (alive[w]) ++escapes[v];
    std::vector<int> todo;
    for (int v = 0; v < n; ++v)
      if (alive[v] && target[v]) {
        in[v] = 1;
        todo.push_back(v);
      }
    while (!todo.empty()) {
      int w = todo.back();
      todo.pop_back();
      for (int v : pred[w]) {
        if (!alive[v] || in[v]) continue;
        if (owner(v) == player) {
          in[v] = 1;
          for (std::size_t i = 0; i < g.succ[v].size(); ++i)
            if (g.succ[v][i] == w) {
              strat[v] = static_cast<int>(i);
              break;
            }
          todo.push_back(v);
        } else {
          if (--escapes[v] == 0) {
            in[v] = 1;
            todo.push_back(v);
          }
        }
      }
    }
    return in;
  }

  void solve(std::vector<char> alive) {
    const int n = static_cast<int>(g.succ.size());
    int p = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v]) p = std::max(p, g.priority[v]);
    if (p < 0) return;
    const int i = p % 2;

    std::vector<char> top(n, 0);
    for (int v = 0; v < n; ++v) top[v] = alive[v] && g.priority[v] == p;
    auto attr = attract(i, top, alive);

    std::vector<char> rest(n, 0);
    bool restNonEmpty = false;
    for (int v = 0; v < n; ++v) {
      rest[v] = alive[v] && !attr[v];
      restNonEmpty = restNonEmpty || rest[v];
    }
    if (restNonEmpty) solve(rest);

    bool opponentWinsSome = false;
    for (int v = 0; v < n; ++v)
      if (rest[v] && winner[v] != i) opponentWinsSome = true;

    if (!opponentWinsSome) {
      for (int v = 0; v < n; ++v)
        if (alive[v]) {
          winner[v] = static_cast<char>(i);
          if (top[v] && owner(v) == i && strat[v] == -1) {
            for (std::size_t s = 0; s < g.succ[v].size(); ++s)
              if (alive[g.succ[v][s]]) {
                strat[v] = static_cast<int>(s);
                break;
              }
          }
        }
      // attracted own vertices already carry their pulling move; top
      // vertices with an attracting move keep it (it stays in alive)
      for (int v = 0; v < n; ++v)
        if (alive[v] && top[v] && owner(v) == i) {
          // ensure the recorded move stays inside alive
          if (strat[v] < 0 || !alive[g.succ[v][strat[v]]]) {
            for (std::size_t s = 0; s < g.succ[v].size(); ++s)
              if (alive[g.succ[v][s]]) {
                strat[v] = static_cast<int>(s);
                break;
              }
          }
        }
      return;
    }

    std::vector<char> oppWin(n, 0);
    for (int v = 0; v < n; ++v) oppWin[v] = rest[v] && winner[v] != i;
    auto oppAttr = attract(1 - i, oppWin, alive);
    std::vector<char> remaining(n, 0);
    bool any = false;
    for (int v = 0; v < n; ++v) {
      remaining[v] = alive[v] && !oppAttr[v];
      any = any || remaining[v];
    }
    for (int v = 0; v < n; ++v)
      if (oppAttr[v]) winner[v] = static_cast<char>(1 - i);
    if (any) solve(remaining);
  }
};

}  // namespace

SolveResult solveParity(const ParityGame& g) {
  const int n = static_cast<int>(g.succ.size());
  Zielonka z(g);
  z.solve(std::vector<char>(n, 1));
  SolveResult r;
  r.eveWins.resize(n);
  r.eveStrategy.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    r.eveWins[v] = z.winner[v] == 0;
    if (r.eveWins[v] && g.eveOwned[v]) r.eveStrategy[v] = z.strat[v];
  }
  return r;
}

int StrategyAutomaton::updateMemory(const Arena& a, int memory,
                                    int vertex) const {
  return win.step(memory, a.observable(vertex));
}

const GameAction& StrategyAutomaton::nextAction(int memory,
                                                int eveVertex) const {
  auto it = action.find(static_cast<long long>(memory) * arenaVertexCount +
                        eveVertex);
  if (it == action.end())
    throw NotWinning("strategy undefined at reached position");
  return it->second;
}

StrategyAutomaton makeStrategyAutomaton(const Arena& arena,
                                        const PairDpa& win,
                                        const ProductGame& product,
                                        const SolveResult& solve) {
  if (!solve.eveWins[product.game.initial])
    throw NotWinning("no winning strategy from the initial position");
  StrategyAutomaton s;
  s.win = win;
  s.initialMemory = win.initial;
  s.arenaVertexCount = static_cast<int>(arena.vertices.size());
  for (std::size_t pv = 0; pv < product.origin.size(); ++pv) {
    if (!product.game.eveOwned[pv] || !solve.eveWins[pv]) continue;
    int choice = solve.eveStrategy[pv];
    if (choice < 0) continue;
    auto [v, m] = product.origin[pv];
    s.action[static_cast<long long>(m) * s.arenaVertexCount + v] =
        arena.out[v][choice].action;
  }
  return s;
}

}  // namespace ds
