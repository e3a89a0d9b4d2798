#include "delaysynth/sampling.hpp"

#include <algorithm>

#include "delaysynth/graph.hpp"

namespace ds {

Word randomWord(const std::vector<Symbol>& alphabet, Rng& rng, int maxLen) {
  std::uniform_int_distribution<int> len(0, maxLen);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  Word w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) w += alphabet[pick(rng)];
  return w;
}

Lasso randomLasso(const std::vector<Symbol>& alphabet, Rng& rng,
                  int maxPrefix, int maxPeriod) {
  Lasso l;
  l.prefix = randomWord(alphabet, rng, maxPrefix);
  std::uniform_int_distribution<int> len(1, std::max(1, maxPeriod));
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  int n = len(rng);
  for (int i = 0; i < n; ++i) l.period += alphabet[pick(rng)];
  return l;
}

namespace {

// breadth-first path with randomized neighbor order; returns the letter
// sequence, or nothing if unreachable
std::optional<Word> randomPath(const Dpa& d, int from,
                               const std::vector<char>& goal,
                               const std::vector<char>& allowed, Rng& rng,
                               bool allowEmpty) {
  const int n = d.stateCount();
  if (allowEmpty && goal[from]) return Word();
  std::vector<int> prevState(n, -1), prevSym(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<int> frontier{from};
  seen[from] = 1;
  std::vector<int> syms(d.alphabet.size());
  for (std::size_t i = 0; i < syms.size(); ++i) syms[i] = static_cast<int>(i);
  auto pathTo = [&](int s) {
    Word w;
    for (int cur = s; cur != from; cur = prevState[cur])
      w += d.alphabet[prevSym[cur]];
    std::reverse(w.begin(), w.end());
    return w;
  };
  while (!frontier.empty()) {
    std::vector<int> nextFrontier;
    for (int s : frontier) {
      std::shuffle(syms.begin(), syms.end(), rng);
      for (int a : syms) {
        int to = d.next[s][a];
        if (!allowed[to]) continue;
        if (goal[to]) return pathTo(s) + d.alphabet[a];
        if (seen[to]) continue;
        seen[to] = 1;
        prevState[to] = s;
        prevSym[to] = a;
        nextFrontier.push_back(to);
      }
    }
    frontier = std::move(nextFrontier);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Lasso> sampleAcceptedLasso(const Dpa& d, Rng& rng,
                                         int maxPrefix) {
  const int n = d.stateCount();
  std::vector<std::vector<int>> adj(n);
  for (int s = 0; s < n; ++s)
    for (int to : d.next[s]) adj[s].push_back(to);
  auto live = liveNodes(adj, d.priority);
  if (!live[d.initial]) return std::nullopt;

  // random stroll through live states
  std::uniform_int_distribution<int> strollLen(0, maxPrefix);
  std::uniform_int_distribution<std::size_t> pick(0, d.alphabet.size() - 1);
  int cur = d.initial;
  Word stroll;
  for (int i = strollLen(rng); i > 0; --i) {
    std::vector<int> options;
    for (std::size_t a = 0; a < d.alphabet.size(); ++a)
      if (live[d.next[cur][a]]) options.push_back(static_cast<int>(a));
    if (options.empty()) break;
    int a = options[pick(rng) % options.size()];
    stroll += d.alphabet[a];
    cur = d.next[cur][a];
  }

  // head for an even-dominated cycle: pick an even cap at random, find
  // a cap-priority state inside a qualifying component
  std::vector<int> evens;
  for (int p : d.priority)
    if (p % 2 == 0) evens.push_back(p);
  std::sort(evens.begin(), evens.end());
  evens.erase(std::unique(evens.begin(), evens.end()), evens.end());
  std::shuffle(evens.begin(), evens.end(), rng);

  for (int cap : evens) {
    std::vector<std::vector<int>> sub(n);
    std::vector<char> inSub(n, 0);
    for (int s = 0; s < n; ++s) {
      if (d.priority[s] > cap) continue;
      inSub[s] = 1;
      for (int to : adj[s])
        if (d.priority[to] <= cap) sub[s].push_back(to);
    }
    std::vector<int> comp;
    sccDecompose(sub, comp);
    std::vector<int> size(n, 0);
    std::vector<char> self(n, 0);
    for (int s = 0; s < n; ++s)
      if (inSub[s]) ++size[comp[s]];
    for (int s = 0; s < n; ++s)
      if (inSub[s])
        for (int to : sub[s])
          if (to == s) self[s] = 1;
    std::vector<char> anchor(n, 0);
    bool found = false;
    for (int s = 0; s < n; ++s)
      if (inSub[s] && d.priority[s] == cap &&
          (size[comp[s]] > 1 || self[s])) {
        anchor[s] = 1;
        found = true;
      }
    if (!found) continue;

    std::vector<char> all(n, 1);
    auto toAnchor = randomPath(d, cur, anchor, all, rng, true);
    if (!toAnchor) continue;
    int m = cur;
    for (Symbol a : *toAnchor) m = d.step(m, a);

    // cycle through m inside the cap-restricted component
    std::vector<char> inComp(n, 0);
    for (int s = 0; s < n; ++s)
      inComp[s] = inSub[s] && comp[s] == comp[m];
    std::vector<char> goalM(n, 0);
    goalM[m] = 1;
    auto cycle = randomPath(d, m, goalM, inComp, rng, false);
    if (!cycle || cycle->empty()) continue;

    Lasso l;
    l.prefix = stroll + *toAnchor;
    l.period = *cycle;
    return l;
  }
  return std::nullopt;
}

}  // namespace ds
