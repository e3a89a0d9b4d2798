#include "delaysynth/determinize.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "delaysynth/graph.hpp"
#include "iar.hpp"

namespace ds {

namespace {

struct Nba {
  int stateCount = 0;
  int symCount = 0;
  int initial = 0;
  std::vector<char> accepting;
  std::vector<std::vector<std::vector<int>>> succ;  // [state][sym]
};

// Guess the maximal even priority occurring infinitely often: phase -1
// before the guess, phase e afterwards with only priorities <= e
// allowed; visiting priority e in phase e is accepting.
Nba parityToBuchi(const ParityAutomaton& a) {
  std::vector<int> evens;
  for (int p : a.priority)
    if (p % 2 == 0) evens.push_back(p);
  std::sort(evens.begin(), evens.end());
  evens.erase(std::unique(evens.begin(), evens.end()), evens.end());

  std::map<std::pair<int, int>, int> id;  // (q, phase) -> nba state
  std::vector<std::pair<int, int>> states;
  auto intern = [&](int q, int ph) {
    auto [it, fresh] = id.insert({{q, ph}, static_cast<int>(states.size())});
    if (fresh) states.push_back({q, ph});
    return it->second;
  };

  Nba b;
  b.symCount = static_cast<int>(a.alphabet.size());
  b.initial = intern(a.initial, -1);
  const auto succ = a.successors();
  for (std::size_t s = 0; s < states.size(); ++s) {
    auto [q, ph] = states[s];
    b.succ.emplace_back(b.symCount);
    for (int sym = 0; sym < b.symCount; ++sym)
      for (int to : succ[q][sym]) {
        if (ph == -1) {
          b.succ[s][sym].push_back(intern(to, -1));
          for (int e : evens)
            if (a.priority[to] <= e) b.succ[s][sym].push_back(intern(to, e));
        } else if (a.priority[to] <= ph) {
          b.succ[s][sym].push_back(intern(to, ph));
        }
      }
  }
  b.stateCount = static_cast<int>(states.size());
  b.accepting.resize(states.size(), 0);
  for (std::size_t s = 0; s < states.size(); ++s)
    b.accepting[s] = states[s].second >= 0 &&
                     a.priority[states[s].first] == states[s].second;
  return b;
}

struct SafraNode {
  int name;
  std::vector<int> label;  // sorted
  std::vector<SafraNode> children;
};

struct SafraTree {
  bool empty = true;
  SafraNode root;
  std::set<int> marked;

  std::set<int> presentNames() const {
    std::set<int> out;
    if (empty) return out;
    auto walk = [&](auto&& self, const SafraNode& n) -> void {
      out.insert(n.name);
      for (const auto& c : n.children) self(self, c);
    };
    walk(walk, root);
    return out;
  }

  std::vector<int> encode() const {
    std::vector<int> e;
    if (empty) return e;
    auto walk = [&](auto&& self, const SafraNode& n) -> void {
      e.push_back(n.name);
      e.push_back(static_cast<int>(n.label.size()));
      e.insert(e.end(), n.label.begin(), n.label.end());
      e.push_back(static_cast<int>(n.children.size()));
      for (const auto& c : n.children) self(self, c);
    };
    walk(walk, root);
    e.push_back(-1);
    for (int m : marked) e.push_back(m);
    return e;
  }
};

SafraTree safraStep(const Nba& b, const SafraTree& t, int sym) {
  if (t.empty) return t;
  SafraTree r = t;
  r.marked.clear();

  // spawn accepting children (preorder, smallest unused names first)
  std::set<int> used = t.presentNames();
  auto nextName = [&]() {
    int n = 0;
    while (used.count(n)) ++n;
    used.insert(n);
    return n;
  };
  auto spawn = [&](auto&& self, SafraNode& n) -> void {
    for (auto& c : n.children) self(self, c);
    std::vector<int> acc;
    for (int q : n.label)
      if (b.accepting[q]) acc.push_back(q);
    if (!acc.empty()) n.children.push_back({nextName(), acc, {}});
  };
  spawn(spawn, r.root);

  // subset transition on every label
  auto trans = [&](auto&& self, SafraNode& n) -> void {
    std::set<int> to;
    for (int q : n.label)
      for (int s : b.succ[q][sym]) to.insert(s);
    n.label.assign(to.begin(), to.end());
    for (auto& c : n.children) self(self, c);
  };
  trans(trans, r.root);

  // horizontal merge: a state stays only in the oldest sibling subtree
  auto strip = [&](auto&& self, SafraNode& n,
                   const std::set<int>& kill) -> void {
    std::vector<int> keep;
    for (int q : n.label)
      if (!kill.count(q)) keep.push_back(q);
    n.label = std::move(keep);
    for (auto& c : n.children) self(self, c, kill);
  };
  auto horiz = [&](auto&& self, SafraNode& n) -> void {
    std::set<int> seen;
    for (auto& c : n.children) {
      strip(strip, c, seen);
      seen.insert(c.label.begin(), c.label.end());
      self(self, c);
    }
  };
  horiz(horiz, r.root);

  // drop empty nodes
  auto sweep = [&](auto&& self, SafraNode& n) -> void {
    std::vector<SafraNode> keep;
    for (auto& c : n.children)
      if (!c.label.empty()) {
        self(self, c);
        keep.push_back(std::move(c));
      }
    n.children = std::move(keep);
  };
  if (r.root.label.empty()) {
    r.empty = true;
    r.root = {};
    return r;
  }
  sweep(sweep, r.root);

  // vertical merge: label covered by children -> mark, drop descendants
  auto vert = [&](auto&& self, SafraNode& n) -> void {
    std::size_t covered = 0;
    for (const auto& c : n.children) covered += c.label.size();
    if (!n.children.empty() && covered == n.label.size()) {
      n.children.clear();
      r.marked.insert(n.name);
    } else {
      for (auto& c : n.children) self(self, c);
    }
  };
  vert(vert, r.root);
  return r;
}

}  // namespace

Dpa determinize(const ParityAutomaton& a, const DeterminizeOptions& opt,
                DeterminizeStats* stats) {
  a.validate();
  Nba b = parityToBuchi(a);
  if (static_cast<std::size_t>(b.stateCount) > opt.maxStates)
    throw StateBudgetExceeded("intermediate automaton exceeds state budget");

  SafraTree init;
  init.empty = false;
  init.root = {0, {b.initial}, {}};

  std::map<std::vector<int>, int> id;
  std::vector<SafraTree> trees;
  auto intern = [&](SafraTree t) {
    auto [it, fresh] =
        id.insert({t.encode(), static_cast<int>(trees.size())});
    if (fresh) {
      if (trees.size() >= opt.maxStates)
        throw StateBudgetExceeded("tree construction exceeds state budget");
      trees.push_back(std::move(t));
    }
    return it->second;
  };
  int start = intern(init);
  std::vector<std::vector<int>> next;
  for (std::size_t s = 0; s < trees.size(); ++s) {
    next.emplace_back(b.symCount);
    for (int sym = 0; sym < b.symCount; ++sym)
      next[s][sym] = intern(safraStep(b, trees[s], sym));
  }

  // acceptance pairs: one per node name ever marked
  std::set<int> everMarked;
  for (const auto& t : trees)
    everMarked.insert(t.marked.begin(), t.marked.end());
  std::vector<int> pairName(everMarked.begin(), everMarked.end());
  const int k = static_cast<int>(pairName.size());
  if (k > 64) throw StateBudgetExceeded("more than 64 acceptance pairs");

  detail::RabinSystem rs;
  rs.stateCount = static_cast<int>(trees.size());
  rs.symCount = b.symCount;
  rs.pairCount = k;
  rs.initial = start;
  rs.next = next;
  std::vector<uint64_t> goodAt(trees.size(), 0), badAt(trees.size(), 0);
  for (std::size_t s = 0; s < trees.size(); ++s) {
    auto present = trees[s].presentNames();
    for (int i = 0; i < k; ++i) {
      if (trees[s].marked.count(pairName[i])) goodAt[s] |= 1ull << i;
      if (!present.count(pairName[i])) badAt[s] |= 1ull << i;
    }
  }
  rs.good.resize(trees.size());
  rs.bad.resize(trees.size());
  for (std::size_t s = 0; s < trees.size(); ++s)
    for (int sym = 0; sym < b.symCount; ++sym) {
      rs.good[s].push_back(goodAt[next[s][sym]]);
      rs.bad[s].push_back(badAt[next[s][sym]]);
    }

  auto iar = detail::iarExpand(rs, opt.maxStates);

  Dpa d;
  d.alphabet = a.alphabet;
  d.initial = iar.initial;
  d.next = iar.next;
  d.priority = iar.priority;

  if (stats) {
    stats->buchiStates = b.stateCount;
    stats->rabinStates = static_cast<int>(trees.size());
    stats->rabinPairs = k;
    stats->safraNodeCap = 2 * b.stateCount;
    stats->dpaStates = d.stateCount();
    std::set<int> prios(d.priority.begin(), d.priority.end());
    stats->prioritiesUsed = static_cast<int>(prios.size());
  }
  return d;
}

Dpa buildDomainAutomaton(const Transducer& t, const DeterminizeOptions& opt,
                         DeterminizeStats* stats) {
  return determinize(projectInput(t), opt, stats);
}

bool isDomainClosed(const Dpa& d) {
  const int n = d.stateCount();
  std::vector<std::vector<int>> adj(n);
  for (int s = 0; s < n; ++s)
    for (int to : d.next[s]) adj[s].push_back(to);
  auto live = liveNodes(adj, d.priority);
  auto reach = reachableFrom(adj, d.initial);
  std::vector<char> trimmed(n, 0);
  for (int s = 0; s < n; ++s) trimmed[s] = live[s] && reach[s];
  if (!trimmed[d.initial]) return true;  // empty language

  // a word of the closure that escapes the language follows an
  // infinite trimmed path whose maximal recurring priority is odd
  std::vector<std::vector<int>> tadj(n);
  for (int s = 0; s < n; ++s)
    if (trimmed[s])
      for (int to : adj[s])
        if (trimmed[to]) tadj[s].push_back(to);
  std::vector<int> shifted(n, 0);
  for (int s = 0; s < n; ++s) shifted[s] = d.priority[s] + 1;
  std::vector<char> from(n, 0);
  from[d.initial] = 1;
  return !evenDominatedCycleReachable(tadj, shifted, from);
}

}  // namespace ds
