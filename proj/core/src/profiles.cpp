#include "delaysynth/profiles.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "delaysynth/errors.hpp"
#include "delaysynth/graph.hpp"

namespace ds {

void Profile::canonicalize() {
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
}

bool Profile::contains(int src, int dst) const {
  for (const auto& t : triples)
    if (t.src == src && t.dst == dst) return true;
  return false;
}

Profile identityProfile(const Transducer& t) {
  // runs on the empty input may still traverse output-only transitions
  const int n = t.stateCount();
  std::vector<std::vector<int>> eps(n);
  for (std::size_t i = 0; i < t.transitions.size(); ++i)
    if (t.transitions[i].in.empty())
      eps[t.transitions[i].from].push_back(static_cast<int>(i));
  Profile p;
  for (int src = 0; src < n; ++src) {
    std::set<std::pair<int, int>> seen{{src, kBottomPriority}};
    std::vector<std::pair<int, int>> todo{{src, kBottomPriority}};
    while (!todo.empty()) {
      auto [q, m] = todo.back();
      todo.pop_back();
      for (int ti : eps[q]) {
        const auto& tr = t.transitions[ti];
        std::pair<int, int> nx{tr.to, std::max(m, t.priority[tr.to])};
        if (seen.insert(nx).second) todo.push_back(nx);
      }
    }
    for (const auto& [q, m] : seen) p.triples.push_back({src, q, m});
  }
  p.canonicalize();
  return p;
}

Profile letterProfile(const Transducer& t, Symbol a) {
  if (!t.isNormalized())
    throw ValidationError("letter profile requires a normalized transducer");
  const int n = t.stateCount();
  std::vector<std::vector<int>> eps(n), lett(n);
  for (std::size_t i = 0; i < t.transitions.size(); ++i) {
    const auto& tr = t.transitions[i];
    if (tr.in.empty())
      eps[tr.from].push_back(static_cast<int>(i));
    else if (tr.in[0] == a)
      lett[tr.from].push_back(static_cast<int>(i));
  }
  Profile result;
  for (int src = 0; src < n; ++src) {
    // phase 0: before the letter, phase 1: after
    std::set<std::tuple<int, int, int>> seen;  // (state, phase, max after src)
    std::vector<std::tuple<int, int, int>> todo{{src, 0, kBottomPriority}};
    seen.insert({src, 0, kBottomPriority});
    auto push = [&](int q, int ph, int m) {
      if (seen.insert({q, ph, m}).second) todo.push_back({q, ph, m});
    };
    while (!todo.empty()) {
      auto [q, ph, m] = todo.back();
      todo.pop_back();
      for (int ti : eps[q]) {
        const auto& tr = t.transitions[ti];
        push(tr.to, ph, std::max(m, t.priority[tr.to]));
      }
      if (ph == 0)
        for (int ti : lett[q]) {
          const auto& tr = t.transitions[ti];
          push(tr.to, 1, std::max(m, t.priority[tr.to]));
        }
    }
    for (const auto& [q, ph, m] : seen)
      if (ph == 1) result.triples.push_back({src, q, m});
  }
  result.canonicalize();
  return result;
}

Profile profileMul(const Profile& p1, const Profile& p2) {
  std::map<int, std::vector<const ProfileTriple*>> byMid;
  for (const auto& t2 : p2.triples) byMid[t2.src].push_back(&t2);
  Profile r;
  for (const auto& t1 : p1.triples) {
    auto it = byMid.find(t1.dst);
    if (it == byMid.end()) continue;
    for (const ProfileTriple* t2 : it->second)
      r.triples.push_back({t1.src, t2->dst, std::max(t1.pri, t2->pri)});
  }
  r.canonicalize();
  return r;
}

Profile profileOfWord(const Transducer& t, const Word& u) {
  Profile p = identityProfile(t);
  for (Symbol a : u) p = profileMul(p, letterProfile(t, a));
  return p;
}

int bestPriority(const Profile& p, int src, int dst) {
  bool any = false;
  int bestEven = -1, minOdd = 0;
  bool haveEven = false, haveOdd = false;
  for (const auto& t : p.triples) {
    if (t.src != src || t.dst != dst) continue;
    any = true;
    if (t.pri >= 0 && t.pri % 2 == 0) {
      bestEven = haveEven ? std::max(bestEven, t.pri) : t.pri;
      haveEven = true;
    } else {
      minOdd = haveOdd ? std::min(minOdd, t.pri) : t.pri;
      haveOdd = true;
    }
  }
  if (!any) throw NoTransformation("no transformation between given states");
  return haveEven ? bestEven : minOdd;
}

int ProfileAutomaton::symIndex(Symbol a) const {
  auto it = std::find(alphabet.begin(), alphabet.end(), a);
  if (it == alphabet.end())
    throw ValidationError("symbol not in profile automaton alphabet");
  return static_cast<int>(it - alphabet.begin());
}

int ProfileAutomaton::run(const Word& u) const {
  int s = initial;
  for (Symbol a : u) s = next[s][symIndex(a)];
  return s;
}

ProfileAutomaton buildProfileAutomaton(const Transducer& tin) {
  Transducer t = normalize(tin);
  ProfileAutomaton pa;
  pa.alphabet = t.inputAlphabet;
  std::vector<Profile> letters;
  for (Symbol a : pa.alphabet) letters.push_back(letterProfile(t, a));

  std::map<Profile, int> id;
  auto intern = [&](Profile p) {
    auto [it, fresh] = id.insert({p, static_cast<int>(pa.profiles.size())});
    if (fresh) pa.profiles.push_back(std::move(p));
    return it->second;
  };
  pa.initial = intern(identityProfile(t));
  for (std::size_t s = 0; s < pa.profiles.size(); ++s) {
    pa.next.emplace_back();
    for (std::size_t ai = 0; ai < pa.alphabet.size(); ++ai)
      pa.next[s].push_back(intern(profileMul(pa.profiles[s], letters[ai])));
  }

  // L(P) is infinite iff P is reachable from a state on a cycle.
  const int n = static_cast<int>(pa.profiles.size());
  std::vector<std::vector<int>> adj(n);
  for (int s = 0; s < n; ++s)
    for (int to : pa.next[s]) adj[s].push_back(to);
  std::vector<int> comp;
  sccDecompose(adj, comp);
  std::vector<int> size(n, 0);
  std::vector<char> cyc(n, 0);
  for (int s = 0; s < n; ++s) ++size[comp[s]];
  for (int s = 0; s < n; ++s)
    for (int to : adj[s])
      if (comp[to] == comp[s] && (to == s || size[comp[s]] > 1)) cyc[s] = 1;
  std::vector<char> infinite(n, 0);
  std::vector<int> todo;
  for (int s = 0; s < n; ++s)
    if (cyc[s]) {
      infinite[s] = 1;
      todo.push_back(s);
    }
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    for (int w : adj[v])
      if (!infinite[w]) {
        infinite[w] = 1;
        todo.push_back(w);
      }
  }
  pa.finiteClass.resize(n);
  for (int s = 0; s < n; ++s) pa.finiteClass[s] = !infinite[s];
  return pa;
}

bool isProfileLanguageFinite(const ProfileAutomaton& pa, const Profile& p) {
  for (std::size_t s = 0; s < pa.profiles.size(); ++s)
    if (pa.profiles[s] == p) return pa.finiteClass[s];
  return true;  // unreachable profile: empty class
}

int computeEll(const ProfileAutomaton& pa) {
  if (!pa.finiteClass[pa.initial]) return 0;
  // longest path within the finite-class states (a DAG)
  std::vector<int> memo(pa.profiles.size(), -1);
  auto dfs = [&](auto&& self, int s) -> int {
    if (memo[s] >= 0) return memo[s];
    memo[s] = 0;
    int best = 0;
    for (int to : pa.next[s])
      if (pa.finiteClass[to]) best = std::max(best, 1 + self(self, to));
    return memo[s] = best;
  };
  return dfs(dfs, pa.initial);
}

}  // namespace ds
