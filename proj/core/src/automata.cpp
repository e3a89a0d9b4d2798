#include "delaysynth/automata.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "delaysynth/graph.hpp"

namespace ds {

// ---------------------------------------------------------------- graph

int sccDecompose(const std::vector<std::vector<int>>& adj,
                 std::vector<int>& comp) {
  const int n = static_cast<int>(adj.size());
  comp.assign(n, -1);
  std::vector<int> low(n, 0), num(n, -1), stack;
  std::vector<char> onStack(n, 0);
  int counter = 0, comps = 0;

  // iterative Tarjan
  struct Frame {
    int v;
    std::size_t edge;
  };
  std::vector<Frame> call;
  for (int root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    call.push_back({root, 0});
    num[root] = low[root] = counter++;
    stack.push_back(root);
    onStack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < adj[f.v].size()) {
        int w = adj[f.v][f.edge++];
        if (num[w] == -1) {
          num[w] = low[w] = counter++;
          stack.push_back(w);
          onStack[w] = 1;
          call.push_back({w, 0});
        } else if (onStack[w]) {
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        int v = f.v;
        call.pop_back();
        if (!call.empty())
          low[call.back().v] = std::min(low[call.back().v], low[v]);
        if (low[v] == num[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            onStack[w] = 0;
            comp[w] = comps;
            if (w == v) break;
          }
          ++comps;
        }
      }
    }
  }
  return comps;
}

std::vector<char> reachableFrom(const std::vector<std::vector<int>>& adj,
                                int start) {
  std::vector<char> seen(adj.size(), 0);
  if (start < 0 || start >= static_cast<int>(adj.size())) return seen;
  std::vector<int> todo{start};
  seen[start] = 1;
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        todo.push_back(w);
      }
  }
  return seen;
}

namespace {

// SCC ids of nodes hosting a qualifying cycle in the <=M subgraph.
std::vector<char> qualifyingNodes(const std::vector<std::vector<int>>& adj,
                                  const std::vector<int>& priority, int cap,
                                  const CycleEdgeFlags& req) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> sub(n);
  for (int v = 0; v < n; ++v) {
    if (priority[v] > cap) continue;
    for (std::size_t i = 0; i < adj[v].size(); ++i) {
      int w = adj[v][i];
      if (priority[w] <= cap) sub[v].push_back(w);
    }
  }
  std::vector<int> comp;
  sccDecompose(sub, comp);
  const int comps = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> size(comps, 0);
  std::vector<char> hasSelf(comps, 0), hasCap(comps, 0);
  std::vector<uint8_t> mask(comps, 0);
  for (int v = 0; v < n; ++v) {
    if (priority[v] > cap) continue;
    ++size[comp[v]];
    if (priority[v] == cap) hasCap[comp[v]] = 1;
  }
  for (int v = 0; v < n; ++v) {
    if (priority[v] > cap) continue;
    for (std::size_t i = 0; i < adj[v].size(); ++i) {
      int w = adj[v][i];
      if (priority[w] > cap || comp[w] != comp[v]) continue;
      if (w == v || size[comp[v]] > 1) {
        if (w == v) hasSelf[comp[v]] = 1;
        if (req.flags) mask[comp[v]] |= (*req.flags)[v][i];
      }
    }
  }
  // nontrivial: size > 1 or a self-loop
  std::vector<char> ok(n, 0);
  for (int v = 0; v < n; ++v) {
    if (priority[v] > cap) continue;
    int c = comp[v];
    bool nontrivial = size[c] > 1 || hasSelf[c];
    if (!nontrivial || !hasCap[c]) continue;
    if (req.flags && (mask[c] & req.requiredMask) != req.requiredMask)
      continue;
    ok[v] = 1;
  }
  return ok;
}

}  // namespace

bool evenDominatedCycleReachable(const std::vector<std::vector<int>>& adj,
                                 const std::vector<int>& priority,
                                 const std::vector<char>& from,
                                 const CycleEdgeFlags& req) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return false;
  std::vector<int> caps(priority.begin(), priority.end());
  std::sort(caps.begin(), caps.end());
  caps.erase(std::unique(caps.begin(), caps.end()), caps.end());
  // forward reachability from the flagged set
  std::vector<char> reach(n, 0);
  std::vector<int> todo;
  for (int v = 0; v < n; ++v)
    if (from[v]) {
      reach[v] = 1;
      todo.push_back(v);
    }
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    for (int w : adj[v])
      if (!reach[w]) {
        reach[w] = 1;
        todo.push_back(w);
      }
  }
  for (int cap : caps) {
    if (cap % 2 != 0) continue;
    auto ok = qualifyingNodes(adj, priority, cap, req);
    for (int v = 0; v < n; ++v)
      if (ok[v] && reach[v]) return true;
  }
  return false;
}

std::vector<char> liveNodes(const std::vector<std::vector<int>>& adj,
                            const std::vector<int>& priority) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> live(n, 0);
  if (n == 0) return live;
  std::vector<std::vector<int>> radj(n);
  for (int v = 0; v < n; ++v)
    for (int w : adj[v]) radj[w].push_back(v);
  std::vector<int> caps(priority.begin(), priority.end());
  std::sort(caps.begin(), caps.end());
  caps.erase(std::unique(caps.begin(), caps.end()), caps.end());
  std::vector<int> todo;
  for (int cap : caps) {
    if (cap % 2 != 0) continue;
    auto ok = qualifyingNodes(adj, priority, cap, {});
    for (int v = 0; v < n; ++v)
      if (ok[v] && !live[v]) {
        live[v] = 1;
        todo.push_back(v);
      }
  }
  while (!todo.empty()) {
    int v = todo.back();
    todo.pop_back();
    for (int w : radj[v])
      if (!live[w]) {
        live[w] = 1;
        todo.push_back(w);
      }
  }
  return live;
}

// ------------------------------------------------------------- automata

void ParityAutomaton::validate() const {
  if (initial < 0 || initial >= stateCount)
    throw ValidationError("initial state out of range");
  if (static_cast<int>(priority.size()) != stateCount)
    throw ValidationError("priority not defined on every state");
  for (const auto& tr : transitions) {
    if (tr.from < 0 || tr.from >= stateCount || tr.to < 0 ||
        tr.to >= stateCount)
      throw ValidationError("transition endpoint out of range");
    if (std::find(alphabet.begin(), alphabet.end(), tr.sym) == alphabet.end())
      throw ValidationError("transition symbol not in alphabet");
  }
  for (int p : priority)
    if (p < 0) throw ValidationError("negative priority");
}

int ParityAutomaton::symIndex(Symbol a) const {
  auto it = std::find(alphabet.begin(), alphabet.end(), a);
  if (it == alphabet.end())
    throw ValidationError(std::string("symbol not in alphabet: ") + a);
  return static_cast<int>(it - alphabet.begin());
}

std::vector<std::vector<std::vector<int>>> ParityAutomaton::successors()
    const {
  std::vector<std::vector<std::vector<int>>> out(
      stateCount, std::vector<std::vector<int>>(alphabet.size()));
  for (const auto& tr : transitions)
    out[tr.from][symIndex(tr.sym)].push_back(tr.to);
  return out;
}

bool npaLassoMembership(const ParityAutomaton& a, const Lasso& w) {
  if (!w.wellFormed()) throw ValidationError("lasso period empty");
  const auto succ = a.successors();
  const int phases = static_cast<int>(w.prefix.size() + w.period.size());
  auto id = [&](int q, int ph) { return q * phases + ph; };
  auto nextPhase = [&](int ph) {
    ++ph;
    if (ph >= phases) ph = static_cast<int>(w.prefix.size());
    return ph;
  };
  const int n = a.stateCount * phases;
  std::vector<std::vector<int>> adj(n);
  std::vector<int> prio(n, 0);
  for (int q = 0; q < a.stateCount; ++q)
    for (int ph = 0; ph < phases; ++ph) {
      prio[id(q, ph)] = a.priority[q];
      Symbol sym = ph < static_cast<int>(w.prefix.size())
                       ? w.prefix[ph]
                       : w.period[ph - w.prefix.size()];
      int si;
      try {
        si = a.symIndex(sym);
      } catch (const ValidationError&) {
        continue;  // letter outside alphabet: no run survives this phase
      }
      for (int to : succ[q][si]) adj[id(q, ph)].push_back(id(to, nextPhase(ph)));
    }
  std::vector<char> from(n, 0);
  from[id(a.initial, 0)] = 1;
  return evenDominatedCycleReachable(adj, prio, from);
}

namespace {

template <typename Sym, typename Phase>
bool dpaLassoImpl(const BasicDpa<Sym>& d, const std::vector<Sym>& prefix,
                  const std::vector<Sym>& period, Phase) {
  int s = d.initial;
  for (const auto& a : prefix) s = d.step(s, a);
  // iterate the period until the entry state repeats
  std::vector<int> seenAt(d.stateCount(), -1);
  std::vector<int> entry;
  std::vector<std::vector<int>> maxInRound;
  while (seenAt[s] == -1) {
    seenAt[s] = static_cast<int>(entry.size());
    entry.push_back(s);
    int mx = -1;
    int cur = s;
    for (const auto& a : period) {
      cur = d.step(cur, a);
      mx = std::max(mx, d.priority[cur]);
    }
    maxInRound.push_back({mx});
    s = cur;
  }
  int mx = -1;
  for (int i = seenAt[s]; i < static_cast<int>(entry.size()); ++i)
    mx = std::max(mx, maxInRound[i][0]);
  return mx % 2 == 0;
}

}  // namespace

bool dpaLassoMembership(const Dpa& d, const Lasso& w) {
  if (!w.wellFormed()) throw ValidationError("lasso period empty");
  std::vector<Symbol> pre(w.prefix.begin(), w.prefix.end());
  std::vector<Symbol> per(w.period.begin(), w.period.end());
  return dpaLassoImpl(d, pre, per, 0);
}

bool dpaLassoMembership(const PairDpa& d, const PriorityPairLasso& w) {
  if (w.period.empty()) throw ValidationError("lasso period empty");
  return dpaLassoImpl(d, w.prefix, w.period, 0);
}

bool sameOmegaWord(const Lasso& a, const Lasso& b) {
  std::size_t n = std::max(a.prefix.size(), b.prefix.size()) +
                  2 * a.period.size() * b.period.size() + 2;
  for (std::size_t i = 0; i < n; ++i)
    if (a.at(i) != b.at(i)) return false;
  return true;
}

}  // namespace ds
