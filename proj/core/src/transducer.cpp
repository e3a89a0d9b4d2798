#include "delaysynth/transducer.hpp"

#include <algorithm>
#include <map>

#include "delaysynth/errors.hpp"
#include "delaysynth/graph.hpp"

namespace ds {

int Transducer::minPriority() const {
  int m = 0;
  for (std::size_t i = 0; i < priority.size(); ++i)
    m = i == 0 ? priority[i] : std::min(m, priority[i]);
  return m;
}

void Transducer::validate() const {
  if (stateCount() == 0) throw ValidationError("transducer has no states");
  if (initial < 0 || initial >= stateCount())
    throw ValidationError("initial state out of range");
  if (priority.size() != stateNames.size())
    throw ValidationError("priority not defined on every state");
  for (int p : priority)
    if (p < 0) throw ValidationError("negative priority");
  if (inputAlphabet.empty()) throw ValidationError("empty input alphabet");
  if (outputAlphabet.empty()) throw ValidationError("empty output alphabet");
  auto inAlpha = [&](Symbol a) {
    return std::find(inputAlphabet.begin(), inputAlphabet.end(), a) !=
           inputAlphabet.end();
  };
  auto outAlpha = [&](Symbol a) {
    return std::find(outputAlphabet.begin(), outputAlphabet.end(), a) !=
           outputAlphabet.end();
  };
  for (const auto& tr : transitions) {
    if (tr.from < 0 || tr.from >= stateCount() || tr.to < 0 ||
        tr.to >= stateCount())
      throw ValidationError("transition endpoint out of range");
    for (Symbol a : tr.in)
      if (!inAlpha(a))
        throw ValidationError(std::string("input letter not in alphabet: ") +
                              a);
    for (Symbol a : tr.out)
      if (!outAlpha(a))
        throw ValidationError(std::string("output letter not in alphabet: ") +
                              a);
  }
}

bool Transducer::isNormalized() const {
  for (const auto& tr : transitions)
    if (tr.in.size() > 1) return false;
  return true;
}

int Transducer::addState(const std::string& name, int prio) {
  stateNames.push_back(name);
  priority.push_back(prio);
  return stateCount() - 1;
}

Transducer normalize(const Transducer& t) {
  if (t.isNormalized()) return t;
  Transducer n = t;
  n.transitions.clear();
  const int fill = t.minPriority();
  int fresh = 0;
  for (const auto& tr : t.transitions) {
    if (tr.in.size() <= 1) {
      n.transitions.push_back(tr);
      continue;
    }
    int cur = tr.from;
    for (std::size_t i = 0; i + 1 < tr.in.size(); ++i) {
      int mid = n.addState(
          n.stateNames[tr.from] + "#" + std::to_string(fresh++), fill);
      n.transitions.push_back(
          {cur, Word(1, tr.in[i]), i == 0 ? tr.out : Word(), mid});
      cur = mid;
    }
    n.transitions.push_back({cur, Word(1, tr.in.back()), Word(), tr.to});
  }
  return n;
}

namespace {

// (state, max priority seen after the closure's start) pairs reachable
// by output-only moves.
std::vector<std::vector<std::pair<int, int>>> epsilonClosures(
    const Transducer& t) {
  const int n = t.stateCount();
  std::vector<std::vector<int>> eps(n);
  for (std::size_t i = 0; i < t.transitions.size(); ++i)
    if (t.transitions[i].in.empty()) eps[t.transitions[i].from].push_back(
        static_cast<int>(i));
  std::vector<std::vector<std::pair<int, int>>> out(n);
  for (int q = 0; q < n; ++q) {
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> todo{{q, -1}};
    seen.insert({q, -1});
    while (!todo.empty()) {
      auto [p, m] = todo.back();
      todo.pop_back();
      for (int ti : eps[p]) {
        const auto& tr = t.transitions[ti];
        std::pair<int, int> nx{tr.to, std::max(m, t.priority[tr.to])};
        if (seen.insert(nx).second) todo.push_back(nx);
      }
    }
    out[q].assign(seen.begin(), seen.end());
  }
  return out;
}

}  // namespace

ParityAutomaton projectInput(const Transducer& tin) {
  Transducer t = normalize(tin);
  const auto closures = epsilonClosures(t);

  ParityAutomaton a;
  a.alphabet = t.inputAlphabet;
  std::map<std::pair<int, int>, int> id;  // (q, pending max) -> npa state
  std::vector<std::pair<int, int>> states;
  auto intern = [&](int q, int h) {
    auto [it, fresh] = id.insert({{q, h}, static_cast<int>(states.size())});
    if (fresh) states.push_back({q, h});
    return it->second;
  };
  a.initial = intern(t.initial, t.priority[t.initial]);

  std::vector<std::vector<int>> byState(t.stateCount());
  for (std::size_t i = 0; i < t.transitions.size(); ++i)
    if (!t.transitions[i].in.empty())
      byState[t.transitions[i].from].push_back(static_cast<int>(i));

  for (std::size_t s = 0; s < states.size(); ++s) {
    auto [q, h] = states[s];
    for (const auto& [p, m] : closures[q]) {
      for (int ti : byState[p]) {
        const auto& tr = t.transitions[ti];
        int to = intern(tr.to, std::max(m, t.priority[tr.to]));
        a.transitions.push_back({static_cast<int>(s), tr.in[0], to});
      }
    }
  }
  a.stateCount = static_cast<int>(states.size());
  a.priority.resize(states.size());
  for (std::size_t s = 0; s < states.size(); ++s)
    a.priority[s] = states[s].second;
  return a;
}

namespace {

struct SyncGraph {
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<uint8_t>> flags;  // bit0 input, bit1 output
  std::vector<int> prio;
};

// Configurations (state, input phase, output phase) of t running on the
// synchronized pair; outPhases < 0 means "first-letter mode" with two
// output phases {unstarted, started} and a fixed required first letter.
SyncGraph buildSyncGraph(const Transducer& t, const Lasso& in,
                         const Lasso* out, Symbol firstLetter,
                         const PairSearchOptions& opt) {
  const int ip = static_cast<int>(in.prefix.size() + in.period.size());
  const int op =
      out ? static_cast<int>(out->prefix.size() + out->period.size()) : 2;
  const std::size_t total = static_cast<std::size_t>(t.stateCount()) * ip * op;
  if (total > opt.maxConfigurations)
    throw AlignmentOverflow("alignment graph exceeds configuration budget");

  auto advance = [](int ph, int steps, const Lasso& w) {
    const int pre = static_cast<int>(w.prefix.size());
    const int per = static_cast<int>(w.period.size());
    for (int i = 0; i < steps; ++i) {
      ++ph;
      if (ph >= pre + per) ph = pre;
    }
    return ph;
  };
  auto readMatches = [&](int ph, const Word& w, const Lasso& l) {
    for (Symbol c : w) {
      Symbol have = ph < static_cast<int>(l.prefix.size())
                        ? l.prefix[ph]
                        : l.period[ph - l.prefix.size()];
      if (have != c) return false;
      ph = advance(ph, 1, l);
    }
    return true;
  };

  SyncGraph g;
  const int n = static_cast<int>(total);
  g.adj.resize(n);
  g.flags.resize(n);
  g.prio.resize(n);
  auto id = [&](int q, int i, int o) { return (q * ip + i) * op + o; };
  for (int q = 0; q < t.stateCount(); ++q)
    for (int i = 0; i < ip; ++i)
      for (int o = 0; o < op; ++o) g.prio[id(q, i, o)] = t.priority[q];

  for (const auto& tr : t.transitions) {
    for (int i = 0; i < ip; ++i) {
      if (!readMatches(i, tr.in, in)) continue;
      int i2 = advance(i, static_cast<int>(tr.in.size()), in);
      uint8_t fl = (tr.in.empty() ? 0 : 1) | (tr.out.empty() ? 0 : 2);
      if (out) {
        for (int o = 0; o < op; ++o) {
          if (!readMatches(o, tr.out, *out)) continue;
          int o2 = advance(o, static_cast<int>(tr.out.size()), *out);
          int v = id(tr.from, i, o);
          g.adj[v].push_back(id(tr.to, i2, o2));
          g.flags[v].push_back(fl);
        }
      } else {
        // output phase 0: nothing emitted yet, first letter constrained
        if (tr.out.empty()) {
          int v = id(tr.from, i, 0);
          g.adj[v].push_back(id(tr.to, i2, 0));
          g.flags[v].push_back(fl);
        } else if (tr.out[0] == firstLetter) {
          int v = id(tr.from, i, 0);
          g.adj[v].push_back(id(tr.to, i2, 1));
          g.flags[v].push_back(fl);
        }
        // output phase 1: unconstrained
        int v = id(tr.from, i, 1);
        g.adj[v].push_back(id(tr.to, i2, 1));
        g.flags[v].push_back(fl);
      }
    }
  }
  return g;
}

}  // namespace

bool pairLassoAcceptance(const Transducer& t, const PairLasso& p,
                         const PairSearchOptions& opt) {
  if (!p.input.wellFormed() || !p.output.wellFormed())
    throw ValidationError("lasso period empty");
  SyncGraph g = buildSyncGraph(t, p.input, &p.output, 0, opt);
  const int op = static_cast<int>(p.output.prefix.size() +
                                  p.output.period.size());
  const int ip = static_cast<int>(p.input.prefix.size() +
                                  p.input.period.size());
  std::vector<char> from(g.adj.size(), 0);
  from[(t.initial * ip + 0) * op + 0] = 1;
  CycleEdgeFlags req{&g.flags, 3};
  return evenDominatedCycleReachable(g.adj, g.prio, from, req);
}

std::set<Symbol> firstOutputLetters(const Transducer& t, const Lasso& input,
                                    const PairSearchOptions& opt) {
  if (!input.wellFormed()) throw ValidationError("lasso period empty");
  std::set<Symbol> result;
  const int ip = static_cast<int>(input.prefix.size() + input.period.size());
  for (Symbol g : t.outputAlphabet) {
    SyncGraph sg = buildSyncGraph(t, input, nullptr, g, opt);
    std::vector<char> from(sg.adj.size(), 0);
    from[(t.initial * ip + 0) * 2 + 0] = 1;
    CycleEdgeFlags req{&sg.flags, 3};
    if (evenDominatedCycleReachable(sg.adj, sg.prio, from, req))
      result.insert(g);
  }
  return result;
}

}  // namespace ds
