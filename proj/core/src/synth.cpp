#include "delaysynth/synth.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

#include "delaysynth/errors.hpp"
#include "delaysynth/profiles.hpp"

namespace ds {

Word chooseOutput(const Transducer& t, int src, int dst, int c,
                  const Word& u1) {
  const int n = t.stateCount();
  const int len = static_cast<int>(u1.size());
  std::vector<std::vector<int>> from(n);
  for (std::size_t i = 0; i < t.transitions.size(); ++i)
    from[t.transitions[i].from].push_back(static_cast<int>(i));

  std::optional<Word> best;
  std::vector<char> visited(static_cast<std::size_t>(n) * (len + 1), 0);
  Word out;

  auto dfs = [&](auto&& self, int q, int pos, int maxPrio) -> void {
    if (q == dst && pos == len && maxPrio == c)
      if (!best || out < *best) best = out;
    for (int ti : from[q]) {
      const auto& tr = t.transitions[ti];
      int npos = pos + static_cast<int>(tr.in.size());
      if (npos > len || u1.compare(pos, tr.in.size(), tr.in) != 0) continue;
      int nmax = std::max(maxPrio, t.priority[tr.to]);
      if (nmax > c) continue;
      std::size_t key = static_cast<std::size_t>(tr.to) * (len + 1) + npos;
      if (visited[key]) continue;
      visited[key] = 1;
      out += tr.out;
      self(self, tr.to, npos, nmax);
      out.resize(out.size() - tr.out.size());
      visited[key] = 0;
    }
  };
  visited[static_cast<std::size_t>(src) * (len + 1)] = 1;
  dfs(dfs, src, 0, kBottomPriority);
  if (!best)
    throw NoWitness("no transformation run matches the requested priority");
  return *best;
}

namespace {

struct ExecState {
  int memory;
  int vertex;  // Adam vertex about to read a letter
  Word u1, u2;
};

// one executor iteration: read `a`, let Eve act, append any emission
ExecState execStep(const Transducer& t, const Arena& arena,
                   const StrategyAutomaton& strat, ExecState s, Symbol a,
                   Word& emitted) {
  const bool halted = arena.vertices[s.vertex].halted;
  if (!halted) s.u2 += a;
  GameAction letter{GameAction::Kind::Letter, a, {}};
  s.vertex = arena.out[s.vertex][arena.edgeIndex(s.vertex, letter)].target;
  s.memory = strat.updateMemory(arena, s.memory, s.vertex);
  const GameAction& act = strat.nextAction(s.memory, s.vertex);
  int next = arena.out[s.vertex][arena.edgeIndex(s.vertex, act)].target;
  if (act.kind == GameAction::Kind::Produce) {
    emitted = chooseOutput(t, act.triple.src, act.triple.dst, act.triple.pri,
                           s.u1);
    s.u1 = s.u2;
    s.u2.clear();
  } else {
    emitted.clear();
    if (act.kind == GameAction::Kind::Halt) {
      s.u1.clear();
      s.u2.clear();
    }
  }
  s.vertex = next;
  s.memory = strat.updateMemory(arena, s.memory, s.vertex);
  return s;
}

}  // namespace

ExecResult runExecutor(const Transducer& t, const Arena& arena,
                       const StrategyAutomaton& strat, const Lasso& input,
                       std::size_t maxSteps) {
  if (!input.wellFormed()) throw ValidationError("lasso period empty");
  ExecState s{strat.initialMemory, arena.initial, "", ""};
  s.memory = strat.updateMemory(arena, s.memory, s.vertex);

  ExecResult r;
  Word out;
  std::map<std::tuple<int, int, std::size_t, Word, Word>, std::size_t> seen;
  std::size_t pos = 0;
  while (r.steps < maxSteps) {
    auto key = std::make_tuple(s.memory, s.vertex, input.phase(pos), s.u1,
                               s.u2);
    auto [it, fresh] = seen.insert({key, out.size()});
    if (!fresh) {
      if (out.size() > it->second) {
        r.periodic = true;
        r.output.prefix = out.substr(0, it->second);
        r.output.period = out.substr(it->second);
      } else {
        r.partial = out;
      }
      return r;
    }
    Word emitted;
    s = execStep(t, arena, strat, s, input.at(pos), emitted);
    ++pos;
    out += emitted;
    ++r.steps;
  }
  r.partial = out;
  return r;
}

int OneWayDft::symIndex(Symbol a) const {
  auto it = std::find(inputAlphabet.begin(), inputAlphabet.end(), a);
  if (it == inputAlphabet.end())
    throw ValidationError("symbol not in transducer input alphabet");
  return static_cast<int>(it - inputAlphabet.begin());
}

OneWayDft extract1Dft(const Transducer& t, const Arena& boundedArena,
                      const StrategyAutomaton& strat, int ell) {
  if (boundedArena.mode != DelayMode::Bounded)
    throw ValidationError("extraction requires a bounded-delay arena");
  OneWayDft dft;
  dft.inputAlphabet = t.inputAlphabet;

  std::map<std::tuple<int, int, Word, Word>, int> id;
  std::vector<ExecState> states;
  auto intern = [&](ExecState s) {
    auto key = std::make_tuple(s.memory, s.vertex, s.u1, s.u2);
    auto [it, fresh] = id.insert({key, static_cast<int>(states.size())});
    if (fresh) states.push_back(std::move(s));
    return it->second;
  };

  ExecState init{strat.initialMemory, boundedArena.initial, "", ""};
  init.memory = strat.updateMemory(boundedArena, init.memory, init.vertex);
  dft.initial = intern(init);

  for (std::size_t si = 0; si < states.size(); ++si) {
    dft.delta.emplace_back();
    for (Symbol a : dft.inputAlphabet) {
      Word emitted;
      ExecState nx = execStep(t, boundedArena, strat, states[si], a, emitted);
      if (static_cast<int>(nx.u2.size()) > ell + 1)
        throw NotBoundedStrategy("pending input block exceeds delay bound");
      dft.delta[si].push_back({emitted, intern(nx)});
    }
  }
  dft.stateCount = static_cast<int>(states.size());
  dft.priority.resize(states.size());
  for (std::size_t si = 0; si < states.size(); ++si)
    dft.priority[si] =
        boundedArena.domainPriority[boundedArena.vertices[states[si].vertex].r];
  return dft;
}

ExecResult run1Dft(const OneWayDft& dft, const Lasso& input,
                   std::size_t maxSteps) {
  if (!input.wellFormed()) throw ValidationError("lasso period empty");
  ExecResult r;
  Word out;
  std::map<std::pair<int, std::size_t>, std::size_t> seen;
  int s = dft.initial;
  std::size_t pos = 0;
  while (r.steps < maxSteps) {
    auto [it, fresh] = seen.insert({{s, input.phase(pos)}, out.size()});
    if (!fresh) {
      if (out.size() > it->second) {
        r.periodic = true;
        r.output.prefix = out.substr(0, it->second);
        r.output.period = out.substr(it->second);
      } else {
        r.partial = out;
      }
      return r;
    }
    const auto& [w, to] = dft.delta[s][dft.symIndex(input.at(pos))];
    out += w;
    s = to;
    ++pos;
    ++r.steps;
  }
  r.partial = out;
  return r;
}

std::string to_string(SpecClass c) {
  switch (c) {
    case SpecClass::Aut:
      return "AUT";
    case SpecClass::Drat:
      return "DRAT";
    default:
      return "UNKNOWN";
  }
}

SpecClass checkSyntacticClass(const Transducer& t) {
  const int n = t.stateCount();
  std::vector<std::vector<int>> from(n);
  for (std::size_t i = 0; i < t.transitions.size(); ++i)
    from[t.transitions[i].from].push_back(static_cast<int>(i));

  // -1 unclassified, 0 input state, 1 output state
  std::vector<int> kind(n, -1);
  for (int q = 0; q < n; ++q) {
    if (from[q].empty()) return SpecClass::Unknown;
    std::set<Symbol> seenIn, seenOut;
    for (int ti : from[q]) {
      const auto& tr = t.transitions[ti];
      int k;
      if (tr.in.size() == 1 && tr.out.empty())
        k = 0;
      else if (tr.in.empty() && tr.out.size() == 1)
        k = 1;
      else
        return SpecClass::Unknown;
      if (kind[q] == -1) kind[q] = k;
      if (kind[q] != k) return SpecClass::Unknown;
      if (k == 0 && !seenIn.insert(tr.in[0]).second)
        return SpecClass::Unknown;
      if (k == 1 && !seenOut.insert(tr.out[0]).second)
        return SpecClass::Unknown;
    }
  }
  bool alternating = true;
  for (const auto& tr : t.transitions)
    if (kind[tr.to] == kind[tr.from]) alternating = false;
  return alternating ? SpecClass::Aut : SpecClass::Drat;
}

Transducer pcpToSpec(const PcpInstance& inst) {
  const int k = static_cast<int>(inst.pairs.size());
  if (k < 1 || k > 9)
    throw ValidationError("instance must have between 1 and 9 tiles");
  for (const auto& [u, v] : inst.pairs)
    for (Symbol c : u + v)
      if (c != 'a' && c != 'b')
        throw ValidationError("tile words must be over {a, b}");

  Transducer t;
  for (int i = 1; i <= k; ++i) t.inputAlphabet.push_back('0' + i);
  t.inputAlphabet.push_back('a');
  t.inputAlphabet.push_back('b');
  t.outputAlphabet = t.inputAlphabet;

  const int q0 = t.addState("start", 1);
  t.initial = q0;
  const int P = t.addState("copy", 1);
  const int wA = t.addState("tail_a", 2);
  const int wB = t.addState("tail_b", 1);
  const int M = t.addState("match", 1);
  const int Dnd = t.addState("deviated", 1);
  const int fA = t.addState("fin_a", 1);
  const int fB = t.addState("fin_b", 0);
  const int V0 = t.addState("idx_prefix", 1);
  const int V1 = t.addState("letters_seen", 1);
  const int VBAD = t.addState("confirmed_invalid", 0);
  const int VINF = t.addState("idx_forever", 0);

  auto idxSym = [](int i) { return static_cast<Symbol>('0' + i); };
  std::vector<Symbol> letters{'a', 'b'};
  const std::vector<Symbol>& any = t.outputAlphabet;

  for (int i = 1; i <= k; ++i) {
    const auto& [u, v] = inst.pairs[i - 1];
    // tile copying (output follows the u side, tail a^omega)
    for (int src : {q0, P}) t.transitions.push_back({src, Word(1, idxSym(i)), u, P});
    // tile matching on the v side, or deviation inside the tile
    for (int src : {q0, M}) {
      t.transitions.push_back({src, Word(1, idxSym(i)), v, M});
      for (std::size_t p = 0; p < v.size(); ++p)
        for (Symbol g : any)
          if (g != v[p])
            t.transitions.push_back(
                {src, Word(1, idxSym(i)), v.substr(0, p) + g, Dnd});
    }
    // free-running invalid-input tracking
    for (Symbol g : any) {
      t.transitions.push_back({V0, Word(1, idxSym(i)), Word(1, g), V0});
      t.transitions.push_back({q0, Word(1, idxSym(i)), Word(1, g), V0});
      t.transitions.push_back({V0, Word(1, idxSym(i)), Word(1, g), VINF});
      t.transitions.push_back({q0, Word(1, idxSym(i)), Word(1, g), VINF});
      t.transitions.push_back({VINF, Word(1, idxSym(i)), Word(1, g), VINF});
      t.transitions.push_back({V1, Word(1, idxSym(i)), Word(1, g), VBAD});
      t.transitions.push_back({Dnd, Word(1, idxSym(i)), Word(1, g), Dnd});
      // an index after letters began invalidates the input
      t.transitions.push_back({wA, Word(1, idxSym(i)), Word(1, g), VBAD});
      t.transitions.push_back({wB, Word(1, idxSym(i)), Word(1, g), VBAD});
      t.transitions.push_back({fA, Word(1, idxSym(i)), Word(1, g), VBAD});
      t.transitions.push_back({fB, Word(1, idxSym(i)), Word(1, g), VBAD});
    }
  }
  for (Symbol l : letters) {
    int tail = l == 'a' ? wA : wB;
    for (int src : {q0, P}) t.transitions.push_back({src, Word(1, l), "a", tail});
    t.transitions.push_back({wA, Word(1, l), "a", tail});
    t.transitions.push_back({wB, Word(1, l), "a", tail});
    int fin = l == 'a' ? fA : fB;
    for (Symbol g : any) {
      t.transitions.push_back({Dnd, Word(1, l), Word(1, g), fin});
      t.transitions.push_back({fA, Word(1, l), Word(1, g), fin});
      t.transitions.push_back({fB, Word(1, l), Word(1, g), fin});
      t.transitions.push_back({V0, Word(1, l), Word(1, g), V1});
      t.transitions.push_back({q0, Word(1, l), Word(1, g), V1});
      t.transitions.push_back({V1, Word(1, l), Word(1, g), V1});
    }
  }
  for (Symbol g : any)
    for (Symbol x : t.inputAlphabet)
      t.transitions.push_back({VBAD, Word(1, x), Word(1, g), VBAD});

  // when every tile deviates pointwise, the u side can be emitted
  // eagerly: its concatenation never extends the v side's
  bool eager = true;
  for (const auto& [u, v] : inst.pairs)
    if (u.size() != v.size() || u == v) eager = false;
  if (eager) {
    const int PM = t.addState("eager_copy", 0);
    const int TA = t.addState("eager_tail", 0);
    for (int i = 1; i <= k; ++i) {
      const auto& u = inst.pairs[i - 1].first;
      for (int src : {q0, PM})
        t.transitions.push_back({src, Word(1, idxSym(i)), u, PM});
      for (Symbol g : any)
        t.transitions.push_back({TA, Word(1, idxSym(i)), Word(1, g), VBAD});
    }
    for (Symbol l : letters) {
      t.transitions.push_back({PM, Word(1, l), "a", TA});
      t.transitions.push_back({TA, Word(1, l), "a", TA});
    }
  }
  t.validate();
  return t;
}

SynthesisReport synthesize(const Transducer& tin,
                           const SynthesisOptions& opt) {
  tin.validate();
  SynthesisReport rep;
  rep.specClass = checkSyntacticClass(tin);

  Transducer t = normalize(tin);
  Dpa domain = buildDomainAutomaton(t, opt.determinize);
  rep.domainStates = domain.stateCount();
  rep.domainClosed = isDomainClosed(domain);

  Arena arena = buildArena(t, domain, opt.mode, opt.arena);
  rep.arenaVertices = static_cast<int>(arena.vertices.size());
  for (const auto& edges : arena.out)
    rep.arenaEdges += static_cast<int>(edges.size());
  if (opt.mode == DelayMode::Bounded) rep.ell = computeEll(arena.profiles);

  std::set<int> dPrios(domain.priority.begin(), domain.priority.end());
  std::set<int> tPrios(t.priority.begin(), t.priority.end());
  tPrios.insert(kBottomPriority);
  PairDpa win = buildWinAutomaton(dPrios, tPrios);

  ProductGame product = composeParityGame(arena, win);
  rep.productVertices = static_cast<int>(product.origin.size());
  SolveResult solve = solveParity(product.game);
  rep.eveWins = solve.eveWins[product.game.initial];

  if (rep.eveWins) {
    rep.strategy = makeStrategyAutomaton(arena, win, product, solve);
    if (opt.mode == DelayMode::Bounded)
      rep.dft = extract1Dft(t, arena, *rep.strategy, rep.ell);
  }
  rep.arenaData = std::move(arena);
  rep.domain = std::move(domain);
  return rep;
}

std::optional<DivergenceWitness> pcpDivergenceWitness(
    const PcpInstance& inst, const Transducer& spec) {
  for (std::size_t i = 1; i <= inst.pairs.size(); ++i) {
    DivergenceWitness w;
    w.inputA = {Word(1, static_cast<Symbol>('0' + i)), "a"};
    w.inputB = {Word(1, static_cast<Symbol>('0' + i)), "b"};
    w.firstLettersA = firstOutputLetters(spec, w.inputA);
    w.firstLettersB = firstOutputLetters(spec, w.inputB);
    if (w.firstLettersA.empty() || w.firstLettersB.empty()) continue;
    w.disjoint = true;
    for (Symbol c : w.firstLettersA)
      if (w.firstLettersB.count(c)) w.disjoint = false;
    if (w.disjoint) return w;
  }
  return std::nullopt;
}

}  // namespace ds
