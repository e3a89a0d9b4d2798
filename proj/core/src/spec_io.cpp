#include "delaysynth/spec_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "delaysynth/errors.hpp"

namespace ds {

namespace {

Word decodeWord(const std::string& s) {
  if (s == "-") return Word();
  return s;
}

std::string encodeWord(const Word& w) { return w.empty() ? "-" : w; }

}  // namespace

Transducer parseSpec(const std::string& text) {
  Transducer t;
  std::map<std::string, int> names;
  std::string initialName;
  bool haveInitial = false;

  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    auto fail = [&](const std::string& msg) {
      throw ParseError("line " + std::to_string(lineNo) + ": " + msg);
    };
    if (kw == "input" || kw == "output") {
      std::string sym;
      auto& alpha = kw == "input" ? t.inputAlphabet : t.outputAlphabet;
      while (ls >> sym) {
        if (sym.size() != 1) fail("symbols must be single characters");
        alpha.push_back(sym[0]);
      }
      if (alpha.empty()) fail("empty alphabet");
    } else if (kw == "state") {
      std::string name;
      int prio;
      if (!(ls >> name >> prio)) fail("expected: state NAME PRIORITY");
      if (names.count(name)) fail("duplicate state " + name);
      names[name] = t.addState(name, prio);
    } else if (kw == "initial") {
      if (!(ls >> initialName)) fail("expected: initial NAME");
      haveInitial = true;
    } else if (kw == "trans") {
      std::string from, inw, outw, to;
      if (!(ls >> from >> inw >> outw >> to))
        fail("expected: trans FROM INWORD OUTWORD TO");
      auto fi = names.find(from);
      auto ti = names.find(to);
      if (fi == names.end()) fail("unknown state " + from);
      if (ti == names.end()) fail("unknown state " + to);
      t.transitions.push_back(
          {fi->second, decodeWord(inw), decodeWord(outw), ti->second});
    } else {
      fail("unknown directive " + kw);
    }
  }
  if (!haveInitial) throw ParseError("missing initial state");
  auto it = names.find(initialName);
  if (it == names.end())
    throw ParseError("unknown initial state " + initialName);
  t.initial = it->second;
  try {
    t.validate();
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
  return t;
}

Transducer parseSpecFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseSpec(buf.str());
}

std::string emitSpec(const Transducer& t) {
  std::ostringstream out;
  out << "input";
  for (Symbol a : t.inputAlphabet) out << ' ' << a;
  out << "\noutput";
  for (Symbol a : t.outputAlphabet) out << ' ' << a;
  out << '\n';
  for (int q = 0; q < t.stateCount(); ++q)
    out << "state " << t.stateNames[q] << ' ' << t.priority[q] << '\n';
  out << "initial " << t.stateNames[t.initial] << '\n';
  for (const auto& tr : t.transitions)
    out << "trans " << t.stateNames[tr.from] << ' ' << encodeWord(tr.in)
        << ' ' << encodeWord(tr.out) << ' ' << t.stateNames[tr.to] << '\n';
  return out.str();
}

void emitSpecFile(const Transducer& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << emitSpec(t);
}

Lasso parseLasso(const std::string& text) {
  Lasso l;
  auto bar = text.find('|');
  if (bar == std::string::npos) {
    l.period = text;
  } else {
    l.prefix = text.substr(0, bar);
    l.period = text.substr(bar + 1);
    if (l.period.find('|') != std::string::npos)
      throw ParseError("more than one '|' in lasso");
  }
  if (l.period.empty()) throw ParseError("lasso period must be non-empty");
  return l;
}

}  // namespace ds
