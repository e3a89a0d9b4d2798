#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "delaysynth/determinize.hpp"
#include "delaysynth/sampling.hpp"
#include "delaysynth/solver.hpp"
#include "delaysynth/spec_io.hpp"
#include "delaysynth/synth.hpp"

using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

struct CommonOpts {
  std::string specPath;
  bool bounded = false;
  bool jsonOut = false;
  std::size_t maxVertices = 1000000;
  std::size_t maxConfig = 1000000;
  std::size_t maxSteps = 100000;
};

ds::SynthesisOptions toSynthOptions(const CommonOpts& o) {
  ds::SynthesisOptions s;
  s.mode = o.bounded ? ds::DelayMode::Bounded : ds::DelayMode::Unbounded;
  s.arena.maxVertices = o.maxVertices;
  s.determinize.maxStates = o.maxVertices;
  return s;
}

void addCommonFlags(CLI::App* cmd, CommonOpts& o, bool withSpec = true) {
  if (withSpec)
    cmd->add_option("spec", o.specPath, "specification file")->required();
  cmd->add_flag("--json", o.jsonOut, "machine-readable output");
  cmd->add_option("--max-vertices", o.maxVertices, "state/vertex budget");
  cmd->add_option("--max-config", o.maxConfig,
                  "alignment configuration budget");
  cmd->add_option("--max-steps", o.maxSteps, "execution step budget");
}

json reportJson(const ds::SynthesisReport& r) {
  json j;
  j["formatVersion"] = kFormatVersion;
  j["class"] = ds::to_string(r.specClass);
  j["domainStates"] = r.domainStates;
  j["domainClosed"] = r.domainClosed;
  j["arenaVertices"] = r.arenaVertices;
  j["arenaEdges"] = r.arenaEdges;
  j["productVertices"] = r.productVertices;
  j["winner"] = r.eveWins ? "eve" : "adam";
  if (r.ell >= 0) j["ell"] = r.ell;
  return j;
}

ds::Transducer dftToTransducer(const ds::OneWayDft& d,
                               const std::vector<ds::Symbol>& outAlpha) {
  ds::Transducer t;
  t.inputAlphabet = d.inputAlphabet;
  t.outputAlphabet = outAlpha;
  for (int s = 0; s < d.stateCount; ++s)
    t.addState("s" + std::to_string(s), d.priority[s]);
  t.initial = d.initial;
  for (int s = 0; s < d.stateCount; ++s)
    for (std::size_t a = 0; a < d.inputAlphabet.size(); ++a)
      t.transitions.push_back({s, ds::Word(1, d.inputAlphabet[a]),
                               d.delta[s][a].first, d.delta[s][a].second});
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"synthesis toolkit for rational omega-word specifications"};
  app.require_subcommand(1);

  CommonOpts check, solve, synth, run, oracle;
  std::string runInput, oracleInput, oracleOutput, dftOut;
  std::vector<std::string> pcpPairs;
  std::string pcpOut;
  bool pcpJson = false;

  auto* cmdCheck =
      app.add_subcommand("check", "validate and classify a specification");
  addCommonFlags(cmdCheck, check);

  auto* cmdSolve =
      app.add_subcommand("solve", "decide the synthesis game winner");
  addCommonFlags(cmdSolve, solve);
  cmdSolve->add_flag("--bounded", solve.bounded, "bounded-delay game");

  auto* cmdSynth =
      app.add_subcommand("synthesize", "solve and extract a strategy");
  addCommonFlags(cmdSynth, synth);
  cmdSynth->add_flag("--bounded", synth.bounded, "bounded-delay game");
  cmdSynth->add_option("--emit-dft", dftOut,
                       "write the extracted one-way transducer (bounded)");

  auto* cmdRun = app.add_subcommand(
      "run", "run the synthesized program on an ultimately periodic input");
  addCommonFlags(cmdRun, run);
  cmdRun->add_flag("--bounded", run.bounded, "bounded-delay game");
  cmdRun->add_option("--input", runInput, "input lasso PREFIX|PERIOD")
      ->required();

  auto* cmdPcp = app.add_subcommand(
      "gen-pcp", "emit the specification encoding a word-matching instance");
  cmdPcp->add_option("pairs", pcpPairs, "tiles as U:V over {a,b}")
      ->required();
  cmdPcp->add_option("-o,--output", pcpOut, "output file (default stdout)");
  cmdPcp->add_flag("--json", pcpJson, "machine-readable output");

  auto* cmdOracle = app.add_subcommand(
      "oracle", "membership oracle for an input/output lasso pair");
  addCommonFlags(cmdOracle, oracle);
  cmdOracle->add_option("--input", oracleInput, "input lasso")->required();
  cmdOracle->add_option("--output", oracleOutput, "output lasso")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmdCheck) {
      ds::Transducer t = ds::parseSpecFile(check.specPath);
      ds::DeterminizeOptions dopt{check.maxVertices};
      ds::DeterminizeStats stats;
      ds::Dpa domain = ds::buildDomainAutomaton(t, dopt, &stats);
      bool closed = ds::isDomainClosed(domain);
      auto cls = ds::checkSyntacticClass(t);
      if (check.jsonOut) {
        json j;
        j["formatVersion"] = kFormatVersion;
        j["states"] = t.stateCount();
        j["class"] = ds::to_string(cls);
        j["domainStates"] = domain.stateCount();
        j["domainClosed"] = closed;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "states: " << t.stateCount() << "\n"
                  << "class: " << ds::to_string(cls) << "\n"
                  << "domain states: " << domain.stateCount() << "\n"
                  << "domain closed: " << (closed ? "yes" : "no") << "\n";
      }
      return 0;
    }

    if (*cmdSolve || *cmdSynth) {
      CommonOpts& o = *cmdSolve ? solve : synth;
      ds::Transducer t = ds::parseSpecFile(o.specPath);
      auto rep = ds::synthesize(t, toSynthOptions(o));
      if (*cmdSynth && !dftOut.empty()) {
        if (!rep.dft)
          throw ds::NotBoundedStrategy(
              "no one-way transducer available (need --bounded and an "
              "Eve win)");
        ds::emitSpecFile(dftToTransducer(*rep.dft, t.outputAlphabet),
                         dftOut);
      }
      if (o.jsonOut) {
        json j = reportJson(rep);
        if (*cmdSynth && rep.dft) j["dftStates"] = rep.dft->stateCount;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "class: " << ds::to_string(rep.specClass) << "\n"
                  << "domain closed: " << (rep.domainClosed ? "yes" : "no")
                  << "\n"
                  << "arena vertices: " << rep.arenaVertices << "\n"
                  << "product vertices: " << rep.productVertices << "\n";
        if (rep.ell >= 0) std::cout << "delay bound: " << rep.ell << "\n";
        std::cout << "winner: " << (rep.eveWins ? "eve" : "adam") << "\n";
        if (*cmdSynth && rep.dft)
          std::cout << "transducer states: " << rep.dft->stateCount << "\n";
      }
      return rep.eveWins ? 0 : 1;
    }

    if (*cmdRun) {
      ds::Transducer t = ds::parseSpecFile(run.specPath);
      ds::Lasso input = ds::parseLasso(runInput);
      auto rep = ds::synthesize(t, toSynthOptions(run));
      if (!rep.eveWins) {
        std::cerr << "no winning strategy for this specification\n";
        return 1;
      }
      ds::Transducer tn = ds::normalize(t);
      auto res = ds::runExecutor(tn, *rep.arenaData, *rep.strategy, input,
                                 run.maxSteps);
      bool inDomain = ds::dpaLassoMembership(*rep.domain, input);
      if (!res.periodic && inDomain)
        throw ds::PeriodNotFound(
            "input is in the domain but no output period was found "
            "within the step budget");
      if (run.jsonOut) {
        json j;
        j["formatVersion"] = kFormatVersion;
        j["inDomain"] = inDomain;
        j["periodic"] = res.periodic;
        if (res.periodic)
          j["output"] = res.output.text();
        else
          j["partial"] = res.partial;
        j["steps"] = res.steps;
        std::cout << j.dump(2) << "\n";
      } else if (res.periodic) {
        std::cout << res.output.text() << "\n";
      } else {
        std::cout << "input outside the domain; partial output: "
                  << res.partial << "\n";
      }
      return res.periodic ? 0 : 1;
    }

    if (*cmdPcp) {
      ds::PcpInstance inst;
      for (const auto& p : pcpPairs) {
        auto colon = p.find(':');
        if (colon == std::string::npos)
          throw ds::ParseError("tile must be U:V, got " + p);
        inst.pairs.push_back({p.substr(0, colon), p.substr(colon + 1)});
      }
      ds::Transducer t = ds::pcpToSpec(inst);
      if (pcpOut.empty())
        std::cout << ds::emitSpec(t);
      else
        ds::emitSpecFile(t, pcpOut);
      if (pcpJson) {
        json j;
        j["formatVersion"] = kFormatVersion;
        j["states"] = t.stateCount();
        j["transitions"] = t.transitions.size();
        std::cout << j.dump(2) << "\n";
      }
      return 0;
    }

    if (*cmdOracle) {
      ds::Transducer t = ds::parseSpecFile(oracle.specPath);
      ds::PairLasso p{ds::parseLasso(oracleInput),
                      ds::parseLasso(oracleOutput)};
      bool ok = ds::pairLassoAcceptance(t, p, {oracle.maxConfig});
      if (oracle.jsonOut) {
        json j;
        j["formatVersion"] = kFormatVersion;
        j["accepted"] = ok;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (ok ? "accepted" : "rejected") << "\n";
      }
      return ok ? 0 : 1;
    }
  } catch (const ds::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ds::ValidationError& e) {
    std::cerr << "invalid specification: " << e.what() << "\n";
    return 2;
  } catch (const ds::StateBudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ds::VertexBudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ds::AlignmentOverflow& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ds::PeriodNotFound& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ds::NotBoundedStrategy& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
