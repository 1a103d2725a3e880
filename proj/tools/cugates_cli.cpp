// Copyright 2026 The cugates developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cugates/classify.hpp"
#include "cugates/falsify.hpp"
#include "cugates/json_io.hpp"
#include "cugates/synth.hpp"
#include "cugates/verify.hpp"

namespace {

using namespace cugates;

// Exit codes: 0 success/pass, 1 semantic failure, 2 input error.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct MatrixFlags {
  std::string path;
  std::string name;
  std::optional<double> rz_angle, ry_angle, phase_angle;

  void attach(CLI::App* cmd) {
    auto* grp = cmd->add_option_group("matrix", "input matrix (exactly one)");
    grp->add_option("--matrix", path, "path to a matrix JSON file");
    grp->add_option("--name", name, "named matrix: I, X, Z, H, S, T");
    grp->add_option("--rz", rz_angle, "Rz(theta), radians");
    grp->add_option("--ry", ry_angle, "Ry(theta), radians");
    grp->add_option("--phase", phase_angle, "diag(1, e^{i phi}), radians");
    grp->require_option(1);
  }

  Mat2 load() const {
    if (!path.empty()) {
      std::ifstream in(path);
      if (!in) throw ParseError("cannot open '" + path + "'");
      json j;
      try {
        j = json::parse(in);
      } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
      }
      return mat2_from_spec(j);
    }
    if (!name.empty()) return named_matrix(name);
    if (rz_angle) return rz(*rz_angle);
    if (ry_angle) return ry(*ry_angle);
    if (phase_angle) return phase_gate(*phase_angle);
    throw ParseError("no matrix given");
  }
};

void emit(const json& j, bool pretty, const std::string& out_path) {
  const std::string text = j.dump(pretty ? 2 : -1) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write '" + out_path + "'");
    out << text;
  }
}

VerifyMode parse_metric(const std::string& s) {
  if (s == "phase") return VerifyMode::phase;
  if (s == "exact") return VerifyMode::exact;
  throw ParseError("metric must be 'phase' or 'exact'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal controlled-U circuits: classify, synthesize, verify, falsify"};
  app.require_subcommand(1);

  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  // classify
  auto* cls = app.add_subcommand("classify", "class and minimal gate count of a matrix");
  MatrixFlags cls_m;
  cls_m.attach(cls);
  double cls_eps = kDefaultEps;
  cls->add_option("--eps", cls_eps, "boundary tolerance, in (0, 1e-3]");

  // synth
  auto* syn = app.add_subcommand("synth", "optimal circuit for controlled-U");
  MatrixFlags syn_m;
  syn_m.attach(syn);
  std::string syn_out, syn_qasm;
  bool syn_ascii = false;
  syn->add_option("--out", syn_out, "write the synthesis report to this path");
  syn->add_option("--qasm", syn_qasm, "also write an OpenQASM 3 program");
  syn->add_flag("--ascii", syn_ascii, "print a wire diagram to stdout");

  // verify
  auto* ver = app.add_subcommand("verify", "check a circuit against controlled-U");
  MatrixFlags ver_m;
  ver_m.attach(ver);
  std::string ver_circuit;
  std::string ver_metric = "phase";
  ver->add_option("--circuit", ver_circuit, "circuit JSON path")->required();
  ver->add_option("--metric", ver_metric, "phase | exact");

  // falsify
  auto* fal = app.add_subcommand("falsify", "search all smaller circuit templates");
  MatrixFlags fal_m;
  fal_m.attach(fal);
  int fal_gates = 5;
  FalsifyOptions fal_opts;
  std::string fal_metric = "phase";
  std::string fal_out;
  fal->add_option("--gates", fal_gates, "template gate budget k (0..7)");
  fal->add_option("--restarts", fal_opts.restarts, "optimizer restarts per template");
  fal->add_option("--seed", fal_opts.seed, "master seed");
  fal->add_option("--metric", fal_metric, "phase | exact");
  fal->add_option("--threshold", fal_opts.threshold, "no-realization floor to report");
  fal->add_option("--threads", fal_opts.threads, "worker threads (0 = hardware)");
  fal->add_option("--out", fal_out, "write the report to this path");

  // lemmas
  auto* lem = app.add_subcommand("lemmas", "entanglement criterion and circuit identities");
  int lem_trials = 10000;
  std::uint64_t lem_seed = 42;
  lem->add_option("--trials", lem_trials, "random triples for the iff-test");
  lem->add_option("--seed", lem_seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*cls) {
      const auto rep = classify(cls_m.load(), cls_eps);
      if (rep.near_boundary)
        std::cerr << "warning: matrix sits within 100*eps of a class boundary; "
                     "the reported class follows the dispatch precedence\n";
      emit(report_to_json(rep), pretty, "");
      return kExitPass;
    }

    if (*syn) {
      const Mat2 u = syn_m.load();
      const SynthesisResult res = synth(u);
      if (syn_ascii) std::cout << render_ascii(res.circuit);
      if (!syn_qasm.empty()) {
        std::ofstream out(syn_qasm);
        if (!out) throw ParseError("cannot write '" + syn_qasm + "'");
        out << to_qasm3(res.circuit);
      }
      emit(report_to_json(res), pretty, syn_out);
      // Belt-and-braces self check; synth already enforces it.
      return verify(res.circuit, u, VerifyMode::exact).pass ? kExitPass : kExitFail;
    }

    if (*ver) {
      std::ifstream in(ver_circuit);
      if (!in) throw ParseError("cannot open '" + ver_circuit + "'");
      const std::string text{std::istreambuf_iterator<char>(in),
                             std::istreambuf_iterator<char>()};
      const Circuit c = circuit_from_json(text);
      const auto rep = verify(c, ver_m.load(), parse_metric(ver_metric));
      emit(report_to_json(rep), pretty, "");
      return rep.pass ? kExitPass : kExitFail;
    }

    if (*fal) {
      fal_opts.metric = parse_metric(fal_metric);
      const auto rep = falsify(fal_m.load(), fal_gates, fal_opts);
      emit(report_to_json(rep), pretty, fal_out);
      return kExitPass;  // the verdict is data, not an error
    }

    if (*lem) {
      const auto ids = check_identities(100, lem_seed);
      const auto l1 = lemma1_suite(lem_trials, lem_seed);
      json rep{{"identities", report_to_json(ids)}, {"lemma1", report_to_json(l1)}};
      const bool pass = ids.pass && l1.failures == 0;
      rep["pass"] = pass;
      emit(rep, pretty, "");
      return pass ? kExitPass : kExitFail;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitInput;
}
