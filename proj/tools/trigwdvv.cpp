// Copyright 2026 The trigwdvv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// trigwdvv: seeded numerical verification of BC_n-type trigonometric WDVV
// prepotentials.
//
//   trigwdvv verify-wdvv --family bcn --n 3 --r -2 --s 0 --q 1 --m 1,1,1
//   trigwdvv tensor --config cfg.json --point 0.9,0.4 --json
//
// Exit status: 0 all checks pass, 1 a check failed, 2 bad input.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "trigwdvv/cli.hpp"
#include "trigwdvv/errors.hpp"

namespace {

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw trigwdvv::ParseError(std::string("cannot parse '") + item +
                                 "' in " + flag);
    }
  }
  if (out.empty()) {
    throw trigwdvv::ParseError(std::string(flag) + " needs a comma-separated list");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace trigwdvv;

  CLI::App app{"Numerical verification of BC_n trigonometric WDVV solutions"};
  std::string command;
  std::string config_path;
  std::string family;
  int n = 0;
  double r = 0.0, s = 0.0, q = 0.0;
  std::string m_list, box_text, point_text;
  RunSpec spec;
  bool as_json = false;

  if (const char* env = std::getenv("WDVV_SEED")) {
    try {
      spec.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: WDVV_SEED must be an unsigned integer\n";
      return 2;
    }
  }

  app.add_option("command", command,
                 "verify-wdvv | verify-associativity | verify-metric | "
                 "verify-restriction | verify-susy | tensor | build-config")
      ->required();
  auto* config_opt =
      app.add_option("--config", config_path, "JSON configuration file");
  auto* family_opt = app.add_option("--family", family, "Inline family (bcn)");
  config_opt->excludes(family_opt);
  app.add_option("--n", n, "Dimension n");
  app.add_option("--r", r, "Multiplicity parameter r");
  app.add_option("--s", s, "Multiplicity parameter s");
  app.add_option("--q", q, "Multiplicity parameter q");
  app.add_option("--m", m_list, "Comma-separated m_1,...,m_n");
  app.add_option("--samples", spec.samples, "Accepted sample points per check");
  app.add_option("--seed", spec.seed, "Run seed (default: WDVV_SEED or 42)");
  app.add_option("--tol", spec.tolerance, "Tolerance for exact identities");
  app.add_option("--box", box_text, "Sampling box lo,hi (default 0.3,1.5)");
  app.add_option("--theta", spec.threshold, "Admissibility threshold");
  app.add_option("--step", spec.step, "Finite-difference step");
  app.add_option("--point", point_text, "Evaluation point for tensor");
  app.add_flag("--json", as_json, "Print a single JSON document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    spec.command = parse_command(command);
    if (!config_path.empty()) {
      spec.config_source = config_path;
      spec.config = load_config_file(config_path);
    } else if (!family.empty()) {
      if (family != "bcn") throw ParseError("--family must be bcn");
      const std::vector<double> m = parse_list(m_list, "--m");
      if (n != static_cast<int>(m.size())) {
        throw ParseError("--n must equal the number of entries in --m");
      }
      spec.config_source = "inline";
      BCnParameters p(r, s, q, m);
      Configuration c = build_bcn(p);
      spec.config = LoadedConfig{std::move(p), std::move(c)};
    } else {
      throw ParseError("give either --config PATH or --family bcn");
    }
    if (!box_text.empty()) {
      const std::vector<double> box = parse_list(box_text, "--box");
      if (box.size() != 2) throw ParseError("--box needs exactly lo,hi");
      spec.box = {box[0], box[1]};
    }
    if (!point_text.empty()) {
      const std::vector<double> x = parse_list(point_text, "--point");
      spec.point = Eigen::Map<const Vector>(x.data(),
                                            static_cast<Eigen::Index>(x.size()));
    }
    spec.validate();

    switch (spec.command) {
      case Command::kTensor:
        std::cout << dump_json(emit_tensor(spec)) << '\n';
        return 0;
      case Command::kBuildConfig:
        std::cout << dump_json(config_to_json(spec.config->config)) << '\n';
        return 0;
      default: {
        const VerificationReport report = run(spec);
        if (as_json) {
          std::cout << dump_json(report_to_json(report)) << '\n';
        } else {
          std::cout << format_summary(report);
        }
        return report.all_pass() ? 0 : 1;
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
