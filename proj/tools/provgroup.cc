// Copyright 2026 The provgroup Authors
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

// Command-line front end.
//
//   provgroup abstract --graph g.provn --policy p.pol --clearance 8
//                      [--kind entity|activity] [--propagate]
//                      [--out-format provn|dot|json] [--utilities u.json]
//   provgroup validate --graph g.provn
//   provgroup serve [--host 127.0.0.1] [--port 8080]

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "httplib.h"
#include "json.hpp"
#include "provgroup/error.h"
#include "provgroup/json_export.h"
#include "provgroup/policy.h"
#include "provgroup/provn_io.h"
#include "provgroup/service.h"
#include "provgroup/validator.h"

namespace {

using namespace provgroup;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Sidecar file of the form {"node-id": utility, ...}.
ProvGraph WithUtilities(const ProvGraph& g, const std::string& path) {
  const nlohmann::json doc = nlohmann::json::parse(ReadFile(path));
  std::vector<ProvNode> nodes(g.nodes().begin(), g.nodes().end());
  for (ProvNode& n : nodes) {
    if (auto it = doc.find(n.id.str()); it != doc.end()) {
      n.utility = it->get<double>();
    }
  }
  return ProvGraph::Build(std::move(nodes),
                          {g.edges().begin(), g.edges().end()},
                          g.activity_events());
}

int RunAbstract(const std::string& graph_path, const std::string& policy_path,
                double clearance, const std::string& kind, bool propagate,
                const std::string& format, const std::string& utilities) {
  ProvGraph g = ParseProvN(ReadFile(graph_path));
  if (!utilities.empty()) g = WithUtilities(g, utilities);
  const Policy policy = ParsePolicy(ReadFile(policy_path));
  for (const std::string& w : policy.warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  ApplyOptions options;
  options.clearance = clearance;
  options.kind = *ParseNodeKind(kind);
  options.propagate_generators = propagate;
  const PolicyOutcome outcome = ApplyPolicy(g, policy, options);

  if (format == "json") {
    std::cout << OutcomeToJson(g, outcome).dump(2) << "\n";
    return 0;
  }
  const ProvGraph& out = outcome.report.graph;
  if (format == "dot") {
    std::cout << ExportDot(out, &outcome.sensitivities);
  } else {
    std::cout << SerializeProvN(out);
  }
  std::cerr << "residual utility: "
            << (outcome.residual_utility
                    ? FormatNumber(*outcome.residual_utility)
                    : std::string("undefined"))
            << "\n";
  return 0;
}

int RunValidate(const std::string& graph_path) {
  const ProvGraph g = ParseProvNDocument(ReadFile(graph_path),
                                         BuildMode::kAllowTypeViolations)
                          .graph;
  const std::vector<Violation> violations = Validate(g);
  for (const Violation& v : violations) {
    std::cout << ConstraintName(v.constraint) << ": " << v.message << "\n";
  }
  for (const Cycle& c : FindGenUseCycles(g)) {
    std::cout << "cycle:";
    for (const NodeId& id : c) std::cout << " " << id.str();
    std::cout << "\n";
  }
  if (violations.empty()) std::cout << "valid\n";
  return violations.empty() ? 0 : 1;
}

int RunServe(const std::string& host, int port) {
  Service service;
  httplib::Server server;
  BindService(server, service);
  std::cerr << "listening on " << host << ":" << port << "\n";
  return server.listen(host, port) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grouping-based abstraction of provenance graphs"};
  app.require_subcommand(1);

  std::string graph_path, policy_path, utilities;
  std::string kind = "entity", format = "provn";
  double clearance = 0.0;
  bool propagate = false;
  CLI::App* abstract = app.add_subcommand("abstract", "Apply a policy");
  abstract->add_option("--graph", graph_path, "PROV-N input")->required();
  abstract->add_option("--policy", policy_path, "Policy file")->required();
  abstract->add_option("--clearance", clearance, "Consumer clearance")
      ->required();
  abstract->add_option("--kind", kind, "Abstract node kind")
      ->check(CLI::IsMember({"entity", "activity"}));
  abstract->add_flag("--propagate", propagate,
                     "Also group the generators of the abstract entity");
  abstract->add_option("--out-format", format, "Output format")
      ->check(CLI::IsMember({"provn", "dot", "json"}));
  abstract->add_option("--utilities", utilities,
                       "JSON object of per-node utilities");

  std::string validate_path;
  CLI::App* validate = app.add_subcommand("validate", "Check constraints");
  validate->add_option("--graph", validate_path, "PROV-N input")->required();

  std::string host = "127.0.0.1";
  int port = 8080;
  CLI::App* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "Port");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*abstract) {
      return RunAbstract(graph_path, policy_path, clearance, kind, propagate,
                         format, utilities);
    }
    if (*validate) return RunValidate(validate_path);
    if (*serve) return RunServe(host, port);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
