// Copyright 2026 The gte Authors.
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

#include "cli.hpp"

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gte/ensembles.hpp"
#include "gte/group.hpp"
#include "gte/harness.hpp"
#include "gte/invariants.hpp"
#include "gte/io.hpp"

namespace gte::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") out << text;
  else write_text_file(path, text);
}

std::vector<TraceGraph> verification_graphs(int order, GraphFlavor flavor) {
  auto graphs = enumerate_rank1(order, flavor);
  const auto rank2 = enumerate_rank2(order, flavor);
  graphs.insert(graphs.end(), rank2.begin(), rank2.end());
  return graphs;
}

struct Options {
  int threads = 0;

  // sample
  std::string kind = "gote";
  int order = 2;
  int dim = 2;
  double beta = 0.0;
  double gamma = 1.0;
  std::size_t count = 1;
  std::optional<std::uint64_t> seed;
  std::string out_path;

  // act
  std::string tensor_path;
  std::string matrix_path;
  bool haar = false;
  bool dense = false;

  // invariant
  std::string graph_path;
  bool melon = false;
  bool bouquet = false;

  // graphs
  std::string flavor = "real";
  std::string rank = "all";

  // verify
  std::string suite;
  std::optional<std::size_t> samples;
  bool json = false;
  bool center = false;
};

std::uint64_t require_seed(const Options& o, const std::string& command) {
  if (!o.seed) throw UsageError("--seed is required for " + command);
  return *o.seed;
}

int cmd_sample(const Options& o, std::ostream& out) {
  EnsembleSpec spec;
  spec.kind = ensemble_kind_from_string(o.kind);
  spec.order = o.order;
  spec.dim = o.dim;
  spec.beta = o.beta;
  spec.gamma = o.gamma;
  spec.seed = require_seed(o, "sample");
  spec.validate();
  const auto tensors = sample_batch(spec, o.count, o.threads);
  std::string text;
  for (const auto& t : tensors) text += dump(tensor_to_json(t)) + "\n";
  emit(o.out_path, text, out);
  return kExitOk;
}

int cmd_act(const Options& o, std::ostream& out) {
  const auto tensors = read_tensors(o.tensor_path);
  const CanonicalTensor& first = tensors.front();
  GroupFlavor flavor = GroupFlavor::Orthogonal;
  if (first.symmetry() == SymmetryClass::Hermitian) flavor = GroupFlavor::Unitary;
  if (first.symmetry() == SymmetryClass::SelfDual) flavor = GroupFlavor::Symplectic;
  std::optional<GroupElement> u;
  if (o.haar) {
    Rng rng = make_rng(require_seed(o, "act --haar"));
    u = haar_sample(flavor, first.dim(), rng);
  } else {
    u = matrix_from_json(read_json_file(o.matrix_path));
  }
  std::string text;
  for (const auto& t : tensors) {
    if (o.dense) {
      if (!flavor_matches(u->flavor(), t.symmetry())) {
        throw std::invalid_argument(to_string(u->flavor()) + " elements do not act on " + to_string(t.symmetry()) +
                                    " tensors");
      }
      text += dump(dense_to_json(act_dense(*u, densify(t)))) + "\n";
    } else {
      text += dump(tensor_to_json(act(*u, t))) + "\n";
    }
  }
  emit(o.out_path, text, out);
  return kExitOk;
}

int cmd_invariant(const Options& o, std::ostream& out) {
  const int chosen = (o.graph_path.empty() ? 0 : 1) + (o.melon ? 1 : 0) + (o.bouquet ? 1 : 0);
  if (chosen != 1) throw UsageError("exactly one of --graph, --melon, --bouquet is required");
  const auto tensors = read_tensors(o.tensor_path);
  const auto& first = tensors.front();
  const bool real = first.symmetry() == SymmetryClass::Symmetric || first.symmetry() == SymmetryClass::Antisymmetric;
  std::optional<TraceGraph> graph;
  if (o.melon) graph = melon_for(first.symmetry(), first.order());
  else if (o.bouquet) graph = bouquet_graph(first.order(), real ? GraphFlavor::Real : GraphFlavor::Parity);
  else graph = graph_from_json(read_json_file(o.graph_path));
  const auto v = validate(*graph);
  if (!v.ok) throw std::invalid_argument("invalid graph: " + v.violations.front());

  std::vector<Complex> values;
  for (const auto& t : tensors) {
    if (t.symmetry() != first.symmetry() || t.order() != first.order()) {
      throw std::invalid_argument("all tensors in a batch must share class and order");
    }
    values.push_back(evaluate(*graph, t));
  }
  auto negligible = [](Complex z) { return std::abs(z.imag()) <= 1e-10 * std::max(1.0, std::abs(z)); };
  if (values.size() == 1) {
    const Complex z = values.front();
    out << (negligible(z) ? format_double(z.real()) : format_double(z.real()) + "," + format_double(z.imag()))
        << "\n";
    return kExitOk;
  }
  std::ostringstream csv;
  csv << "index,re,im\n";
  for (std::size_t k = 0; k < values.size(); ++k) {
    const Complex z = values[k];
    csv << k << "," << format_double(z.real()) << "," << format_double(negligible(z) ? 0.0 : z.imag()) << "\n";
  }
  emit(o.out_path, csv.str(), out);
  return kExitOk;
}

int cmd_graphs(const Options& o, std::ostream& out) {
  const GraphFlavor flavor = graph_flavor_from_string(o.flavor);
  std::vector<TraceGraph> graphs;
  if (o.rank == "1" || o.rank == "all") graphs = enumerate_rank1(o.order, flavor);
  if (o.rank == "2" || o.rank == "all") {
    const auto r2 = enumerate_rank2(o.order, flavor);
    graphs.insert(graphs.end(), r2.begin(), r2.end());
  }
  Json arr = Json::array();
  for (const auto& g : graphs) {
    Json j = graph_to_json(g);
    j["connected"] = validate(g).connected;
    arr.push_back(j);
  }
  emit(o.out_path, arr.dump(2) + "\n", out);
  return kExitOk;
}

int cmd_identity(const Options& o, std::ostream& out) {
  if (o.order < 1 || o.dim < 1) throw UsageError("--p and --dim must be positive");
  emit(o.out_path, dump(tensor_to_json(identity_tensor(o.order, o.dim))) + "\n", out);
  return kExitOk;
}

Sampler sampler_for(const Options& o, EnsembleSpec& model) {
  const std::string& k = o.kind;
  model.order = o.order;
  model.dim = o.dim;
  model.beta = o.beta;
  model.gamma = o.gamma;
  if (k == "gote" || k == "gute" || k == "gste") {
    model.kind = ensemble_kind_from_string(k);
    return ensemble_sampler(model);
  }
  model.kind = EnsembleKind::GOTE;
  if (k == "uniform") return uniform_entries_sampler(o.order, o.dim);
  if (k == "rankone") return rotated_rank_one_sampler(o.order, o.dim);
  if (k == "zero") return constant_sampler(CanonicalTensor(SymmetryClass::Symmetric, o.order, o.dim));
  if (k == "identity") return constant_sampler(o.beta * identity_tensor(o.order, o.dim));
  if (k == "sphere") return sphere_pullback_sampler(o.order, o.dim);
  throw UsageError("unknown --kind '" + k + "' (gote, gute, gste, uniform, rankone, zero, identity, sphere)");
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::uint64_t seed = require_seed(o, "verify");
  if (o.center && o.suite != "isotropy") throw UsageError("--center only applies to --suite isotropy");
  VerificationReport report;
  if (o.suite == "derivative") {
    report = derivative_identity_test(o.samples.value_or(100), seed);
  } else {
    EnsembleSpec model;
    const Sampler sampler = sampler_for(o, model);
    const std::size_t n = o.samples.value_or(5000);
    if (o.suite == "invariance") {
      CanonicalTensor probe = [&] {
        Rng rng = make_rng(seed);
        return sampler(rng);
      }();
      GroupFlavor flavor = GroupFlavor::Orthogonal;
      GraphFlavor gflavor = GraphFlavor::Real;
      if (probe.symmetry() == SymmetryClass::Hermitian) flavor = GroupFlavor::Unitary;
      if (probe.symmetry() == SymmetryClass::SelfDual) flavor = GroupFlavor::Symplectic;
      if (flavor != GroupFlavor::Orthogonal) gflavor = GraphFlavor::Parity;
      report = invariance_test(sampler, flavor, verification_graphs(o.order, gflavor), n, seed, o.threads);
    } else if (o.suite == "gaussianity") {
      report = gaussianity_independence_test(sampler, model, n, seed, o.threads);
    } else if (o.suite == "isotropy") {
      report = isotropy_test(sampler, o.order, o.dim, n, seed, o.threads, o.center);
    } else {
      throw UsageError("unknown --suite '" + o.suite + "' (invariance, gaussianity, derivative, isotropy)");
    }
  }
  if (o.json) {
    out << report_to_json(report).dump(2) << "\n";
  } else {
    std::size_t failed = 0;
    for (const auto& s : report.subtests) failed += s.pass ? 0 : 1;
    out << report.test << ": " << report.verdict << " (statistic " << format_double(report.statistic)
        << ", threshold " << format_double(report.threshold) << ", " << failed << "/" << report.subtests.size()
        << " subtests failed, " << report.samples << " samples, seed " << report.seed << ")\n";
  }
  return report.verdict == "fail" ? kExitFailure : kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian tensor ensembles, group actions and trace invariants", "gte"};
  app.set_version_flag("--version", std::string("gte ") + kToolkitVersion + " (tensor format " +
                                        std::to_string(kFormatVersion) + ")");
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "worker threads (0 = all cores, 1 = serial)")->check(CLI::NonNegativeNumber);

  auto* sample = app.add_subcommand("sample", "draw tensors from GOTE/GUTE/GSTE as NDJSON");
  sample->add_option("--kind", o.kind, "gote | gute | gste")->required()->check(CLI::IsMember({"gote", "gute", "gste"}));
  sample->add_option("--p", o.order, "order")->required();
  sample->add_option("--dim", o.dim, "dimension N")->required();
  sample->add_option("--beta", o.beta, "shift");
  sample->add_option("--gamma", o.gamma, "scale");
  sample->add_option("--count", o.count, "number of tensors");
  sample->add_option("--seed", o.seed, "random seed");
  sample->add_option("--out", o.out_path, "output path (- for stdout)")->required();

  auto* act = app.add_subcommand("act", "apply a group element to tensors");
  act->add_option("--tensor", o.tensor_path, "tensor JSON or NDJSON")->required();
  auto* matrix_opt = act->add_option("--matrix", o.matrix_path, "group element JSON");
  auto* haar_opt = act->add_flag("--haar", o.haar, "draw a Haar element");
  matrix_opt->excludes(haar_opt);
  act->add_option("--seed", o.seed, "seed for --haar");
  act->add_option("--out", o.out_path, "output path (default stdout)");
  act->add_flag("--dense", o.dense, "write the dense image instead of the canonical tensor");

  auto* inv = app.add_subcommand("invariant", "evaluate a trace invariant");
  auto* graph_opt = inv->add_option("--graph", o.graph_path, "graph JSON");
  auto* melon_opt = inv->add_flag("--melon", o.melon, "melon graph of the tensor's class");
  auto* bouquet_opt = inv->add_flag("--bouquet", o.bouquet, "bouquet graph");
  graph_opt->excludes(melon_opt)->excludes(bouquet_opt);
  melon_opt->excludes(bouquet_opt);
  inv->add_option("--tensor", o.tensor_path, "tensor JSON or NDJSON")->required();
  inv->add_option("--out", o.out_path, "CSV output path for batches (default stdout)");

  auto* graphs = app.add_subcommand("graphs", "list rank-1 and rank-2 trace-invariant graphs");
  graphs->add_option("--p", o.order, "order")->required();
  graphs->add_option("--flavor", o.flavor, "real | parity")->check(CLI::IsMember({"real", "parity"}));
  graphs->add_option("--rank", o.rank, "1 | 2 | all")->check(CLI::IsMember({"1", "2", "all"}));
  graphs->add_option("--out", o.out_path, "output path (default stdout)");

  auto* identity = app.add_subcommand("identity", "write the symmetric tensor identity");
  identity->add_option("--p", o.order, "order")->required();
  identity->add_option("--dim", o.dim, "dimension N")->required();
  identity->add_option("--out", o.out_path, "output path (- for stdout)")->required();

  auto* verify = app.add_subcommand("verify", "run a statistical verification suite");
  verify->add_option("--suite", o.suite, "invariance | gaussianity | derivative | isotropy")
      ->required()
      ->check(CLI::IsMember({"invariance", "gaussianity", "derivative", "isotropy"}));
  verify->add_option("--kind", o.kind, "gote | gute | gste | uniform | rankone | zero | identity | sphere");
  verify->add_option("--p", o.order, "order");
  verify->add_option("--dim", o.dim, "dimension N");
  verify->add_option("--beta", o.beta, "shift");
  verify->add_option("--gamma", o.gamma, "scale");
  verify->add_option("--samples", o.samples, "samples (trials for derivative)");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_flag("--json", o.json, "print the report as JSON");
  verify->add_flag("--center", o.center, "isotropy of H - mean(H_1..1) I, exploratory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sample) return cmd_sample(o, out);
    if (*act) {
      if (!o.haar && o.matrix_path.empty()) throw UsageError("act needs --matrix PATH or --haar");
      return cmd_act(o, out);
    }
    if (*inv) return cmd_invariant(o, out);
    if (*graphs) return cmd_graphs(o, out);
    if (*identity) return cmd_identity(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"gte"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gte::cli
