// Copyright 2026 The trisample Authors.
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

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "trisample/analysis.hpp"
#include "trisample/estimators.hpp"
#include "trisample/exact_metrics.hpp"
#include "trisample/graph.hpp"
#include "trisample/random_source.hpp"
#include "trisample/report_io.hpp"

namespace trisample::cli {
namespace {

enum class Format { kCsv, kJson };

struct Options {
  std::string graph;
  std::vector<std::string> methods;
  std::vector<double> ps;
  std::optional<std::uint64_t> k;
  double rse = 0.05;
  std::uint64_t runs = 1000;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "csv";
  std::string output;
  std::vector<double> metrics;
  bool timing = false;
  unsigned threads = 0;
};

// Raised for invalid parameter combinations detected before any I/O.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw UsageError("--format must be csv or json");
}

std::string render(Format format, const std::string& csv, const nlohmann::json& json) {
  return format == Format::kCsv ? csv : json.dump(2) + "\n";
}

void require_p(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw UsageError("--p must lie in (0, 1]");
}

std::string run_stats(const Options& o, Format format) {
  const Graph g = load_edge_list_file(o.graph);
  const GraphMetrics metrics = compute_metrics(g);
  return render(format, metrics_csv(metrics), metrics_json(metrics));
}

std::string run_estimate(const Options& o, Format format) {
  if (o.methods.size() != 1) throw UsageError("estimate takes exactly one --method");
  SamplingPlan plan;
  try {
    plan.method = parse_method(o.methods.front());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  plan.seed = o.seed;
  if (plan.method == Method::kWs) {
    if (!o.ps.empty()) throw UsageError("ws takes --k, not --p");
    if (!o.k) throw UsageError("ws requires --k");
    if (*o.k < 1) throw UsageError("--k must be >= 1");
    plan.k = *o.k;
  } else {
    if (o.k) throw UsageError(std::string(method_name(plan.method)) + " takes --p, not --k");
    if (o.ps.size() != 1) throw UsageError("estimate requires exactly one --p");
    require_p(o.ps.front());
    plan.p = o.ps.front();
  }

  const Graph g = load_edge_list_file(o.graph);
  RandomSource rng(plan.seed);
  EstimateResult result;
  switch (plan.method) {
    case Method::kEws: result = ews_estimate(g, plan.p, rng); break;
    case Method::kEs: result = es_estimate(g, plan.p, rng); break;
    case Method::kWs: result = ws_estimate(g, plan.k, rng); break;
  }
  return render(format, estimate_csv(result, o.timing), estimate_json(result, o.timing));
}

std::string run_rse_sweep(const Options& o, Format format) {
  std::vector<Method> methods;
  try {
    for (const auto& name : o.methods) methods.push_back(parse_method(name));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (methods.empty()) methods = {Method::kEws, Method::kWs, Method::kEs};
  if (o.ps.empty()) throw UsageError("rse-sweep requires at least one --p");
  for (double p : o.ps) require_p(p);
  if (o.runs < 2) throw UsageError("--runs must be >= 2");

  const Graph g = load_edge_list_file(o.graph);
  const GraphMetrics metrics = compute_metrics(g);
  const RseReport report = rse_sweep(g, methods, o.ps, o.runs, o.seed, metrics, o.threads);
  return render(format, rse_report_csv(report), rse_report_json(report));
}

std::string run_sample_size(const Options& o, Format format) {
  if (!(o.rse > 0.0 && o.rse <= 1.0)) throw UsageError("--rse must lie in (0, 1]");
  const bool inline_metrics = !o.metrics.empty();
  if (inline_metrics == !o.graph.empty()) {
    throw UsageError("sample-size takes exactly one of --graph or --metrics");
  }
  SampleSizeRequest request;
  request.target_rse = o.rse;
  if (inline_metrics) {
    if (o.metrics.size() != 6) throw UsageError("--metrics expects n,m,delta,lambda,phi,K");
    for (double v : o.metrics) {
      if (!(v >= 0.0)) throw UsageError("--metrics values must be non-negative");
    }
    request.features = {o.metrics[0], o.metrics[1], o.metrics[2],
                        o.metrics[3], o.metrics[4], o.metrics[5]};
  } else {
    const Graph g = load_edge_list_file(o.graph);
    request.features = GraphFeatures::from_metrics(compute_metrics(g));
  }
  const SampleSizeTable table = sample_size_table(request);
  return render(format, sample_size_csv(table), sample_size_json(table));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triangle-count estimation by edge-based wedge sampling", "trisample"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format: csv or json")
        ->capture_default_str();
    sub->add_option("--output", o.output, "Write output to this path instead of stdout");
  };

  auto* stats = app.add_subcommand("stats", "Exact triangle metrics of a graph");
  stats->add_option("--graph", o.graph, "Edge-list file")->required();
  add_common(stats);

  auto* estimate = app.add_subcommand("estimate", "One run of a sampling estimator");
  estimate->add_option("--graph", o.graph, "Edge-list file")->required();
  estimate->add_option("--method", o.methods, "ews, es or ws")->required();
  estimate->add_option("--p", o.ps, "Edge-sampling probability (ews, es)");
  estimate->add_option("--k", o.k, "Number of sampled wedges (ws)");
  estimate->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  estimate->add_flag("--timing", o.timing, "Report elapsed seconds");
  add_common(estimate);

  auto* sweep = app.add_subcommand("rse-sweep", "Empirical and theoretical RSE over p values");
  sweep->add_option("--graph", o.graph, "Edge-list file")->required();
  sweep->add_option("--method", o.methods, "ews, es or ws (repeatable; default all)");
  sweep->add_option("--p", o.ps, "Sampling probability (repeatable)")->required();
  sweep->add_option("--runs", o.runs, "Trials per configuration")->capture_default_str();
  sweep->add_option("--seed", o.seed, "Base random seed")->capture_default_str();
  sweep->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  add_common(sweep);

  auto* sizes = app.add_subcommand("sample-size", "Sample sizes reaching a target RSE");
  sizes->add_option("--graph", o.graph, "Edge-list file");
  sizes->add_option("--metrics", o.metrics, "Inline metrics n,m,delta,lambda,phi,K")
      ->delimiter(',');
  sizes->add_option("--rse", o.rse, "Target relative standard error")->capture_default_str();
  add_common(sizes);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("trisample");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    const Format format = parse_format(o.format);
    std::string text;
    if (stats->parsed()) {
      text = run_stats(o, format);
    } else if (estimate->parsed()) {
      text = run_estimate(o, format);
    } else if (sweep->parsed()) {
      text = run_rse_sweep(o, format);
    } else {
      text = run_sample_size(o, format);
    }

    if (o.output.empty()) {
      out << text;
      out.flush();
      if (!out) throw std::runtime_error("failed writing output");
    } else {
      std::ofstream file(o.output, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open " + o.output + " for writing");
      file << text;
      if (!file) throw std::runtime_error("failed writing " + o.output);
    }
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace trisample::cli
