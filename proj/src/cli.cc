// Copyright 2026 The mlgames Authors
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

#include "mlgames/cli.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mlgames/certificates.h"
#include "mlgames/errors.h"
#include "mlgames/experiments.h"
#include "mlgames/ingest.h"
#include "mlgames/io.h"
#include "mlgames/lcp.h"
#include "mlgames/matrix_classes.h"

namespace mlgames {
namespace {

constexpr int kCliEnumerationCap = 20;

struct Options {
  std::string input;
  std::string second_input;
  std::string out;
  std::string summary;
  std::string solution;
  std::string layer1;
  std::string mode = "prop3";
  std::string src_col = "src";
  std::string dst_col = "dst";
  std::string weight_col;
  std::string attention;
  std::string merge;
  std::optional<double> kappa;
  std::optional<double> s;
  double alpha = kDefaultMergeAlpha;
  double c = 0.0;
  double tol = kLcpTol;
  double kappa_min = 0.2;
  double kappa_max = 1.0;
  std::optional<uint64_t> seed;
  int n_min = 3;
  int n_max = 8;
  int n = 5;
  int trials = 5000;
  int cap = kCliEnumerationCap;
  int workers = 1;
  int layer2_count = 1000;
  int communities = 0;
  int size = 30;
  int points = 33;
  bool binary = false;
  bool symmetrize = false;
};

const char* ErrorKind(const Error& e) {
  if (dynamic_cast<const ShapeError*>(&e)) return "shape error";
  if (dynamic_cast<const InvalidParameterError*>(&e)) return "invalid parameter";
  if (dynamic_cast<const CapacityError*>(&e)) return "capacity exceeded";
  if (dynamic_cast<const BudgetError*>(&e)) return "budget exhausted";
  if (dynamic_cast<const DegeneratePivotError*>(&e)) return "degenerate pivot";
  if (dynamic_cast<const NumericError*>(&e)) return "numeric failure";
  if (dynamic_cast<const SingularityError*>(&e)) return "singular block";
  if (dynamic_cast<const InternalConsistencyError*>(&e))
    return "internal consistency";
  if (dynamic_cast<const InvalidInputError*>(&e)) return "invalid input";
  if (dynamic_cast<const DegenerateInputError*>(&e)) return "degenerate input";
  if (dynamic_cast<const InfeasibleError*>(&e)) return "infeasible";
  if (dynamic_cast<const ParseError*>(&e)) return "parse error";
  return "error";
}

// Writes to --out when given, otherwise to the result stream.
void Emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InvalidInputError("cannot write " + o.out);
  f << text;
}

void EmitJson(const Options& o, std::ostream& out, const Json& j) {
  Emit(o, out, j.dump(2) + "\n");
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInputError("cannot write " + path);
  f << text;
}

std::string VectorText(const Vector& v) {
  std::string s = "(";
  for (int i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += FormatDouble(std::abs(v(i)) < 1e-12 ? 0.0 : v(i));
  }
  return s + ")";
}

std::string EvidenceText(const Certificate& c) {
  std::string s;
  for (const auto& [name, value] : c.evidence) {
    if (!s.empty()) s += ' ';
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    s += name + "=" + buf;
  }
  if (!c.note.empty()) s += (s.empty() ? "" : " ") + ("[" + c.note + "]");
  return s;
}

void PrintTable(std::ostream& err, const std::vector<Certificate>& certs) {
  err << std::left << std::setw(36) << "source" << std::setw(22) << "verdict"
      << std::setw(12) << "applicable" << "evidence\n";
  for (const auto& c : certs) {
    std::string applicable = c.applicable ? "yes" : "no";
    if (c.heuristic) applicable += "*";
    err << std::left << std::setw(36) << c.source << std::setw(22)
        << ToString(c.verdict) << std::setw(12) << applicable
        << EvidenceText(c) << "\n";
  }
}

NetworkGame Flatten(const AnyGame& game) {
  if (auto g = std::get_if<NetworkGame>(&game)) return *g;
  if (auto g = std::get_if<MultiplexGame>(&game)) return BuildMultiplex(*g);
  return BuildSupra(std::get<MultilayerGame>(game));
}

AnyGame LoadGame(const Options& o) {
  AnyGame game = GameFromJson(ReadJsonFile(o.input));
  if (o.kappa) {
    auto* mp = std::get_if<MultiplexGame>(&game);
    if (!mp || mp->layers.size() != 2)
      throw InvalidParameterError("--kappa applies to two-layer multiplex games");
    mp->weights = {*o.kappa, 1.0 - *o.kappa};
    mp->Validate();
  }
  return game;
}

struct Equilibria {
  std::string method;
  std::vector<LcpSolution> solutions;
  bool degenerate_support = false;
  bool ray_termination = false;
};

Equilibria Solve(const LcpProblem& p, const Options& o) {
  Equilibria eq;
  if (p.dim() <= o.cap) {
    eq.method = "enumeration";
    EnumerationResult r = EnumerateSolutions(p, o.tol, o.cap);
    eq.solutions = std::move(r.solutions);
    eq.degenerate_support = r.degenerate_support;
  } else {
    eq.method = "lemke";
    LemkeResult r = Lemke(p);
    if (r.solution) eq.solutions.push_back(*r.solution);
    eq.ray_termination = r.status == LemkeResult::Status::kRayTermination;
  }
  return eq;
}

Json EquilibriaJson(const Equilibria& eq, const LcpProblem& p,
                    std::ostream& err) {
  Json list = Json::array();
  for (const auto& sol : eq.solutions) {
    Json j = ToJson(sol);
    const Certificate st = CertifyStrongStability(sol, p);
    j["stability"] = ToJson(st);
    err << "  x = " << VectorText(sol.z) << "  " << ToString(st.verdict)
        << "\n";
    list.push_back(std::move(j));
  }
  Json j{{"method", eq.method},
         {"count", eq.solutions.size()},
         {"degenerate_support", eq.degenerate_support},
         {"equilibria", std::move(list)}};
  if (eq.ray_termination) j["ray_termination"] = true;
  return j;
}

int RunSolve(const Options& o, std::ostream& out, std::ostream& err) {
  const NetworkGame game = Flatten(LoadGame(o));
  const LcpProblem p = FromGame(game);
  const Equilibria eq = Solve(p, o);
  err << eq.solutions.size() << " equilibri"
      << (eq.solutions.size() == 1 ? "um" : "a") << " (" << eq.method
      << ")\n";
  EmitJson(o, out, EquilibriaJson(eq, p, err));
  return kExitOk;
}

int RunStability(const Options& o, std::ostream& out, std::ostream& err) {
  const NetworkGame game = Flatten(LoadGame(o));
  const LcpProblem p = FromGame(game);
  if (o.solution.empty()) {
    const Equilibria eq = Solve(p, o);
    EmitJson(o, out, EquilibriaJson(eq, p, err));
    return kExitOk;
  }
  const Json sj = ReadJsonFile(o.solution);
  const LcpSolution sol = VerifySolution(p, VectorFromJson(sj.at("z")));
  const Certificate c = CertifyStrongStability(sol, p);
  PrintTable(err, {c});
  Json j = ToJson(sol);
  j["stability"] = ToJson(c);
  EmitJson(o, out, j);
  return kExitOk;
}

int RunCertify(const Options& o, std::ostream& out, std::ostream& err) {
  const AnyGame game = LoadGame(o);
  const NetworkGame flat = Flatten(game);
  std::vector<Certificate> certs;
  std::string kind;
  Json layers_p = Json::array();
  auto layer_p = [&](const AdjacencyMatrix& g) {
    layers_p.push_back(ToJson(IsPMatrix(g.PlusIdentity())));
  };

  if (auto mp = std::get_if<MultiplexGame>(&game)) {
    kind = "multiplex";
    for (const auto& g : mp->layers) layer_p(g);
    certs.push_back(CertifyClosedClasses(*mp));
    if (mp->layers.size() == 2) {
      const double k = mp->weights[0];
      const auto& g1 = mp->layers[0];
      const auto& g2 = mp->layers[1];
      certs.insert(certs.begin(), CertifyPairFailure(g1, g2, k));
      certs.push_back(CertifyPerturbation(g1, g2, k));
      certs.push_back(CertifyTwoSidedFailure(g1, g2, k));
      const MultiplexExistenceReport ex =
          CertifyMultiplexComplementsExistence(g1, g2, k);
      certs.push_back(ex.sufficient);
      certs.push_back(ex.nonexistence);
    }
  } else if (auto ml = std::get_if<MultilayerGame>(&game)) {
    kind = "multilayer";
    for (const auto& g : ml->layers) layer_p(g);
    if (ml->num_layers() == 2) {
      certs.push_back(CertifyMultilayerFailure(*ml));
      certs.push_back(CertifyOneWay(*ml));
      certs.push_back(CertifyComplementsBlockDominance(*ml));
    }
    if (ml->num_layers() >= 2) {
      std::vector<Matrix> blocks;
      for (int l = 0; l < ml->num_layers(); ++l)
        for (int k = 0; k < ml->num_layers(); ++k)
          if (l != k && ml->Inter(l, k).cwiseAbs().maxCoeff() > 0.0)
            blocks.push_back(ml->Inter(l, k));
      if (!blocks.empty()) certs.push_back(CertifyChainCycleDegenerate(blocks));
    }
    if (ml->num_layers() >= 3) {
      const int m = ml->num_layers();
      const int n = ml->layer_size();
      const int d_old = (m - 1) * n;
      const Matrix supra = flat.g().matrix();
      const NetworkGame old(
          AdjacencyMatrix(supra.topLeftCorner(d_old, d_old)),
          flat.q().head(d_old));
      certs.push_back(CertifyLayerAddition(
          old, ml->layers.back(), supra.bottomLeftCorner(n, d_old),
          supra.topRightCorner(d_old, n)));
    }
  } else {
    kind = "network";
  }
  certs.push_back(CertifyExistence(flat));

  const LcpProblem p = FromGame(flat);
  const ClassVerdict truth = IsPMatrix(p.m);
  if (truth.is_true()) certs.push_back(CertifyUniquenessImpliesStability(flat, o.cap));

  Verdict overall = Verdict::kInconclusive;
  if (truth.is_true()) {
    overall = Verdict::kGuaranteedUnique;
  } else if (truth.is_false()) {
    overall = Verdict::kNotGuaranteedUnique;
  } else {
    for (const auto& c : certs) {
      if (c.heuristic || !c.applicable) continue;
      if (c.verdict == Verdict::kGuaranteedUnique ||
          c.verdict == Verdict::kNotGuaranteedUnique) {
        overall = c.verdict;
        break;
      }
    }
  }

  Json doc{{"kind", kind}};
  Json cj = Json::array();
  for (const auto& c : certs) cj.push_back(ToJson(c));
  doc["certificates"] = std::move(cj);
  if (!layers_p.empty()) doc["layers_p"] = std::move(layers_p);
  doc["ground_truth"] = ToJson(truth);
  std::optional<size_t> count;
  if (p.dim() <= o.cap) {
    const EnumerationResult r = EnumerateSolutions(p, o.tol, o.cap);
    count = r.solutions.size();
    doc["equilibria"] = *count;
  }
  doc["overall"] = ToString(overall);

  PrintTable(err, certs);
  err << "ground truth: I + G is " << (truth.is_true() ? "" : truth.is_false() ? "not " : "undecided ")
      << "a P-matrix (" << ToString(truth.method) << ")\n";
  if (count) err << "equilibria: " << *count << "\n";
  err << "overall: " << ToString(overall) << "\n";
  EmitJson(o, out, doc);
  return overall == Verdict::kNotGuaranteedUnique ? kExitNotUnique : kExitOk;
}

int RunExperiment(const Options& o, std::ostream& out, std::ostream& err) {
  const SweepMode mode = SweepModeFromString(o.mode);
  if (mode == SweepMode::kMultilayer) {
    MultilayerSweepConfig cfg;
    cfg.n = o.n;
    cfg.layer1_count = 6;
    cfg.layer2_count = o.layer2_count;
    cfg.seed = o.seed.value_or(kLayerOneFixtureSeed);
    cfg.workers = o.workers;
    MultilayerSweepResult r;
    if (!o.layer1.empty()) {
      std::vector<AdjacencyMatrix> layer1;
      const Json doc = ReadJsonFile(o.layer1);
      for (const auto& l : doc.at("layers"))
        layer1.push_back(AdjacencyFromJson(l));
      cfg.n = layer1.empty() ? cfg.n : layer1.front().size();
      r = RunMultilayerSweep(cfg, layer1);
    } else {
      r = RunMultilayerSweep(cfg);
    }
    Emit(o, out, RecordsCsv(r));
    if (!o.summary.empty()) WriteFile(o.summary, SummaryCsv(r));
    err << SummaryCsv(r);
    return kExitOk;
  }
  SweepConfig cfg;
  cfg.mode = mode;
  cfg.n_range.clear();
  for (int n = o.n_min; n <= o.n_max; ++n) cfg.n_range.push_back(n);
  cfg.trials = o.trials;
  cfg.s = o.s.value_or(mode == SweepMode::kMultiplexProp3 ? 0.125 : 4.0);
  cfg.kappa = o.kappa.value_or(mode == SweepMode::kMultiplexProp3 ? 0.75 : 0.5);
  cfg.seed = o.seed.value_or(0);
  cfg.workers = o.workers;
  cfg.symmetrize = o.symmetrize;
  const MultiplexSweepResult r = RunMultiplexSweep(cfg);
  Emit(o, out, RecordsCsv(r));
  if (!o.summary.empty()) WriteFile(o.summary, SummaryCsv(r));
  err << SummaryCsv(r);
  return kExitOk;
}

Json LayerJson(const LabeledLayer& layer, const IngestReport& report) {
  Json j = ToJson(layer.g.matrix());
  j["nodes"] = layer.nodes;
  j["report"] = Json{{"nodes_kept", report.nodes_kept},
                     {"edges_kept", report.edges_kept},
                     {"self_edges_dropped", report.self_edges_dropped},
                     {"rows_read", report.rows_read},
                     {"bad_rows", report.bad_rows},
                     {"normalization_max", report.normalization_max}};
  const ClassVerdict rdd = IsStrictlyRowDiagonallyDominant(layer.g.PlusIdentity());
  j["report"]["strictly_row_dominant"] = rdd.is_true();
  return j;
}

void PrintReport(std::ostream& err, const std::string& path,
                 const IngestReport& r) {
  err << path << ": " << r.rows_read << " rows, " << r.nodes_kept
      << " nodes, " << r.edges_kept << " edges, " << r.self_edges_dropped
      << " self-edges dropped, " << r.bad_rows << " bad rows";
  if (r.normalization_max > 0.0)
    err << ", scaled by 1/" << FormatDouble(r.normalization_max);
  err << "\n";
  for (const auto& [line, msg] : r.row_errors)
    err << "  line " << line << ": " << msg << "\n";
}

LabeledLayer BuildLayer(const Options& o, const std::string& path,
                        IngestReport* report) {
  const EdgeSchema schema{o.src_col, o.dst_col, o.weight_col};
  ParsedEdges parsed = ParseEdgeList(path, schema);
  *report = parsed.report;
  if (o.binary) return {parsed.edges.nodes, BinarySymmetric(parsed.edges)};
  if (o.attention == "inverse-degree")
    return {parsed.edges.nodes,
            AttentionWeights(parsed.edges, AttentionMode::kInverseDegree)};
  if (o.attention == "constant")
    return {parsed.edges.nodes,
            AttentionWeights(parsed.edges, AttentionMode::kConstant, o.c)};
  if (!o.attention.empty())
    throw InvalidParameterError("unknown attention mode \"" + o.attention + "\"");
  return ToLayer(NormalizeWeights(parsed.edges, &report->normalization_max));
}

int RunIngest(const Options& o, std::ostream& out, std::ostream& err) {
  IngestReport report;
  LabeledLayer layer = BuildLayer(o, o.input, &report);
  PrintReport(err, o.input, report);
  if (!o.merge.empty()) {
    IngestReport second;
    const LabeledLayer other = BuildLayer(o, o.merge, &second);
    PrintReport(err, o.merge, second);
    layer = MergeLayers(layer, other, o.alpha);
    report.nodes_kept = static_cast<int>(layer.nodes.size());
    report.edges_kept = static_cast<int>(
        (layer.g.matrix().array() != 0.0).count());
    err << "merged with alpha = " << FormatDouble(o.alpha) << ": "
        << report.nodes_kept << " nodes\n";
  }
  EmitJson(o, out, LayerJson(layer, report));
  return kExitOk;
}

int RunSweepKappa(const Options& o, std::ostream& out, std::ostream& err) {
  const AdjacencyMatrix a = AdjacencyFromJson(ReadJsonFile(o.input));
  const AdjacencyMatrix b = AdjacencyFromJson(ReadJsonFile(o.second_input));
  const std::vector<double> grid = KappaGrid(o.kappa_min, o.kappa_max, o.points);
  std::vector<KappaCurve> curves;
  if (o.communities > 0) {
    curves = KappaBatch(a, b, o.communities, o.size, grid, o.seed.value_or(0), o.workers);
  } else {
    KappaCurve whole;
    whole.points = KappaDeterminantSweep(a, b, grid);
    curves.push_back(std::move(whole));
  }
  int positive_end = 0;
  for (const auto& c : curves) positive_end += c.points.back().second > 0.0;
  err << curves.size() << " curve(s), " << grid.size() << " kappa values; "
      << positive_end << " positive at kappa = "
      << FormatDouble(grid.back()) << "\n";
  Emit(o, out, KappaCsv(curves));
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Equilibria and uniqueness certificates for network games"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Result file (default stdout)");
    sub->add_option("--tol", o.tol, "Feasibility tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap", o.cap, "Largest dimension solved by enumeration")
        ->check(CLI::Range(1, kEnumerationCap));
  };

  CLI::App* solve = app.add_subcommand("solve", "All equilibria of a game");
  solve->add_option("input", o.input, "Game file")->required();
  solve->add_option("--kappa", o.kappa, "Weight of the first multiplex layer");
  add_common(solve);

  CLI::App* certify =
      app.add_subcommand("certify", "Run every applicable certificate");
  certify->add_option("input", o.input, "Game file")->required();
  certify->add_option("--kappa", o.kappa, "Weight of the first multiplex layer");
  add_common(certify);

  CLI::App* stability =
      app.add_subcommand("stability", "Strong stability of equilibria");
  stability->add_option("input", o.input, "Game file")->required();
  stability->add_option("--solution", o.solution, "File with a \"z\" vector");
  stability->add_option("--kappa", o.kappa, "Weight of the first multiplex layer");
  add_common(stability);

  CLI::App* experiment =
      app.add_subcommand("experiment", "Monte Carlo sweeps to CSV");
  experiment->add_option("--mode", o.mode, "prop3 | prop4 | multilayer");
  experiment->add_option("--s", o.s, "Half width of layer-2 weights");
  experiment->add_option("--kappa", o.kappa, "Layer-1 weight");
  experiment->add_option("--seed", o.seed, "Random seed");
  experiment->add_option("--n-min", o.n_min, "Smallest network size");
  experiment->add_option("--n-max", o.n_max, "Largest network size");
  experiment->add_option("--trials", o.trials, "Trials per size");
  experiment->add_option("--n", o.n, "Layer size (multilayer)");
  experiment->add_option("--layer2-count", o.layer2_count,
                         "Second layers per first layer (multilayer)");
  experiment->add_option("--layer1", o.layer1,
                         "Fixture file with the first layers (multilayer)");
  experiment->add_option("--summary", o.summary, "Summary CSV file");
  experiment->add_option("--workers", o.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  experiment->add_flag("--symmetrize", o.symmetrize,
                       "Symmetrize every random layer");
  experiment->add_option("--out", o.out, "Records CSV (default stdout)");

  CLI::App* ingest =
      app.add_subcommand("ingest", "Edge list to a normalized layer");
  ingest->add_option("input", o.input, "Edge-list CSV")->required();
  ingest->add_option("--src-col", o.src_col, "Source column");
  ingest->add_option("--dst-col", o.dst_col, "Destination column");
  ingest->add_option("--weight-col", o.weight_col,
                     "Weight column (default: count rows)");
  ingest->add_option("--merge", o.merge, "Second edge list merged in");
  ingest->add_option("--alpha", o.alpha, "Weight of the first list when merging");
  ingest->add_option("--attention", o.attention, "inverse-degree | constant");
  ingest->add_option("--c", o.c, "Constant attention weight");
  ingest->add_flag("--binary", o.binary, "Binary symmetric layer");
  ingest->add_option("--out", o.out, "Layer JSON (default stdout)");

  CLI::App* sweep = app.add_subcommand(
      "sweep-kappa", "Determinant of I + k A + (1 - k) B over a grid");
  sweep->add_option("layer_a", o.input, "First layer file")->required();
  sweep->add_option("layer_b", o.second_input, "Second layer file")->required();
  sweep->add_option("--communities", o.communities,
                    "Random communities (0: whole layers)");
  sweep->add_option("--size", o.size, "Community size");
  sweep->add_option("--seed", o.seed, "Random seed");
  sweep->add_option("--kappa-min", o.kappa_min, "Grid start");
  sweep->add_option("--kappa-max", o.kappa_max, "Grid end");
  sweep->add_option("--points", o.points, "Grid points");
  sweep->add_option("--workers", o.workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--out", o.out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (solve->parsed()) return RunSolve(o, out, err);
    if (certify->parsed()) return RunCertify(o, out, err);
    if (stability->parsed()) return RunStability(o, out, err);
    if (experiment->parsed()) return RunExperiment(o, out, err);
    if (ingest->parsed()) return RunIngest(o, out, err);
    if (sweep->parsed()) return RunSweepKappa(o, out, err);
  } catch (const Error& e) {
    err << "error: " << ErrorKind(e) << ": " << e.what() << "\n";
    return kExitError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: invalid input: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace mlgames
