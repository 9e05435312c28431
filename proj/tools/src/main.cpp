#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sc/attention.hpp"
#include "sc/coarsen.hpp"
#include "sc/eigen.hpp"
#include "sc/errors.hpp"
#include "sc/generators.hpp"
#include "sc/graphon.hpp"
#include "sc/ign.hpp"
#include "sc/io.hpp"
#include "sc/laplacian.hpp"
#include "sc/lift_project.hpp"
#include "sc/losses.hpp"
#include "sc/rng.hpp"
#include "sc/spectrum_opt.hpp"

namespace {

using namespace sc;

std::uint64_t master_seed() {
  if (const char* env = std::getenv("SC_SEED")) return std::strtoull(env, nullptr, 10);
  return 0;
}

struct DatasetSpec {
  bool from_file = false;
  std::string path;
  GraphKind kind = GraphKind::ER;
  int n = 512;
};

DatasetSpec parse_dataset(const std::string& dataset, int n) {
  DatasetSpec spec;
  spec.n = n;
  if (dataset == "er")
    spec.kind = GraphKind::ER;
  else if (dataset == "ba")
    spec.kind = GraphKind::BA;
  else if (dataset == "ws")
    spec.kind = GraphKind::WS;
  else if (dataset == "geo")
    spec.kind = GraphKind::GEO;
  else {
    spec.from_file = true;
    spec.path = dataset;
  }
  return spec;
}

Graph load_dataset(const DatasetSpec& spec, Rng& rng) {
  if (spec.from_file) return read_edge_list_file(spec.path);
  return generate_graph(spec.kind, spec.n, rng);
}

CoarsenMethod parse_method(const std::string& m) {
  if (m == "bl") return CoarsenMethod::Baseline;
  if (m == "heavy") return CoarsenMethod::HeavyEdge;
  if (m == "alg") return CoarsenMethod::AlgebraicDistance;
  if (m == "aff") return CoarsenMethod::Affinity;
  if (m == "lve") return CoarsenMethod::LocalVarEdge;
  if (m == "lvn") return CoarsenMethod::LocalVarNeigh;
  throw Error("unknown method '" + m + "' (expected bl|heavy|alg|aff|lve|lvn)");
}

std::ostream& open_out(std::ofstream& file, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") return std::cout;
  file.open(out_path);
  if (!file) throw Error("cannot open " + out_path + " for writing");
  return file;
}

int cmd_gen(const std::string& dataset, int n, const std::string& out_path) {
  Rng rng(master_seed());
  const Graph g = load_dataset(parse_dataset(dataset, n), rng);
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  write_edge_list(g, out);
  return 0;
}

int cmd_coarsen(const std::string& dataset, int n, const std::string& method, double ratio,
                const std::string& out_path, const std::string& map_path) {
  Rng rng(master_seed());
  const Graph g = load_dataset(parse_dataset(dataset, n), rng);
  Rng crng = rng.split();
  const CoarseningResult cr = coarsen(g, parse_method(method), ratio, crng);
  if (cr.unreachable_warnings > 0)
    std::cerr << "warning: " << cr.unreachable_warnings
              << " vertices had no reachable landmark and were assigned randomly\n";
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  write_edge_list(cr.coarse, out);
  if (!map_path.empty()) {
    std::ofstream mf(map_path);
    if (!mf) throw Error("cannot open " + map_path + " for writing");
    write_vertex_map(cr.map, mf);
  }
  return 0;
}

int cmd_losses(const std::string& dataset, int n, const std::string& methods_arg,
               const std::string& losses_arg, double ratio, int k, int seeds,
               const std::string& out_path) {
  std::vector<std::string> methods;
  for (std::stringstream ss(methods_arg); ss.good();) {
    std::string item;
    std::getline(ss, item, ',');
    if (!item.empty()) methods.push_back(item);
  }
  std::vector<std::string> loss_names;
  for (std::stringstream ss(losses_arg); ss.good();) {
    std::string item;
    std::getline(ss, item, ',');
    if (!item.empty()) loss_names.push_back(item);
  }

  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  out << "dataset,method,ratio,loss_name,k,seed,value\n";

  for (int s = 0; s < seeds; ++s) {
    Rng rng(master_seed() + static_cast<std::uint64_t>(s));
    const Graph g = load_dataset(parse_dataset(dataset, n), rng);
    for (const std::string& method : methods) {
      Rng crng = rng.split();
      const CoarseningResult cr = coarsen(g, parse_method(method), ratio, crng);
      for (const std::string& loss : loss_names) {
        LossReport report;
        Rng lrng = rng.split();
        if (loss == "quad")
          report = quadratic_loss(g, cr, k);
        else if (loss == "nquad")
          report = normalized_quadratic_loss(g, cr, k);
        else if (loss == "ray")
          report = rayleigh_loss(g, cr, k);
        else if (loss == "eig")
          report = eigenerror(g, cr, std::min(k, cr.coarse.n()));
        else if (loss == "cond")
          report = conductance_loss(g, cr, k, lrng);
        else
          throw Error("unknown loss '" + loss + "' (expected quad|nquad|ray|eig|cond)");
        out << dataset << "," << method << "," << format_double(ratio) << "," << report.loss_name
            << "," << report.k << "," << s << "," << format_double(report.value) << "\n";
      }
    }
  }
  return 0;
}

int cmd_optimize(const std::string& dataset, int n, const std::string& method, double ratio,
                 double target_scale, double tol, int max_iter, const std::string& out_path,
                 const std::string& graph_out) {
  Rng rng(master_seed());
  const Graph g = load_dataset(parse_dataset(dataset, n), rng);
  Rng crng = rng.split();
  const CoarseningResult cr = coarsen(g, parse_method(method), ratio, crng);

  // Target: scaled spectrum of the current coarse Laplacian.
  const EigenDecomposition eig = sym_eig(combinatorial_laplacian(cr.coarse));
  Vector target = eig.values;
  for (double& v : target) v *= target_scale;

  Rng orng = rng.split();
  AlignOptions opts;
  opts.tol = tol;
  opts.max_iter = max_iter;
  const auto [result, trace] = align_spectrum(cr, target, orng, opts);

  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  out << "iter,objective\n";
  for (std::size_t i = 0; i < trace.objectives.size(); ++i)
    out << i << "," << format_double(trace.objectives[i]) << "\n";
  if (!graph_out.empty()) write_edge_list_file(result, graph_out);
  if (trace.max_iter_exceeded) std::cerr << "warning: iteration limit reached\n";
  if (trace.dropped_edges > 0)
    std::cerr << "note: " << trace.dropped_edges << " zero-weight edges dropped\n";
  return 0;
}

int cmd_graphon(const std::string& model_arg, const std::string& mode_arg,
                const std::string& sizes_arg, int seeds, const std::string& out_path) {
  Graphon wg = Graphon::constant(0.1);
  if (model_arg == "er") {
    wg = Graphon::constant(0.1);
  } else if (model_arg == "sbm") {
    Matrix probs(2, 2);
    probs(0, 0) = 0.1;
    probs(0, 1) = probs(1, 0) = 0.25;
    probs(1, 1) = 0.4;
    wg = Graphon::sbm({0.5, 1.0}, probs);
  } else if (model_arg == "lip") {
    wg = Graphon::lipschitz();
  } else if (model_arg == "plip") {
    wg = Graphon::piecewise_lipschitz();
  } else {
    throw Error("unknown model '" + model_arg + "' (expected er|sbm|lip|plip)");
  }

  ConvergenceMode mode;
  if (mode_arg == "ew-fixed")
    mode = ConvergenceMode::EwFixed;
  else if (mode_arg == "ew-random")
    mode = ConvergenceMode::EwRandom;
  else if (mode_arg == "ep-raw")
    mode = ConvergenceMode::EpRaw;
  else if (mode_arg == "ep-smooth")
    mode = ConvergenceMode::EpSmoothed;
  else
    throw Error("unknown mode '" + mode_arg + "'");

  std::vector<int> sizes;
  for (std::stringstream ss(sizes_arg); ss.good();) {
    std::string item;
    std::getline(ss, item, ',');
    if (!item.empty()) sizes.push_back(std::stoi(item));
  }
  if (sizes.empty()) throw Error("--sizes must list at least one size");
  if (!std::is_sorted(sizes.begin(), sizes.end())) throw Error("--sizes must be ascending");

  const IGNModel model = IGNModel::random(5, 16, 1, 8, master_seed() + 1);
  ConvergenceOptions opts;
  opts.master_seed = master_seed();
  const auto points = convergence_experiment(wg, model, sizes, mode, seeds, opts);

  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  out << "model,mode,n,seed,error\n";
  for (const auto& pt : points)
    out << model_arg << "," << mode_arg << "," << pt.n << "," << pt.seed << ","
        << format_double(pt.error) << "\n";
  return 0;
}

int cmd_attention(int n, int d, int m, int seeds, const std::string& out_path) {
  std::ofstream file;
  std::ostream& out = open_out(file, out_path);
  out << "kind,n,m,seed,max_row_error\n";
  for (int s = 0; s < seeds; ++s) {
    Rng rng(master_seed() + static_cast<std::uint64_t>(s));
    Matrix x(n, d);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < d; ++j) x(i, j) = rng.normal();
    AttentionParams p;
    p.wq = Matrix(d, d);
    p.wk = Matrix(d, d);
    p.wv = Matrix(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        p.wq(i, j) = 0.5 * rng.normal();
        p.wk(i, j) = 0.5 * rng.normal();
        p.wv(i, j) = 0.5 * rng.normal();
      }

    for (const bool performer : {true, false}) {
      const FeatureMap phi = performer ? FeatureMap::performer(m, d, rng.next_u64())
                                       : FeatureMap::linear_transformer();
      const Matrix direct = linear_attention(x, p, phi);
      const VnState vn = vn_aggregate(x, p, phi);
      double worst = 0.0;
      for (int i = 0; i < n; ++i) {
        Vector xi(d);
        for (int j = 0; j < d; ++j) xi[j] = x(i, j);
        const Vector yi = gn_update(xi, vn, p, phi);
        double err = 0.0;
        for (int j = 0; j < d; ++j) err = std::max(err, std::abs(yi[j] - direct(i, j)));
        worst = std::max(worst, err);
      }
      out << (performer ? "performer" : "linear-transformer") << "," << n << ","
          << (performer ? m : d) << "," << s << "," << format_double(worst) << "\n";
    }
  }
  return 0;
}

int cmd_selftest() {
  Rng rng(master_seed() + 7);
  int failures = 0;
  const auto check = [&](bool ok, const std::string& name) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
    if (!ok) ++failures;
  };

  {
    bool ok = true;
    for (int trial = 0; trial < 50 && ok; ++trial) {
      const int n = 4 + static_cast<int>(rng.uniform_int(0, 12));
      std::vector<Edge> edges;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          // Dyadic weights keep every partial sum exact.
          if (rng.bernoulli(0.4)) edges.push_back({i, j, rng.uniform_int(1, 128) / 64.0});
        }
      if (edges.empty()) continue;
      const Graph g(n, std::move(edges));
      const SymmetricMatrix l = combinatorial_laplacian(g);
      const Vector ones(n, 1.0);
      const Vector l1 = multiply(l, ones);
      for (double v : l1) ok = ok && std::abs(v) == 0.0;
    }
    check(ok, "combinatorial Laplacian annihilates constants");
  }
  {
    bool ok = true;
    for (int trial = 0; trial < 20 && ok; ++trial) {
      const int n = 3 + static_cast<int>(rng.uniform_int(0, 17));
      SymmetricMatrix m(n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, rng.normal());
      const EigenDecomposition eig = sym_eig(m);
      Matrix recon(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double s = 0.0;
          for (int k = 0; k < n; ++k) s += eig.vectors(i, k) * eig.values[k] * eig.vectors(j, k);
          recon(i, j) = s;
        }
      ok = ok && max_abs_diff(recon, m.as_matrix()) <= 1e-8 * (1.0 + frobenius_norm(m));
    }
    check(ok, "Jacobi eigendecomposition reconstructs the input");
  }
  {
    bool ok = true;
    for (int trial = 0; trial < 20 && ok; ++trial) {
      const int n = 8 + static_cast<int>(rng.uniform_int(0, 12));
      std::vector<Edge> edges;
      for (int i = 1; i < n; ++i) edges.push_back({static_cast<int>(rng.uniform_int(0, i - 1)), i, 1.0});
      const Graph g(n, std::move(edges));
      Rng crng = rng.split();
      const CoarseningResult cr = coarsen(g, CoarsenMethod::HeavyEdge, 0.5, crng);
      const Matrix p = projection_matrix(cr.map);
      const Matrix pp = lift_matrix(cr.map);
      const Matrix prod = multiply(p, pp);
      ok = ok && max_abs_diff(prod, Matrix::identity(cr.coarse.n())) <= 1e-15;
    }
    check(ok, "P P+ = I on random coarsenings");
  }
  {
    bool ok = true;
    for (int trial = 0; trial < 10 && ok; ++trial) {
      const int n = 6 + static_cast<int>(rng.uniform_int(0, 10));
      Matrix x(n, 3);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < 3; ++j) x(i, j) = rng.normal();
      Matrix a(3, 2), b(3, 2);
      Vector c(2);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) {
          a(i, j) = rng.normal();
          b(i, j) = rng.normal();
        }
      c[0] = rng.normal();
      c[1] = rng.normal();
      ok = ok && max_abs_diff(mpnn_vn_deepsets(x, a, b, c), deepsets_layer(x, a, b, c)) <= 1e-14;
    }
    check(ok, "MPNN+VN simulates the equivariant DeepSets layer");
  }

  std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectrum-preserving graph coarsening and graph-limit lab"};
  app.require_subcommand(1);

  std::string dataset = "er", method = "heavy", losses = "quad", out_path, map_path, graph_out;
  std::string model = "sbm", mode = "ew-fixed", sizes = "32,64,128,256,512";
  int n = 512, k = 40, seeds = 1, m = 64, d = 4, max_iter = 5000;
  double ratio = 0.5, tol = 1e-9, target_scale = 2.0;

  auto* gen = app.add_subcommand("gen", "generate a synthetic graph");
  gen->add_option("--dataset", dataset, "er|ba|ws|geo or an edge-list path");
  gen->add_option("--n", n, "vertex count");
  gen->add_option("--out", out_path, "output edge-list path (default stdout)");

  auto* co = app.add_subcommand("coarsen", "coarsen a graph");
  co->add_option("--dataset", dataset);
  co->add_option("--n", n);
  co->add_option("--method", method, "bl|heavy|alg|aff|lve|lvn");
  co->add_option("--ratio", ratio, "fraction of vertices to remove");
  co->add_option("--out", out_path, "coarse edge-list output");
  co->add_option("--map-out", map_path, "vertex map output");

  auto* lo = app.add_subcommand("losses", "score coarse graphs against the original");
  lo->add_option("--dataset", dataset);
  lo->add_option("--n", n);
  lo->add_option("--method", method, "comma list of bl|heavy|alg|aff|lve|lvn");
  lo->add_option("--loss", losses, "comma list of quad|nquad|ray|eig|cond");
  lo->add_option("--ratio", ratio);
  lo->add_option("--k", k, "test-vector count");
  lo->add_option("--seeds", seeds);
  lo->add_option("--out", out_path);

  auto* op = app.add_subcommand("optimize", "align a coarse graph's spectrum by edge re-weighting");
  op->add_option("--dataset", dataset);
  op->add_option("--n", n);
  op->add_option("--method", method);
  op->add_option("--ratio", ratio);
  op->add_option("--target-scale", target_scale, "target = scale * current coarse spectrum");
  op->add_option("--tol", tol);
  op->add_option("--max-iter", max_iter);
  op->add_option("--out", out_path, "trace CSV output");
  op->add_option("--graph-out", graph_out, "re-weighted coarse graph output");

  auto* gc = app.add_subcommand("graphon-convergence", "IGN output drift across sample sizes");
  gc->add_option("--model", model, "er|sbm|lip|plip");
  gc->add_option("--mode", mode, "ew-fixed|ew-random|ep-raw|ep-smooth");
  gc->add_option("--sizes", sizes, "comma list, ascending");
  gc->add_option("--seeds", seeds);
  gc->add_option("--out", out_path);

  auto* at = app.add_subcommand("attention-check", "MPNN+VN vs linear attention equality");
  at->add_option("--n", n);
  at->add_option("--d", d);
  at->add_option("--m", m, "Performer feature count");
  at->add_option("--seeds", seeds);
  at->add_option("--out", out_path);

  app.add_subcommand("selftest", "run the property suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) return cmd_gen(dataset, n, out_path);
    if (co->parsed()) return cmd_coarsen(dataset, n, method, ratio, out_path, map_path);
    if (lo->parsed()) return cmd_losses(dataset, n, method, losses, ratio, k, seeds, out_path);
    if (op->parsed())
      return cmd_optimize(dataset, n, method, ratio, target_scale, tol, max_iter, out_path,
                          graph_out);
    if (gc->parsed()) return cmd_graphon(model, mode, sizes, seeds, out_path);
    if (at->parsed()) return cmd_attention(n, d, m, seeds, out_path);
    return cmd_selftest();
  } catch (const TargetTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const KTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const GenerationFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return 2;
  }
}
