#include "sgwt_cli.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sgwt/sgwt.hpp"

namespace sgwt::cli {
namespace {

using nlohmann::json;

struct DesignFlags {
  std::size_t J = 4;
  double K = 20.0;
  int alpha = 2;
  int beta = 2;
  double x1 = 1.0;
  double x2 = 2.0;
  std::vector<std::size_t> degrees{kDefaultDegree};
  double lambda_max = 0.0;  // 0: estimate from the graph
};

struct GraphFlags {
  std::string path;
  bool normalized = false;
};

void add_design_flags(CLI::App* cmd, DesignFlags& d) {
  cmd->add_option("-J,--scales", d.J, "Number of wavelet scales")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("-K,--K", d.K, "lambda_max / lambda_min")->capture_default_str();
  cmd->add_option("--alpha", d.alpha, "Kernel exponent below x1")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--beta", d.beta, "Kernel decay exponent above x2")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--x1", d.x1, "Kernel transition start")->capture_default_str();
  cmd->add_option("--x2", d.x2, "Kernel transition end")->capture_default_str();
  cmd->add_option("--lambda-max", d.lambda_max, "Spectrum upper bound; estimated from the graph when omitted")
      ->check(CLI::NonNegativeNumber);
}

void add_degree_flag(CLI::App* cmd, DesignFlags& d) {
  cmd->add_option("-M,--degree", d.degrees, "Chebyshev degree, one value or J+1 comma-separated values")
      ->delimiter(',')
      ->capture_default_str();
}

void add_graph_flags(CLI::App* cmd, GraphFlags& g, bool required) {
  auto* opt = cmd->add_option("-g,--graph", g.path, "Edge-list file");
  if (required) opt->required();
  cmd->add_flag("--normalized", g.normalized, "Use the normalized Laplacian");
}

std::shared_ptr<const LaplacianOperator> load_laplacian(const GraphFlags& g) {
  const auto graph = io::read_edge_list(std::filesystem::path(g.path));
  return std::make_shared<const LaplacianOperator>(
      laplacian(graph, g.normalized ? LaplacianKind::normalized : LaplacianKind::unnormalized));
}

struct Design {
  TransformDesign design;
  std::optional<SpectrumBound> bound;
};

Design make_design(const DesignFlags& d, const LaplacianOperator* L) {
  const auto kernel = KernelSpec::make(d.alpha, d.beta, d.x1, d.x2);
  Design out;
  double lmax = d.lambda_max;
  if (lmax <= 0.0) {
    if (L == nullptr) throw InvalidArgument("--lambda-max is required without --graph");
    out.bound = estimate_lambda_max(*L);
    lmax = out.bound->lambda_max;
  }
  out.design = TransformDesign::make(lmax, d.J, d.K, kernel);
  return out;
}

json design_json(const Design& d) {
  const auto& ds = d.design;
  json j{{"J", ds.J},
         {"K", ds.K},
         {"lambda_max", ds.lambda_max},
         {"lambda_min", ds.lambda_min},
         {"scales", ds.scales},
         {"kernel",
          {{"alpha", ds.kernel.alpha},
           {"beta", ds.kernel.beta},
           {"x1", ds.kernel.x1},
           {"x2", ds.kernel.x2},
           {"spline", ds.kernel.spline}}},
         {"gamma", ds.scaling.gamma}};
  if (d.bound) {
    j["lambda_max_estimate"] = {{"estimate", d.bound->estimate},
                                {"bound", d.bound->lambda_max},
                                {"iterations", d.bound->iterations},
                                {"converged", d.bound->converged}};
  }
  return j;
}

json transform_json(const PreparedTransform& pt) {
  const auto fb = pt.polynomial_frame_bounds();
  const auto grid = frame_bounds_grid(pt.design());
  return {{"degrees", pt.degrees()},
          {"band_sup_errors", pt.band_sup_errors()},
          {"frame_bounds", {{"A", grid.A}, {"B", grid.B}}},
          {"polynomial_frame_bounds", {{"A", fb.A}, {"B", fb.B}}}};
}

std::string summary_path(const std::string& explicit_path, const std::string& output) {
  return explicit_path.empty() ? output + ".json" : explicit_path;
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw DataError("write failed: " + path);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path);
  return out;
}

double norm(std::span<const double> f) {
  double s = 0.0;
  for (double x : f) s += x * x;
  return std::sqrt(s);
}

void warn_if_unconverged(const Design& d, std::ostream& err) {
  if (d.bound && !d.bound->converged) {
    err << "warning: power iteration hit its iteration limit; lambda_max bound uses the best estimate\n";
  }
}

// build-graph ---------------------------------------------------------------

struct BuildGraphCmd {
  std::string points, mask, edges, output, points_out, summary;
  std::size_t swissroll = 0;
  double sigma = 0.0;
  std::optional<double> threshold;
  std::uint64_t seed = 1;

  void setup(CLI::App& app) {
    auto* cmd = app.add_subcommand("build-graph", "Build a weighted graph and write it as an edge list");
    auto* src = cmd->add_option_group("source");
    src->add_option("--points", points, "Point-cloud CSV (Gaussian weights)");
    src->add_option("--mask", mask, "Grid mask (PGM or 0/1 text, 4-connectivity)");
    src->add_option("--edges", edges, "Edge-list file to validate and canonicalize");
    src->add_option("--swissroll", swissroll, "Sample this many Swiss-roll points")->check(CLI::PositiveNumber);
    src->require_option(1);
    cmd->add_option("--sigma", sigma, "Gaussian kernel width (point clouds; Swiss roll default 0.1)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threshold", threshold, "Drop point-cloud edges lighter than this");
    cmd->add_option("--seed", seed, "Swiss-roll sampler seed")->capture_default_str();
    cmd->add_option("-o,--output", output, "Edge-list output")->required();
    cmd->add_option("--points-out", points_out, "Also write sampled Swiss-roll coordinates");
    cmd->add_option("--summary", summary, "Run summary JSON (default <output>.json)");
    cmd->callback([this] { run(); });
  }

  void run() {
    std::optional<WeightedGraph> g;
    json source;
    if (!points.empty()) {
      if (sigma <= 0.0) throw InvalidArgument("--sigma is required with --points");
      g = build_from_point_cloud(io::read_point_cloud(std::filesystem::path(points)), sigma, threshold);
      source = {{"kind", "points"}, {"path", points}, {"sigma", sigma}};
    } else if (!mask.empty()) {
      g = build_from_grid_mask(io::read_grid_mask(std::filesystem::path(mask)));
      source = {{"kind", "mask"}, {"path", mask}};
    } else if (!edges.empty()) {
      g = io::read_edge_list(std::filesystem::path(edges));
      source = {{"kind", "edges"}, {"path", edges}};
    } else {
      const double s = sigma > 0.0 ? sigma : 0.1;
      Rng rng(seed);
      const auto cloud = sample_swiss_roll(swissroll, rng);
      if (!points_out.empty()) io::write_point_cloud(points_out, cloud);
      g = build_from_point_cloud(cloud, s, threshold);
      source = {{"kind", "swissroll"}, {"count", swissroll}, {"sigma", s}, {"seed", seed}};
    }
    if (threshold) source["threshold"] = *threshold;
    io::write_edge_list(std::filesystem::path(output), *g);
    write_json(summary_path(summary, output), {{"command", "build-graph"},
                                               {"source", source},
                                               {"vertices", g->num_vertices()},
                                               {"edges", g->num_edges()},
                                               {"components", connected_components(*g)}});
  }
};

// forward -------------------------------------------------------------------

struct ForwardCmd {
  GraphFlags graph;
  DesignFlags design;
  std::string signal, output, summary;
  std::ostream* err = nullptr;

  void setup(CLI::App& app) {
    auto* cmd = app.add_subcommand("forward", "Fast forward transform of a signal");
    add_graph_flags(cmd, graph, true);
    add_design_flags(cmd, design);
    add_degree_flag(cmd, design);
    cmd->add_option("-s,--signal", signal, "Signal file, one value per vertex")->required();
    cmd->add_option("-o,--output", output, "Coefficients (.csv, or .bin/.sgwt for binary)")->required();
    cmd->add_option("--summary", summary, "Run summary JSON (default <output>.json)");
    cmd->callback([this] { run(); });
  }

  void run() {
    const auto L = load_laplacian(graph);
    const auto f = io::read_signal(std::filesystem::path(signal));
    if (f.size() != L->size()) {
      throw DataError(signal + ": signal has " + std::to_string(f.size()) + " values, graph has " +
                      std::to_string(L->size()) + " vertices");
    }
    const auto d = make_design(design, L.get());
    warn_if_unconverged(d, *err);
    const auto pt = prepare(d.design, L, design.degrees);
    L->reset_matvec_count();
    const auto c = forward(pt, f);
    io::write_coefficients(output, c);

    json s{{"command", "forward"},
           {"graph", graph.path},
           {"laplacian", graph.normalized ? "normalized" : "unnormalized"},
           {"vertices", L->size()},
           {"signal_norm", norm(f)},
           {"matvecs", L->matvec_count()},
           {"design", design_json(d)}};
    s.update(transform_json(pt));
    std::vector<double> error_bounds;
    for (double b : pt.band_sup_errors()) error_bounds.push_back(b * norm(f));
    s["error_bounds"] = error_bounds;
    write_json(summary_path(summary, output), s);
  }
};

// inverse -------------------------------------------------------------------

struct InverseCmd {
  GraphFlags graph;
  DesignFlags design;
  CgOptions cg;
  std::string coefficients, output, reference, summary;
  std::ostream* err = nullptr;
  int status = kOk;

  void setup(CLI::App& app) {
    auto* cmd = app.add_subcommand("inverse", "Least-squares reconstruction from coefficients");
    add_graph_flags(cmd, graph, true);
    add_design_flags(cmd, design);
    add_degree_flag(cmd, design);
    cmd->add_option("-c,--coefficients", coefficients, "Coefficient file from `forward`")->required();
    cmd->add_option("-o,--output", output, "Reconstructed signal")->required();
    cmd->add_option("--reference", reference, "Original signal; reports the relative error");
    cmd->add_option("--cg-tol", cg.tol, "Relative residual tolerance")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--cg-max-iter", cg.max_iter, "Iteration limit")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--summary", summary, "Run summary JSON (default <output>.json)");
    cmd->callback([this] { run(); });
  }

  void run() {
    const auto L = load_laplacian(graph);
    const auto c = io::read_coefficients(std::filesystem::path(coefficients));
    if (c.num_vertices() != L->size()) {
      throw DataError(coefficients + ": coefficients cover " + std::to_string(c.num_vertices()) +
                      " vertices, graph has " + std::to_string(L->size()));
    }
    if (c.num_scales() != design.J) {
      throw DataError(coefficients + ": file holds J = " + std::to_string(c.num_scales()) +
                      " scales, design has J = " + std::to_string(design.J));
    }
    const auto d = make_design(design, L.get());
    warn_if_unconverged(d, *err);
    const auto pt = prepare(d.design, L, design.degrees);
    const auto rec = pseudoinverse(pt, c, cg);
    io::write_signal(output, rec.signal);
    for (const auto& w : rec.warnings) *err << "warning: " << w << '\n';

    json s{{"command", "inverse"},
           {"graph", graph.path},
           {"laplacian", graph.normalized ? "normalized" : "unnormalized"},
           {"vertices", L->size()},
           {"design", design_json(d)},
           {"cg",
            {{"tol", cg.tol},
             {"max_iter", cg.max_iter},
             {"iterations", rec.iterations},
             {"relative_residual", rec.relative_residual},
             {"converged", rec.converged}}},
           {"warnings", rec.warnings}};
    s.update(transform_json(pt));
    if (!reference.empty()) {
      const auto f = io::read_signal(std::filesystem::path(reference));
      if (f.size() != rec.signal.size()) throw DataError(reference + ": length does not match the graph");
      std::vector<double> diff(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) diff[i] = rec.signal[i] - f[i];
      const double nf = norm(f);
      s["reconstruction_error"] = nf > 0.0 ? norm(diff) / nf : norm(diff);
    }
    write_json(summary_path(summary, output), s);
    if (!rec.converged) {
      *err << "error: conjugate gradients did not converge in " << rec.iterations
           << " iterations (relative residual " << rec.relative_residual << ")\n";
      status = kNumerical;
    }
  }
};

// framebounds ---------------------------------------------------------------

struct FrameBoundsCmd {
  GraphFlags graph;
  DesignFlags design;
  std::size_t samples = 10000;
  bool exact = false;
  std::string summary;
  std::ostream* out = nullptr;

  void setup(CLI::App& app) {
    auto* cmd = app.add_subcommand("framebounds", "Frame bounds A, B of the design");
    add_graph_flags(cmd, graph, false);
    add_design_flags(cmd, design);
    cmd->add_option("--samples", samples, "Grid points on [0, lambda_max]")->check(CLI::Range(2, 100000000))->capture_default_str();
    cmd->add_flag("--exact", exact, "Also evaluate G on the true spectrum (needs --graph, dense eigensolver)");
    cmd->add_option("--summary", summary, "Write the result as JSON");
    cmd->callback([this] { run(); });
  }

  void run() {
    std::shared_ptr<const LaplacianOperator> L;
    if (!graph.path.empty()) L = load_laplacian(graph);
    if (exact && !L) throw InvalidArgument("--exact needs --graph");
    const auto d = make_design(design, L.get());
    const auto grid = frame_bounds_grid(d.design, samples);
    *out << "grid A " << io::format_double(grid.A) << "\n";
    *out << "grid B " << io::format_double(grid.B) << "\n";
    *out << "grid B/A " << io::format_double(grid.B / grid.A) << "\n";
    json s{{"command", "framebounds"},
           {"design", design_json(d)},
           {"samples", samples},
           {"grid", {{"A", grid.A}, {"B", grid.B}, {"ratio", grid.B / grid.A}}}};
    if (exact) {
      const auto eig = full_eigendecomposition(*L);
      const auto fb = frame_bounds_exact(d.design, eig.eigenvalues);
      *out << "exact A " << io::format_double(fb.A) << "\n";
      *out << "exact B " << io::format_double(fb.B) << "\n";
      s["exact"] = {{"A", fb.A}, {"B", fb.B}, {"lambda_top", eig.eigenvalues.back()}};
    }
    if (!summary.empty()) write_json(summary, s);
  }
};

// kernel-table --------------------------------------------------------------

struct KernelTableCmd {
  DesignFlags design;
  std::size_t points = 1000;
  std::string output;

  void setup(CLI::App& app) {
    auto* cmd = app.add_subcommand("kernel-table", "CSV of h, g(t_j x) and G on [0, lambda_max]");
    add_design_flags(cmd, design);
    cmd->add_option("--points", points, "Rows")->check(CLI::Range(2, 100000000))->capture_default_str();
    cmd->add_option("-o,--output", output, "CSV output")->required();
    cmd->callback([this] { run(); });
  }

  void run() {
    const auto d = make_design(design, nullptr).design;
    auto out = open_output(output);
    out << "x,h";
    for (std::size_t j = 1; j <= d.J; ++j) out << ",g_" << j;
    out << ",G\n";
    for (std::size_t i = 0; i < points; ++i) {
      const double x = d.lambda_max * static_cast<double>(i) / static_cast<double>(points - 1);
      out << io::format_double(x);
      for (std::size_t b = 0; b < d.num_bands(); ++b) out << ',' << io::format_double(d.band_kernel(b, x));
      out << ',' << io::format_double(partition_function(d, x)) << '\n';
    }
  }
};

// cheb-table ----------------------------------------------------------------

struct ChebTableCmd {
  DesignFlags design;
  double scale = 1.0;
  std::size_t degree = 20;
  std::size_t points = 1000;
  std::string output, summary;

  void setup(CLI::App& app) {
    auto* cmd = app.add_subcommand("cheb-table", "CSV comparing g(t x) with its Chebyshev expansion");
    design.lambda_max = 10.0;
    add_design_flags(cmd, design);
    cmd->add_option("-t,--scale", scale, "Wavelet scale t")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("-M,--degree", degree, "Expansion degree")->capture_default_str();
    cmd->add_option("--points", points, "Rows")->check(CLI::Range(2, 100000000))->capture_default_str();
    cmd->add_option("-o,--output", output, "CSV output")->required();
    cmd->add_option("--summary", summary, "Run summary JSON (default <output>.json)");
    cmd->callback([this] { run(); });
  }

  void run() {
    if (design.lambda_max <= 0.0) throw InvalidArgument("--lambda-max must be positive");
    const auto kernel = KernelSpec::make(design.alpha, design.beta, design.x1, design.x2);
    const ScalarFunction func = [&](double x) { return kernel(scale * x); };
    const auto p = compute_coefficients(func, degree, design.lambda_max);
    auto out = open_output(output);
    out << "x,g,p,error\n";
    for (std::size_t i = 0; i < points; ++i) {
      const double x = design.lambda_max * static_cast<double>(i) / static_cast<double>(points - 1);
      const double g = func(x);
      const double v = eval_scalar(p, x);
      out << io::format_double(x) << ',' << io::format_double(g) << ',' << io::format_double(v) << ','
          << io::format_double(v - g) << '\n';
    }
    const auto c = p.coefficients();
    write_json(summary_path(summary, output), {{"command", "cheb-table"},
                                               {"lambda_max", design.lambda_max},
                                               {"scale", scale},
                                               {"degree", degree},
                                               {"sup_error", sup_error(p, func)},
                                               {"coefficients", std::vector<double>(c.begin(), c.end())}});
  }
};

// eig -----------------------------------------------------------------------

struct EigCmd {
  GraphFlags graph;
  std::size_t max_vertices = kDefaultOracleLimit;
  std::string output, vectors;

  void setup(CLI::App& app) {
    auto* cmd = app.add_subcommand("eig", "Dense eigendecomposition of the Laplacian (small graphs)");
    add_graph_flags(cmd, graph, true);
    cmd->add_option("--max-vertices", max_vertices, "Refuse larger graphs")->capture_default_str();
    cmd->add_option("-o,--output", output, "CSV of index,eigenvalue")->required();
    cmd->add_option("--vectors", vectors, "CSV of eigenvectors, one row per eigenvalue");
    cmd->callback([this] { run(); });
  }

  void run() {
    const auto L = load_laplacian(graph);
    const auto eig = full_eigendecomposition(*L, max_vertices);
    auto out = open_output(output);
    out << "index,eigenvalue\n";
    for (std::size_t l = 0; l < eig.n; ++l) out << l << ',' << io::format_double(eig.eigenvalues[l]) << '\n';
    if (!vectors.empty()) {
      auto vout = open_output(vectors);
      for (std::size_t l = 0; l < eig.n; ++l) {
        const auto chi = eig.eigenvector(l);
        for (std::size_t m = 0; m < eig.n; ++m) vout << (m ? "," : "") << io::format_double(chi[m]);
        vout << '\n';
      }
    }
  }
};

// gen-signal ----------------------------------------------------------------

struct GenSignalCmd {
  GraphFlags graph;
  std::size_t vertices = 0;
  std::string kind = "normal";
  std::size_t vertex = 0;
  std::uint64_t seed = 1;
  std::string output;

  void setup(CLI::App& app) {
    auto* cmd = app.add_subcommand("gen-signal", "Write a synthetic signal");
    auto* size = cmd->add_option_group("size");
    size->add_option("-g,--graph", graph.path, "Take N from this edge-list file");
    size->add_option("-n,--vertices", vertices, "Number of vertices")->check(CLI::PositiveNumber);
    size->require_option(1);
    cmd->add_option("--kind", kind, "normal, delta or constant")
        ->check(CLI::IsMember({"normal", "delta", "constant"}))
        ->capture_default_str();
    cmd->add_option("--vertex", vertex, "Vertex of the delta")->capture_default_str();
    cmd->add_option("--seed", seed, "Seed for --kind normal")->capture_default_str();
    cmd->add_option("-o,--output", output, "Signal file")->required();
    cmd->callback([this] { run(); });
  }

  void run() {
    const std::size_t n =
        graph.path.empty() ? vertices : io::read_edge_list(std::filesystem::path(graph.path)).num_vertices();
    std::vector<double> f(n, 0.0);
    if (kind == "normal") {
      Rng rng(seed);
      for (double& x : f) x = rng.normal();
    } else if (kind == "delta") {
      if (vertex >= n) throw InvalidArgument("--vertex out of range");
      f[vertex] = 1.0;
    } else {
      f.assign(n, 1.0);
    }
    io::write_signal(output, f);
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral graph wavelet transform", "sgwt"};
  app.set_config("--config", "", "TOML or INI file with option defaults (flags take precedence)");
  app.require_subcommand(1);
  app.fallthrough(false);

  BuildGraphCmd build_graph;
  ForwardCmd forward_cmd;
  InverseCmd inverse_cmd;
  FrameBoundsCmd frame_bounds;
  KernelTableCmd kernel_table;
  ChebTableCmd cheb_table;
  EigCmd eig;
  GenSignalCmd gen_signal;
  forward_cmd.err = &err;
  inverse_cmd.err = &err;
  frame_bounds.out = &out;
  build_graph.setup(app);
  forward_cmd.setup(app);
  inverse_cmd.setup(app);
  frame_bounds.setup(app);
  kernel_table.setup(app);
  cheb_table.setup(app);
  eig.setup(app);
  gen_signal.setup(app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  }
  return inverse_cmd.status;
}

}  // namespace sgwt::cli
