#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <variant>

#include "spnt/errors.hpp"
#include "spnt/format.hpp"
#include "spnt/goldbach.hpp"
#include "spnt/kernels.hpp"
#include "spnt/lambda_sieve.hpp"
#include "spnt/metrics.hpp"
#include "spnt/pintz.hpp"
#include "spnt/smooth.hpp"

namespace spnt::cli {
namespace {

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_double(*d);
  return std::get<std::string>(c);
}

void write_csv(std::ostream& out, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& t) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (const double* d = std::get_if<double>(&row[i])) {
        // JSON has no NaN or infinity
        obj[t.columns[i]] = std::isfinite(*d) ? nlohmann::ordered_json(*d) : nlohmann::ordered_json();
      } else {
        obj[t.columns[i]] = std::get<std::string>(row[i]);
      }
    }
    rows.push_back(std::move(obj));
  }
  out << rows.dump(2) << '\n';
}

// Data goes to cfg.output when set (its path is echoed on `out`), else to `out`.
void emit(const RunConfig& cfg, const Table& t, std::ostream& out) {
  auto write = [&](std::ostream& os) {
    if (cfg.format == Format::Json) {
      write_json(os, t);
    } else {
      write_csv(os, t);
    }
  };
  if (cfg.output.empty()) {
    write(out);
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw ParseError("cannot write " + cfg.output);
  write(file);
  out << cfg.output << '\n';
}

std::uint64_t limit_for(const RunConfig& cfg, std::uint64_t needed) {
  if (cfg.table_limit == 0) return std::max<std::uint64_t>(needed, 2);
  if (cfg.table_limit < needed) {
    throw CapacityError("--limit " + std::to_string(cfg.table_limit) + " is below the " +
                        std::to_string(needed) + " this grid needs");
  }
  return cfg.table_limit;
}

LambdaTable table_for_grid(const RunConfig& cfg, const std::vector<double>& xs, std::ostream& err) {
  const double x_max = *std::max_element(xs.begin(), xs.end());
  const std::uint64_t limit = limit_for(cfg, smooth_cutoff(x_max, cfg.tol));
  err << "sieving Lambda(n) for n <= " << limit << '\n';
  return build_lambda(limit);
}

std::string complex_label(Complex s) {
  std::ostringstream os;
  os << format_double(s.real());
  if (s.imag() != 0.0) os << (s.imag() > 0 ? "+" : "") << format_double(s.imag()) << "i";
  return os.str();
}

}  // namespace

std::vector<double> GeometricGrid::values() const {
  std::vector<double> xs(static_cast<std::size_t>(points));
  if (points == 1) {
    xs[0] = start;
    return xs;
  }
  const double ratio = std::log(stop / start);
  for (int i = 0; i < points; ++i) {
    xs[static_cast<std::size_t>(i)] = start * std::exp(ratio * i / (points - 1));
  }
  xs.front() = start;
  xs.back() = stop;
  return xs;
}

GeometricGrid parse_grid(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw ParseError("bad --x value '" + text + "'");
    return v;
  };
  GeometricGrid g;
  const auto first = text.find(':');
  if (first == std::string::npos) {
    g.start = g.stop = number(text);
    g.points = 1;
    return g;
  }
  const auto second = text.find(':', first + 1);
  if (second == std::string::npos) throw ParseError("--x expects start:stop:points");
  g.start = number(text.substr(0, first));
  g.stop = number(text.substr(first + 1, second - first - 1));
  const double pts = number(text.substr(second + 1));
  if (pts != std::floor(pts) || pts < 1 || pts > 1e6) throw ParseError("--x points must be a positive integer");
  g.points = static_cast<int>(pts);
  return g;
}

void RunConfig::validate() const {
  if (!(x_grid.start >= 1.0) || !std::isfinite(x_grid.stop)) throw RangeError("--x start must be at least 1");
  if (x_grid.stop < x_grid.start) throw RangeError("--x stop must not be below start");
  if (x_grid.points < 1) throw RangeError("--x needs at least one point");
  if (!(tol > 0.0 && tol < 1.0)) throw RangeError("--tol must lie in (0, 1)");
  if (grid < 16) throw RangeError("--grid must be at least 16");
  if (count < 0) throw RangeError("--count must be non-negative");
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  RunConfig cfg;
  CLI::App app{"Smoothed prime sums, zeta zeros and related numerics"};
  app.require_subcommand(1);
  std::string x_text;
  std::string format = "csv";
  std::string constant = "derived";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--x", x_text, "Geometric grid start:stop:points");
    sub->add_option("--limit", cfg.table_limit, "Lambda table limit (default: from the grid)");
    sub->add_option("--zeros", cfg.zero_source, "Zero table path or 'builtin'");
    sub->add_option("--tol", cfg.tol, "Truncation tolerance");
    sub->add_option("--out", cfg.output, "Output file (default: standard output)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", cfg.seed, "Random seed (turan)");
    sub->add_option("--constant", constant, "Explicit-formula constant: paper or derived")
        ->check(CLI::IsMember({"paper", "derived"}));
    sub->add_option("--grid", cfg.grid, "Sample intervals for S and D");
  };

  struct Entry {
    const char* name;
    const char* help;
    Command command;
  };
  const Entry entries[] = {
      {"delta", "Psi(x), I(x), Delta(x) and the explicit-formula value", Command::Delta},
      {"metrics", "S, D, W and omega metrics over the x grid", Command::Metrics},
      {"goldbach", "Smoothed k-fold Goldbach sums F_k(x)", Command::Goldbach},
      {"zeros", "Locate zeta zeros on the critical line up to height T", Command::Zeros},
      {"pintz", "Mellin transform H(s) and the smoothing integral U(mu)", Command::Pintz},
      {"turan", "Random power-sum instances against the Turan bound", Command::Turan},
  };
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    common(sub);
    subs.emplace_back(sub, e.command);
  }
  subs[2].first->add_option("--k", cfg.k, "Number of summands (1 to 5)");
  subs[3].first->add_option("--T", cfg.T, "Height (10 to 1000)");
  subs[4].first->add_option("--mu", cfg.mu, "Center of the Gaussian on the log scale");
  subs[4].first->add_option("--k", cfg.width, "Gaussian width parameter");
  subs[5].first->add_option("--count", cfg.count, "Number of random instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ParseError(e.what());
  }
  for (const auto& [sub, command] : subs) {
    if (sub->parsed()) cfg.command = command;
  }
  if (!x_text.empty()) cfg.x_grid = parse_grid(x_text);
  cfg.format = format == "json" ? Format::Json : Format::Csv;
  cfg.constant = constant == "paper" ? ExplicitConstant::Paper : ExplicitConstant::Derived;
  return cfg;
}

ZeroSet resolve_zeros(const RunConfig& cfg) {
  std::string source = cfg.zero_source;
  if (source.empty()) {
    const char* env = std::getenv(kZerosEnv);
    source = env != nullptr && *env != '\0' ? env : "builtin";
  }
  if (source == "builtin") {
    ZeroSet z = builtin_zeros();
    if (z.empty()) throw EmptySetError("the bundled zero table is empty");
    return z;
  }
  return load_zeros(source);
}

int cmd_delta(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  const std::vector<double> xs = cfg.x_grid.values();
  const ZeroSet zeros = resolve_zeros(cfg);
  const LambdaTable table = table_for_grid(cfg, xs, err);
  Table t{{"x", "psi", "baseline", "delta", "cutoff", "tail_bound", "explicit_delta", "residual"}, {}};
  for (double x : xs) {
    const SmoothedPoint p = delta(table, x, cfg.tol);
    const double e = explicit_delta(x, zeros, cfg.constant);
    t.rows.push_back({x, p.psi, p.baseline, p.delta, static_cast<double>(p.cutoff), p.tail_bound, e, p.delta - e});
  }
  emit(cfg, t, out);
  return kExitOk;
}

int cmd_metrics(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  const std::vector<double> xs = cfg.x_grid.values();
  const ZeroSet zeros = resolve_zeros(cfg);
  const LambdaTable table = table_for_grid(cfg, xs, err);
  const DeltaFunction delta_fn = delta_function(table, cfg.tol);
  Table t{{"x", "psi", "baseline", "delta", "S", "D", "W", "omega", "omega_S", "omega_D", "omega_W",
           "psi_over_x"},
          {}};
  for (double x : xs) {
    const SmoothedPoint p = delta(table, x, cfg.tol);
    const SupAvgMetrics sd = sup_avg_metrics(delta_fn, x, cfg.grid);
    const double W = zero_sum_W(x, zeros);
    const double omega = x > 1.0 ? omega_zero(x, zeros) : std::nan("");
    const MetricsRow row = make_metrics_row(x, sd.sup, sd.avg.value, W, omega);
    t.rows.push_back({x, p.psi, p.baseline, p.delta, row.S, row.D, row.W, row.omega, row.omega_S,
                      row.omega_D, row.omega_W, p.psi / x});
  }
  emit(cfg, t, out);
  return kExitOk;
}

int cmd_goldbach(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  if (cfg.k < 1 || cfg.k > 5) throw RangeError("--k must lie in [1, 5]");
  const std::vector<double> xs = cfg.x_grid.values();
  const int k = cfg.k;
  constexpr std::uint64_t kContourN = 100;
  const double contour_r = std::exp(-1.0 / static_cast<double>(kContourN));

  std::uint64_t conv_limit = 2;
  for (double x : xs) conv_limit = std::max(conv_limit, Fk_required_limit(k, x, cfg.tol * std::pow(x, k)));
  std::uint64_t needed = std::max(conv_limit, smooth_cutoff(xs.back(), cfg.tol));
  if (k == 2) needed = std::max(needed, contour_cutoff(contour_r));
  const std::uint64_t limit = limit_for(cfg, needed);
  err << "sieving Lambda(n) for n <= " << limit << "; convolving to " << conv_limit << '\n';
  const LambdaTable table = build_lambda(limit);
  const ConvolutionTable conv = convolve_psik(table, k, conv_limit);

  Table t{{"x", "F_k", "psi_pow_k", "ratio_to_xk", "err_ratio"}, {}};
  for (double x : xs) {
    const double xk = std::pow(x, k);
    const FkValue F = smooth_Fk(conv, x, cfg.tol * xk);
    const double psi_k = std::pow(smooth_psi(table, x, cfg.tol).psi, k);
    t.rows.push_back({x, F.value, psi_k, F.value / xk, std::abs(F.value - xk) / std::pow(x, k - 0.5)});
  }
  emit(cfg, t, out);

  if (k == 2) {
    const ContourResult c =
        contour_extract(table, kContourN, contour_r, contour_min_nodes(kContourN, contour_r));
    const std::vector<double> direct = psi2_centered(table, kContourN);
    double sum = 0.0;
    for (double v : direct) sum += v;
    err << "contour check N=" << kContourN << ": quadrature " << format_double(c.value) << ", direct "
        << format_double(sum) << ", relative difference " << format_double(std::abs(c.value - sum) / std::abs(sum))
        << ", imaginary part " << format_double(c.imag) << '\n';
  }
  return kExitOk;
}

int cmd_zeros(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ZeroSet zeros = find_zeros(cfg.T);
  if (cfg.output.empty()) {
    write_zeros(out, zeros);
  } else {
    save_zeros(cfg.output, zeros);
    out << cfg.output << '\n';
  }
  err << zeros.size() << " zeros with 0 < gamma <= " << format_double(cfg.T)
      << "; Riemann-von Mangoldt estimate " << format_double(riemann_von_mangoldt(cfg.T)) << '\n';
  return kExitOk;
}

int cmd_pintz(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!(cfg.tol > 0.0 && cfg.tol < 1.0)) throw RangeError("--tol must lie in (0, 1)");
  const ZeroSet zeros = resolve_zeros(cfg);
  PintzParams p;
  p.mu = cfg.mu;
  p.k = cfg.width;
  p.rho0 = Complex(zeros.zeros()[0].beta, zeros.zeros()[0].gamma);
  p.validate();

  constexpr double kUpper = 1e3;
  const std::uint64_t needed = std::max(smooth_cutoff(kUpper, kDefaultSmoothTol),
                                        std::min(U_required_limit(p), kMaxLambdaLimit));
  const std::uint64_t limit = limit_for(cfg, needed);
  err << "sieving Lambda(n) for n <= " << limit << '\n';
  const LambdaTable table = build_lambda(limit);

  Table t{{"quantity", "re", "im", "error"}, {}};
  for (const Complex s : {Complex(2.0, 0.0), Complex(2.0, 1.0), Complex(2.0, 5.0)}) {
    const Complex closed = mellin_H_closed(s);
    const QuadratureValue q = mellin_H_quadrature(table, s, kUpper);
    t.rows.push_back({"H_closed(" + complex_label(s) + ")", closed.real(), closed.imag(), 0.0});
    t.rows.push_back({"H_quadrature(" + complex_label(s) + ")", q.value.real(), q.value.imag(), q.error});
  }
  const UValue ui = U_integral(table, p, std::max(cfg.tol, 1e-3));
  const UResidueValue ur = U_residue(zeros, p);
  t.rows.push_back({std::string("U_integral"), ui.value.real(), ui.value.imag(), ui.error});
  t.rows.push_back({std::string("U_residue"), ur.value.real(), ur.value.imag(), ur.remainder_bound});
  emit(cfg, t, out);
  err << "U relative difference " << format_double(std::abs(ui.value - ur.value) / std::abs(ur.value)) << '\n';
  return kExitOk;
}

int cmd_turan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  const auto instances = random_turan_instances(cfg.seed, cfg.count);
  const auto results = kernels::parallel_map<TuranResult>(instances.size(), [&](std::size_t i) {
    return turan_bound(instances[i].alphas, instances[i].a, instances[i].b);
  });
  Table t{{"index", "n", "a", "b", "grid_max", "bound", "holds"}, {}};
  std::size_t held = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const bool ok = results[i].grid_max >= 0.99 * results[i].bound;
    held += ok ? 1 : 0;
    t.rows.push_back({static_cast<double>(i), static_cast<double>(instances[i].alphas.size()), instances[i].a,
                      instances[i].b, results[i].grid_max, results[i].bound, ok ? 1.0 : 0.0});
  }
  emit(cfg, t, out);
  err << held << " of " << results.size() << " instances satisfy grid_max >= 0.99 bound\n";
  return held == results.size() ? kExitOk : kExitTolerance;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::Delta:
        return cmd_delta(cfg, out, err);
      case Command::Metrics:
        return cmd_metrics(cfg, out, err);
      case Command::Goldbach:
        return cmd_goldbach(cfg, out, err);
      case Command::Zeros:
        return cmd_zeros(cfg, out, err);
      case Command::Pintz:
        return cmd_pintz(cfg, out, err);
      case Command::Turan:
        return cmd_turan(cfg, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::Config:
        return kExitConfig;
      case ErrorKind::Capacity:
        return kExitCapacity;
      case ErrorKind::Tolerance:
        return kExitTolerance;
    }
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitCapacity;
  }
  return kExitConfig;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> cfg;
  try {
    cfg = parse_args(argc, argv, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  if (!cfg) return kExitOk;
  return run(*cfg, out, err);
}

}  // namespace spnt::cli
