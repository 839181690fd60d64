#include "cli_core.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lzbound/analytic.hpp"
#include "lzbound/approx.hpp"
#include "lzbound/errors.hpp"
#include "lzbound/model.hpp"
#include "lzbound/observables.hpp"
#include "lzbound/oracle.hpp"
#include "lzbound/specfun.hpp"
#include "lzbound/types.hpp"

namespace lzbound::cli {
namespace {

using nlohmann::ordered_json;

double parse_double(const std::string& text) {
  try {
    std::size_t pos = 0;
    double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InvalidParameter("not a number: '" + text + "'");
  }
}

long parse_count(const std::string& text) {
  try {
    std::size_t pos = 0;
    long v = std::stol(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InvalidParameter("not a count: '" + text + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

// One output cell: a number, a bare string, or nothing (absent value).
struct Cell {
  enum class Kind { number, text, empty } kind;
  double num = 0.0;
  std::string str;

  static Cell number(double v) { return {Kind::number, v, {}}; }
  static Cell text(std::string s) { return {Kind::text, 0.0, std::move(s)}; }
  static Cell none() { return {Kind::empty, 0.0, {}}; }
};

Cell maybe(const std::optional<double>& v) {
  return v ? Cell::number(*v) : Cell::none();
}

class Table {
 public:
  explicit Table(std::vector<std::string> columns)
      : columns_(std::move(columns)) {}

  void add_row(std::vector<Cell> cells) { rows_.push_back(std::move(cells)); }

  std::string to_csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < columns_.size(); ++i)
      os << (i ? "," : "") << columns_[i];
    os << '\n';
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << ',';
        switch (row[i].kind) {
          case Cell::Kind::number: os << format_double(row[i].num); break;
          case Cell::Kind::text: os << row[i].str; break;
          case Cell::Kind::empty: break;
        }
      }
      os << '\n';
    }
    return os.str();
  }

  std::string to_json() const {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows_) {
      ordered_json obj = ordered_json::object();
      for (std::size_t i = 0; i < row.size(); ++i) {
        switch (row[i].kind) {
          case Cell::Kind::number: obj[columns_[i]] = row[i].num; break;
          case Cell::Kind::text: obj[columns_[i]] = row[i].str; break;
          case Cell::Kind::empty: obj[columns_[i]] = nullptr; break;
        }
      }
      arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

int emit(const std::string& payload, const std::string& out_path,
         std::ostream& out, std::ostream& err) {
  if (out_path.empty()) {
    out << payload;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  file << payload;
  file.flush();
  if (!file.good()) {
    err << "lzb: cannot write '" << out_path << "'\n";
    return 2;
  }
  return 0;
}

Solver parse_solver(const std::string& text) {
  if (text == "analytic") return Solver::analytic;
  if (text == "oracle") return Solver::oracle;
  throw InvalidParameter("unknown solver '" + text + "'");
}

// Shared option bundle; each subcommand registers the subset it needs.
struct Options {
  std::string paths = "A";
  std::string x0 = "";
  std::string z0 = "";
  std::string T = "";
  int samples = 101;
  std::string solver = "analytic";
  std::string format = "csv";
  std::string out_path = "";
  double zero_tol = 1e-4;
  double threshold = 1e-8;
  long max_terms = 1000000;
  double series_rel_tol = 1e-14;
  double regime_radius = 6.0;
  double ode_rel_tol = 1e-11;
  double ode_abs_tol = 1e-13;

  SeriesControl series_control() const {
    SeriesControl ctl;
    ctl.max_terms = static_cast<int>(max_terms);
    ctl.rel_tol = series_rel_tol;
    ctl.regime_radius = regime_radius;
    return ctl;
  }

  IntegratorControl integrator_control() const {
    IntegratorControl ctl;
    ctl.rel_tol = ode_rel_tol;
    ctl.abs_tol = ode_abs_tol;
    return ctl;
  }
};

void add_sweep_options(CLI::App* cmd, Options& opt, bool need_time) {
  cmd->add_option("--path", opt.paths, "path variants, e.g. A or A,B,C")
      ->capture_default_str();
  cmd->add_option("--x0", opt.x0,
                  "transverse endpoint: value, list, or range "
                  "(start:end:count, start:end:log:count)")
      ->required();
  cmd->add_option("--z0", opt.z0, "longitudinal endpoint: value, list, or range")
      ->required();
  if (need_time)
    cmd->add_option("--T", opt.T, "total sweep time: value, list, or range")
        ->required();
}

void add_output_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opt.out_path, "write to file instead of stdout");
}

void add_tolerance_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--max-terms", opt.max_terms, "series term budget")
      ->capture_default_str();
  cmd->add_option("--series-rel-tol", opt.series_rel_tol,
                  "series termination tolerance")
      ->capture_default_str();
  cmd->add_option("--ode-rel-tol", opt.ode_rel_tol,
                  "integrator relative tolerance")
      ->capture_default_str();
  cmd->add_option("--ode-abs-tol", opt.ode_abs_tol,
                  "integrator absolute tolerance")
      ->capture_default_str();
}

struct Sweep {
  std::vector<PathVariant> paths;
  std::vector<double> x0s;
  std::vector<double> z0s;
  std::vector<double> Ts;
};

Sweep make_sweep(const Options& opt, bool need_time) {
  Sweep sweep;
  sweep.paths = parse_paths(opt.paths);
  sweep.x0s = parse_range(opt.x0);
  sweep.z0s = parse_range(opt.z0);
  if (need_time) sweep.Ts = parse_range(opt.T);
  // Surface bad endpoint combinations before any computation starts.
  for (auto variant : sweep.paths)
    for (double x0 : sweep.x0s)
      for (double z0 : sweep.z0s)
        for (double T : need_time ? sweep.Ts : std::vector<double>{1.0})
          PathSpec(variant, x0, z0, T);
  return sweep;
}

int run_evolve(const Options& opt, std::ostream& out, std::ostream& err) {
  Sweep sweep;
  Solver solver;
  try {
    sweep = make_sweep(opt, true);
    solver = parse_solver(opt.solver);
    if (opt.samples < 2) throw InvalidParameter("--samples must be >= 2");
  } catch (const Error& e) {
    err << "lzb: " << e.what() << '\n';
    return 2;
  }

  Table table({"path", "x0", "z0", "T", "t", "a0_re", "a0_im", "a1_re",
               "a1_im", "infidelity", "solver"});
  try {
    for (auto variant : sweep.paths)
      for (double x0 : sweep.x0s)
        for (double z0 : sweep.z0s)
          for (double T : sweep.Ts) {
            PathSpec spec(variant, x0, z0, T);
            EvolutionSeries series =
                evolve_series(spec, opt.samples, solver, opt.series_control(),
                              opt.integrator_control());
            for (std::size_t i = 0; i < series.t.size(); ++i) {
              const AmplitudePair& amp = series.amplitudes[i];
              table.add_row({Cell::text(variant_name(variant)),
                             Cell::number(x0), Cell::number(z0),
                             Cell::number(T), Cell::number(series.t[i]),
                             Cell::number(amp.a0.real()),
                             Cell::number(amp.a0.imag()),
                             Cell::number(amp.a1.real()),
                             Cell::number(amp.a1.imag()),
                             Cell::number(series.infidelity[i]),
                             Cell::text(series.solver)});
            }
          }
  } catch (const Error& e) {
    err << "lzb: " << e.what() << '\n';
    return 3;
  }
  return emit(opt.format == "json" ? table.to_json() : table.to_csv(),
              opt.out_path, out, err);
}

int run_final(const Options& opt, std::ostream& out, std::ostream& err) {
  Sweep sweep;
  Solver solver;
  try {
    sweep = make_sweep(opt, true);
    solver = parse_solver(opt.solver);
  } catch (const Error& e) {
    err << "lzb: " << e.what() << '\n';
    return 2;
  }

  Table table({"path", "x0", "z0", "T", "I_exact", "I_LZ", "I_APT",
               "APT_envelope", "T_minus", "T_plus", "T_c"});
  try {
    for (auto variant : sweep.paths)
      for (double x0 : sweep.x0s)
        for (double z0 : sweep.z0s)
          for (double T : sweep.Ts) {
            PathSpec spec(variant, x0, z0, T);
            double exact = final_infidelity(spec, solver, opt.series_control(),
                                            opt.integrator_control());
            ApproximationReport rep = approximation_report(spec);
            std::optional<double> t_minus, t_plus;
            if (rep.lz_window) {
              t_minus = rep.lz_window->t_minus;
              t_plus = rep.lz_window->t_plus;
            }
            table.add_row({Cell::text(variant_name(variant)), Cell::number(x0),
                           Cell::number(z0), Cell::number(T),
                           Cell::number(exact), maybe(rep.lz_value),
                           Cell::number(rep.apt_value),
                           Cell::number(rep.apt_env), maybe(t_minus),
                           maybe(t_plus), maybe(rep.t_cross)});
          }
  } catch (const Error& e) {
    err << "lzb: " << e.what() << '\n';
    return 3;
  }
  return emit(opt.format == "json" ? table.to_json() : table.to_csv(),
              opt.out_path, out, err);
}

int run_zeros(const Options& opt, std::ostream& out, std::ostream& err) {
  Sweep sweep;
  Solver solver;
  try {
    sweep = make_sweep(opt, true);
    solver = parse_solver(opt.solver);
    if (!(opt.zero_tol > 0.0))
      throw InvalidParameter("--zero-tol must be positive");
  } catch (const Error& e) {
    err << "lzb: " << e.what() << '\n';
    return 2;
  }

  Table table({"path", "x0", "z0", "T", "k", "t_k", "I_tk"});
  try {
    for (auto variant : sweep.paths)
      for (double x0 : sweep.x0s)
        for (double z0 : sweep.z0s)
          for (double T : sweep.Ts) {
            PathSpec spec(variant, x0, z0, T);
            ZeroList zeros = find_infidelity_zeros(spec, solver, opt.zero_tol);
            for (std::size_t k = 0; k < zeros.size(); ++k)
              table.add_row({Cell::text(variant_name(variant)),
                             Cell::number(x0), Cell::number(z0),
                             Cell::number(T),
                             Cell::number(static_cast<double>(k)),
                             Cell::number(zeros[k].t),
                             Cell::number(zeros[k].value)});
          }
  } catch (const Error& e) {
    err << "lzb: " << e.what() << '\n';
    return 3;
  }
  return emit(opt.format == "json" ? table.to_json() : table.to_csv(),
              opt.out_path, out, err);
}

int run_crossover(const Options& opt, std::ostream& out, std::ostream& err) {
  std::vector<double> x0s, z0s;
  try {
    x0s = parse_range(opt.x0);
    z0s = parse_range(opt.z0);
    for (double x0 : x0s)
      for (double z0 : z0s)
        if (!(x0 > 0.0) || !(z0 > 0.0))
          throw InvalidParameter("endpoints must be positive");
  } catch (const Error& e) {
    err << "lzb: " << e.what() << '\n';
    return 2;
  }

  Table table({"x0", "z0", "T_minus", "T_plus", "T_c"});
  try {
    for (double x0 : x0s)
      for (double z0 : z0s) {
        std::optional<LZWindow> window = lz_validity_window(x0, z0);
        std::optional<double> t_minus, t_plus;
        if (window) {
          t_minus = window->t_minus;
          t_plus = window->t_plus;
        }
        table.add_row({Cell::number(x0), Cell::number(z0), maybe(t_minus),
                       maybe(t_plus), maybe(crossover_time(x0, z0))});
      }
  } catch (const Error& e) {
    err << "lzb: " << e.what() << '\n';
    return 3;
  }
  return emit(opt.format == "json" ? table.to_json() : table.to_csv(),
              opt.out_path, out, err);
}

double integer_distance(double x) { return std::abs(x - std::round(x)); }

// Both parabolic-cylinder solutions D_eta(+-xi) against their exact
// Wronskian sqrt(2 pi) / Gamma(-eta); returns the max relative residual.
double parabolic_wronskian_residual(int draws, std::mt19937& rng) {
  std::uniform_real_distribution<double> box(-3.5, 3.5);
  const double sqrt_2pi = std::sqrt(8.0 * std::atan(1.0));
  double worst = 0.0;
  for (int i = 0; i < draws; ++i) {
    Cd eta(box(rng), box(rng));
    if (integer_distance(eta.real()) < 0.2 && std::abs(eta.imag()) < 0.2) {
      --i;
      continue;
    }
    Cd xi(box(rng), box(rng));
    if (std::abs(xi) < 0.2) {
      --i;
      continue;
    }
    Cd w = pcf_d(eta, xi) * (-pcf_d_derivative(eta, -xi)) -
           pcf_d_derivative(eta, xi) * pcf_d(eta, -xi);
    Cd ref = sqrt_2pi * reciprocal_gamma(-eta);
    worst = std::max(worst, std::abs(w - ref) / std::abs(ref));
  }
  return worst;
}

// The two hypergeometric solutions around z=1 against the closed-form
// Wronskian (a+b-c) (1-z)^(c-a-b-1) z^(-c); max relative residual.
double hypergeometric_wronskian_residual(int draws, std::mt19937& rng) {
  std::uniform_real_distribution<double> ab(-2.0, 2.0);
  std::uniform_real_distribution<double> dd(-1.5, 1.5);
  std::uniform_real_distribution<double> zz(0.25, 0.75);
  double worst = 0.0;
  for (int i = 0; i < draws; ++i) {
    Cd a(ab(rng), ab(rng));
    Cd b(ab(rng), ab(rng));
    Cd delta(dd(rng), dd(rng));  // delta = c - a - b
    if (integer_distance(delta.real()) < 0.25 && std::abs(delta.imag()) < 0.25) {
      --i;
      continue;
    }
    Cd c = a + b + delta;
    double z = zz(rng);
    double u = 1.0 - z;

    Cd f1 = gauss_2f1(a, b, 1.0 - delta, u);
    Cd df1 = gauss_2f1_dz(a, b, 1.0 - delta, u);
    Cd g = gauss_2f1(c - a, c - b, 1.0 + delta, u);
    Cd dg = gauss_2f1_dz(c - a, c - b, 1.0 + delta, u);

    Cd u_pow = std::pow(Cd(u, 0.0), delta);
    Cd w1 = f1;
    Cd w1p = -df1;
    Cd w2 = u_pow * g;
    Cd w2p = -(delta * std::pow(Cd(u, 0.0), delta - 1.0) * g + u_pow * dg);

    Cd wron = w1 * w2p - w1p * w2;
    Cd ref = -delta * std::pow(Cd(u, 0.0), delta - 1.0) *
             std::pow(Cd(z, 0.0), -c);
    worst = std::max(worst, std::abs(wron - ref) / std::abs(ref));
  }
  return worst;
}

int run_validate(const Options& opt, std::ostream& out, std::ostream& err) {
  Sweep sweep;
  try {
    sweep = make_sweep(opt, true);
    if (opt.samples < 2) throw InvalidParameter("--samples must be >= 2");
    if (!(opt.threshold > 0.0))
      throw InvalidParameter("--threshold must be positive");
  } catch (const Error& e) {
    err << "lzb: " << e.what() << '\n';
    return 2;
  }

  ordered_json report;
  report["samples"] = opt.samples;
  report["threshold"] = opt.threshold;
  ordered_json cases = ordered_json::array();
  double max_dev = 0.0;
  double max_drift = 0.0;
  double pcf_resid = 0.0;
  double hyp_resid = 0.0;
  try {
    for (auto variant : sweep.paths)
      for (double x0 : sweep.x0s)
        for (double z0 : sweep.z0s)
          for (double T : sweep.Ts) {
            PathSpec spec(variant, x0, z0, T);
            EvolutionSeries exact = evolve_series(
                spec, opt.samples, Solver::analytic, opt.series_control());
            EvolutionSeries ode =
                evolve_series(spec, opt.samples, Solver::oracle,
                              opt.series_control(), opt.integrator_control());
            double dev = compare_series(exact, ode);
            double drift = 0.0;
            for (const AmplitudePair& amp : ode.amplitudes)
              drift = std::max(drift, std::abs(amp.norm2() - 1.0));
            ordered_json entry;
            entry["path"] = variant_name(variant);
            entry["x0"] = x0;
            entry["z0"] = z0;
            entry["T"] = T;
            entry["max_infidelity_deviation"] = dev;
            entry["norm_drift"] = drift;
            cases.push_back(std::move(entry));
            max_dev = std::max(max_dev, dev);
            max_drift = std::max(max_drift, drift);
          }
    std::mt19937 rng(871225u);
    pcf_resid = parabolic_wronskian_residual(40, rng);
    hyp_resid = hypergeometric_wronskian_residual(40, rng);
  } catch (const Error& e) {
    err << "lzb: " << e.what() << '\n';
    return 3;
  }

  bool pass = max_dev <= opt.threshold && max_drift <= opt.threshold &&
              pcf_resid <= opt.threshold && hyp_resid <= opt.threshold;
  report["cases"] = std::move(cases);
  report["max_infidelity_deviation"] = max_dev;
  report["max_norm_drift"] = max_drift;
  report["wronskian_parabolic_max_residual"] = pcf_resid;
  report["wronskian_hypergeometric_max_residual"] = hyp_resid;
  report["pass"] = pass;

  int rc = emit(report.dump(2) + "\n", opt.out_path, out, err);
  if (rc != 0) return rc;
  return pass ? 0 : 1;
}

}  // namespace

std::vector<double> parse_range(const std::string& text) {
  if (text.empty()) throw InvalidParameter("empty range");
  if (text.find(',') != std::string::npos) {
    std::vector<double> values;
    for (const std::string& tok : split(text, ','))
      values.push_back(parse_double(tok));
    return values;
  }
  if (text.find(':') == std::string::npos) return {parse_double(text)};

  std::vector<std::string> parts = split(text, ':');
  bool log_spaced = parts.size() == 4 && parts[2] == "log";
  if (parts.size() != 3 && !log_spaced)
    throw InvalidParameter("bad range '" + text +
                           "' (want start:end:count or start:end:log:count)");
  double start = parse_double(parts[0]);
  double end = parse_double(parts[1]);
  long count = parse_count(parts.back());
  if (count < 1) throw InvalidParameter("range count must be >= 1");
  if (count == 1) return {start};
  std::vector<double> values(count);
  if (log_spaced) {
    if (!(start > 0.0) || !(end > 0.0))
      throw InvalidParameter("log range needs positive bounds");
    double ls = std::log(start), le = std::log(end);
    for (long i = 0; i < count; ++i)
      values[i] = std::exp(ls + (le - ls) * double(i) / double(count - 1));
  } else {
    for (long i = 0; i < count; ++i)
      values[i] = start + (end - start) * double(i) / double(count - 1);
  }
  values.front() = start;
  values.back() = end;
  return values;
}

std::vector<PathVariant> parse_paths(const std::string& text) {
  std::vector<PathVariant> variants;
  for (const std::string& tok : split(text, ',')) {
    if (tok == "A")
      variants.push_back(PathVariant::A);
    else if (tok == "B")
      variants.push_back(PathVariant::B);
    else if (tok == "C")
      variants.push_back(PathVariant::C);
    else
      throw InvalidParameter("unknown path '" + tok + "'");
  }
  if (variants.empty()) throw InvalidParameter("empty path list");
  return variants;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"driven two-level sweeps: exact evolution, adaptive oracle, "
               "asymptotic estimates"};
  app.require_subcommand(1);

  Options ev, fi, va, ze, cr;

  CLI::App* evolve = app.add_subcommand(
      "evolve", "sample amplitudes and infidelity along a sweep");
  add_sweep_options(evolve, ev, true);
  evolve->add_option("--samples", ev.samples, "points on the uniform grid")
      ->capture_default_str();
  evolve->add_option("--solver", ev.solver, "analytic or oracle")
      ->check(CLI::IsMember({"analytic", "oracle"}))
      ->capture_default_str();
  add_tolerance_options(evolve, ev);
  add_output_options(evolve, ev);

  CLI::App* fin = app.add_subcommand(
      "final", "endpoint infidelity with every comparison column");
  add_sweep_options(fin, fi, true);
  fi.solver = "oracle";
  fin->add_option("--solver", fi.solver, "analytic or oracle")
      ->check(CLI::IsMember({"analytic", "oracle"}))
      ->capture_default_str();
  add_tolerance_options(fin, fi);
  add_output_options(fin, fi);

  CLI::App* validate = app.add_subcommand(
      "validate", "cross-check analytic evolution against the oracle");
  va.paths = "A,B,C";
  va.x0 = "0.1,0.5";
  va.z0 = "0.25,1.0";
  va.T = "2,10";
  validate->add_option("--path", va.paths, "path variants")
      ->capture_default_str();
  validate->add_option("--x0", va.x0, "transverse endpoints")
      ->capture_default_str();
  validate->add_option("--z0", va.z0, "longitudinal endpoints")
      ->capture_default_str();
  validate->add_option("--T", va.T, "sweep times")->capture_default_str();
  validate->add_option("--samples", va.samples, "points per case")
      ->capture_default_str();
  validate->add_option("--threshold", va.threshold, "pass/fail threshold")
      ->capture_default_str();
  add_tolerance_options(validate, va);
  validate->add_option("--out", va.out_path, "write report to file");

  CLI::App* zeros = app.add_subcommand(
      "zeros", "times where the infidelity dips back to zero");
  add_sweep_options(zeros, ze, true);
  ze.solver = "analytic";
  zeros->add_option("--solver", ze.solver, "analytic or oracle")
      ->check(CLI::IsMember({"analytic", "oracle"}))
      ->capture_default_str();
  zeros->add_option("--zero-tol", ze.zero_tol, "report dips below this value")
      ->capture_default_str();
  add_tolerance_options(zeros, ze);
  add_output_options(zeros, ze);

  CLI::App* crossover = app.add_subcommand(
      "crossover", "exponential-accuracy window and crossover time");
  crossover->add_option("--x0", cr.x0, "transverse endpoints")->required();
  crossover->add_option("--z0", cr.z0, "longitudinal endpoints")->required();
  add_output_options(crossover, cr);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("lzb");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  if (evolve->parsed()) return run_evolve(ev, out, err);
  if (fin->parsed()) return run_final(fi, out, err);
  if (validate->parsed()) return run_validate(va, out, err);
  if (zeros->parsed()) return run_zeros(ze, out, err);
  if (crossover->parsed()) return run_crossover(cr, out, err);
  err << "lzb: no subcommand\n";
  return 2;
}

}  // namespace lzbound::cli
