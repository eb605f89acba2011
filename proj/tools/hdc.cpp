// hdc: exact and log-domain calculator for high-dimensional geometry.
//
// Command groups:
//   ball      unit-ball volumes, sphere areas, shell concentration
//   leak      the 2^N-balls-in-a-box construction and its volume ratio
//   centroid  exact simplex-skeleton centroids and coincidence tables
//   mc        seeded Monte Carlo verification of the closed forms
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hdc/ball.hpp"
#include "hdc/centroid.hpp"
#include "hdc/diophantine.hpp"
#include "hdc/exact.hpp"
#include "hdc/leakage.hpp"
#include "hdc/stochastic.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
  std::string format = "text";  // text | json | csv
  unsigned digits = 10;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000000;
  std::int64_t resource_cap = 2000;
};

std::string fixed_digits(double v, unsigned digits) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", static_cast<int>(digits), v);
  return buf;
}

// Plain decimal inside [1e-6, 1e6), scientific (straight from the log)
// outside, so underflowed magnitudes stay readable.
std::string value_string(const hdc::LogScaled& v, unsigned digits) {
  const auto conv = v.to_double_checked();
  const double a = std::fabs(conv.value);
  if (!conv.underflow && !conv.overflow && (conv.value == 0.0 ||
                                            (a >= 1e-6 && a < 1e6)))
    return fixed_digits(conv.value, digits);
  return v.sci_string(digits);
}

json log_scaled_json(const hdc::LogScaled& v) {
  json j;
  const auto conv = v.to_double_checked();
  if (!conv.underflow && !conv.overflow) j["value"] = conv.value;
  j["log_value"] = v.is_zero()
                       ? nullptr
                       : json(static_cast<double>(v.log_mag()));
  j["underflow"] = conv.underflow;
  j["overflow"] = conv.overflow;
  return j;
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// one scalar result in the chosen format
int emit_scalar(const RunConfig& cfg, const std::string& command,
                const json& params, const hdc::LogScaled& v) {
  if (cfg.format == "json") {
    json j = log_scaled_json(v);
    j["command"] = command;
    j["params"] = params;
    j["value_str"] = value_string(v, cfg.digits);
    emit_json(j);
  } else if (cfg.format == "csv") {
    std::cout << "command,value,log_value\n"
              << command << ',' << value_string(v, cfg.digits) << ','
              << (v.is_zero() ? std::string("")
                              : fixed_digits(static_cast<double>(v.log_mag()),
                                             cfg.digits))
              << "\n";
  } else {
    std::cout << value_string(v, cfg.digits) << "\n";
  }
  return 0;
}

int emit_plain(const RunConfig& cfg, const std::string& command,
               const json& params, double v) {
  if (cfg.format == "json") {
    json j;
    j["command"] = command;
    j["params"] = params;
    j["value"] = v;
    j["value_str"] = fixed_digits(v, cfg.digits);
    emit_json(j);
  } else if (cfg.format == "csv") {
    std::cout << "command,value\n"
              << command << ',' << fixed_digits(v, cfg.digits) << "\n";
  } else {
    std::cout << fixed_digits(v, cfg.digits) << "\n";
  }
  return 0;
}

void write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw hdc::domain_error("cannot open output file: " + path);
  os << content;
}

void check_cap(std::int64_t n, const RunConfig& cfg, const char* what) {
  if (n > cfg.resource_cap)
    throw hdc::domain_error(std::string(what) +
                            " exceeds --resource-cap (" +
                            std::to_string(cfg.resource_cap) + ")");
}

// --- mc result emission ----------------------------------------------------

struct Verdict {
  bool pass = true;
  std::string detail;
};

int emit_mc(const RunConfig& cfg, const std::string& command,
            const json& params, const std::vector<hdc::McEstimate>& coords,
            const std::vector<double>& references, const Verdict& verdict) {
  if (cfg.format == "json") {
    json j;
    j["command"] = command;
    j["params"] = params;
    json est = json::array();
    for (std::size_t i = 0; i < coords.size(); ++i) {
      json e;
      e["mean"] = coords[i].mean;
      e["std_error"] = coords[i].std_error;
      e["samples"] = coords[i].samples;
      e["seed"] = coords[i].seed;
      e["reference"] = references[i];
      est.push_back(e);
    }
    j["estimates"] = est;
    j["verdict"] = verdict.pass ? "PASS" : "FAIL";
    if (!verdict.detail.empty()) j["detail"] = verdict.detail;
    emit_json(j);
  } else if (cfg.format == "csv") {
    std::cout << "index,mean,std_error,samples,seed,reference,verdict\n";
    for (std::size_t i = 0; i < coords.size(); ++i)
      std::cout << i << ',' << fixed_digits(coords[i].mean, cfg.digits) << ','
                << fixed_digits(coords[i].std_error, cfg.digits) << ','
                << coords[i].samples << ',' << coords[i].seed << ','
                << fixed_digits(references[i], cfg.digits) << ','
                << (verdict.pass ? "PASS" : "FAIL") << "\n";
  } else {
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords.size() > 1) std::cout << "coord=" << (i + 1) << " ";
      std::cout << "mean=" << fixed_digits(coords[i].mean, cfg.digits)
                << " std_error="
                << fixed_digits(coords[i].std_error, cfg.digits)
                << " samples=" << coords[i].samples
                << " seed=" << coords[i].seed << " reference="
                << fixed_digits(references[i], cfg.digits) << "\n";
    }
    std::cout << "verdict=" << (verdict.pass ? "PASS" : "FAIL");
    if (!verdict.detail.empty()) std::cout << " (" << verdict.detail << ")";
    std::cout << "\n";
  }
  return verdict.pass ? 0 : 1;
}

Verdict three_sigma_verdict(const std::vector<hdc::McEstimate>& coords,
                            const std::vector<double>& references) {
  Verdict v;
  double worst = 0.0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const double dev = std::fabs(coords[i].mean - references[i]);
    if (coords[i].std_error == 0.0) {
      if (dev != 0.0) v.pass = false;
      continue;
    }
    const double z = dev / coords[i].std_error;
    worst = std::max(worst, z);
    if (z > 3.0) v.pass = false;
  }
  std::ostringstream os;
  os << "max |z| = " << worst;
  v.detail = os.str();
  return v;
}

// --- command implementations ------------------------------------------------

int cmd_ball_sweep(const RunConfig& cfg, std::int64_t max_n,
                   const std::string& emit_path) {
  check_cap(max_n, cfg, "--max-n");
  if (max_n < 1) throw hdc::domain_error("ball sweep: --max-n must be >= 1");
  if (cfg.format == "json") {
    json rows = json::array();
    for (std::int64_t n = 1; n <= max_n; ++n) {
      json r;
      r["N"] = n;
      r["omega"] = log_scaled_json(hdc::sphere_area(n));
      r["Omega"] = log_scaled_json(hdc::ball_volume(n));
      r["asymptotic"] = log_scaled_json(hdc::asymptotic_volume(n));
      r["prop5_bound"] = log_scaled_json(hdc::volume_decay_bound(n));
      rows.push_back(r);
    }
    json j;
    j["command"] = "ball.sweep";
    j["rows"] = rows;
    if (emit_path.empty()) {
      emit_json(j);
    } else {
      write_out(emit_path, j.dump(2) + "\n");
    }
    return 0;
  }
  std::ostringstream os;
  os << "N,omega,Omega,asymptotic,prop5_bound\n";
  for (std::int64_t n = 1; n <= max_n; ++n) {
    os << n << ',' << hdc::sphere_area(n).sci_string(cfg.digits) << ','
       << hdc::ball_volume(n).sci_string(cfg.digits) << ','
       << hdc::asymptotic_volume(n).sci_string(cfg.digits) << ','
       << hdc::volume_decay_bound(n).sci_string(cfg.digits) << "\n";
  }
  write_out(emit_path, os.str());
  return 0;
}

int cmd_leak_sweep(const RunConfig& cfg, std::int64_t max_n,
                   const std::string& emit_path) {
  check_cap(max_n, cfg, "--max-n");
  if (max_n < 2) throw hdc::domain_error("leak sweep: --max-n must be >= 2");
  if (cfg.format == "json") {
    json rows = json::array();
    for (std::int64_t n = 2; n <= max_n; ++n) {
      const auto rep = hdc::leakage_report(n);
      json r;
      r["N"] = n;
      r["inner_radius"] = rep.inner_radius;
      r["ratio"] = log_scaled_json(rep.ratio);
      r["leaks"] = rep.leaks;
      rows.push_back(r);
    }
    json j;
    j["command"] = "leak.sweep";
    j["rows"] = rows;
    if (emit_path.empty()) {
      emit_json(j);
    } else {
      write_out(emit_path, j.dump(2) + "\n");
    }
    return 0;
  }
  std::ostringstream os;
  os << "N,inner_radius,ratio,log_ratio,leaks\n";
  for (std::int64_t n = 2; n <= max_n; ++n) {
    const auto rep = hdc::leakage_report(n);
    os << n << ',' << fixed_digits(rep.inner_radius, cfg.digits) << ','
       << rep.ratio.sci_string(cfg.digits) << ','
       << fixed_digits(static_cast<double>(rep.ratio.log_mag()), cfg.digits)
       << ',' << (rep.leaks ? 1 : 0) << "\n";
  }
  write_out(emit_path, os.str());
  return 0;
}

json quadratic_json(const hdc::QuadraticNumber& q, unsigned digits) {
  json j;
  j["exact"] = q.exact_string();
  j["decimal"] = hdc::quad_to_decimal(q, digits);
  std::ostringstream p, qq, d;
  p << q.rational_part();
  qq << q.radical_part();
  d << q.field();
  j["p"] = p.str();
  j["q"] = qq.str();
  j["d"] = d.str();
  return j;
}

int cmd_centroid_coeff(const RunConfig& cfg, std::int64_t n, std::int64_t k,
                       bool exact) {
  const auto c = hdc::centroid_coefficient(n, k);
  if (cfg.format == "json") {
    json j = quadratic_json(c, cfg.digits);
    j["command"] = "centroid.coeff";
    j["params"] = {{"N", n}, {"k", k}};
    emit_json(j);
  } else if (cfg.format == "csv") {
    std::cout << "N,k,exact,decimal\n"
              << n << ',' << k << ',' << c.exact_string() << ','
              << hdc::quad_to_decimal(c, cfg.digits) << "\n";
  } else {
    std::cout << (exact ? c.exact_string()
                        : hdc::quad_to_decimal(c, cfg.digits))
              << "\n";
  }
  return 0;
}

int cmd_centroid_pairs(const RunConfig& cfg, std::int64_t n) {
  check_cap(n, cfg, "N");
  const auto pairs = hdc::coincident_pairs(n);
  if (cfg.format == "json") {
    json j;
    j["command"] = "centroid.pairs";
    j["params"] = {{"N", n}};
    json arr = json::array();
    for (const auto& [k1, k2] : pairs) arr.push_back({k1, k2});
    j["pairs"] = arr;
    emit_json(j);
  } else if (cfg.format == "csv") {
    std::cout << "k1,k2\n";
    for (const auto& [k1, k2] : pairs) std::cout << k1 << ',' << k2 << "\n";
  } else {
    for (const auto& [k1, k2] : pairs)
      std::cout << k1 << ' ' << k2 << "\n";
  }
  return 0;
}

int cmd_centroid_table(const RunConfig& cfg, std::int64_t max_n) {
  check_cap(max_n, cfg, "--max-n");
  const auto rows = hdc::enumerate_coincidences(max_n);
  if (cfg.format == "json") {
    json j;
    j["command"] = "centroid.table";
    j["params"] = {{"max_n", max_n}};
    json arr = json::array();
    for (const auto& r : rows) {
      json rec;
      rec["N"] = r.dimension;
      rec["k1"] = r.k1;
      rec["k2"] = r.k2;
      rec["a"] = r.a;
      rec["b"] = r.b;
      rec["coordinate_exact"] = r.coordinate.exact_string();
      rec["coordinate_decimal"] = hdc::quad_to_decimal(r.coordinate, cfg.digits);
      arr.push_back(rec);
    }
    j["rows"] = arr;
    emit_json(j);
    return 0;
  }
  std::cout << hdc::coincidence_csv(rows, cfg.digits);
  return 0;
}

int cmd_centroid_verify(const RunConfig& cfg, std::int64_t max_n) {
  check_cap(max_n, cfg, "--max-n");
  const auto report = hdc::cross_validate_coincidences(max_n);
  const bool triple_free = hdc::no_triple_coincidence(max_n);
  const bool ok = report.ok() && triple_free;
  if (cfg.format == "json") {
    json j;
    j["command"] = "centroid.verify";
    j["params"] = {{"max_n", max_n}};
    j["rows_found"] = report.rows_found;
    j["discrepancies"] = report.discrepancies;
    j["no_triple"] = triple_free;
    j["ok"] = ok;
    emit_json(j);
  } else {
    std::cout << "cross-validation 2.." << max_n << ": "
              << (report.ok() ? "OK" : "DISCREPANT") << " ("
              << report.rows_found << " coincidence rows)\n";
    for (const auto& d : report.discrepancies) std::cout << "  " << d << "\n";
    std::cout << "no-triple 2.." << max_n << ": "
              << (triple_free ? "OK" : "VIOLATED") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_centroid_triangle(const RunConfig& cfg,
                          const std::vector<double>& xy) {
  const auto t = hdc::triangle_centroids({xy[0], xy[1]}, {xy[2], xy[3]},
                                         {xy[4], xy[5]});
  const auto pt = [&](const hdc::Point2& p) {
    return "(" + fixed_digits(p.x, cfg.digits) + "," +
           fixed_digits(p.y, cfg.digits) + ")";
  };
  if (cfg.format == "json") {
    json j;
    j["command"] = "centroid.triangle";
    j["params"] = {{"vertices", xy}};
    j["vertex"] = {t.vertex.x, t.vertex.y};
    j["edge"] = {t.edge.x, t.edge.y};
    j["solid"] = {t.solid.x, t.solid.y};
    emit_json(j);
  } else if (cfg.format == "csv") {
    std::cout << "centroid,x,y\n"
              << "vertex," << fixed_digits(t.vertex.x, cfg.digits) << ','
              << fixed_digits(t.vertex.y, cfg.digits) << "\n"
              << "edge," << fixed_digits(t.edge.x, cfg.digits) << ','
              << fixed_digits(t.edge.y, cfg.digits) << "\n"
              << "solid," << fixed_digits(t.solid.x, cfg.digits) << ','
              << fixed_digits(t.solid.y, cfg.digits) << "\n";
  } else {
    std::cout << "vertex=" << pt(t.vertex) << " edge=" << pt(t.edge)
              << " solid=" << pt(t.solid) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "high-dimensional geometry calculator: ball volumes, box-ball "
      "leakage, simplex-skeleton centroids, and Monte Carlo checks"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--format", cfg.format, "output format: text, json or csv")
      ->envname("HDC_FORMAT")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--digits", cfg.digits, "decimal digits (1..50)")
      ->envname("HDC_DIGITS")
      ->check(CLI::Range(1u, 50u));
  app.add_option("--seed", cfg.seed, "RNG seed for mc commands")
      ->envname("HDC_SEED");
  app.add_option("--samples", cfg.samples, "sample budget for mc commands")
      ->check(CLI::PositiveNumber);
  app.add_option("--resource-cap", cfg.resource_cap,
                 "largest dimension any sweep or scan may touch")
      ->check(CLI::PositiveNumber);

  // ---- ball ----
  auto* ball = app.add_subcommand("ball", "unit-ball and sphere quantities");
  ball->require_subcommand(1);
  std::int64_t ball_n = 0;
  double ball_radius = 1.0, ball_delta = 0.0;
  std::int64_t ball_max_n = 100;
  std::string ball_emit;

  auto* ball_volume_cmd =
      ball->add_subcommand("volume", "volume of the N-ball [* R^N]");
  ball_volume_cmd->add_option("N", ball_n, "dimension")->required();
  ball_volume_cmd->add_option("--radius", ball_radius, "ball radius");

  auto* ball_area_cmd =
      ball->add_subcommand("area", "surface area of the (N-1)-sphere");
  ball_area_cmd->add_option("N", ball_n, "dimension")->required();
  ball_area_cmd->add_option("--radius", ball_radius, "sphere radius");

  auto* ball_shell_cmd = ball->add_subcommand(
      "shell", "volume fraction within DELTA of the boundary");
  ball_shell_cmd->add_option("N", ball_n, "dimension")->required();
  ball_shell_cmd->add_option("DELTA", ball_delta, "shell thickness in [0,1]")
      ->required();

  auto* ball_sweep_cmd = ball->add_subcommand(
      "sweep",
      "CSV series N,omega,Omega,asymptotic,prop5_bound for N = 1..M");
  ball_sweep_cmd->add_option("--max-n", ball_max_n, "last dimension")
      ->required();
  ball_sweep_cmd->add_option("--emit", ball_emit,
                             "write to this path instead of stdout");

  // ---- leak ----
  auto* leak = app.add_subcommand(
      "leak", "central ball of the 2^N inscribed-balls construction");
  leak->require_subcommand(1);
  std::int64_t leak_n = 0, leak_max_n = 100;
  std::string leak_emit;

  auto* leak_radius_cmd =
      leak->add_subcommand("radius", "radius sqrt(N)-1 of the central ball");
  leak_radius_cmd->add_option("N", leak_n, "dimension")->required();

  auto* leak_ratio_cmd = leak->add_subcommand(
      "ratio", "central-ball volume over the box volume 2^N");
  leak_ratio_cmd->add_option("N", leak_n, "dimension")->required();

  leak->add_subcommand("threshold",
                       "first dimension whose central ball leaves the box");

  auto* leak_sweep_cmd = leak->add_subcommand(
      "sweep", "CSV series N,inner_radius,ratio,log_ratio,leaks for N = 2..M");
  leak_sweep_cmd->add_option("--max-n", leak_max_n, "last dimension")
      ->required();
  leak_sweep_cmd->add_option("--emit", leak_emit,
                             "write to this path instead of stdout");

  // ---- centroid ----
  auto* centroid = app.add_subcommand(
      "centroid", "exact simplex-skeleton centroids and coincidences");
  centroid->require_subcommand(1);
  std::int64_t cen_n = 0, cen_k = 0, cen_max_n = 65;
  bool cen_exact = false;
  std::vector<double> cen_xy;

  auto* cen_coeff_cmd = centroid->add_subcommand(
      "coeff", "shared coordinate of the k-skeleton centroid");
  cen_coeff_cmd->add_option("N", cen_n, "dimension")->required();
  cen_coeff_cmd->add_option("K", cen_k, "skeleton dimension")->required();
  cen_coeff_cmd->add_flag("--exact", cen_exact,
                          "print canonical p + q*sqrt(d) with exact fractions");

  auto* cen_pairs_cmd = centroid->add_subcommand(
      "pairs", "intermediate skeleton pairs with equal centroids");
  cen_pairs_cmd->add_option("N", cen_n, "dimension")->required();

  auto* cen_table_cmd = centroid->add_subcommand(
      "table", "coincidence table as CSV: " +
                   std::string(hdc::kCoincidenceCsvHeader));
  cen_table_cmd->add_option("--max-n", cen_max_n, "largest dimension")
      ->required();

  auto* cen_verify_cmd = centroid->add_subcommand(
      "verify",
      "cross-validate the coincidence parametrization against the "
      "exhaustive scan and check that no centroid is shared three ways");
  cen_verify_cmd->add_option("--max-n", cen_max_n, "largest dimension")
      ->required();

  auto* cen_triangle_cmd = centroid->add_subcommand(
      "triangle", "vertex, edge and solid centroids of a plane triangle");
  cen_triangle_cmd
      ->add_option("XY", cen_xy, "vertex coordinates: X1 Y1 X2 Y2 X3 Y3")
      ->expected(6)
      ->required();

  // ---- mc ----
  auto* mc = app.add_subcommand(
      "mc", "Monte Carlo verification (reproducible for a fixed seed)");
  mc->require_subcommand(1);
  std::int64_t mc_n = 0, mc_k = 0;
  double mc_delta = 0.0;

  auto* mc_gauss_cmd = mc->add_subcommand(
      "gauss", "integral of exp(-pi |x|^2): quadrature for N <= 3, "
               "stratified sampling for 4 <= N <= 8");
  mc_gauss_cmd->add_option("N", mc_n, "dimension")->required();

  auto* mc_ballvol_cmd =
      mc->add_subcommand("ballvol", "hit-or-miss unit-ball volume");
  mc_ballvol_cmd->add_option("N", mc_n, "dimension")->required();

  auto* mc_shell_cmd =
      mc->add_subcommand("shell", "sampled boundary-shell volume fraction");
  mc_shell_cmd->add_option("N", mc_n, "dimension")->required();
  mc_shell_cmd->add_option("DELTA", mc_delta, "shell thickness in [0,1]")
      ->required();

  auto* mc_leakfrac_cmd = mc->add_subcommand(
      "leakfrac", "fraction of the central ball outside the box");
  mc_leakfrac_cmd->add_option("N", mc_n, "dimension")->required();

  auto* mc_skeleton_cmd = mc->add_subcommand(
      "skeleton", "per-coordinate mean of uniform samples on the k-skeleton");
  mc_skeleton_cmd->add_option("N", mc_n, "dimension")->required();
  mc_skeleton_cmd->add_option("K", mc_k, "skeleton dimension")->required();

  // global flags may trail the subcommand, e.g. `mc gauss 2 --seed 7`
  for (auto* group : app.get_subcommands(nullptr)) {
    group->fallthrough();
    for (auto* sub : group->get_subcommands(nullptr)) sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    // ball
    if (ball_volume_cmd->parsed()) {
      const auto v = (ball_radius == 1.0)
                         ? hdc::ball_volume(ball_n)
                         : hdc::ball_volume_radius(ball_n, ball_radius);
      return emit_scalar(cfg, "ball.volume",
                         {{"N", ball_n}, {"radius", ball_radius}}, v);
    }
    if (ball_area_cmd->parsed()) {
      const auto v = (ball_radius == 1.0)
                         ? hdc::sphere_area(ball_n)
                         : hdc::sphere_area_radius(ball_n, ball_radius);
      return emit_scalar(cfg, "ball.area",
                         {{"N", ball_n}, {"radius", ball_radius}}, v);
    }
    if (ball_shell_cmd->parsed())
      return emit_plain(cfg, "ball.shell",
                        {{"N", ball_n}, {"delta", ball_delta}},
                        hdc::shell_fraction(ball_n, ball_delta));
    if (ball_sweep_cmd->parsed())
      return cmd_ball_sweep(cfg, ball_max_n, ball_emit);

    // leak
    if (leak_radius_cmd->parsed())
      return emit_plain(cfg, "leak.radius", {{"N", leak_n}},
                        hdc::inner_radius(leak_n));
    if (leak_ratio_cmd->parsed())
      return emit_scalar(cfg, "leak.ratio", {{"N", leak_n}},
                         hdc::leakage_ratio(leak_n));
    if (leak->got_subcommand("threshold")) {
      const auto n = hdc::first_leak_dimension();
      if (cfg.format == "json") {
        json j;
        j["command"] = "leak.threshold";
        j["value"] = n;
        emit_json(j);
      } else if (cfg.format == "csv") {
        std::cout << "command,value\nleak.threshold," << n << "\n";
      } else {
        std::cout << n << "\n";
      }
      return 0;
    }
    if (leak_sweep_cmd->parsed())
      return cmd_leak_sweep(cfg, leak_max_n, leak_emit);

    // centroid
    if (cen_coeff_cmd->parsed())
      return cmd_centroid_coeff(cfg, cen_n, cen_k, cen_exact);
    if (cen_pairs_cmd->parsed()) return cmd_centroid_pairs(cfg, cen_n);
    if (cen_table_cmd->parsed()) return cmd_centroid_table(cfg, cen_max_n);
    if (cen_verify_cmd->parsed()) return cmd_centroid_verify(cfg, cen_max_n);
    if (cen_triangle_cmd->parsed()) return cmd_centroid_triangle(cfg, cen_xy);

    // mc
    if (mc_gauss_cmd->parsed()) {
      const auto e = hdc::gaussian_norm_check(static_cast<int>(mc_n),
                                              cfg.samples, cfg.seed);
      Verdict v;
      if (mc_n <= 3) {
        // deterministic quadrature: no sampling error band to test against
        v.pass = std::fabs(e.mean - 1.0) <= 1e-6;
        v.detail = "quadrature, tolerance 1e-6";
      } else {
        v = three_sigma_verdict({e}, {1.0});
      }
      return emit_mc(cfg, "mc.gauss",
                     {{"N", mc_n}, {"samples", cfg.samples},
                      {"seed", cfg.seed}},
                     {e}, {1.0}, v);
    }
    if (mc_ballvol_cmd->parsed()) {
      const auto e = hdc::mc_ball_volume(static_cast<int>(mc_n), cfg.samples,
                                         cfg.seed);
      const double ref = hdc::ball_volume(mc_n).to_double();
      return emit_mc(cfg, "mc.ballvol",
                     {{"N", mc_n}, {"samples", cfg.samples},
                      {"seed", cfg.seed}},
                     {e}, {ref}, three_sigma_verdict({e}, {ref}));
    }
    if (mc_shell_cmd->parsed()) {
      const auto e = hdc::mc_shell_fraction(static_cast<int>(mc_n), mc_delta,
                                            cfg.samples, cfg.seed);
      const double ref = hdc::shell_fraction(mc_n, mc_delta);
      return emit_mc(cfg, "mc.shell",
                     {{"N", mc_n}, {"delta", mc_delta},
                      {"samples", cfg.samples}, {"seed", cfg.seed}},
                     {e}, {ref}, three_sigma_verdict({e}, {ref}));
    }
    if (mc_leakfrac_cmd->parsed()) {
      const auto e = hdc::mc_leak_fraction(static_cast<int>(mc_n),
                                           cfg.samples, cfg.seed);
      Verdict v;
      if (hdc::inner_radius(mc_n) > 1.0) {
        const auto hits = static_cast<std::uint64_t>(
            std::llround(e.mean * static_cast<double>(e.samples)));
        const double lcb = hdc::binomial_lower_bound(hits, e.samples, 2.3263);
        v.pass = lcb > 0.0;
        std::ostringstream os;
        os << "leak expected; lower 99% bound = " << lcb;
        v.detail = os.str();
      } else {
        v.pass = e.mean == 0.0;
        v.detail = "containment expected; mean must be exactly 0";
      }
      return emit_mc(cfg, "mc.leakfrac",
                     {{"N", mc_n}, {"samples", cfg.samples},
                      {"seed", cfg.seed}},
                     {e}, {0.0}, v);
    }
    if (mc_skeleton_cmd->parsed()) {
      const auto es = hdc::mc_skeleton_centroid(
          static_cast<int>(mc_n), static_cast<int>(mc_k), cfg.samples,
          cfg.seed);
      const double ref =
          hdc::centroid_coefficient(mc_n, mc_k).to_double();
      const std::vector<double> refs(es.size(), ref);
      return emit_mc(cfg, "mc.skeleton",
                     {{"N", mc_n}, {"k", mc_k}, {"samples", cfg.samples},
                      {"seed", cfg.seed}},
                     es, refs, three_sigma_verdict(es, refs));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no command dispatched\n";
  return 2;
}
