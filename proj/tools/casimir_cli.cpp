// Command-line front end: density profiles, energy sweeps, and the
// verification suite, with reproducible CSV/JSON output.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "casimir/counterterm.hpp"
#include "casimir/euler_maclaurin.hpp"
#include "casimir/image_sum.hpp"
#include "casimir/mode_sum.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/regulator.hpp"
#include "casimir/report.hpp"
#include "casimir/types.hpp"
#include "casimir/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace casimir;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitAccuracy = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string bc = "dirichlet";
  double d = 1.0;
  std::optional<double> lambda;
  std::vector<double> lambda_sweep;
  std::optional<double> z;
  std::string z_grid;  // start:stop:count
  std::string method = "direct";
  std::string regulator = "exp";
  double tol = 1e-10;
  std::string out;
  std::string format = "csv";
  bool strict = false;
  std::string only;
};

BoundaryCondition parse_bc(const std::string& s) {
  if (s == "dirichlet") return BoundaryCondition::dirichlet;
  if (s == "periodic") return BoundaryCondition::periodic;
  throw ConfigError("--bc must be dirichlet|periodic");
}

std::vector<double> parse_grid(const RunConfig& cfg) {
  std::vector<double> zs;
  if (cfg.z && !cfg.z_grid.empty())
    throw ConfigError("give either --z or --z-grid, not both");
  if (cfg.z) {
    zs.push_back(*cfg.z);
    return zs;
  }
  if (cfg.z_grid.empty()) throw ConfigError("density needs --z or --z-grid");
  double start, stop;
  long count;
  char c1, c2;
  std::istringstream in(cfg.z_grid);
  if (!(in >> start >> c1 >> stop >> c2 >> count) || c1 != ':' || c2 != ':' ||
      count < 1 || !in.eof())
    throw ConfigError("--z-grid expects start:stop:count");
  if (count == 1) {
    zs.push_back(start);
    return zs;
  }
  for (long i = 0; i < count; ++i)
    zs.push_back(start + (stop - start) * static_cast<double>(i) /
                             static_cast<double>(count - 1));
  return zs;
}

json config_echo(const RunConfig& cfg) {
  json j;
  j["command"] = cfg.command;
  j["bc"] = cfg.bc;
  j["d"] = cfg.d;
  if (cfg.lambda) j["lambda"] = *cfg.lambda;
  if (!cfg.lambda_sweep.empty()) j["lambda_sweep"] = cfg.lambda_sweep;
  if (cfg.z) j["z"] = *cfg.z;
  if (!cfg.z_grid.empty()) j["z_grid"] = cfg.z_grid;
  j["method"] = cfg.method;
  j["regulator"] = cfg.regulator;
  j["tol"] = cfg.tol;
  j["format"] = cfg.format;
  j["strict"] = cfg.strict;
  if (!cfg.only.empty()) j["only"] = cfg.only;
  return j;
}

json provenance() {
  return json{{"tool", "casimir"}, {"version", kVersion}};
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw ConfigError("cannot open --out path '" + cfg.out + "'");
  f << text;
}

json finite_or_string(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

// ---- density ----

int cmd_density(const RunConfig& cfg) {
  auto bc = parse_bc(cfg.bc);
  if (!(cfg.d > 0.0)) throw ConfigError("--d must be > 0");
  if (cfg.method != "direct" && cfg.method != "closed" && cfg.method != "limit")
    throw ConfigError("--method must be direct|closed|limit");
  if (cfg.method == "limit" && cfg.lambda)
    throw ConfigError("--method limit takes no --lambda");
  if (cfg.method != "limit" && !cfg.lambda)
    throw ConfigError("--method " + cfg.method + " needs --lambda");
  if (cfg.method == "closed" && cfg.regulator != "exp")
    throw ConfigError("--method closed is exponential-regulator only");
  auto zs = parse_grid(cfg);
  auto reg = make_regulator(cfg.regulator);
  PlateGeometry geom(cfg.d, bc);

  auto eval_one = [&](double z) -> double {
    try {
      if (cfg.method == "direct")
        return density_direct(z, geom, CutoffLambda(*cfg.lambda), reg, cfg.tol).value;
      if (cfg.method == "closed")
        return density_closed(z, cfg.d, CutoffLambda(*cfg.lambda), bc);
      return density_limit(z, cfg.d, bc);
    } catch (const SingularityError&) {
      return kInf;  // rendered as "inf"; --strict escalates after assembly
    }
  };

  // grid points are independent; evaluate in parallel, assemble in input order
  std::vector<double> vals(zs.size());
  const size_t grain = 16;
  if (zs.size() > grain) {
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<void>> futs;
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < workers; ++w)
      futs.push_back(std::async(std::launch::async, [&] {
        for (size_t i = next.fetch_add(1); i < zs.size(); i = next.fetch_add(1))
          vals[i] = eval_one(zs[i]);
      }));
    for (auto& f : futs) f.get();
  } else {
    for (size_t i = 0; i < zs.size(); ++i) vals[i] = eval_one(zs[i]);
  }

  bool hit_singularity = false;
  for (double v : vals)
    if (!std::isfinite(v)) hit_singularity = true;

  std::string text;
  if (cfg.format == "csv") {
    text += "z,value\n";
    for (size_t i = 0; i < zs.size(); ++i)
      text += csv_line({format_double(zs[i]), format_double(vals[i])});
  } else {
    json j;
    j["config"] = config_echo(cfg);
    j["provenance"] = provenance();
    json rows = json::array();
    for (size_t i = 0; i < zs.size(); ++i)
      rows.push_back(json{{"z", zs[i]}, {"value", finite_or_string(vals[i])}});
    j["rows"] = std::move(rows);
    text = j.dump(2) + "\n";
  }
  emit(cfg, text);
  return (hit_singularity && cfg.strict) ? kExitAccuracy : kExitOk;
}

// ---- energy ----

int cmd_energy(const RunConfig& cfg) {
  auto bc = parse_bc(cfg.bc);
  if (!(cfg.d > 0.0)) throw ConfigError("--d must be > 0");
  if (!cfg.lambda && cfg.lambda_sweep.empty())
    throw ConfigError("energy needs --lambda and/or --lambda-sweep");
  auto reg = make_regulator(cfg.regulator);
  PlateGeometry geom(cfg.d, bc);

  json j;
  j["config"] = config_echo(cfg);
  j["provenance"] = provenance();

  std::optional<double> direct, renorm;
  if (cfg.lambda) {
    CutoffLambda L(*cfg.lambda);
    direct = energy_per_area_direct(geom, L, reg, std::min(cfg.tol, 1e-12));
    renorm = renormalized_energy_per_area(geom, L, reg, std::min(cfg.tol, 1e-12));
    j["direct"] = *direct;
    j["renormalized"] = *renorm;
  }

  std::optional<EnergyDecomposition> dec;
  if (!cfg.lambda_sweep.empty()) {
    dec = decompose_energy(geom, reg, cfg.lambda_sweep);
    json d;
    d["c_div"] = dec->c_div;
    d["eps_f"] = dec->eps_f;
    d["remainder_exponent"] = dec->remainder_exponent;
    if (dec->direct_fit_available) {
      d["c_div_direct_fit"] = dec->c_div_direct;
      d["eps_f_direct_fit"] = dec->eps_f_direct;
      d["agreement"] = dec->agreement;
    }
    j["decomposition"] = std::move(d);
  }

  std::string text;
  if (cfg.format == "json") {
    text = j.dump(2) + "\n";
  } else {
    std::vector<std::string> head, row;
    if (direct) {
      head.insert(head.end(), {"direct", "renormalized"});
      row.insert(row.end(), {format_double(*direct), format_double(*renorm)});
    }
    if (dec) {
      head.insert(head.end(), {"c_div", "eps_f", "remainder_exponent"});
      row.insert(row.end(), {format_double(dec->c_div), format_double(dec->eps_f),
                             format_double(dec->remainder_exponent)});
    }
    text = csv_line(head) + csv_line(row);
  }
  emit(cfg, text);
  return kExitOk;
}

// ---- verify / report ----

int cmd_verify(const RunConfig& cfg) {
  auto results = run_acceptance(cfg.only);
  if (results.empty()) throw ConfigError("--only matched no criteria");
  std::string text;
  bool all = true;
  for (const auto& r : results) {
    text += format_criterion_line(r) + "\n";
    all = all && r.pass;
  }
  text += all ? "all criteria passed\n" : "VERIFICATION FAILED\n";
  emit(cfg, text);
  return all ? kExitOk : kExitVerifyFailed;
}

int cmd_report(const RunConfig& cfg) {
  auto results = run_acceptance(cfg.only);
  if (results.empty()) throw ConfigError("--only matched no criteria");
  json j;
  j["config"] = config_echo(cfg);
  j["provenance"] = provenance();
  json items = json::array();
  bool all = true;
  for (const auto& r : results) {
    items.push_back(json{{"id", r.id},
                         {"description", r.description},
                         {"pass", r.pass},
                         {"achieved", finite_or_string(r.achieved)},
                         {"tolerance", r.tolerance},
                         {"detail", r.detail}});
    all = all && r.pass;
  }
  j["criteria"] = std::move(items);
  j["all_pass"] = all;
  emit(cfg, j.dump(2) + "\n");
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir vacuum energy between parallel plates"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub, bool wants_z) {
    sub->add_option("--bc", cfg.bc, "boundary condition: dirichlet|periodic");
    sub->add_option("--d", cfg.d, "plate separation");
    sub->add_option("--lambda", [&cfg](const CLI::results_t& res) {
      cfg.lambda = std::stod(res[0]);
      return true;
    }, "cutoff length");
    sub->add_option("--lambda-sweep", [&cfg](const CLI::results_t& res) {
      std::istringstream in(res[0]);
      std::string tok;
      while (std::getline(in, tok, ',')) cfg.lambda_sweep.push_back(std::stod(tok));
      return true;
    }, "comma-separated cutoff sweep");
    if (wants_z) {
      sub->add_option("--z", [&cfg](const CLI::results_t& res) {
        cfg.z = std::stod(res[0]);
        return true;
      }, "evaluation point");
      sub->add_option("--z-grid", cfg.z_grid, "grid start:stop:count");
      sub->add_option("--method", cfg.method, "direct|closed|limit");
    }
    sub->add_option("--regulator", cfg.regulator, "exp|gauss|rational");
    sub->add_option("--tol", cfg.tol, "relative tolerance");
    sub->add_option("--out", cfg.out, "output path (default stdout)");
    sub->add_option("--format", cfg.format, "csv|json");
    sub->add_flag("--strict", cfg.strict, "singular samples become errors");
  };

  auto* density = app.add_subcommand("density", "vacuum energy density profile");
  add_common(density, true);
  auto* energy = app.add_subcommand("energy", "energy per unit area and decomposition");
  add_common(energy, false);
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--only", cfg.only, "criterion id filter");
  verify->add_option("--out", cfg.out, "output path (default stdout)");
  auto* report = app.add_subcommand("report", "verification suite as a JSON record");
  report->add_option("--only", cfg.only, "criterion id filter");
  report->add_option("--out", cfg.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitBadConfig;
  }

  try {
    if (cfg.format != "csv" && cfg.format != "json")
      throw ConfigError("--format must be csv|json");
    if (density->parsed()) {
      cfg.command = "density";
      return cmd_density(cfg);
    }
    if (energy->parsed()) {
      cfg.command = "energy";
      return cmd_energy(cfg);
    }
    if (verify->parsed()) {
      cfg.command = "verify";
      cfg.format = "text";
      return cmd_verify(cfg);
    }
    cfg.command = "report";
    cfg.format = "json";
    return cmd_report(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const AccuracyError& e) {
    std::cerr << "accuracy error: " << e.what() << "\n";
    return kExitAccuracy;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAccuracy;
  }
}
