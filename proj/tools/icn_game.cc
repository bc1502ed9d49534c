// icn_game: solve, sweep and audit the joint caching and pricing game.
//
//   icn_game solve  --m 100 --gamma 0.5 --r 0.7 --co 60 [--json] [--out F]
//   icn_game sweep  --out sweep.csv [--gamma-from .01 --gamma-to 1 ...]
//   icn_game costs  --gamma 0.2,1 --m 100 --c0 1 --out costs.csv
//   icn_game verify oracle --seed 0 --trials 200
//   icn_game asym   --config asym.cfg --init ne --out trace.csv
//
// Exit codes: 0 ok, 1 usage or configuration error, 2 verification failure.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "icn/asymmetric_game.h"
#include "icn/errors.h"
#include "icn/experiments.h"
#include "icn/symmetric_solver.h"
#include "json.hpp"

namespace {

using icn::FormatNumber;
using icn::KeyValues;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Values collected from --flags, merged over an optional --config file.
struct Params {
  std::map<std::string, std::string> flags;
  std::string config_path;

  void Bind(CLI::App* app, const std::string& key, const std::string& help) {
    app->add_option("--" + key, flags[key], help);
  }

  KeyValues Merge(CLI::App* app, const std::set<std::string>& allowed) const {
    KeyValues kv;
    if (!config_path.empty()) kv = icn::LoadKeyValues(config_path);
    for (const auto& [key, value] : kv) {
      if (!allowed.count(key)) {
        throw icn::InvalidParameter(key, "unknown config key: " + key);
      }
    }
    for (const auto& [key, value] : flags) {
      if (app->count("--" + key) > 0) kv[key] = value;
    }
    return kv;
  }
};

double GetDouble(const KeyValues& kv, const std::string& key,
                 std::optional<double> fallback) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    if (!fallback) throw UsageError("missing required parameter: " + key);
    return *fallback;
  }
  return icn::ParseDouble(it->second, key);
}

int GetInt(const KeyValues& kv, const std::string& key,
           std::optional<int> fallback) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    if (!fallback) throw UsageError("missing required parameter: " + key);
    return *fallback;
  }
  return icn::ParseInt(it->second, key);
}

icn::DemandParams DemandFrom(const KeyValues& kv) {
  icn::DemandParams d;
  d.rho = GetDouble(kv, "rho", d.rho);
  d.rho0 = GetDouble(kv, "rho0", d.rho0);
  d.beta = GetDouble(kv, "beta", d.beta);
  d.num_access = GetInt(kv, "k", d.num_access);
  icn::Validate(d);
  return d;
}

// Output goes to `path` when set, stdout otherwise. The file is written in
// one piece so that a failed run leaves no partial output.
void Emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  out.close();
  if (!out) throw UsageError("error writing " + path);
}

// ---------------------------------------------------------------------------

const std::set<std::string> kSymmetricKeys = {
    "m", "k", "gamma", "rho", "rho0", "beta", "c0", "r", "co", "epsilon"};

struct SolveCmd {
  Params params;
  bool json = false;
  std::string out;
  CLI::App* app = nullptr;

  void Register(CLI::App& parent) {
    app = parent.add_subcommand("solve", "Closed-form symmetric equilibrium");
    app->add_option("--config", params.config_path, "key = value file");
    params.Bind(app, "m", "number of contents M (required)");
    params.Bind(app, "k", "number of access ICNs K [2]");
    params.Bind(app, "gamma", "Zipf exponent in [0,1] (required)");
    params.Bind(app, "rho", "own-price sensitivity [0.1]");
    params.Bind(app, "rho0", "content-price sensitivity [0.1]");
    params.Bind(app, "beta", "network/storage price scaling [10]");
    params.Bind(app, "c0", "access base caching cost [1]");
    params.Bind(app, "r", "transit/access cost ratio (required)");
    params.Bind(app, "co", "provider unit cost (required)");
    params.Bind(app, "epsilon", "reported price offset [1e-9]");
    app->add_flag("--json", json, "print JSON instead of text");
    app->add_option("--out", out, "write JSON report to a file");
  }

  int Run() const {
    const KeyValues kv = params.Merge(app, kSymmetricKeys);
    const icn::SymmetricConfig cfg = icn::MakeSymmetricConfig(
        GetInt(kv, "m", std::nullopt), GetDouble(kv, "gamma", std::nullopt),
        GetDouble(kv, "c0", 1.0), GetDouble(kv, "r", std::nullopt),
        GetDouble(kv, "co", std::nullopt), DemandFrom(kv),
        GetDouble(kv, "epsilon", 1e-9));
    const icn::SymmetricEquilibrium eq = icn::SolveEquilibrium(cfg);
    const icn::SweepRow row = icn::MakeRow(cfg, eq);

    nlohmann::ordered_json j;
    j["gamma"] = row.gamma;
    j["M"] = row.m;
    j["K"] = row.k;
    j["R"] = row.r;
    j["c0"] = row.c0;
    j["cO"] = row.co;
    j["rho"] = row.rho;
    j["rho0"] = row.rho0;
    j["beta"] = row.beta;
    j["Th"] = row.th;
    j["ThC"] = row.th_c;
    j["P_C"] = row.p_c;
    j["P_O_s"] = row.p_os;
    j["P_A"] = row.p_a;
    j["P_O_c"] = row.p_oc;
    j["sigma"] = row.sigma;
    j["U_A"] = row.u_a;
    j["U_C"] = row.u_c;
    j["U_O"] = row.u_o;
    j["P_C_reported"] = eq.reported_p_c;
    j["P_O_s_reported"] = eq.reported_p_os;

    if (!out.empty()) Emit(out, j.dump(2) + "\n");
    if (json) {
      std::cout << j.dump(2) << '\n';
      return kExitOk;
    }
    std::cout << "Th     = " << eq.th << '\n'
              << "ThC    = " << eq.th_c << '\n'
              << "P_C    = " << FormatNumber(eq.p_c) << "  (posted "
              << FormatNumber(eq.reported_p_c) << ")\n"
              << "P_O_s  = " << FormatNumber(eq.p_os) << "  (posted "
              << FormatNumber(eq.reported_p_os) << ")\n"
              << "P_A    = " << FormatNumber(eq.p_a) << '\n'
              << "P_O_c  = " << FormatNumber(eq.p_oc) << '\n'
              << "sigma  = " << FormatNumber(eq.sigma) << '\n'
              << "U_A    = " << FormatNumber(eq.u_a) << '\n'
              << "U_C    = " << FormatNumber(eq.u_c) << '\n'
              << "U_O    = " << FormatNumber(eq.u_o) << '\n';
    return kExitOk;
  }
};

struct SweepCmd {
  Params params;
  std::string out;
  int threads = 0;
  CLI::App* app = nullptr;

  void Register(CLI::App& parent) {
    app = parent.add_subcommand("sweep", "Equilibria over a parameter grid");
    app->add_option("--config", params.config_path, "key = value file");
    params.Bind(app, "gamma-from", "first gamma [0.01]");
    params.Bind(app, "gamma-to", "last gamma [1]");
    params.Bind(app, "gamma-step", "gamma step [0.01]");
    params.Bind(app, "co", "comma-separated c_O list [40,60,100]");
    params.Bind(app, "r", "comma-separated R list [0.7]");
    params.Bind(app, "m", "number of contents [100]");
    params.Bind(app, "k", "number of access ICNs [2]");
    params.Bind(app, "rho", "[0.1]");
    params.Bind(app, "rho0", "[0.1]");
    params.Bind(app, "beta", "[10]");
    params.Bind(app, "c0", "[1]");
    params.Bind(app, "epsilon", "[1e-9]");
    app->add_option("--threads", threads, "worker threads (0 = hardware)");
    app->add_option("--out", out, "CSV path (stdout when omitted)");
  }

  int Run() const {
    const KeyValues kv = params.Merge(
        app, {"gamma-from", "gamma-to", "gamma-step", "co", "r", "m", "k",
              "rho", "rho0", "beta", "c0", "epsilon"});
    icn::SweepSpec spec;
    spec.gamma_from = GetDouble(kv, "gamma-from", spec.gamma_from);
    spec.gamma_to = GetDouble(kv, "gamma-to", spec.gamma_to);
    spec.gamma_step = GetDouble(kv, "gamma-step", spec.gamma_step);
    if (auto it = kv.find("co"); it != kv.end()) {
      spec.co_list = icn::ParseDoubleList(it->second, "co");
    }
    if (auto it = kv.find("r"); it != kv.end()) {
      spec.r_list = icn::ParseDoubleList(it->second, "r");
    }
    spec.m = GetInt(kv, "m", spec.m);
    spec.c0 = GetDouble(kv, "c0", spec.c0);
    spec.epsilon = GetDouble(kv, "epsilon", spec.epsilon);
    spec.demand = DemandFrom(kv);
    icn::Validate(spec);
    const int n = threads > 0
                      ? threads
                      : static_cast<int>(std::max(
                            1u, std::thread::hardware_concurrency()));
    std::ostringstream csv;
    icn::WriteSweepCsv(csv, icn::RunSweep(spec, n));
    Emit(out, csv.str());
    return kExitOk;
  }
};

struct CostsCmd {
  std::string gammas = "0.2,0.4,0.6,0.8,1";
  int m = 100;
  double c0 = 1.0;
  std::string out;

  void Register(CLI::App& parent) {
    CLI::App* app =
        parent.add_subcommand("costs", "Access caching cost by content rank");
    app->add_option("--gamma", gammas, "comma-separated gamma list");
    app->add_option("--m", m, "number of contents [100]");
    app->add_option("--c0", c0, "access base caching cost [1]");
    app->add_option("--out", out, "CSV path (stdout when omitted)");
  }

  int Run() const {
    std::ostringstream csv;
    icn::WriteCostsCsv(csv, icn::ParseDoubleList(gammas, "gamma"), m, c0);
    Emit(out, csv.str());
    return kExitOk;
  }
};

struct VerifyCmd {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 200;

  void Register(CLI::App& parent) {
    CLI::App* app = parent.add_subcommand("verify", "Run a property suite");
    std::string names;
    for (auto s : icn::kVerifySuites) names += std::string(s) + " ";
    app->add_option("suite", suite, "one of: " + names)->required();
    app->add_option("--seed", seed, "random seed [0]");
    app->add_option("--trials", trials, "random cases [200]");
  }

  int Run() const {
    const icn::VerifyOutcome res = icn::RunVerifySuite(suite, seed, trials);
    if (res.passed) {
      std::cout << "PASS " << suite << " (" << res.checks << " checks)\n";
      return kExitOk;
    }
    std::cout << "FAIL " << suite << " (" << res.checks << " checks)\n"
              << res.counterexample;
    return kExitVerify;
  }
};

const std::set<std::string> kAsymKeys = {
    "m",     "gamma", "rho",  "rho-a", "rho-b", "rho0", "beta",
    "beta-a", "beta-b", "c0", "c0-a",  "c0-b",  "r",    "co"};

// One "a/b" pair per rank: S self, P peer, T transit, O provider.
char SourceLetter(icn::Source s) {
  switch (s) {
    case icn::Source::kSelf:
      return 'S';
    case icn::Source::kPeer:
      return 'P';
    case icn::Source::kTransit:
      return 'T';
    case icn::Source::kProvider:
      break;
  }
  return 'O';
}

std::string RoutingString(const icn::CachingAssignment& caching) {
  std::string s;
  for (const auto& r : caching) {
    if (!s.empty()) s += ' ';
    s += SourceLetter(r.a);
    s += '/';
    s += SourceLetter(r.b);
  }
  return s;
}

struct AsymCmd {
  Params params;
  std::string init = "ne";
  std::string form = "best-response";
  int max_iter = 100;
  double grid_step = 0.0;
  std::optional<std::uint64_t> order_seed;
  std::string out;
  CLI::App* app = nullptr;

  void Register(CLI::App& parent) {
    app = parent.add_subcommand("asym", "Best-response play, two access ICNs");
    app->add_option("--config", params.config_path, "key = value file");
    for (const auto& key : kAsymKeys) params.Bind(app, key, "");
    app->add_option("--init", init, "ne | zero")
        ->check(CLI::IsMember({"ne", "zero"}));
    app->add_option("--form", form, "best-response | average")
        ->check(CLI::IsMember({"best-response", "average"}));
    app->add_option("--max-iter", max_iter, "sweep limit [100]");
    app->add_option("--grid-step", grid_step, "price grid step");
    app->add_option("--order-seed", order_seed, "shuffle player order");
    app->add_option("--out", out, "trace CSV path (stdout when omitted)");
  }

  int Run() const {
    const KeyValues kv = params.Merge(app, kAsymKeys);
    if (max_iter < 1) {
      throw icn::InvalidParameter("max-iter", "max-iter must be >= 1");
    }
    const int m = GetInt(kv, "m", 100);
    const double gamma = GetDouble(kv, "gamma", std::nullopt);
    const double rho = GetDouble(kv, "rho", 0.1);
    const double beta = GetDouble(kv, "beta", 10.0);
    const double c0 = GetDouble(kv, "c0", 1.0);

    icn::AsymmetricConfig cfg{icn::PopularityModel(m, gamma)};
    cfg.a = {GetDouble(kv, "rho-a", rho), GetDouble(kv, "beta-a", beta),
             GetDouble(kv, "c0-a", c0)};
    cfg.b = {GetDouble(kv, "rho-b", rho), GetDouble(kv, "beta-b", beta),
             GetDouble(kv, "c0-b", c0)};
    cfg.rho0 = GetDouble(kv, "rho0", 0.1);
    cfg.transit_base = GetDouble(kv, "r", 0.7) * c0;
    cfg.provider_unit_cost = GetDouble(kv, "co", 60.0);
    cfg.access_form = form == "average" ? icn::AccessUtilityForm::kAverage
                                        : icn::AccessUtilityForm::kBestResponse;
    icn::Validate(cfg);

    icn::StrategyProfile start;
    if (init == "ne") {
      // Closed-form symmetric equilibrium under A's parameters.
      icn::DemandParams d;
      d.rho = cfg.a.rho;
      d.rho0 = cfg.rho0;
      d.beta = cfg.a.beta;
      const icn::SymmetricConfig sym{
          cfg.pm,
          icn::CostModel::FromRatio(cfg.a.cache_base,
                                    cfg.transit_base / cfg.a.cache_base,
                                    cfg.provider_unit_cost),
          d};
      start = icn::ProfileFromSymmetric(sym, icn::SolveEquilibrium(sym));
    }

    icn::PriceGrid grid = icn::DefaultGrid(cfg);
    if (app->count("--grid-step") > 0) grid.step = grid_step;
    grid.Points();  // validates

    icn::IterateOptions opts;
    opts.max_iter = max_iter;
    opts.order_seed = order_seed;
    const icn::BestResponseRun run =
        icn::IterateBestResponse(cfg, start, grid, opts);

    std::ostringstream csv;
    csv << "sweep,mover,P_A,P_B,P_C,P_O_c,P_O_s,U_A,U_B,U_C,U_O,routing\n";
    for (const auto& step : run.trace) {
      const auto& p = step.profile.prices;
      csv << step.sweep << ','
          << (step.mover ? icn::PlayerName(*step.mover) : "init") << ','
          << FormatNumber(p.p_a) << ',' << FormatNumber(p.p_b) << ','
          << FormatNumber(p.p_c) << ',' << FormatNumber(p.p_oc) << ','
          << FormatNumber(p.p_os) << ','
          << FormatNumber(icn::UtilityA(cfg, step.profile)) << ','
          << FormatNumber(icn::UtilityB(cfg, step.profile)) << ','
          << FormatNumber(icn::UtilityC(cfg, step.profile)) << ','
          << FormatNumber(icn::UtilityO(cfg, step.profile)) << ','
          << RoutingString(step.profile.caching) << '\n';
    }
    Emit(out, csv.str());
    std::cout << "status=" << icn::StatusName(run.status)
              << " sweeps=" << run.sweeps << '\n';
    return kExitOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint caching and pricing game for hierarchical ICNs"};
  app.require_subcommand(1);
  SolveCmd solve;
  SweepCmd sweep;
  CostsCmd costs;
  VerifyCmd verify;
  AsymCmd asym;
  solve.Register(app);
  sweep.Register(app);
  costs.Register(app);
  verify.Register(app);
  asym.Register(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "solve") return solve.Run();
    if (name == "sweep") return sweep.Run();
    if (name == "costs") return costs.Run();
    if (name == "verify") return verify.Run();
    return asym.Run();
  } catch (const icn::InvalidParameter& e) {
    std::cerr << "error [" << e.field() << "]: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
