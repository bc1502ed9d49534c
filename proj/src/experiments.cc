#include "icn/experiments.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "icn/errors.h"
#include "icn/oracle.h"

namespace icn {

SymmetricConfig MakeSymmetricConfig(int m, double gamma, double c0,
                                    double ratio, double c_o,
                                    const DemandParams& demand,
                                    double epsilon) {
  SymmetricConfig cfg{PopularityModel(m, gamma),
                      CostModel::FromRatio(c0, ratio, c_o), demand, epsilon};
  Validate(cfg);
  return cfg;
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

// Grid points are snapped to 12 decimals so that 0.01 * n lands on the
// nearest double of the decimal value rather than accumulating error.
double SnapGamma(double v) { return std::round(v * 1e12) / 1e12; }

std::size_t GammaCount(const SweepSpec& spec) {
  if (!(spec.gamma_step > 0.0) || !std::isfinite(spec.gamma_step)) {
    throw InvalidParameter("gamma-step",
                           "gamma-step must be positive and finite");
  }
  if (!std::isfinite(spec.gamma_from) || !std::isfinite(spec.gamma_to) ||
      spec.gamma_to < spec.gamma_from) {
    throw InvalidParameter("gamma-to", "empty gamma range");
  }
  const double n = std::floor((spec.gamma_to - spec.gamma_from) /
                                  spec.gamma_step + 1e-9) + 1.0;
  if (n > static_cast<double>(kMaxSweepPoints)) {
    throw InvalidParameter("gamma-step", "sweep grid too large");
  }
  return static_cast<std::size_t>(n);
}

}  // namespace

std::vector<double> GammaGrid(const SweepSpec& spec) {
  const std::size_t n = GammaCount(spec);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(SnapGamma(spec.gamma_from +
                            static_cast<double>(i) * spec.gamma_step));
  }
  return out;
}

void Validate(const SweepSpec& spec) {
  const std::size_t n = GammaCount(spec);
  if (spec.co_list.empty()) throw InvalidParameter("co", "empty c_O list");
  if (spec.r_list.empty()) throw InvalidParameter("r", "empty R list");
  const double total = static_cast<double>(n) *
                       static_cast<double>(spec.co_list.size()) *
                       static_cast<double>(spec.r_list.size());
  if (total > static_cast<double>(kMaxSweepPoints)) {
    throw InvalidParameter("gamma-step", "sweep grid too large");
  }
  for (double g : GammaGrid(spec)) {
    if (g < 0.0 || g > 1.0) {
      throw InvalidParameter("gamma", "gamma out of [0,1]: " + FormatNumber(g));
    }
  }
  Validate(spec.demand);
  for (double co : spec.co_list) {
    Validate(CostModel::FromRatio(spec.c0, 1.0, co));
  }
  for (double r : spec.r_list) {
    Validate(CostModel::FromRatio(spec.c0, r, 0.0));
  }
  if (spec.m < 1) throw InvalidParameter("m", "M must be >= 1");
}

SweepRow MakeRow(const SymmetricConfig& cfg, const SymmetricEquilibrium& eq) {
  SweepRow row;
  row.gamma = cfg.pm.gamma();
  row.m = cfg.pm.num_contents();
  row.k = cfg.demand.num_access;
  row.r = cfg.costs.cost_ratio;
  row.c0 = cfg.costs.access_base;
  row.co = cfg.costs.provider_unit_cost;
  row.rho = cfg.demand.rho;
  row.rho0 = cfg.demand.rho0;
  row.beta = cfg.demand.beta;
  row.th = eq.th;
  row.th_c = eq.th_c;
  row.p_c = eq.p_c;
  row.p_os = eq.p_os;
  row.p_a = eq.p_a;
  row.p_oc = eq.p_oc;
  row.sigma = eq.sigma;
  row.u_a = eq.u_a;
  row.u_c = eq.u_c;
  row.u_o = eq.u_o;
  return row;
}

std::vector<SweepRow> RunSweep(const SweepSpec& spec, int threads) {
  Validate(spec);
  const std::vector<double> gammas = GammaGrid(spec);
  const std::size_t per_gamma = spec.co_list.size() * spec.r_list.size();
  const std::size_t total = gammas.size() * per_gamma;
  std::vector<SweepRow> rows(total);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (std::size_t idx = next++; idx < total; idx = next++) {
      const std::size_t gi = idx / per_gamma;
      const std::size_t ci = (idx % per_gamma) / spec.r_list.size();
      const std::size_t ri = idx % spec.r_list.size();
      try {
        const SymmetricConfig cfg = MakeSymmetricConfig(
            spec.m, gammas[gi], spec.c0, spec.r_list[ri], spec.co_list[ci],
            spec.demand, spec.epsilon);
        rows[idx] = MakeRow(cfg, SolveEquilibrium(cfg));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = total;
      }
    }
  };

  const int n_threads = std::clamp<int>(
      threads, 1, static_cast<int>(std::min<std::size_t>(total, 64)));
  if (n_threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string FormatNumber(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string SweepCsvHeader() {
  return "gamma,M,K,R,c0,cO,rho,rho0,beta,Th,ThC,P_C,P_O_s,P_A,P_O_c,sigma,"
         "U_A,U_C,U_O";
}

std::string SweepCsvLine(const SweepRow& row) {
  std::string s;
  auto num = [&s](double v) {
    s += FormatNumber(v);
    s += ',';
  };
  auto integer = [&s](int v) {
    s += std::to_string(v);
    s += ',';
  };
  num(row.gamma);
  integer(row.m);
  integer(row.k);
  num(row.r);
  num(row.c0);
  num(row.co);
  num(row.rho);
  num(row.rho0);
  num(row.beta);
  integer(row.th);
  integer(row.th_c);
  num(row.p_c);
  num(row.p_os);
  num(row.p_a);
  num(row.p_oc);
  num(row.sigma);
  num(row.u_a);
  num(row.u_c);
  num(row.u_o);
  s.pop_back();
  return s;
}

void WriteSweepCsv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << SweepCsvHeader() << '\n';
  for (const auto& row : rows) out << SweepCsvLine(row) << '\n';
}

void WriteCostsCsv(std::ostream& out, const std::vector<double>& gammas,
                   int m, double c0) {
  if (!(c0 >= 0.0) || !std::isfinite(c0)) {
    throw InvalidParameter("c0", "c0 must be finite and >= 0");
  }
  std::vector<PopularityModel> models;
  for (double g : gammas) models.emplace_back(m, g);
  out << "gamma,i,cost\n";
  for (const auto& pm : models) {
    const std::string g = FormatNumber(pm.gamma());
    for (int i = 1; i <= m; ++i) {
      out << g << ',' << i << ',' << FormatNumber(CachingCost(c0, pm, i))
          << '\n';
    }
  }
}

// ---------------------------------------------------------------------------
// Config files

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

KeyValues ParseKeyValues(std::istream& in) {
  KeyValues out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = Trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    const std::string where = "line " + std::to_string(lineno);
    if (eq == std::string_view::npos) {
      throw InvalidParameter("config", where + ": expected key = value");
    }
    const std::string key(Trim(view.substr(0, eq)));
    const std::string value(Trim(view.substr(eq + 1)));
    if (key.empty()) throw InvalidParameter("config", where + ": empty key");
    if (value.empty()) {
      throw InvalidParameter(key, where + ": empty value for " + key);
    }
    if (!out.emplace(key, value).second) {
      throw InvalidParameter(key, where + ": duplicate key " + key);
    }
  }
  return out;
}

KeyValues LoadKeyValues(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("config", "cannot open config file " + path);
  return ParseKeyValues(in);
}

double ParseDouble(std::string_view text, const std::string& field) {
  text = Trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc() ||
      res.ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw InvalidParameter(field, field + ": not a finite number: '" +
                                      std::string(text) + "'");
  }
  return v;
}

int ParseInt(std::string_view text, const std::string& field) {
  text = Trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  int v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc() ||
      res.ptr != text.data() + text.size()) {
    throw InvalidParameter(field, field + ": not an integer: '" +
                                      std::string(text) + "'");
  }
  return v;
}

std::vector<double> ParseDoubleList(std::string_view text,
                                    const std::string& field) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(ParseDouble(text.substr(0, comma), field));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random configurations

namespace {

double Uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

SymmetricConfig RandomSymmetricConfig(std::mt19937_64& rng,
                                      const RandomConfigRanges& ranges) {
  const int m = UniformInt(rng, ranges.m_min, ranges.m_max);
  const double gamma = Uniform(rng, ranges.gamma_min, ranges.gamma_max);
  const double r = Uniform(rng, ranges.r_min, ranges.r_max);
  const double c0 = Uniform(rng, ranges.c0_min, ranges.c0_max);
  const PopularityModel pm(m, gamma);
  const double co_max = ranges.co_max_factor * CachingCost(c0, pm, m);
  const double co = Uniform(rng, ranges.co_min, std::max(co_max, ranges.co_min));
  return MakeSymmetricConfig(m, gamma, c0, r, co, DemandParams{});
}

AsymmetricCase RandomAsymmetricCase(std::mt19937_64& rng, int max_m) {
  const int m = UniformInt(rng, 2, std::max(2, max_m));
  AsymmetricConfig cfg{PopularityModel(m, Uniform(rng, 0.0, 1.0))};
  auto icn = [&rng] {
    return AccessIcnParams{Uniform(rng, 0.02, 0.3), Uniform(rng, 1.5, 20.0),
                           Uniform(rng, 0.3, 3.0)};
  };
  cfg.a = icn();
  cfg.b = icn();
  cfg.rho0 = Uniform(rng, 0.02, 0.3);
  cfg.transit_base = Uniform(rng, 0.1, 3.0);
  cfg.provider_unit_cost = Uniform(rng, 0.1, 100.0);
  Validate(cfg);

  const double top = DefaultGrid(cfg).max;
  StrategyProfile profile;
  profile.prices = {Uniform(rng, 0.0, top), Uniform(rng, 0.0, top),
                    Uniform(rng, 0.0, top), Uniform(rng, 0.0, top),
                    Uniform(rng, 0.0, top)};
  profile.caching.resize(m);
  for (auto& route : profile.caching) {
    route.a = static_cast<Source>(UniformInt(rng, 0, 3));
    route.b = static_cast<Source>(UniformInt(rng, 0, 3));
  }
  return {cfg, profile};
}

std::string DescribeConfig(const SymmetricConfig& cfg) {
  std::ostringstream os;
  os << "m = " << cfg.pm.num_contents() << '\n'
     << "k = " << cfg.demand.num_access << '\n'
     << "gamma = " << FormatNumber(cfg.pm.gamma()) << '\n'
     << "rho = " << FormatNumber(cfg.demand.rho) << '\n'
     << "rho0 = " << FormatNumber(cfg.demand.rho0) << '\n'
     << "beta = " << FormatNumber(cfg.demand.beta) << '\n'
     << "c0 = " << FormatNumber(cfg.costs.access_base) << '\n'
     << "r = " << FormatNumber(cfg.costs.cost_ratio) << '\n'
     << "co = " << FormatNumber(cfg.costs.provider_unit_cost) << '\n'
     << "epsilon = " << FormatNumber(cfg.epsilon_report) << '\n';
  return os.str();
}

namespace {

std::string DescribeAsymmetric(const AsymmetricCase& c) {
  std::ostringstream os;
  const auto& cfg = c.cfg;
  os << "m = " << cfg.pm.num_contents() << "\ngamma = "
     << FormatNumber(cfg.pm.gamma()) << "\nrho-a = " << FormatNumber(cfg.a.rho)
     << "\nrho-b = " << FormatNumber(cfg.b.rho)
     << "\nbeta-a = " << FormatNumber(cfg.a.beta)
     << "\nbeta-b = " << FormatNumber(cfg.b.beta)
     << "\nc0-a = " << FormatNumber(cfg.a.cache_base)
     << "\nc0-b = " << FormatNumber(cfg.b.cache_base)
     << "\nrho0 = " << FormatNumber(cfg.rho0)
     << "\ncc0 = " << FormatNumber(cfg.transit_base)
     << "\nco = " << FormatNumber(cfg.provider_unit_cost) << '\n';
  const auto& p = c.profile.prices;
  os << "prices: pA=" << FormatNumber(p.p_a) << " pB=" << FormatNumber(p.p_b)
     << " pC=" << FormatNumber(p.p_c) << " pOc=" << FormatNumber(p.p_oc)
     << " pOs=" << FormatNumber(p.p_os) << '\n';
  return os.str();
}

bool RelClose(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Records the first failure only.
struct Tally {
  VerifyOutcome out;
  void Check(bool ok, const std::function<std::string()>& describe) {
    ++out.checks;
    if (!ok && out.passed) {
      out.passed = false;
      out.counterexample = describe();
    }
  }
};

std::vector<double> Seq(const SymmetricConfig& cfg,
                        double (*fn)(const SymmetricConfig&, int)) {
  std::vector<double> s;
  for (int n = 0; n <= cfg.pm.num_contents(); ++n) s.push_back(fn(cfg, n));
  return s;
}

void ConcavityCase(Tally& t, const SymmetricConfig& cfg) {
  const auto f = Seq(cfg, &AccessSeq);
  const auto g = Seq(cfg, &ProviderSeq);
  if (f.size() < 3) return;
  const bool affine = cfg.pm.gamma() == 0.0;
  std::string what;
  bool ok = true;
  if (affine) {
    for (std::size_t n = 1; n + 1 < f.size(); ++n) {
      const double d2 = f[n + 1] + f[n - 1] - 2.0 * f[n];
      if (std::abs(d2) > 1e-12) {
        ok = false;
        what = "f second difference " + FormatNumber(d2) + " at n=" +
               std::to_string(n);
        break;
      }
    }
  } else if (auto v = CheckConcavity(f); !v.empty()) {
    ok = false;
    what = "f not concave at n=" + std::to_string(v.front());
  }
  if (ok) {
    if (auto v = CheckConcavity(g); !v.empty()) {
      ok = false;
      what = "g not concave at n=" + std::to_string(v.front());
    }
  }
  t.Check(ok, [&] { return what + '\n' + DescribeConfig(cfg); });
}

VerifyOutcome SuiteConcavity(std::mt19937_64& rng, int trials) {
  Tally t;
  for (int gi = 0; gi <= 10; ++gi) {
    for (int m : {10, 100}) {
      for (double r : {0.5, 0.7, 1.2}) {
        for (double co : {40.0, 60.0, 100.0}) {
          ConcavityCase(t, MakeSymmetricConfig(m, gi / 10.0, 1.0, r, co,
                                               DemandParams{}));
        }
      }
    }
  }
  RandomConfigRanges ranges;
  ranges.m_max = 200;
  ranges.gamma_min = 0.05;
  for (int i = 0; i < trials; ++i) {
    ConcavityCase(t, RandomSymmetricConfig(rng, ranges));
  }
  return t.out;
}

VerifyOutcome SuiteOracle(std::mt19937_64& rng, int trials) {
  Tally t;
  for (int i = 0; i < trials; ++i) {
    const SymmetricConfig cfg = RandomSymmetricConfig(rng);
    const CachingOutcome got = SolveCachingGame(cfg);
    const BruteForceOutcome want = BruteForceCachingGame(cfg);
    const bool ok = got.th == want.th && got.th_c == want.th_c &&
                    RelClose(got.p_c, want.p_c, 1e-12) &&
                    RelClose(got.p_os, want.p_os, 1e-12) &&
                    want.transit_stable && want.provider_stable;
    t.Check(ok, [&] {
      std::ostringstream os;
      os << "solver th=" << got.th << " thC=" << got.th_c
         << " pC=" << FormatNumber(got.p_c)
         << " pOs=" << FormatNumber(got.p_os) << "\noracle th=" << want.th
         << " thC=" << want.th_c << " pC=" << FormatNumber(want.p_c)
         << " pOs=" << FormatNumber(want.p_os)
         << " stable=" << want.transit_stable << want.provider_stable << '\n'
         << DescribeConfig(cfg);
      return os.str();
    });
  }
  return t.out;
}

VerifyOutcome SuiteVertexOptimality(std::mt19937_64& rng, int trials) {
  Tally t;
  for (int i = 0; i < trials; ++i) {
    const AsymmetricCase c = RandomAsymmetricCase(rng);
    for (int j = 0; j < 5; ++j) {
      const int rank = UniformInt(rng, 1, c.cfg.pm.num_contents());
      const bool ok = VerifyVertexOptimality(c.cfg, c.profile, rank, 64, rng());
      t.Check(ok, [&] {
        return "rank " + std::to_string(rank) + '\n' + DescribeAsymmetric(c);
      });
    }
  }
  return t.out;
}

bool AnyPeer(const CachingAssignment& caching) {
  return std::any_of(caching.begin(), caching.end(), [](const auto& r) {
    return r.a == Source::kPeer || r.b == Source::kPeer;
  });
}

VerifyOutcome SuiteNoPeer(std::mt19937_64& rng, int trials) {
  Tally t;
  RandomConfigRanges ranges;
  ranges.m_max = 12;
  ranges.gamma_min = 0.05;
  for (int i = 0; i < trials; ++i) {
    const SymmetricConfig cfg = RandomSymmetricConfig(rng, ranges);
    const AsymmetricConfig acfg = FromSymmetric(cfg);
    const StrategyProfile ne = ProfileFromSymmetric(cfg, SolveEquilibrium(cfg));
    t.Check(!AnyPeer(ne.caching),
            [&] { return "Peer at the NE profile\n" + DescribeConfig(cfg); });

    // Arbitrary price points, including asymmetric access prices.
    const double top = DefaultGrid(acfg).max;
    for (int j = 0; j < 20; ++j) {
      Prices p{Uniform(rng, 0.0, top), Uniform(rng, 0.0, top),
               Uniform(rng, 0.0, top), Uniform(rng, 0.0, top),
               Uniform(rng, 0.0, top)};
      t.Check(!AnyPeer(ResolveAll(acfg, p)), [&] {
        return "Peer at random prices pA=" + FormatNumber(p.p_a) +
               " pB=" + FormatNumber(p.p_b) + " pC=" + FormatNumber(p.p_c) +
               " pOs=" + FormatNumber(p.p_os) + '\n' + DescribeConfig(cfg);
      });
    }

    // Every profile visited by best-response play from a symmetric start.
    PriceGrid grid = DefaultGrid(acfg);
    grid.step = grid.max / 60.0;
    StrategyProfile start;
    const double p0 = Uniform(rng, 0.0, top);
    start.prices = {p0, p0, Uniform(rng, 0.0, top), Uniform(rng, 0.0, top),
                    Uniform(rng, 0.0, top)};
    IterateOptions opts;
    opts.max_iter = 3;
    const BestResponseRun run = IterateBestResponse(acfg, start, grid, opts);
    for (const auto& step : run.trace) {
      t.Check(!AnyPeer(step.profile.caching), [&] {
        return "Peer during best-response play, sweep " +
               std::to_string(step.sweep) + '\n' + DescribeConfig(cfg);
      });
    }
  }
  return t.out;
}

void DeviationCase(Tally& t, const SymmetricConfig& cfg) {
  const SymmetricEquilibrium eq = SolveEquilibrium(cfg);
  const auto reports =
      DeviationCheckSymmetric(cfg, eq, DefaultGrid(FromSymmetric(cfg)));
  for (const auto& rep : reports) {
    t.Check(rep.best_gain <= 1e-9, [&] {
      return rep.player + " gains " + FormatNumber(rep.best_gain) + " via " +
             rep.at_action + '\n' + DescribeConfig(cfg);
    });
  }
}

VerifyOutcome SuiteDeviation(std::mt19937_64& rng, int trials) {
  Tally t;
  for (double gamma : {0.1, 0.5, 0.9}) {
    for (double co : {40.0, 60.0, 100.0}) {
      for (double r : {0.5, 0.7}) {
        DeviationCase(t, MakeSymmetricConfig(100, gamma, 1.0, r, co,
                                             DemandParams{}));
      }
    }
  }
  RandomConfigRanges ranges;
  ranges.gamma_min = 0.05;
  for (int i = 0; i < trials; ++i) {
    DeviationCase(t, RandomSymmetricConfig(rng, ranges));
  }
  return t.out;
}

VerifyOutcome SuiteKInvariance(std::mt19937_64& rng, int trials) {
  Tally t;
  RandomConfigRanges ranges;
  ranges.m_max = 200;
  ranges.gamma_min = 0.01;
  for (int i = 0; i < trials; ++i) {
    SymmetricConfig cfg = RandomSymmetricConfig(rng, ranges);
    cfg.demand.num_access = 1;
    const SymmetricEquilibrium base = SolveEquilibrium(cfg);
    for (int k : {2, 5, 10}) {
      cfg.demand.num_access = k;
      const SymmetricEquilibrium eq = SolveEquilibrium(cfg);
      const bool same = eq.th == base.th && eq.th_c == base.th_c &&
                        eq.p_c == base.p_c && eq.p_os == base.p_os &&
                        eq.p_a == base.p_a && eq.p_oc == base.p_oc &&
                        eq.reported_p_c == base.reported_p_c &&
                        eq.reported_p_os == base.reported_p_os;
      const bool linear = RelClose(eq.u_c, k * base.u_c, 1e-12) &&
                          RelClose(eq.u_o, k * base.u_o, 1e-12);
      t.Check(same && linear, [&] {
        return "K=" + std::to_string(k) + " differs from K=1 (" +
               (same ? "utilities" : "thresholds/prices") + ")\n" +
               DescribeConfig(cfg);
      });
    }
  }
  return t.out;
}

}  // namespace

VerifyOutcome RunVerifySuite(std::string_view suite, std::uint64_t seed,
                             int trials) {
  if (trials < 0) throw InvalidParameter("trials", "trials must be >= 0");
  std::mt19937_64 rng(seed);
  if (suite == "concavity") return SuiteConcavity(rng, trials);
  if (suite == "oracle") return SuiteOracle(rng, trials);
  if (suite == "theorem1") return SuiteVertexOptimality(rng, trials);
  if (suite == "theorem2") return SuiteNoPeer(rng, trials);
  if (suite == "deviation") return SuiteDeviation(rng, trials);
  if (suite == "k-invariance") return SuiteKInvariance(rng, trials);
  throw InvalidParameter("suite", "unknown suite: " + std::string(suite));
}

}  // namespace icn
