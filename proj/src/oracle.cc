#include "icn/oracle.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "icn/errors.h"

namespace icn {
namespace {

// Zipf masses, tails and popularity-scaled costs rebuilt from the raw
// parameters in extended precision.
struct RawModel {
  int m = 0;
  std::vector<double> q;     // [0, M+1], zero at both ends
  std::vector<double> tail;  // tail[k] = sum_{i>=k} q[i]
  double c0 = 0.0;
  double c_c0 = 0.0;
  double c_o = 0.0;

  explicit RawModel(const SymmetricConfig& cfg)
      : m(cfg.pm.num_contents()),
        q(m + 2, 0.0),
        tail(m + 2, 0.0),
        c0(cfg.costs.access_base),
        c_c0(cfg.costs.transit_base),
        c_o(cfg.costs.provider_unit_cost) {
    const long double gamma = cfg.pm.gamma();
    std::vector<long double> w(m + 2, 0.0L);
    long double norm = 0.0L;
    for (int i = 1; i <= m; ++i) {
      w[i] = std::pow(static_cast<long double>(i), -gamma);
      norm += w[i];
    }
    long double acc = 0.0L;
    for (int i = m; i >= 1; --i) {
      q[i] = static_cast<double>(w[i] / norm);
      acc += w[i] / norm;
      tail[i] = static_cast<double>(acc);
    }
    tail[0] = tail[1];
  }

  double AccessCost(int i) const { return c0 / q[i]; }
  double TransitCost(int i) const { return c_c0 / q[i]; }
  // Leader prices holding the follower at a threshold (epsilon -> 0).
  double TransitPrice(int th) const { return AccessCost(th < m ? th + 1 : m); }
  double StoragePrice(int th_c) const {
    return TransitCost(th_c < m ? th_c + 1 : m);
  }

  // Transit objective of the caching stage for the pair (th, th_c) when the
  // provider posts p_os.
  double TransitObjective(int th, int th_c, double p_os) const {
    return TransitPrice(th) * tail[th + 1] + (th - th_c) * c_c0 -
           p_os * tail[th_c + 1];
  }
  double ProviderObjective(int th_c, double p_os) const {
    return (p_os - c_o) * tail[th_c + 1];
  }
};

double Slack(double reference) {
  return 1e-9 * std::max(1.0, std::abs(reference));
}

std::string Describe(const char* what, double price, int th) {
  std::ostringstream os;
  os.precision(17);
  os << what << "=" << price << " threshold=" << th;
  return os.str();
}

DeviationReport Report(const std::string& player, double baseline,
                       double best, const std::string& action) {
  DeviationReport r{player, 0.0, ""};
  if (best > baseline) {
    r.best_gain = best - baseline;
    r.at_action = action;
  }
  return r;
}

}  // namespace

BruteForceOutcome BruteForceCachingGame(const SymmetricConfig& cfg) {
  Validate(cfg);
  if (cfg.pm.num_contents() > kOracleMaxContents) {
    throw ResourceLimit("brute-force caching game limited to M <= " +
                        std::to_string(kOracleMaxContents));
  }
  const RawModel raw(cfg);
  const int m = raw.m;

  // The objective separates in th and th_c, so the transit's ordering of its
  // own threshold is read off the row th_c = M, where every th is feasible.
  BruteForceOutcome out;
  double best_row = raw.TransitObjective(0, m, 0.0);
  for (int th = 1; th <= m; ++th) {
    const double v = raw.TransitObjective(th, m, 0.0);
    if (v > best_row) {
      best_row = v;
      out.th = th;
    }
  }

  int th_c_max = -1;
  double best_g = 0.0;
  for (int j = out.th; j <= m; ++j) {
    const double price = raw.StoragePrice(j);
    if (price < raw.c_o && j != m) continue;
    const double v = raw.ProviderObjective(j, price);
    if (th_c_max < 0 || v > best_g) {
      best_g = v;
      th_c_max = j;
    }
  }
  out.th_c = std::max(out.th, th_c_max);
  out.p_c = raw.TransitPrice(out.th);
  out.p_os = std::max(raw.StoragePrice(out.th_c), raw.c_o);
  out.f_value = out.p_c * raw.tail[out.th + 1] + out.th * raw.c_c0;
  out.g_value = raw.ProviderObjective(out.th_c, out.p_os);

  const double at_eq = raw.TransitObjective(out.th, out.th_c, out.p_os);
  out.transit_stable = true;
  for (int a = 0; a <= m && out.transit_stable; ++a) {
    for (int b = a; b <= m; ++b) {
      if (raw.TransitObjective(a, b, out.p_os) > at_eq + Slack(at_eq)) {
        out.transit_stable = false;
        break;
      }
    }
  }
  out.provider_stable = true;
  for (int j = out.th; j <= m; ++j) {
    if (raw.ProviderObjective(j, raw.StoragePrice(j)) >
        out.g_value + Slack(out.g_value)) {
      out.provider_stable = false;
      break;
    }
  }
  return out;
}

std::vector<int> CheckConcavity(std::span<const double> seq, double tol) {
  if (seq.size() < 3) {
    throw InvalidParameter("seq", "concavity check needs at least 3 terms");
  }
  std::vector<int> violations;
  for (std::size_t n = 1; n + 1 < seq.size(); ++n) {
    if (seq[n + 1] + seq[n - 1] - 2.0 * seq[n] >= tol) {
      violations.push_back(static_cast<int>(n));
    }
  }
  return violations;
}

double ConcavityKernel(int th, double gamma) {
  const double t = th;
  return std::pow(t / (t + 1.0), gamma) + std::pow((t + 2.0) / (t + 1.0), gamma) -
         2.0;
}

std::vector<DeviationReport> DeviationCheckSymmetric(
    const SymmetricConfig& cfg, const SymmetricEquilibrium& eq,
    const PriceGrid& grid) {
  const RawModel raw(cfg);
  const int m = raw.m;
  const DemandParams& d = cfg.demand;
  const double k = d.num_access;
  const std::vector<double> points = grid.Points();

  // Demand at ICN 0 when it posts `own` and the others keep eq.p_a.
  std::vector<double> prices(d.num_access, eq.p_a);
  auto access_demand = [&](double own, double p_oc) {
    prices[0] = own;
    const double s = DemandK(d, prices, p_oc, 0);
    prices[0] = eq.p_a;
    return s;
  };
  const double sigma_eq = access_demand(eq.p_a, eq.p_oc);

  std::vector<DeviationReport> reports;

  // Access ICN: price and threshold, transit price fixed.
  {
    auto cost = [&](int th) {
      return th * raw.c0 + eq.p_c * raw.tail[th + 1];
    };
    const double baseline = sigma_eq * (eq.p_a - cost(eq.th));
    double best = baseline;
    std::string action;
    // sigma(p) = s0 - rho p, so the exact best reply is (s0 + rho C)/(2 rho).
    const double s0 = access_demand(0.0, eq.p_oc);
    for (int th = 0; th <= m; ++th) {
      const double c = cost(th);
      auto consider = [&](double p) {
        const double sigma = access_demand(p, eq.p_oc);
        if (sigma < 0.0) return;
        const double u = sigma * (p - c);
        if (u > best) {
          best = u;
          action = Describe("p_a", p, th);
        }
      };
      for (double p : points) consider(p);
      consider((s0 + d.rho * c) / (2.0 * d.rho));
    }
    reports.push_back(Report("access", baseline, best, action));
  }

  // Transit: leader actions (P_C(a), a) and its own caching threshold b >= a.
  {
    auto value = [&](double p_c, int a, int b) {
      return k * sigma_eq *
             (p_c * raw.tail[a + 1] - (b - a) * raw.c_c0 -
              eq.p_os * raw.tail[b + 1]);
    };
    const double baseline = value(eq.p_c, eq.th, eq.th_c);
    double best = baseline;
    std::string action;
    for (int a = 0; a <= m; ++a) {
      const double p_c = raw.TransitPrice(a);
      for (int b = a; b <= m; ++b) {
        const double u = value(p_c, a, b);
        if (u > best) {
          best = u;
          action = Describe("p_c", p_c, a) + " th_c=" + std::to_string(b);
        }
      }
    }
    reports.push_back(Report("transit", baseline, best, action));
  }

  // Provider: storage price inducing a transit threshold, and content price.
  {
    auto value = [&](double p_oc, double margin) {
      return k * access_demand(eq.p_a, p_oc) * (p_oc + margin);
    };
    const double baseline =
        value(eq.p_oc, raw.ProviderObjective(eq.th_c, eq.p_os));
    double best = baseline;
    std::string action;
    for (int j = 0; j <= m; ++j) {
      const double p_os = raw.StoragePrice(j);
      // The transit never caches below the access threshold.
      const double margin = raw.ProviderObjective(std::max(j, eq.th), p_os);
      auto consider = [&](double p_oc) {
        if (access_demand(eq.p_a, p_oc) < 0.0) return;
        const double u = value(p_oc, margin);
        if (u > best) {
          best = u;
          action = Describe("p_os", p_os, std::max(j, eq.th)) +
                   " p_oc=" + std::to_string(p_oc);
        }
      };
      for (double p : points) consider(p);
      consider(std::max(0.0, (1.0 - d.rho0 * margin) / (2.0 * d.rho0)));
    }
    reports.push_back(Report("provider", baseline, best, action));
  }
  return reports;
}

}  // namespace icn
