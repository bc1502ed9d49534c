#include "icn/symmetric_solver.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "icn/errors.h"

namespace icn {
namespace {

void CheckThreshold(const SymmetricConfig& cfg, int th, const char* what) {
  if (th < 0 || th > cfg.pm.num_contents()) {
    throw IndexOutOfRange(std::string(what) + " " + std::to_string(th) +
                          " outside [0, " +
                          std::to_string(cfg.pm.num_contents()) + "]");
  }
}

// Cost of the rank a leader price must stay below to hold threshold `th`.
// Rank 0 has zero cost.
double BoundaryCost(double base, const PopularityModel& pm, int rank) {
  return rank == 0 ? 0.0 : CachingCost(base, pm, rank);
}

double Induced(double base, const PopularityModel& pm, int th) {
  const int m = pm.num_contents();
  return CachingCost(base, pm, th < m ? th + 1 : m);
}

double Reported(double base, const PopularityModel& pm, int th, double eps) {
  const int m = pm.num_contents();
  return th < m ? CachingCost(base, pm, th + 1) - eps
                : CachingCost(base, pm, m) + eps;
}

// Largest rank in [1, M] with cost <= price, 0 if none.
int LargestCoveredRank(double base, const PopularityModel& pm, double price) {
  int best = 0;
  for (int i = 1; i <= pm.num_contents(); ++i) {
    if (CachingCost(base, pm, i) <= price) {
      best = i;
    } else {
      break;  // costs are nondecreasing in rank
    }
  }
  return best;
}

// epsilon must not push a reported price below the next lower cost; when
// the two costs coincide (gamma == 0) the threshold is degenerate anyway.
void CheckEpsilonGap(const SymmetricConfig& cfg, double base, int th) {
  const int m = cfg.pm.num_contents();
  if (th >= m) return;
  const double gap = CachingCost(base, cfg.pm, th + 1) -
                     BoundaryCost(base, cfg.pm, th);
  if (gap > 0.0 && cfg.epsilon_report >= gap) {
    throw InvalidParameter(
        "epsilon", "epsilon " + std::to_string(cfg.epsilon_report) +
                       " is not below the cost gap " + std::to_string(gap) +
                       " at threshold " + std::to_string(th));
  }
}

}  // namespace

void Validate(const SymmetricConfig& cfg) {
  Validate(cfg.costs);
  Validate(cfg.demand);
  if (!(cfg.epsilon_report > 0.0) || !std::isfinite(cfg.epsilon_report)) {
    throw InvalidParameter("epsilon", "epsilon must be positive");
  }
}

double InducedTransitPrice(const SymmetricConfig& cfg, int th) {
  CheckThreshold(cfg, th, "access threshold");
  return Induced(cfg.costs.access_base, cfg.pm, th);
}

double InducedStoragePrice(const SymmetricConfig& cfg, int th_c) {
  CheckThreshold(cfg, th_c, "transit threshold");
  return Induced(cfg.costs.transit_base, cfg.pm, th_c);
}

double ReportedTransitPrice(const SymmetricConfig& cfg, int th) {
  CheckThreshold(cfg, th, "access threshold");
  return Reported(cfg.costs.access_base, cfg.pm, th, cfg.epsilon_report);
}

double ReportedStoragePrice(const SymmetricConfig& cfg, int th_c) {
  CheckThreshold(cfg, th_c, "transit threshold");
  return Reported(cfg.costs.transit_base, cfg.pm, th_c, cfg.epsilon_report);
}

double AccessSeq(const SymmetricConfig& cfg, int th) {
  return InducedTransitPrice(cfg, th) * cfg.pm.TailMass(th + 1) +
         th * cfg.costs.transit_base;
}

double ProviderSeq(const SymmetricConfig& cfg, int th_c) {
  return (InducedStoragePrice(cfg, th_c) - cfg.costs.provider_unit_cost) *
         cfg.pm.TailMass(th_c + 1);
}

int AccessBestThreshold(const SymmetricConfig& cfg, double p_c) {
  return LargestCoveredRank(cfg.costs.access_base, cfg.pm, p_c);
}

int TransitBestThreshold(const SymmetricConfig& cfg, double p_os,
                         int th_floor) {
  CheckThreshold(cfg, th_floor, "threshold floor");
  return std::max(th_floor,
                  LargestCoveredRank(cfg.costs.transit_base, cfg.pm, p_os));
}

CachingOutcome SolveCachingGame(const SymmetricConfig& cfg) {
  Validate(cfg);
  const int m = cfg.pm.num_contents();

  // Transit (leader of the access ICNs) picks the threshold it induces.
  int th = 0;
  double best_f = AccessSeq(cfg, 0);
  for (int n = 1; n <= m; ++n) {
    const double v = AccessSeq(cfg, n);
    if (v > best_f) {
      best_f = v;
      th = n;
    }
  }

  // Provider picks the transit threshold among those it can price at or
  // above its own cost; th_c = M (serve nothing) is always admissible.
  const double c_o = cfg.costs.provider_unit_cost;
  int th_c_max = m;
  double best_g = ProviderSeq(cfg, m);
  for (int n = th; n < m; ++n) {
    if (InducedStoragePrice(cfg, n) < c_o) continue;
    const double v = ProviderSeq(cfg, n);
    if (v > best_g || (v == best_g && n < th_c_max)) {
      best_g = v;
      th_c_max = n;
    }
  }

  CachingOutcome out;
  out.th = th;
  out.th_c = std::max(th, th_c_max);
  out.p_c = InducedTransitPrice(cfg, out.th);
  out.p_os = std::max(InducedStoragePrice(cfg, out.th_c), c_o);
  return out;
}

PricingOutcome SolvePricing(const SymmetricConfig& cfg,
                            const CachingOutcome& caching) {
  const double rho = cfg.demand.rho;
  const double rho0 = cfg.demand.rho0;
  if (!(rho > 0.0)) throw InvalidParameter("rho", "rho must be positive");
  if (!(rho0 > 0.0)) throw InvalidParameter("rho0", "rho0 must be positive");

  const double provider_tail = cfg.pm.TailMass(caching.th_c + 1);
  const double storage_margin =
      (caching.p_os - cfg.costs.provider_unit_cost) * provider_tail;

  PricingOutcome out;
  out.p_oc = std::max(0.0, (1.0 - rho0 * storage_margin) / (2.0 * rho0));

  const double access_cost = caching.th * cfg.costs.access_base +
                             caching.p_c * cfg.pm.TailMass(caching.th + 1);
  out.p_a = (rho * access_cost + 1.0 - rho0 * out.p_oc) / rho;
  return out;
}

SymmetricEquilibrium SolveEquilibrium(const SymmetricConfig& cfg) {
  const CachingOutcome caching = SolveCachingGame(cfg);
  const PricingOutcome pricing = SolvePricing(cfg, caching);

  CheckEpsilonGap(cfg, cfg.costs.access_base, caching.th);
  CheckEpsilonGap(cfg, cfg.costs.transit_base, caching.th_c);

  SymmetricEquilibrium eq;
  eq.th = caching.th;
  eq.th_c = caching.th_c;
  eq.p_c = caching.p_c;
  eq.p_os = caching.p_os;
  eq.p_a = pricing.p_a;
  eq.p_oc = pricing.p_oc;
  eq.reported_p_c = ReportedTransitPrice(cfg, eq.th);
  eq.reported_p_os = std::max(ReportedStoragePrice(cfg, eq.th_c),
                              cfg.costs.provider_unit_cost);

  const double k = cfg.demand.num_access;
  const double access_tail = cfg.pm.TailMass(eq.th + 1);
  const double provider_tail = cfg.pm.TailMass(eq.th_c + 1);
  eq.sigma = 1.0 - cfg.demand.rho0 * eq.p_oc;
  eq.u_a = eq.sigma *
           (eq.p_a - eq.th * cfg.costs.access_base - eq.p_c * access_tail);
  eq.u_c = k * eq.sigma *
           (eq.p_c * access_tail -
            (eq.th_c - eq.th) * cfg.costs.transit_base -
            eq.p_os * provider_tail);
  eq.u_o = k * eq.sigma *
           (eq.p_oc +
            (eq.p_os - cfg.costs.provider_unit_cost) * provider_tail);
  return eq;
}

}  // namespace icn
