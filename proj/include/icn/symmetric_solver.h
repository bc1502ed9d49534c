#ifndef ICN_SYMMETRIC_SOLVER_H_
#define ICN_SYMMETRIC_SOLVER_H_

#include "icn/economics.h"
#include "icn/popularity.h"

namespace icn {

// Full parameterization of the game with K identical access ICNs.
struct SymmetricConfig {
  PopularityModel pm;
  CostModel costs;
  DemandParams demand;
  // Offset applied to reported leader prices (cost minus/plus epsilon).
  // Equilibrium arithmetic itself always works at the epsilon -> 0 limit.
  double epsilon_report = 1e-9;
};

// Throws InvalidParameter on the first violated field.
void Validate(const SymmetricConfig& cfg);

// Outcome of the caching stage: thresholds and the leader prices that
// induce them (limit values).
struct CachingOutcome {
  int th = 0;        // access ICNs cache ranks 1..th
  int th_c = 0;      // transit caches ranks th+1..th_c; provider serves the rest
  double p_c = 0.0;  // transit price
  double p_os = 0.0;  // provider storage price
};

struct PricingOutcome {
  double p_a = 0.0;   // common access price
  double p_oc = 0.0;  // content price
};

struct SymmetricEquilibrium {
  int th = 0;
  int th_c = 0;
  double p_c = 0.0;
  double p_os = 0.0;
  double p_a = 0.0;
  double p_oc = 0.0;
  // Leader prices with epsilon_report applied, for display.
  double reported_p_c = 0.0;
  double reported_p_os = 0.0;
  double sigma = 0.0;  // per-ICN demand
  double u_a = 0.0;    // per access ICN
  double u_c = 0.0;
  double u_o = 0.0;
};

// Largest transit price that keeps the access threshold at `th`, in the
// epsilon -> 0 limit: c_A(th+1) for th < M, c_A(M) for th == M.
double InducedTransitPrice(const SymmetricConfig& cfg, int th);
// Same construction on the transit cost scale c_C(.) for threshold th_c.
double InducedStoragePrice(const SymmetricConfig& cfg, int th_c);

// Induced prices with the display offset: cost - epsilon below M,
// cost + epsilon at M.
double ReportedTransitPrice(const SymmetricConfig& cfg, int th);
double ReportedStoragePrice(const SymmetricConfig& cfg, int th_c);

// Transit objective as a function of the access threshold it induces:
//   f(th) = P_C(th) * Q(th+1) + th * c_C0,   Q(k) = sum_{i>=k} q(i).
double AccessSeq(const SymmetricConfig& cfg, int th);
// Provider storage margin as a function of the transit threshold:
//   g(th_c) = (P_O^(s)(th_c) - c_O) * Q(th_c+1).
double ProviderSeq(const SymmetricConfig& cfg, int th_c);

// Access follower response: largest rank whose caching cost is covered by
// p_c, or 0 when none is.
int AccessBestThreshold(const SymmetricConfig& cfg, double p_c);
// Transit follower response to a storage price, never below th_floor.
int TransitBestThreshold(const SymmetricConfig& cfg, double p_os,
                         int th_floor);

CachingOutcome SolveCachingGame(const SymmetricConfig& cfg);
PricingOutcome SolvePricing(const SymmetricConfig& cfg,
                            const CachingOutcome& caching);
SymmetricEquilibrium SolveEquilibrium(const SymmetricConfig& cfg);

}  // namespace icn

#endif  // ICN_SYMMETRIC_SOLVER_H_
