#ifndef ICN_ORACLE_H_
#define ICN_ORACLE_H_

#include <span>
#include <string>
#include <vector>

#include "icn/asymmetric_game.h"
#include "icn/symmetric_solver.h"

namespace icn {

// Independent checks of the closed-form solver. Nothing here calls into the
// solver's arithmetic: popularity, costs and tails are recomputed from the
// raw parameters.

// Largest M the exhaustive search accepts.
inline constexpr int kOracleMaxContents = 10'000;

struct BruteForceOutcome {
  int th = 0;
  int th_c = 0;
  double p_c = 0.0;
  double p_os = 0.0;
  double f_value = 0.0;  // transit objective at th
  double g_value = 0.0;  // provider storage margin at th_c
  // No unilateral improvement was found for the transit (joint threshold
  // pair) or the provider (storage price) at the returned point.
  bool transit_stable = false;
  bool provider_stable = false;
};

// Enumerates every pair 0 <= th <= th_c <= M under induced prices.
// Throws ResourceLimit when M exceeds kOracleMaxContents.
BruteForceOutcome BruteForceCachingGame(const SymmetricConfig& cfg);

// Indices n in [1, size-2] with s(n+1) + s(n-1) - 2 s(n) >= tol.
// Throws InvalidParameter for sequences shorter than 3.
std::vector<int> CheckConcavity(std::span<const double> seq,
                                double tol = 1e-12);

// (Th/(Th+1))^gamma + ((Th+2)/(Th+1))^gamma - 2.
double ConcavityKernel(int th, double gamma);

struct DeviationReport {
  std::string player;
  double best_gain = 0.0;  // >= 0; 0 when nothing improves
  std::string at_action;   // empty when best_gain == 0
};

// Searches each player's unilateral alternatives at `eq`:
//   access ICN  - own price over the grid (plus its exact best reply) and
//                 every threshold 0..M at the posted transit price;
//   transit     - every induced (P_C, Th) leader action and Th_C >= Th;
//   provider    - every induced (P_O^(s), Th_C) action and P_O^(c) over the
//                 grid (plus its exact best reply).
// Other players stay at `eq`. Prices that drive the deviator's demand below
// zero fall outside the linear demand model and are not candidates.
std::vector<DeviationReport> DeviationCheckSymmetric(
    const SymmetricConfig& cfg, const SymmetricEquilibrium& eq,
    const PriceGrid& grid);

}  // namespace icn

#endif  // ICN_ORACLE_H_
