#ifndef ICN_ECONOMICS_H_
#define ICN_ECONOMICS_H_

#include <span>
#include <utility>

#include "icn/popularity.h"

namespace icn {

// Base caching costs (money per unit data) before popularity scaling.
struct CostModel {
  double access_base = 0.0;         // c_0, per access ICN
  double transit_base = 0.0;        // c_C0
  double provider_unit_cost = 0.0;  // c_O, flat over all content
  double cost_ratio = 0.0;          // R = transit_base / access_base

  // transit_base = ratio * access_base.
  static CostModel FromRatio(double access_base, double ratio,
                             double provider_unit_cost);
};

// Linear demand coefficients shared by K symmetric access ICNs.
struct DemandParams {
  double rho = 0.1;   // own-price sensitivity
  double rho0 = 0.1;  // content-price sensitivity
  double beta = 10.0;  // network/storage price scaling, P^(n) = beta P^(s)
  int num_access = 2;  // K
};

// Per-ICN sensitivities for the two-ICN demand system.
struct TwoIcnDemand {
  double rho_a = 0.1;
  double rho_b = 0.1;
  double rho0 = 0.1;
};

// Throws InvalidParameter naming the first offending field.
void Validate(const CostModel& costs);
void Validate(const DemandParams& demand);

// Popularity-scaled caching cost c_i = base / q(i). Rank must be in [1, M].
double CachingCost(double base, const PopularityModel& pm, int rank);

// Storage share of a total access price, P/(1+beta).
inline double StoragePrice(double total_price, double beta) {
  return total_price / (1.0 + beta);
}

// (sigma_A, sigma_B) for prices (P_A, P_B) and content price P_O^(c).
// Raw linear form; the result may be negative.
std::pair<double, double> DemandTwo(const TwoIcnDemand& d, double price_a,
                                    double price_b, double content_price);

// Demand at access ICN `j` (0-based position in `prices`) when K ICNs post
// `prices`. Competitors enter through their average price; with K == 1 the
// competitor term is empty. Throws InvalidParameter if prices.size() != K and
// IndexOutOfRange for a bad j.
double DemandK(const DemandParams& d, std::span<const double> prices,
               double content_price, int j);

}  // namespace icn

#endif  // ICN_ECONOMICS_H_
