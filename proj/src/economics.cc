#include "icn/economics.h"

#include <cmath>
#include <string>

#include "icn/errors.h"

namespace icn {
namespace {

void RequireNonNegative(double value, const char* field) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw InvalidParameter(field, std::string(field) +
                                      " must be a finite nonnegative number");
  }
}

void RequirePositive(double value, const char* field) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InvalidParameter(field, std::string(field) + " must be positive");
  }
}

}  // namespace

CostModel CostModel::FromRatio(double access_base, double ratio,
                               double provider_unit_cost) {
  CostModel c;
  c.access_base = access_base;
  c.transit_base = ratio * access_base;
  c.provider_unit_cost = provider_unit_cost;
  c.cost_ratio = ratio;
  return c;
}

void Validate(const CostModel& costs) {
  RequireNonNegative(costs.access_base, "c0");
  RequireNonNegative(costs.transit_base, "cC0");
  RequireNonNegative(costs.provider_unit_cost, "co");
  RequireNonNegative(costs.cost_ratio, "r");
}

void Validate(const DemandParams& demand) {
  RequirePositive(demand.rho, "rho");
  RequirePositive(demand.rho0, "rho0");
  if (!(demand.beta > 1.0) || !std::isfinite(demand.beta)) {
    throw InvalidParameter("beta", "beta must be greater than 1");
  }
  if (demand.num_access < 1) {
    throw InvalidParameter("k", "k must be at least 1");
  }
}

double CachingCost(double base, const PopularityModel& pm, int rank) {
  if (rank < 1 || rank > pm.num_contents()) {
    throw IndexOutOfRange("caching cost undefined for rank " +
                          std::to_string(rank));
  }
  return base / pm.Mass(rank);
}

std::pair<double, double> DemandTwo(const TwoIcnDemand& d, double price_a,
                                    double price_b, double content_price) {
  const double sigma_a =
      1.0 - d.rho_a * price_a + d.rho_b * price_b - d.rho0 * content_price;
  const double sigma_b =
      1.0 + d.rho_a * price_a - d.rho_b * price_b - d.rho0 * content_price;
  return {sigma_a, sigma_b};
}

double DemandK(const DemandParams& d, std::span<const double> prices,
               double content_price, int j) {
  if (static_cast<int>(prices.size()) != d.num_access) {
    throw InvalidParameter("prices", "expected " +
                                         std::to_string(d.num_access) +
                                         " access prices, got " +
                                         std::to_string(prices.size()));
  }
  if (j < 0 || j >= d.num_access) {
    throw IndexOutOfRange("access ICN index " + std::to_string(j));
  }
  // Competitor prices enter relative to the own price so that equal prices
  // cancel exactly, leaving 1 - rho0 * P_O^(c).
  double spread = 0.0;
  for (int k = 0; k < d.num_access; ++k) {
    if (k != j) spread += prices[k] - prices[j];
  }
  const double price_term =
      d.num_access > 1
          ? d.rho * spread / static_cast<double>(d.num_access - 1)
          : -d.rho * prices[j];
  return 1.0 - d.rho0 * content_price + price_term;
}

}  // namespace icn
