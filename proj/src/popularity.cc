#include "icn/popularity.h"

#include <cmath>
#include <string>

#include "icn/errors.h"

namespace icn {
namespace {

// i^-gamma via exp(-gamma ln i); exact 1 for gamma == 0.
double InversePower(int i, double gamma) {
  return std::exp(-gamma * std::log(static_cast<double>(i)));
}

}  // namespace

PopularityModel::PopularityModel(int num_contents, double gamma)
    : num_contents_(num_contents), gamma_(gamma), omega_(0.0) {
  if (num_contents < 1) {
    throw InvalidParameter("M", "M must be at least 1, got " +
                                    std::to_string(num_contents));
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw InvalidParameter("gamma", "gamma out of [0,1]: " +
                                        std::to_string(gamma));
  }

  const int m = num_contents;
  std::vector<double> weight(m + 2, 0.0);
  for (int i = 1; i <= m; ++i) weight[i] = InversePower(i, gamma);

  // Smallest terms first.
  double norm = 0.0;
  for (int i = m; i >= 1; --i) norm += weight[i];
  omega_ = 1.0 / norm;

  mass_.assign(m + 2, 0.0);
  for (int i = 1; i <= m; ++i) mass_[i] = omega_ * weight[i];

  tail_.assign(m + 2, 0.0);
  for (int i = m; i >= 0; --i) tail_[i] = tail_[i + 1] + mass_[i];
}

double PopularityModel::Mass(int m) const {
  if (m < 0 || m > num_contents_ + 1) {
    throw IndexOutOfRange("content rank " + std::to_string(m) +
                          " outside [0, " + std::to_string(num_contents_ + 1) +
                          "]");
  }
  return mass_[m];
}

double PopularityModel::TailMass(int from) const {
  if (from < 0 || from > num_contents_ + 1) {
    throw IndexOutOfRange("tail start " + std::to_string(from) +
                          " outside [0, " + std::to_string(num_contents_ + 1) +
                          "]");
  }
  return tail_[from];
}

}  // namespace icn
