#ifndef ICN_POPULARITY_H_
#define ICN_POPULARITY_H_

#include <vector>

namespace icn {

// Generalized Zipf popularity over M content types ranked 1..M, where rank 1
// is the most requested item:
//
//   q(m) = omega / m^gamma,   omega = 1 / sum_{i=1..M} i^-gamma.
//
// Ranks 0 and M+1 are accepted as boundary sentinels with zero mass, which
// lets threshold formulas index one past either end without special cases.
//
// Immutable after construction.
class PopularityModel {
 public:
  // Throws InvalidParameter ("M" or "gamma") unless M >= 1 and
  // 0 <= gamma <= 1.
  PopularityModel(int num_contents, double gamma);

  int num_contents() const { return num_contents_; }
  double gamma() const { return gamma_; }
  double omega() const { return omega_; }

  // q(m) for 1 <= m <= M; exactly 0 at m = 0 and m = M+1.
  // Throws IndexOutOfRange otherwise.
  double Mass(int m) const;

  // sum_{i=from}^{M+1} q(i). TailMass(M+1) is exactly 0.
  // Throws IndexOutOfRange unless 0 <= from <= M+1.
  double TailMass(int from) const;

 private:
  int num_contents_;
  double gamma_;
  double omega_;
  // mass_[m] and tail_[m] for m in [0, M+1].
  std::vector<double> mass_;
  std::vector<double> tail_;
};

}  // namespace icn

#endif  // ICN_POPULARITY_H_
