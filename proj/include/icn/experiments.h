#ifndef ICN_EXPERIMENTS_H_
#define ICN_EXPERIMENTS_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "icn/asymmetric_game.h"
#include "icn/symmetric_solver.h"

namespace icn {

// Builds a symmetric configuration with the transit base cost given as a
// ratio of the access base cost.
SymmetricConfig MakeSymmetricConfig(int m, double gamma, double c0,
                                    double ratio, double c_o,
                                    const DemandParams& demand,
                                    double epsilon = 1e-9);

// ---------------------------------------------------------------------------
// Parameter sweeps

struct SweepSpec {
  double gamma_from = 0.01;
  double gamma_to = 1.0;
  double gamma_step = 0.01;
  std::vector<double> co_list{40.0, 60.0, 100.0};
  std::vector<double> r_list{0.7};
  int m = 100;
  double c0 = 1.0;
  DemandParams demand;
  double epsilon = 1e-9;
};

inline constexpr std::size_t kMaxSweepPoints = 1'000'000;

struct SweepRow {
  double gamma = 0.0;
  int m = 0;
  int k = 0;
  double r = 0.0;
  double c0 = 0.0;
  double co = 0.0;
  double rho = 0.0;
  double rho0 = 0.0;
  double beta = 0.0;
  int th = 0;
  int th_c = 0;
  double p_c = 0.0;
  double p_os = 0.0;
  double p_a = 0.0;
  double p_oc = 0.0;
  double sigma = 0.0;
  double u_a = 0.0;
  double u_c = 0.0;
  double u_o = 0.0;
};

// gamma_from + n * gamma_step for n = 0.. while <= gamma_to (1e-9 slack).
std::vector<double> GammaGrid(const SweepSpec& spec);

// Throws InvalidParameter for a non-positive step, empty lists, or more than
// kMaxSweepPoints grid points.
void Validate(const SweepSpec& spec);

SweepRow MakeRow(const SymmetricConfig& cfg, const SymmetricEquilibrium& eq);

// Rows ordered gamma (ascending), then c_O, then R, in list order. Grid
// points are solved on up to `threads` workers; ordering does not depend on
// scheduling.
std::vector<SweepRow> RunSweep(const SweepSpec& spec, int threads = 1);

// Decimal rendering with 17 significant digits, independent of locale.
std::string FormatNumber(double value);

std::string SweepCsvHeader();
std::string SweepCsvLine(const SweepRow& row);
void WriteSweepCsv(std::ostream& out, const std::vector<SweepRow>& rows);

// (gamma, rank, access caching cost) for every gamma and rank 1..M.
void WriteCostsCsv(std::ostream& out, const std::vector<double>& gammas,
                   int m, double c0);

// ---------------------------------------------------------------------------
// Configuration files: UTF-8 lines "key = value", '#' starts a comment.

using KeyValues = std::map<std::string, std::string>;

// Throws InvalidParameter naming the line on malformed input.
KeyValues ParseKeyValues(std::istream& in);
KeyValues LoadKeyValues(const std::string& path);

// Strict numeric conversions; throw InvalidParameter naming `field`.
double ParseDouble(std::string_view text, const std::string& field);
int ParseInt(std::string_view text, const std::string& field);
std::vector<double> ParseDoubleList(std::string_view text,
                                    const std::string& field);

// ---------------------------------------------------------------------------
// Randomized verification

struct RandomConfigRanges {
  int m_min = 2;
  int m_max = 50;
  double gamma_min = 0.0;
  double gamma_max = 1.0;
  double r_min = 0.3;
  double r_max = 1.5;
  // c_O drawn from [co_min, co_max_factor * c_A(M)].
  double co_min = 0.1;
  double co_max_factor = 2.0;
  double c0_min = 0.5;
  double c0_max = 2.0;
};

// Demand parameters at their defaults (rho = rho0 = 0.1, beta = 10,
// K = 2); everything else drawn uniformly from `ranges`.
SymmetricConfig RandomSymmetricConfig(std::mt19937_64& rng,
                                      const RandomConfigRanges& ranges = {});

struct AsymmetricCase {
  AsymmetricConfig cfg;
  StrategyProfile profile;
};

// Independent per-ICN parameters, prices and an arbitrary (not resolved)
// vertex caching assignment. M in [2, max_m].
AsymmetricCase RandomAsymmetricCase(std::mt19937_64& rng, int max_m = 30);

struct VerifyOutcome {
  bool passed = true;
  int checks = 0;
  std::string counterexample;  // first failing configuration, if any
};

inline constexpr std::string_view kVerifySuites[] = {
    "concavity", "oracle", "theorem1", "theorem2", "deviation", "k-invariance"};

// Throws InvalidParameter("suite") for an unknown suite name.
VerifyOutcome RunVerifySuite(std::string_view suite, std::uint64_t seed,
                             int trials);

// Multi-line dump of every parameter, for counterexample reports.
std::string DescribeConfig(const SymmetricConfig& cfg);

}  // namespace icn

#endif  // ICN_EXPERIMENTS_H_
