#ifndef ICN_ASYMMETRIC_GAME_H_
#define ICN_ASYMMETRIC_GAME_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "icn/economics.h"
#include "icn/popularity.h"
#include "icn/symmetric_solver.h"

namespace icn {

// Two access ICNs (A, B) that may differ in every parameter, one transit ICN
// (C) and one content provider (O).

struct AccessIcnParams {
  double rho = 0.1;         // own-price demand sensitivity
  double beta = 10.0;       // network/storage price scaling, > 1
  double cache_base = 1.0;  // c_A0 / c_B0
};

// How the access ICN's own term is written. The two forms coincide whenever
// the caching fractions of a stream sum to one.
enum class AccessUtilityForm {
  kBestResponse,  // q * sigma * [alpha_self (P_C - c_i) + (P - P_C)]
  kAverage,       // q * sigma * [alpha_self (P - c_i) + alpha_out (P - P_C)]
};

struct AsymmetricConfig {
  PopularityModel pm;
  AccessIcnParams a;
  AccessIcnParams b;
  double rho0 = 0.1;
  double transit_base = 0.7;
  double provider_unit_cost = 60.0;
  AccessUtilityForm access_form = AccessUtilityForm::kBestResponse;
};

void Validate(const AsymmetricConfig& cfg);

// Symmetric parameters seen as a two-ICN game.
AsymmetricConfig FromSymmetric(const SymmetricConfig& cfg);

enum class Player { kA, kB, kC, kO };
std::string_view PlayerName(Player p);

// Where one stream's request for one content rank is served from.
enum class Source { kSelf, kPeer, kTransit, kProvider };
std::string_view SourceName(Source s);

struct ContentRouting {
  Source a = Source::kTransit;  // stream of users attached to A
  Source b = Source::kTransit;
};

// Routing for every rank; element r-1 holds rank r.
using CachingAssignment = std::vector<ContentRouting>;

struct Prices {
  double p_a = 0.0;
  double p_b = 0.0;
  double p_c = 0.0;
  double p_oc = 0.0;  // content price to users
  double p_os = 0.0;  // provider storage price to the transit ICN
};

struct StrategyProfile {
  Prices prices;
  CachingAssignment caching;
};

// Fractions of one stream's demand for one rank served by each source. The
// equilibrium analysis only ever produces vertices of this simplex.
struct Alpha {
  double self = 0.0;
  double peer = 0.0;
  double transit = 0.0;
  double provider = 0.0;

  static Alpha Vertex(Source s);
};

struct FractionalCaching {
  std::vector<Alpha> a;  // element r-1 holds rank r
  std::vector<Alpha> b;

  static FractionalCaching FromAssignment(const CachingAssignment& caching);
};

// Caching-table resolution for rank `rank` at the given prices. A stream is
// served locally when P_C strictly exceeds its caching cost. Otherwise the
// transit ICN routes it to the cheapest of its own cache, the provider's
// storage price, and the peer's storage share P/(1+beta); ties go Transit,
// then Provider, then Peer. A peer is only an option when it caches the rank
// itself and its storage share covers its own caching cost.
ContentRouting ResolveCaching(const AsymmetricConfig& cfg, const Prices& prices,
                              int rank);
CachingAssignment ResolveAll(const AsymmetricConfig& cfg, const Prices& prices);

double Utility(const AsymmetricConfig& cfg, Player player,
               const Prices& prices, const FractionalCaching& alpha);

double UtilityA(const AsymmetricConfig& cfg, const StrategyProfile& profile);
double UtilityB(const AsymmetricConfig& cfg, const StrategyProfile& profile);
double UtilityC(const AsymmetricConfig& cfg, const StrategyProfile& profile);
double UtilityO(const AsymmetricConfig& cfg, const StrategyProfile& profile);

// Regular price grid min, min+step, ..., up to max.
struct PriceGrid {
  double min = 0.0;
  double max = 0.0;
  double step = 0.0;

  // Throws InvalidParameter on step <= 0 or max < min or min < 0.
  std::vector<double> Points() const;
};

// [0, c_M + c_O] in 1000 steps, c_M the larger access caching cost at rank M.
PriceGrid DefaultGrid(const AsymmetricConfig& cfg);

// One player's grid best response. Every candidate price re-resolves the
// caching table; the player moves only to a strictly better candidate, the
// lowest such price on ties. Candidates that push either access ICN's demand
// below zero are skipped. The provider searches (P_O^(s), P_O^(c)) jointly.
StrategyProfile BestResponse(const AsymmetricConfig& cfg, Player player,
                             const StrategyProfile& profile,
                             const PriceGrid& grid);

enum class ConvergenceStatus { kFixedPoint, kCycle, kMaxIter };
std::string_view StatusName(ConvergenceStatus s);

struct TraceStep {
  int sweep = 0;                // 0 for the initial profile
  std::optional<Player> mover;  // empty for the initial profile
  StrategyProfile profile;
};

struct BestResponseRun {
  std::vector<TraceStep> trace;
  ConvergenceStatus status = ConvergenceStatus::kMaxIter;
  int sweeps = 0;
};

struct IterateOptions {
  int max_iter = 100;  // sweeps
  double tol = 1e-9;   // price movement counted as a change
  // Shuffles the player order each sweep when set; fixed A, B, C, O otherwise.
  std::optional<std::uint64_t> order_seed;
};

// Round-robin best responses. The initial caching is re-resolved from the
// initial prices before the first sweep.
BestResponseRun IterateBestResponse(const AsymmetricConfig& cfg,
                                    const StrategyProfile& init,
                                    const PriceGrid& grid,
                                    const IterateOptions& options);

// Samples `samples` interior caching vectors for rank `rank` on each stream
// and checks, for every player, that utility is the matching convex
// combination of vertex utilities and never exceeds the best vertex.
bool VerifyVertexOptimality(const AsymmetricConfig& cfg,
                            const StrategyProfile& profile, int rank,
                            int samples, std::uint64_t seed = 42);

// Two-ICN profile at a symmetric equilibrium, using the reported (epsilon
// offset) leader prices so the caching table resolves unambiguously.
StrategyProfile ProfileFromSymmetric(const SymmetricConfig& cfg,
                                     const SymmetricEquilibrium& eq);

}  // namespace icn

#endif  // ICN_ASYMMETRIC_GAME_H_
