#include "icn/asymmetric_game.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "icn/errors.h"

namespace icn {
namespace {

double CostAt(double base, const PopularityModel& pm, int rank) {
  return CachingCost(base, pm, rank);
}

// Stream served by `self` with `peer` as the other access ICN.
Source RouteStream(double p_c, double own_cost, double peer_cost,
                   double peer_storage, double transit_cost, double p_os) {
  if (p_c > own_cost) return Source::kSelf;

  Source best = Source::kTransit;
  double best_price = transit_cost;
  if (p_os < best_price) {
    best = Source::kProvider;
    best_price = p_os;
  }
  const bool peer_caches = p_c > peer_cost;
  const bool peer_accepts = peer_storage >= peer_cost;
  if (peer_caches && peer_accepts && peer_storage < best_price) {
    best = Source::kPeer;
  }
  return best;
}

// Linear demand is only meaningful while both streams are nonnegative.
bool DemandFeasible(const AsymmetricConfig& cfg, const Prices& prices) {
  const auto [sigma_a, sigma_b] = DemandTwo(
      {cfg.a.rho, cfg.b.rho, cfg.rho0}, prices.p_a, prices.p_b, prices.p_oc);
  return sigma_a >= 0.0 && sigma_b >= 0.0;
}

double ImprovementTolerance(double reference) {
  return 1e-12 * std::max(1.0, std::abs(reference));
}

bool SamePrices(const Prices& x, const Prices& y, double tol) {
  return std::abs(x.p_a - y.p_a) <= tol && std::abs(x.p_b - y.p_b) <= tol &&
         std::abs(x.p_c - y.p_c) <= tol && std::abs(x.p_oc - y.p_oc) <= tol &&
         std::abs(x.p_os - y.p_os) <= tol;
}

bool SameCaching(const CachingAssignment& x, const CachingAssignment& y) {
  return std::equal(x.begin(), x.end(), y.begin(), y.end(),
                    [](const ContentRouting& u, const ContentRouting& v) {
                      return u.a == v.a && u.b == v.b;
                    });
}

bool SameProfile(const StrategyProfile& x, const StrategyProfile& y,
                 double tol) {
  return SamePrices(x.prices, y.prices, tol) &&
         SameCaching(x.caching, y.caching);
}

double& PriceOf(Prices& prices, Player player) {
  switch (player) {
    case Player::kA:
      return prices.p_a;
    case Player::kB:
      return prices.p_b;
    case Player::kC:
      return prices.p_c;
    case Player::kO:
      break;
  }
  return prices.p_os;
}

StrategyProfile ProviderBestResponse(const AsymmetricConfig& cfg,
                                     const StrategyProfile& profile,
                                     const std::vector<double>& points) {
  const TwoIcnDemand demand{cfg.a.rho, cfg.b.rho, cfg.rho0};
  const int m = cfg.pm.num_contents();

  double best_u = -std::numeric_limits<double>::infinity();
  Prices best_prices = profile.prices;
  for (double p_os : points) {
    Prices trial = profile.prices;
    trial.p_os = p_os;
    // Provider-served popularity mass on each stream.
    double served_a = 0.0;
    double served_b = 0.0;
    for (int r = 1; r <= m; ++r) {
      const ContentRouting route = ResolveCaching(cfg, trial, r);
      if (route.a == Source::kProvider) served_a += cfg.pm.Mass(r);
      if (route.b == Source::kProvider) served_b += cfg.pm.Mass(r);
    }
    const double margin = p_os - cfg.provider_unit_cost;
    for (double p_oc : points) {
      const auto [sigma_a, sigma_b] =
          DemandTwo(demand, trial.p_a, trial.p_b, p_oc);
      if (sigma_a < 0.0 || sigma_b < 0.0) continue;
      const double u = (sigma_a * served_a + sigma_b * served_b) * margin +
                       (sigma_a + sigma_b) * p_oc;
      if (u > best_u) {
        best_u = u;
        best_prices = trial;
        best_prices.p_oc = p_oc;
      }
    }
  }

  StrategyProfile candidate{best_prices, ResolveAll(cfg, best_prices)};
  const double current = UtilityO(cfg, profile);
  if (UtilityO(cfg, candidate) > current + ImprovementTolerance(current)) {
    return candidate;
  }
  return profile;
}

}  // namespace

void Validate(const AsymmetricConfig& cfg) {
  auto check_icn = [](const AccessIcnParams& p, const std::string& tag) {
    if (!(p.rho > 0.0)) throw InvalidParameter("rho-" + tag, "rho must be positive");
    if (!(p.beta > 1.0)) throw InvalidParameter("beta-" + tag, "beta must exceed 1");
    if (!(p.cache_base >= 0.0)) {
      throw InvalidParameter("c0-" + tag, "caching base cost must be nonnegative");
    }
  };
  check_icn(cfg.a, "a");
  check_icn(cfg.b, "b");
  if (!(cfg.rho0 > 0.0)) throw InvalidParameter("rho0", "rho0 must be positive");
  if (!(cfg.transit_base >= 0.0)) {
    throw InvalidParameter("cC0", "transit base cost must be nonnegative");
  }
  if (!(cfg.provider_unit_cost >= 0.0)) {
    throw InvalidParameter("co", "provider cost must be nonnegative");
  }
}

AsymmetricConfig FromSymmetric(const SymmetricConfig& cfg) {
  AsymmetricConfig out{cfg.pm};
  out.a = {cfg.demand.rho, cfg.demand.beta, cfg.costs.access_base};
  out.b = out.a;
  out.rho0 = cfg.demand.rho0;
  out.transit_base = cfg.costs.transit_base;
  out.provider_unit_cost = cfg.costs.provider_unit_cost;
  return out;
}

std::string_view PlayerName(Player p) {
  switch (p) {
    case Player::kA:
      return "A";
    case Player::kB:
      return "B";
    case Player::kC:
      return "C";
    case Player::kO:
      return "O";
  }
  return "?";
}

std::string_view SourceName(Source s) {
  switch (s) {
    case Source::kSelf:
      return "Self";
    case Source::kPeer:
      return "Peer";
    case Source::kTransit:
      return "Transit";
    case Source::kProvider:
      return "Provider";
  }
  return "?";
}

std::string_view StatusName(ConvergenceStatus s) {
  switch (s) {
    case ConvergenceStatus::kFixedPoint:
      return "FixedPoint";
    case ConvergenceStatus::kCycle:
      return "Cycle";
    case ConvergenceStatus::kMaxIter:
      return "MaxIter";
  }
  return "?";
}

Alpha Alpha::Vertex(Source s) {
  Alpha v;
  switch (s) {
    case Source::kSelf:
      v.self = 1.0;
      break;
    case Source::kPeer:
      v.peer = 1.0;
      break;
    case Source::kTransit:
      v.transit = 1.0;
      break;
    case Source::kProvider:
      v.provider = 1.0;
      break;
  }
  return v;
}

FractionalCaching FractionalCaching::FromAssignment(
    const CachingAssignment& caching) {
  FractionalCaching out;
  out.a.reserve(caching.size());
  out.b.reserve(caching.size());
  for (const ContentRouting& route : caching) {
    out.a.push_back(Alpha::Vertex(route.a));
    out.b.push_back(Alpha::Vertex(route.b));
  }
  return out;
}

ContentRouting ResolveCaching(const AsymmetricConfig& cfg, const Prices& prices,
                              int rank) {
  const double c_a = CostAt(cfg.a.cache_base, cfg.pm, rank);
  const double c_b = CostAt(cfg.b.cache_base, cfg.pm, rank);
  const double c_c = CostAt(cfg.transit_base, cfg.pm, rank);
  const double storage_a = StoragePrice(prices.p_a, cfg.a.beta);
  const double storage_b = StoragePrice(prices.p_b, cfg.b.beta);

  ContentRouting route;
  route.a = RouteStream(prices.p_c, c_a, c_b, storage_b, c_c, prices.p_os);
  route.b = RouteStream(prices.p_c, c_b, c_a, storage_a, c_c, prices.p_os);
  return route;
}

CachingAssignment ResolveAll(const AsymmetricConfig& cfg,
                             const Prices& prices) {
  CachingAssignment out;
  out.reserve(cfg.pm.num_contents());
  for (int r = 1; r <= cfg.pm.num_contents(); ++r) {
    out.push_back(ResolveCaching(cfg, prices, r));
  }
  return out;
}

double Utility(const AsymmetricConfig& cfg, Player player,
               const Prices& prices, const FractionalCaching& alpha) {
  const int m = cfg.pm.num_contents();
  if (static_cast<int>(alpha.a.size()) != m ||
      static_cast<int>(alpha.b.size()) != m) {
    throw InvalidParameter("caching", "caching vectors must cover all " +
                                          std::to_string(m) + " ranks");
  }
  const auto [sigma_a, sigma_b] =
      DemandTwo({cfg.a.rho, cfg.b.rho, cfg.rho0}, prices.p_a, prices.p_b,
                prices.p_oc);
  const double storage_a = StoragePrice(prices.p_a, cfg.a.beta);
  const double storage_b = StoragePrice(prices.p_b, cfg.b.beta);

  // Access ICN `own` with users `sigma_own`, serving peer stream `in`.
  auto access_term = [&](const AccessIcnParams& icn, double price,
                         double storage, double sigma_own, double sigma_peer,
                         const Alpha& own, const Alpha& in, double q,
                         int rank) {
    const double c = CostAt(icn.cache_base, cfg.pm, rank);
    double term = 0.0;
    if (cfg.access_form == AccessUtilityForm::kBestResponse) {
      term = sigma_own * own.self * (prices.p_c - c) +
             sigma_own * (price - prices.p_c);
    } else {
      const double out = own.peer + own.transit + own.provider;
      term = sigma_own * own.self * (price - c) +
             sigma_own * out * (price - prices.p_c);
    }
    term += sigma_peer * in.peer * (storage - c);
    return q * term;
  };

  double u = 0.0;
  for (int r = 1; r <= m; ++r) {
    const double q = cfg.pm.Mass(r);
    const Alpha& fa = alpha.a[r - 1];
    const Alpha& fb = alpha.b[r - 1];
    switch (player) {
      case Player::kA:
        u += access_term(cfg.a, prices.p_a, storage_a, sigma_a, sigma_b, fa,
                         fb, q, r);
        break;
      case Player::kB:
        u += access_term(cfg.b, prices.p_b, storage_b, sigma_b, sigma_a, fb,
                         fa, q, r);
        break;
      case Player::kC: {
        const double c_c = CostAt(cfg.transit_base, cfg.pm, r);
        const double from_a = fa.transit * (prices.p_c - c_c) +
                              fa.peer * (prices.p_c - storage_b) +
                              fa.provider * (prices.p_c - prices.p_os);
        const double from_b = fb.transit * (prices.p_c - c_c) +
                              fb.peer * (prices.p_c - storage_a) +
                              fb.provider * (prices.p_c - prices.p_os);
        u += q * (sigma_a * from_a + sigma_b * from_b);
        break;
      }
      case Player::kO:
        u += q * (sigma_a * fa.provider + sigma_b * fb.provider) *
             (prices.p_os - cfg.provider_unit_cost);
        break;
    }
  }
  if (player == Player::kO) u += (sigma_a + sigma_b) * prices.p_oc;
  return u;
}

double UtilityA(const AsymmetricConfig& cfg, const StrategyProfile& profile) {
  return Utility(cfg, Player::kA, profile.prices,
                 FractionalCaching::FromAssignment(profile.caching));
}

double UtilityB(const AsymmetricConfig& cfg, const StrategyProfile& profile) {
  return Utility(cfg, Player::kB, profile.prices,
                 FractionalCaching::FromAssignment(profile.caching));
}

double UtilityC(const AsymmetricConfig& cfg, const StrategyProfile& profile) {
  return Utility(cfg, Player::kC, profile.prices,
                 FractionalCaching::FromAssignment(profile.caching));
}

double UtilityO(const AsymmetricConfig& cfg, const StrategyProfile& profile) {
  return Utility(cfg, Player::kO, profile.prices,
                 FractionalCaching::FromAssignment(profile.caching));
}

std::vector<double> PriceGrid::Points() const {
  if (!(step > 0.0)) throw InvalidParameter("grid-step", "grid step must be positive");
  if (!(min >= 0.0)) throw InvalidParameter("grid-min", "grid minimum must be nonnegative");
  if (!(max >= min)) throw InvalidParameter("grid-max", "grid maximum below minimum");
  const auto n = static_cast<long long>(std::floor((max - min) / step + 1e-9));
  if (n > 10'000'000) throw InvalidParameter("grid-step", "price grid too large");
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(n) + 1);
  for (long long k = 0; k <= n; ++k) pts.push_back(min + k * step);
  return pts;
}

PriceGrid DefaultGrid(const AsymmetricConfig& cfg) {
  const int m = cfg.pm.num_contents();
  const double top = std::max(CostAt(cfg.a.cache_base, cfg.pm, m),
                              CostAt(cfg.b.cache_base, cfg.pm, m)) +
                     cfg.provider_unit_cost;
  return {0.0, top, top > 0.0 ? top / 1000.0 : 1.0};
}

StrategyProfile BestResponse(const AsymmetricConfig& cfg, Player player,
                             const StrategyProfile& profile,
                             const PriceGrid& grid) {
  const std::vector<double> points = grid.Points();
  if (points.empty()) throw InvalidParameter("grid", "empty price grid");
  if (player == Player::kO) return ProviderBestResponse(cfg, profile, points);

  auto utility = [&](const StrategyProfile& s) {
    return Utility(cfg, player, s.prices,
                   FractionalCaching::FromAssignment(s.caching));
  };

  double best_u = -std::numeric_limits<double>::infinity();
  StrategyProfile best;
  for (double p : points) {
    StrategyProfile trial;
    trial.prices = profile.prices;
    PriceOf(trial.prices, player) = p;
    if (!DemandFeasible(cfg, trial.prices)) continue;
    trial.caching = ResolveAll(cfg, trial.prices);
    const double u = utility(trial);
    if (u > best_u) {
      best_u = u;
      best = std::move(trial);
    }
  }
  const double current = utility(profile);
  return best_u > current + ImprovementTolerance(current) ? best : profile;
}

BestResponseRun IterateBestResponse(const AsymmetricConfig& cfg,
                                    const StrategyProfile& init,
                                    const PriceGrid& grid,
                                    const IterateOptions& options) {
  if (options.max_iter < 1) {
    throw InvalidParameter("max-iter", "max-iter must be at least 1");
  }
  Validate(cfg);
  grid.Points();  // fail fast on a malformed grid

  BestResponseRun run;
  StrategyProfile current{init.prices, ResolveAll(cfg, init.prices)};
  run.trace.push_back({0, std::nullopt, current});

  std::array<Player, 4> order{Player::kA, Player::kB, Player::kC, Player::kO};
  std::mt19937_64 rng(options.order_seed.value_or(0));
  std::vector<StrategyProfile> sweep_ends{current};

  for (int sweep = 1; sweep <= options.max_iter; ++sweep) {
    if (options.order_seed) std::shuffle(order.begin(), order.end(), rng);
    const StrategyProfile start = current;
    for (Player p : order) {
      current = BestResponse(cfg, p, current, grid);
      run.trace.push_back({sweep, p, current});
    }
    run.sweeps = sweep;
    if (SameProfile(start, current, options.tol)) {
      run.status = ConvergenceStatus::kFixedPoint;
      return run;
    }
    for (const StrategyProfile& seen : sweep_ends) {
      if (SameProfile(seen, current, options.tol)) {
        run.status = ConvergenceStatus::kCycle;
        return run;
      }
    }
    sweep_ends.push_back(current);
  }
  run.status = ConvergenceStatus::kMaxIter;
  return run;
}

bool VerifyVertexOptimality(const AsymmetricConfig& cfg,
                            const StrategyProfile& profile, int rank,
                            int samples, std::uint64_t seed) {
  if (samples < 1) throw InvalidParameter("samples", "samples must be >= 1");
  if (rank < 1 || rank > cfg.pm.num_contents()) {
    throw IndexOutOfRange("content rank " + std::to_string(rank));
  }
  constexpr std::array<Source, 4> kVertices{Source::kSelf, Source::kPeer,
                                            Source::kTransit,
                                            Source::kProvider};
  constexpr std::array<Player, 4> kPlayers{Player::kA, Player::kB, Player::kC,
                                           Player::kO};
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> unit_exp(1.0);

  const FractionalCaching base = FractionalCaching::FromAssignment(profile.caching);
  for (int stream = 0; stream < 2; ++stream) {
    auto with = [&](const Alpha& a) {
      FractionalCaching f = base;
      (stream == 0 ? f.a : f.b)[rank - 1] = a;
      return f;
    };
    for (Player player : kPlayers) {
      std::array<double, 4> vertex_u{};
      for (std::size_t v = 0; v < kVertices.size(); ++v) {
        vertex_u[v] = Utility(cfg, player, profile.prices,
                              with(Alpha::Vertex(kVertices[v])));
      }
      const double best = *std::max_element(vertex_u.begin(), vertex_u.end());
      double scale = 1.0;
      for (double u : vertex_u) scale = std::max(scale, std::abs(u));
      const double tol = 1e-12 * scale;

      for (int s = 0; s < samples; ++s) {
        // Uniform point in the open simplex.
        std::array<double, 4> w{};
        double total = 0.0;
        for (double& x : w) total += (x = unit_exp(rng));
        for (double& x : w) x /= total;
        const Alpha mix{w[0], w[1], w[2], w[3]};
        const double u = Utility(cfg, player, profile.prices, with(mix));
        double combo = 0.0;
        for (std::size_t v = 0; v < w.size(); ++v) combo += w[v] * vertex_u[v];
        if (std::abs(u - combo) > tol || u > best + tol) return false;
      }
    }
  }
  return true;
}

StrategyProfile ProfileFromSymmetric(const SymmetricConfig& cfg,
                                     const SymmetricEquilibrium& eq) {
  StrategyProfile profile;
  profile.prices.p_a = eq.p_a;
  profile.prices.p_b = eq.p_a;
  profile.prices.p_c = eq.reported_p_c;
  profile.prices.p_oc = eq.p_oc;
  profile.prices.p_os = eq.reported_p_os;
  profile.caching = ResolveAll(FromSymmetric(cfg), profile.prices);
  return profile;
}

}  // namespace icn
