#include "nomasim/single_cell.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nomasim {

namespace {

// alpha * C(gamma / alpha); the alpha -> 0 limit is 0 since alpha*log(1/alpha) -> 0
double burst_rate(double gamma, double alpha, RateConvention rc) {
  if (alpha < 1e-12) return 0.0;
  return alpha * shannon_rate(Snr(gamma / alpha), rc).value();
}

}  // namespace

RatePoint mac_oma_point(const TwoUserGains& g, TimeShare t, bool power_control, RateConvention rc) {
  const double a = t.alpha(), ab = 1.0 - t.alpha();
  if (power_control)
    return {burst_rate(g.gamma1.value(), a, rc), burst_rate(g.gamma2.value(), ab, rc)};
  return {a * shannon_rate(g.gamma1, rc).value(), ab * shannon_rate(g.gamma2, rc).value()};
}

ParetoFrontier mac_noma_frontier(const TwoUserGains& g, RateConvention rc) {
  const double g1 = g.gamma1.value(), g2 = g.gamma2.value();
  const double c1 = shannon_rate(g.gamma1, rc).value();
  const double c2 = shannon_rate(g.gamma2, rc).value();
  // corner B: user 1 decoded first; corner A: user 2 decoded first
  const RatePoint corner_b(shannon_rate(Snr(g1 / (1.0 + g2)), rc).value(), c2);
  const RatePoint corner_a(c1, shannon_rate(Snr(g2 / (1.0 + g1)), rc).value());

  // axis extensions first/last; degenerate gains collapse duplicates, and the
  // final vertical drop to (C(g1), 0) stays implicit (r1 must strictly increase)
  std::vector<RatePoint> out;
  for (const RatePoint& q : {RatePoint(0.0, c2), corner_b, corner_a, RatePoint(c1, 0.0)}) {
    if (out.empty() || q.r1.value() > out.back().r1.value()) out.push_back(q);
  }
  return ParetoFrontier(std::move(out), true);
}

ParetoFrontier mac_oma_frontier(const TwoUserGains& g, bool power_control, int grid_size,
                                RateConvention rc) {
  if (grid_size < 2) throw std::invalid_argument("mac_oma_frontier: grid_size < 2");
  std::vector<RatePoint> pts;
  pts.reserve(grid_size);
  for (int i = 0; i < grid_size; ++i) {
    const double a = static_cast<double>(i) / (grid_size - 1);
    pts.push_back(mac_oma_point(g, TimeShare(a), power_control, rc));
  }
  return pareto_frontier(pts, false);
}

RatePoint bc_oma_point(const TwoUserGains& g, TimeShare t, RateConvention rc) {
  const double a = t.alpha();
  return {a * shannon_rate(g.gamma1, rc).value(), (1.0 - a) * shannon_rate(g.gamma2, rc).value()};
}

ParetoFrontier bc_oma_frontier(const TwoUserGains& g, int grid_size, RateConvention rc) {
  if (grid_size < 2) throw std::invalid_argument("bc_oma_frontier: grid_size < 2");
  std::vector<RatePoint> pts;
  pts.reserve(grid_size);
  for (int i = 0; i < grid_size; ++i) {
    const double a = static_cast<double>(i) / (grid_size - 1);
    pts.push_back(bc_oma_point(g, TimeShare(a), rc));
  }
  return pareto_frontier(pts, false);
}

RatePoint bc_noma_point(const TwoUserGains& g, PowerSplit p, RateConvention rc) {
  const double g1 = g.gamma1.value(), g2 = g.gamma2.value();
  if (g1 < g2)
    throw std::invalid_argument("bc_noma_point: gamma1 < gamma2; caller orders users");
  const double b = p.beta(), bb = 1.0 - b;
  return {shannon_rate(Snr(b * g1), rc).value(),
          shannon_rate(Snr(bb * g2 / (b * g2 + 1.0)), rc).value()};
}

ParetoFrontier bc_noma_frontier(const TwoUserGains& g, int grid_size, RateConvention rc) {
  if (grid_size < 2) throw std::invalid_argument("bc_noma_frontier: grid_size < 2");
  std::vector<RatePoint> pts;
  pts.reserve(grid_size);
  for (int i = 0; i < grid_size; ++i) {
    const double b = static_cast<double>(i) / (grid_size - 1);
    pts.push_back(bc_noma_point(g, PowerSplit(b), rc));
  }
  return pareto_frontier(pts, false);
}

std::pair<PowerSplit, RatePoint> bc_optimal_split(const TwoUserGains& g, double mu,
                                                  RateConvention rc) {
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw std::domain_error("bc_optimal_split: mu < 0");
  const auto objective = [&](double beta) {
    const RatePoint p = bc_noma_point(g, PowerSplit(beta), rc);
    return mu * p.r1.value() + p.r2.value();
  };
  // golden-section search on [0,1], 1e-10 interval tolerance
  const double inv_phi = 0.61803398874989484820;
  double lo = 0.0, hi = 1.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = objective(x1), f2 = objective(x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = objective(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = objective(x1);
    }
  }
  // pick the best among bracket ends and interior samples
  double beta = 0.5 * (lo + hi);
  double best = objective(beta);
  for (double cand : {0.0, 1.0, lo, hi}) {
    const double v = objective(cand);
    if (v > best) {
      best = v;
      beta = cand;
    }
  }
  return {PowerSplit(beta), bc_noma_point(g, PowerSplit(beta), rc)};
}

std::vector<Rate> k_user_mac_sic_rates(const std::vector<Snr>& gains,
                                       const std::vector<std::size_t>& decode_order,
                                       RateConvention rc) {
  const std::size_t k = gains.size();
  if (decode_order.size() != k)
    throw std::invalid_argument("k_user_mac_sic_rates: order size mismatch");
  std::vector<bool> seen(k, false);
  for (std::size_t u : decode_order) {
    if (u >= k || seen[u]) throw std::invalid_argument("k_user_mac_sic_rates: not a permutation");
    seen[u] = true;
  }
  std::vector<Rate> rates(k);
  double residual = 0.0;  // power of users not yet decoded
  for (std::size_t j = k; j-- > 0;) {
    // walk decode positions from last to first accumulating later-decoded power
    const std::size_t u = decode_order[j];
    rates[u] = shannon_rate(Snr(gains[u].value() / (1.0 + residual)), rc);
    residual += gains[u].value();
  }
  return rates;
}

std::vector<Rate> k_user_bc_sc_rates(const std::vector<Snr>& gains,
                                     const std::vector<double>& splits, RateConvention rc) {
  const std::size_t k = gains.size();
  if (splits.size() != k) throw std::invalid_argument("k_user_bc_sc_rates: splits size mismatch");
  for (std::size_t i = 1; i < k; ++i)
    if (gains[i].value() > gains[i - 1].value())
      throw std::invalid_argument("k_user_bc_sc_rates: gains not sorted descending");
  const double total = std::accumulate(splits.begin(), splits.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("k_user_bc_sc_rates: splits must sum to 1");
  std::vector<Rate> rates(k);
  double stronger = 0.0;  // power fraction of users 1..k-1 (interference at user k)
  for (std::size_t i = 0; i < k; ++i) {
    if (splits[i] < 0.0) throw std::invalid_argument("k_user_bc_sc_rates: negative split");
    const double gi = gains[i].value();
    rates[i] = shannon_rate(Snr(splits[i] * gi / (1.0 + gi * stronger)), rc);
    stronger += splits[i];
  }
  return rates;
}

}  // namespace nomasim
