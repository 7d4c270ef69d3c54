#include "nomasim/rate_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nomasim {

Rate shannon_rate(Snr snr, RateConvention rc) {
  return Rate(convention_factor(rc) * std::log2(1.0 + snr.value()));
}

ParetoFrontier::ParetoFrontier(std::vector<RatePoint> points, bool convex)
    : points_(std::move(points)), convex_(convex) {
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i].r1.value() > points_[i - 1].r1.value()))
      throw std::invalid_argument("ParetoFrontier: r1 must be strictly increasing");
    if (points_[i].r2.value() > points_[i - 1].r2.value() + 1e-12)
      throw std::invalid_argument("ParetoFrontier: r2 must be non-increasing");
  }
  if (convex_) {
    for (std::size_t i = 1; i + 1 < points_.size(); ++i) {
      const double x0 = points_[i - 1].r1.value(), y0 = points_[i - 1].r2.value();
      const double x1 = points_[i].r1.value(), y1 = points_[i].r2.value();
      const double x2 = points_[i + 1].r1.value(), y2 = points_[i + 1].r2.value();
      const double chord = y0 + (y2 - y0) * (x1 - x0) / (x2 - x0);
      if (y1 < chord - 1e-9)
        throw std::invalid_argument("ParetoFrontier: point below chord in convex frontier");
    }
  }
}

ParetoFrontier pareto_frontier(const std::vector<RatePoint>& points, bool convexify) {
  if (points.empty()) throw std::invalid_argument("pareto_frontier: empty input");

  std::vector<RatePoint> p = points;
  // sort by r1 ascending, r2 descending; ties in both keep first occurrence
  std::sort(p.begin(), p.end(), [](const RatePoint& a, const RatePoint& b) {
    if (a.r1.value() != b.r1.value()) return a.r1.value() < b.r1.value();
    return a.r2.value() > b.r2.value();
  });

  // one representative per r1 (the max-r2 one), then a right-to-left strict
  // max-r2 scan drops everything weakly dominated
  std::vector<RatePoint> uniq;
  for (const auto& q : p) {
    if (uniq.empty() || q.r1.value() > uniq.back().r1.value()) uniq.push_back(q);
  }
  std::vector<RatePoint> filtered;
  double best_r2 = -std::numeric_limits<double>::infinity();
  for (auto it = uniq.rbegin(); it != uniq.rend(); ++it) {
    if (it->r2.value() > best_r2) {
      best_r2 = it->r2.value();
      filtered.push_back(*it);
    }
  }
  std::reverse(filtered.begin(), filtered.end());

  if (convexify && filtered.size() > 2) {
    // monotone-chain upper hull on the decreasing staircase
    std::vector<RatePoint> hull;
    for (const auto& q : filtered) {
      while (hull.size() >= 2) {
        const auto& a = hull[hull.size() - 2];
        const auto& b = hull[hull.size() - 1];
        const double cross = (b.r1.value() - a.r1.value()) * (q.r2.value() - a.r2.value()) -
                             (q.r1.value() - a.r1.value()) * (b.r2.value() - a.r2.value());
        if (cross >= -1e-15)
          hull.pop_back();  // b on or below chord a..q
        else
          break;
      }
      hull.push_back(q);
    }
    filtered = std::move(hull);
  }
  return ParetoFrontier(std::move(filtered), convexify);
}

double frontier_r2_at(const ParetoFrontier& f, double x) {
  const auto& pts = f.points();
  if (pts.empty()) return -std::numeric_limits<double>::infinity();
  if (x <= pts.front().r1.value()) return pts.front().r2.value();
  if (x > pts.back().r1.value()) return -std::numeric_limits<double>::infinity();
  auto it = std::lower_bound(pts.begin(), pts.end(), x, [](const RatePoint& p, double v) {
    return p.r1.value() < v;
  });
  if (it->r1.value() == x) return it->r2.value();
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  const double t = (x - lo.r1.value()) / (hi.r1.value() - lo.r1.value());
  return lo.r2.value() + t * (hi.r2.value() - lo.r2.value());
}

bool region_dominates(const ParetoFrontier& a, const ParetoFrontier& b, double tolerance) {
  for (const auto& q : b.points()) {
    const double x = q.r1.value() - tolerance;
    if (frontier_r2_at(a, std::max(x, 0.0)) < q.r2.value() - tolerance) return false;
  }
  return true;
}

}  // namespace nomasim
