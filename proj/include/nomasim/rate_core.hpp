#ifndef NOMASIM_RATE_CORE_HPP
#define NOMASIM_RATE_CORE_HPP

#include <vector>

#include "nomasim/types.hpp"

namespace nomasim {

// C(x) convention. `half` is the real-channel ½·log2(1+x) used by all region
// computations; system-level outputs divide by the factor to report bits/s/Hz.
enum class RateConvention { half, full };

inline double convention_factor(RateConvention rc) {
  return rc == RateConvention::half ? 0.5 : 1.0;
}

// C(x) = factor * log2(1 + x).
Rate shannon_rate(Snr snr, RateConvention rc = RateConvention::half);

// Upper boundary of a 2-D rate region. Points sorted by r1 strictly
// increasing, r2 non-increasing. When convex() is set the polyline is the
// upper concave envelope (time-sharing between operating points is allowed).
class ParetoFrontier {
 public:
  ParetoFrontier(std::vector<RatePoint> points, bool convex);

  const std::vector<RatePoint>& points() const { return points_; }
  bool convex() const { return convex_; }
  bool empty() const { return points_.empty(); }

 private:
  std::vector<RatePoint> points_;
  bool convex_ = false;
};

// Non-dominated subset of `points`, sorted by r1; with `convexify` the upper
// concave envelope (interior points under a time-sharing chord are dropped).
ParetoFrontier pareto_frontier(const std::vector<RatePoint>& points, bool convexify = false);

// Largest r2 on the frontier polyline among points with r1 >= x
// (-infinity when x exceeds the frontier's reach).
double frontier_r2_at(const ParetoFrontier& f, double x);

// True iff every point of b lies under a's polyline within `tolerance`.
bool region_dominates(const ParetoFrontier& a, const ParetoFrontier& b, double tolerance);

}  // namespace nomasim

#endif  // NOMASIM_RATE_CORE_HPP
