#include "nomasim/ic_region.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace nomasim {

namespace {

// Per-receiver MAC bounds of the three virtual users (own private, own
// common, other common) over the private-interference noise floor.
struct ReceiverBounds {
  // 2-D polygon bounds on (x, y) = (R_c1, R_c2) as seen at this receiver
  double own_common;     // own common alone
  double other_common;   // other common alone
  double both_common;    // sum of the two common rates
  // private bounds A_s = C((S + subset powers)/N) used by R_p = min(...)
  double a0, a_own, a_other, a_all;
};

ReceiverBounds receiver_bounds(double s, double t, double u, double n, RateConvention rc) {
  const auto cap = [&](double p) { return shannon_rate(Snr(p / n), rc).value(); };
  ReceiverBounds b{};
  b.own_common = cap(t);
  b.other_common = cap(u);
  b.both_common = cap(t + u);
  b.a0 = cap(s);
  b.a_own = cap(s + t);
  b.a_other = cap(s + u);
  b.a_all = cap(s + t + u);
  return b;
}

struct HkProblem {
  ReceiverBounds rx1, rx2;

  // polygon constraints on (x, y) = (R_c1, R_c2)
  bool feasible(double x, double y, double tol = 1e-12) const {
    return x >= -tol && y >= -tol && x <= rx1.own_common + tol && y <= rx1.other_common + tol &&
           x + y <= rx1.both_common + tol && x <= rx2.other_common + tol &&
           y <= rx2.own_common + tol && x + y <= rx2.both_common + tol;
  }
  double rp1_max(double x, double y) const {
    return std::min(std::min(rx1.a0, rx1.a_own - x), std::min(rx1.a_other - y, rx1.a_all - x - y));
  }
  double rp2_max(double x, double y) const {
    return std::min(std::min(rx2.a0, rx2.a_own - y), std::min(rx2.a_other - x, rx2.a_all - x - y));
  }
};

HkProblem make_problem(const IcChannel& ch, const HkSplit& split, RateConvention rc) {
  if (!(split.lambda1 >= 0.0 && split.lambda1 <= 1.0 && split.lambda2 >= 0.0 &&
        split.lambda2 <= 1.0))
    throw std::domain_error("HkSplit: lambda outside [0,1]");
  const double a1 = ch.a1.value(), a2 = ch.a2.value();
  const double b1 = ch.b1.value(), b2 = ch.b2.value();
  const double l1 = split.lambda1, l2 = split.lambda2;
  HkProblem p;
  p.rx1 = receiver_bounds(a1 * l1, a1 * (1.0 - l1), b1 * (1.0 - l2), 1.0 + b1 * l2, rc);
  p.rx2 = receiver_bounds(a2 * l2, a2 * (1.0 - l2), b2 * (1.0 - l1), 1.0 + b2 * l1, rc);
  return p;
}

// Lines of the (R_c1, R_c2) arrangement: polygon edges plus the kink lines of
// the two piecewise-linear private-rate maxima. All are axis-parallel or of
// slope +-1, so pairwise intersections are closed-form. The concave objective
// attains its maximum at an arrangement vertex.
struct Line {
  enum Kind { vertical, horizontal, diagonal, antidiagonal } kind;  // x=c, y=c, x+y=c, y-x=c
  double c;
};

bool intersect(const Line& p, const Line& q, double& x, double& y) {
  if (p.kind == q.kind) return false;
  const Line &a = std::min(p, q, [](const Line& l, const Line& r) { return l.kind < r.kind; }),
             &b = std::max(p, q, [](const Line& l, const Line& r) { return l.kind < r.kind; });
  switch (a.kind) {
    case Line::vertical:
      x = a.c;
      if (b.kind == Line::horizontal) y = b.c;
      else if (b.kind == Line::diagonal) y = b.c - x;
      else y = b.c + x;
      return true;
    case Line::horizontal:
      y = a.c;
      if (b.kind == Line::diagonal) x = b.c - y;
      else x = y - b.c;
      return true;
    case Line::diagonal:
      // x+y = a.c, y-x = b.c
      x = 0.5 * (a.c - b.c);
      y = 0.5 * (a.c + b.c);
      return true;
    default:
      return false;
  }
}

}  // namespace

ParetoFrontier ic_oma_frontier(const IcChannel& ch, int grid_size, RateConvention rc) {
  if (grid_size < 2) throw std::invalid_argument("ic_oma_frontier: grid_size < 2");
  std::vector<RatePoint> pts;
  pts.reserve(grid_size);
  for (int i = 0; i < grid_size; ++i) {
    const double a = static_cast<double>(i) / (grid_size - 1);
    const double r1 = a < 1e-12 ? 0.0 : a * shannon_rate(Snr(ch.a1.value() / a), rc).value();
    const double ab = 1.0 - a;
    const double r2 = ab < 1e-12 ? 0.0 : ab * shannon_rate(Snr(ch.a2.value() / ab), rc).value();
    pts.emplace_back(r1, r2);
  }
  return pareto_frontier(pts, false);
}

HkRatePoint hk_basic_rate_bound(const IcChannel& ch, const HkSplit& split, double weight,
                                RateConvention rc) {
  if (!(weight >= 0.0) || !std::isfinite(weight))
    throw std::domain_error("hk_basic_rate_bound: weight must be >= 0");
  const HkProblem p = make_problem(ch, split, rc);
  const ReceiverBounds &r1 = p.rx1, &r2 = p.rx2;

  const std::array<Line, 20> lines = {{
      {Line::vertical, 0.0},
      {Line::horizontal, 0.0},
      {Line::vertical, r1.own_common},
      {Line::horizontal, r1.other_common},
      {Line::diagonal, r1.both_common},
      {Line::vertical, r2.other_common},
      {Line::horizontal, r2.own_common},
      {Line::diagonal, r2.both_common},
      // kinks of rp1_max = min(a0, a_own - x, a_other - y, a_all - x - y)
      {Line::vertical, r1.a_own - r1.a0},
      {Line::horizontal, r1.a_other - r1.a0},
      {Line::diagonal, r1.a_all - r1.a0},
      {Line::antidiagonal, r1.a_other - r1.a_own},
      {Line::horizontal, r1.a_all - r1.a_own},
      {Line::vertical, r1.a_all - r1.a_other},
      // kinks of rp2_max = min(a0, a_own - y, a_other - x, a_all - x - y)
      {Line::horizontal, r2.a_own - r2.a0},
      {Line::vertical, r2.a_other - r2.a0},
      {Line::diagonal, r2.a_all - r2.a0},
      {Line::antidiagonal, r2.a_own - r2.a_other},
      {Line::vertical, r2.a_all - r2.a_own},
      {Line::horizontal, r2.a_all - r2.a_other},
  }};

  double best = -1.0;
  HkRatePoint out;
  const auto consider = [&](double x, double y) {
    if (!p.feasible(x, y)) return;
    x = std::max(x, 0.0);
    y = std::max(y, 0.0);
    const double rp1 = std::max(p.rp1_max(x, y), 0.0);
    const double rp2 = std::max(p.rp2_max(x, y), 0.0);
    const double v = weight * (x + rp1) + (y + rp2);
    const double u1 = x + rp1, u2 = y + rp2;
    const bool better =
        v > best + 1e-15 ||
        (v > best - 1e-15 && (u1 > out.point.r1.value() + 1e-15 ||
                              (u1 > out.point.r1.value() - 1e-15 && u2 > out.point.r2.value())));
    if (better) {
      best = v;
      out.rp1 = rp1;
      out.rc1 = x;
      out.rp2 = rp2;
      out.rc2 = y;
      out.point = RatePoint(u1, u2);
    }
  };

  consider(0.0, 0.0);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      double x, y;
      if (intersect(lines[i], lines[j], x, y)) consider(x, y);
    }
  }
  return out;
}

ParetoFrontier hk_basic_frontier(const IcChannel& ch, const IcGridOptions& opts,
                                 RateConvention rc) {
  if (opts.split_grid < 2 || opts.weight_grid < 2)
    throw std::invalid_argument("hk_basic_frontier: grids must be >= 2");
  std::vector<double> weights(opts.weight_grid);
  for (int i = 0; i < opts.weight_grid; ++i) {
    const double t = static_cast<double>(i) / (opts.weight_grid - 1);
    weights[i] = std::exp2(-6.0 + 12.0 * t);
  }
  std::vector<RatePoint> pts;
  pts.reserve(static_cast<std::size_t>(opts.split_grid) * opts.split_grid * opts.weight_grid);
  for (int i = 0; i < opts.split_grid; ++i) {
    for (int j = 0; j < opts.split_grid; ++j) {
      const HkSplit split{static_cast<double>(i) / (opts.split_grid - 1),
                          static_cast<double>(j) / (opts.split_grid - 1)};
      for (const double w : weights) pts.push_back(hk_basic_rate_bound(ch, split, w, rc).point);
    }
  }
  return pareto_frontier(pts, false);
}

ParetoFrontier hk_timeshare_frontier(const IcChannel& ch, const IcGridOptions& opts,
                                     RateConvention rc) {
  ParetoFrontier basic = hk_basic_frontier(ch, opts, rc);
  std::vector<RatePoint> pts = basic.points();
  pts.emplace_back(shannon_rate(ch.a1, rc).value(), 0.0);
  pts.emplace_back(0.0, shannon_rate(ch.a2, rc).value());
  return pareto_frontier(pts, true);
}

double hk_constraint_violation(const IcChannel& ch, const HkSplit& split, const HkRatePoint& p,
                               RateConvention rc) {
  const HkProblem prob = make_problem(ch, split, rc);
  const double x = p.rc1, y = p.rc2;
  double v = std::max(std::max(-p.rp1, -p.rc1), std::max(-p.rp2, -p.rc2));
  v = std::max(v, x - prob.rx1.own_common);
  v = std::max(v, y - prob.rx1.other_common);
  v = std::max(v, x + y - prob.rx1.both_common);
  v = std::max(v, x - prob.rx2.other_common);
  v = std::max(v, y - prob.rx2.own_common);
  v = std::max(v, x + y - prob.rx2.both_common);
  v = std::max(v, p.rp1 - prob.rp1_max(x, y));
  v = std::max(v, p.rp2 - prob.rp2_max(x, y));
  return v;
}

}  // namespace nomasim
