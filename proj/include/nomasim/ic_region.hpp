#ifndef NOMASIM_IC_REGION_HPP
#define NOMASIM_IC_REGION_HPP

#include <vector>

#include "nomasim/rate_core.hpp"
#include "nomasim/types.hpp"

namespace nomasim {

// Two-user Gaussian interference channel gains: a_i direct-link received SNR
// at receiver i, b1 the tx2->rx1 interference-to-noise ratio, b2 = tx1->rx2.
struct IcChannel {
  Snr a1, a2, b1, b2;
};

// Fraction of each transmitter's power spent on its private message; the
// remainder carries the common (both-decodable) message.
struct HkSplit {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
};

struct IcGridOptions {
  int split_grid = 41;      // lambda lattice per axis
  int weight_grid = 25;     // log-spaced weights in [2^-6, 2^6]
  int oma_grid = 1001;      // time-share grid for the TDMA frontier
};

// Rate split behind an HK operating point, for feasibility re-substitution.
struct HkRatePoint {
  RatePoint point;
  double rp1 = 0.0, rc1 = 0.0, rp2 = 0.0, rc2 = 0.0;
};

// TDMA with per-slot power control: (a C(a1/a), (1-a) C(a2/(1-a))).
ParetoFrontier ic_oma_frontier(const IcChannel& ch, int grid_size = 1001,
                               RateConvention rc = RateConvention::half);

// Best weight*R1 + R2 point of the simplified-HK achievable polytope for a
// fixed split: (R_p1, R_c1, R_c2) lies in the 3-user MAC at receiver 1 over
// powers (a1*l1, a1*(1-l1), b1*(1-l2)) with noise 1 + b1*l2, and symmetrically
// at receiver 2; the small LP is solved exactly.
HkRatePoint hk_basic_rate_bound(const IcChannel& ch, const HkSplit& split, double weight,
                                RateConvention rc = RateConvention::half);

// Sweeps splits and weights, no time-sharing (no convexification).
ParetoFrontier hk_basic_frontier(const IcChannel& ch, const IcGridOptions& opts = {},
                                 RateConvention rc = RateConvention::half);

// Convex hull of basic HK points plus the single-user slots (C(a1),0),(0,C(a2)):
// two-slot time-sharing at full per-slot power.
ParetoFrontier hk_timeshare_frontier(const IcChannel& ch, const IcGridOptions& opts = {},
                                     RateConvention rc = RateConvention::half);

// Max slack violation of the achievable polytope at the given rate split
// (positive values mean constraint violation); for feasibility checks.
double hk_constraint_violation(const IcChannel& ch, const HkSplit& split, const HkRatePoint& p,
                               RateConvention rc = RateConvention::half);

}  // namespace nomasim

#endif  // NOMASIM_IC_REGION_HPP
