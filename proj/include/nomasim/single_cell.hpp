#ifndef NOMASIM_SINGLE_CELL_HPP
#define NOMASIM_SINGLE_CELL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "nomasim/rate_core.hpp"
#include "nomasim/types.hpp"

namespace nomasim {

// Received SNRs gamma_i = |h_i|^2 P of the two users, unit noise.
struct TwoUserGains {
  Snr gamma1;
  Snr gamma2;
};

// Fraction of time given to user 1; 1-alpha goes to user 2.
class TimeShare {
 public:
  explicit TimeShare(double alpha) : alpha_(alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("TimeShare: alpha outside [0,1]");
  }
  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

// Fraction of BS power on user 1's message; 1-beta goes to user 2.
class PowerSplit {
 public:
  explicit PowerSplit(double beta) : beta_(beta) {
    if (!(beta >= 0.0 && beta <= 1.0)) throw std::domain_error("PowerSplit: beta outside [0,1]");
  }
  double beta() const { return beta_; }

 private:
  double beta_;
};

inline constexpr int kDefaultRegionGrid = 1001;

// TDMA uplink point; with power control each user bursts at gamma/share.
RatePoint mac_oma_point(const TwoUserGains& g, TimeShare t, bool power_control,
                        RateConvention rc = RateConvention::half);

// Two-user MAC capacity region boundary: both SIC corners, the sum-rate face
// between them, and the axis extensions.
ParetoFrontier mac_noma_frontier(const TwoUserGains& g, RateConvention rc = RateConvention::half);

ParetoFrontier mac_oma_frontier(const TwoUserGains& g, bool power_control,
                                int grid_size = kDefaultRegionGrid,
                                RateConvention rc = RateConvention::half);

RatePoint bc_oma_point(const TwoUserGains& g, TimeShare t, RateConvention rc = RateConvention::half);

ParetoFrontier bc_oma_frontier(const TwoUserGains& g, int grid_size = kDefaultRegionGrid,
                               RateConvention rc = RateConvention::half);

// Superposition point of the degraded BC; requires gamma1 >= gamma2 (user 1
// is the SIC-capable user). Callers own the stronger/weaker assignment.
RatePoint bc_noma_point(const TwoUserGains& g, PowerSplit p, RateConvention rc = RateConvention::half);

ParetoFrontier bc_noma_frontier(const TwoUserGains& g, int grid_size = kDefaultRegionGrid,
                                RateConvention rc = RateConvention::half);

// Maximizes mu*R1 + R2 over the power split by golden-section search
// (objective is unimodal in beta).
std::pair<PowerSplit, RatePoint> bc_optimal_split(const TwoUserGains& g, double mu,
                                                  RateConvention rc = RateConvention::half);

// K-user MAC with SIC: decode_order[j] is the user decoded j-th; later-decoded
// users are noise. Returns per-user rates indexed like `gains`.
std::vector<Rate> k_user_mac_sic_rates(const std::vector<Snr>& gains,
                                       const std::vector<std::size_t>& decode_order,
                                       RateConvention rc = RateConvention::half);

// K-user BC superposition with SIC; gains sorted descending, splits sum to 1.
// User k removes weaker users' messages and hears stronger users' as noise.
std::vector<Rate> k_user_bc_sc_rates(const std::vector<Snr>& gains,
                                     const std::vector<double>& splits,
                                     RateConvention rc = RateConvention::half);

}  // namespace nomasim

#endif  // NOMASIM_SINGLE_CELL_HPP
