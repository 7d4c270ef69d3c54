#ifndef NOMASIM_TYPES_HPP
#define NOMASIM_TYPES_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nomasim {

// Linear (not dB) received power ratio, noise normalized to unity.
class Snr {
 public:
  Snr() = default;
  explicit Snr(double value) : value_(value) {
    if (!(value >= 0.0) || !std::isfinite(value))
      throw std::domain_error("Snr must be finite and >= 0, got " + std::to_string(value));
  }
  double value() const { return value_; }

 private:
  double value_ = 0.0;
};

// Bits per channel use.
class Rate {
 public:
  Rate() = default;
  explicit Rate(double value) : value_(value) {
    if (!(value >= 0.0) || !std::isfinite(value))
      throw std::domain_error("Rate must be finite and >= 0, got " + std::to_string(value));
  }
  double value() const { return value_; }

 private:
  double value_ = 0.0;
};

// Achievable rate tuple; r_edge carries the common cell-edge rate for
// three-user schemes and is ignored by the two-user frontier machinery.
struct RatePoint {
  Rate r1;
  Rate r2;
  std::optional<Rate> r_edge;

  RatePoint() = default;
  RatePoint(Rate a, Rate b) : r1(a), r2(b) {}
  RatePoint(double a, double b) : r1(a), r2(b) {}
  RatePoint(double a, double b, double e) : r1(a), r2(b), r_edge(Rate(e)) {}
};

}  // namespace nomasim

#endif  // NOMASIM_TYPES_HPP
