#ifndef NOMASIM_PHILOX_HPP
#define NOMASIM_PHILOX_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace nomasim {

// Philox4x32-10 counter-based generator. A (seed, stream) pair names an
// independent substream, so parallel workers can draw the same values for the
// same (trial, link) regardless of scheduling. Box-Muller is done in-house to
// keep outputs bit-identical across standard libraries.
class Philox {
 public:
  Philox(std::uint64_t seed, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_lo_(static_cast<std::uint32_t>(stream)),
        stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

  std::uint32_t next_u32() {
    if (buf_pos_ == 4) {
      fill_block();
      buf_pos_ = 0;
    }
    return buf_[buf_pos_++];
  }

  // 53-bit uniform in (0, 1]
  double uniform() {
    const std::uint64_t a = next_u32();
    const std::uint64_t b = next_u32();
    const std::uint64_t bits = ((a << 32) | b) >> 11;
    return static_cast<double>(bits + 1) * (1.0 / 9007199254740992.0);
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  // circularly-symmetric complex Gaussian, unit variance: E|h|^2 = 1
  std::complex<double> cnormal() {
    const double sc = 0.70710678118654752440084436210485;
    const double re = normal();
    const double im = normal();
    return {sc * re, sc * im};
  }

 private:
  static void round(std::array<std::uint32_t, 4>& c, std::uint32_t k0, std::uint32_t k1) {
    const std::uint64_t p0 = 0xD2511F53ull * c[0];
    const std::uint64_t p1 = 0xCD9E8D57ull * c[2];
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
  }

  void fill_block() {
    std::array<std::uint32_t, 4> c = {static_cast<std::uint32_t>(block_),
                                      static_cast<std::uint32_t>(block_ >> 32), stream_lo_,
                                      stream_hi_};
    std::uint32_t k0 = key_[0], k1 = key_[1];
    for (int r = 0; r < 10; ++r) {
      round(c, k0, k1);
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    buf_ = c;
    ++block_;
  }

  std::array<std::uint32_t, 2> key_;
  std::uint32_t stream_lo_;
  std::uint32_t stream_hi_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int buf_pos_ = 4;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace nomasim

#endif  // NOMASIM_PHILOX_HPP
