#pragma once

#include <array>
#include <cstdint>

namespace coxext {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers: as
/// easy as 1, 2, 3"). Stateless: output depends only on counter and key.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) noexcept;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Deterministic random stream: a Philox key plus a 64-bit draw counter.
/// Streams are values; split() derives an independent child keyed by an id,
/// so (seed, row, replicate, draw index) addresses every number uniquely.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) noexcept;

  RandomStream split(std::uint64_t id) const noexcept;

  std::uint64_t next_u64() noexcept;
  /// Uniform on [0, 1).
  double uniform() noexcept;
  /// Uniform on (0, 1].
  double uniform_open_closed() noexcept;
  /// Uniform integer on {0, ..., n-1}; n >= 1. Lemire's nearly divisionless method.
  std::uint64_t below(std::uint64_t n) noexcept;

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t position() const noexcept { return draw_; }

 private:
  RandomStream(std::uint64_t key, std::uint64_t lineage) noexcept;

  std::uint64_t key_;
  std::uint64_t lineage_;  // distinguishes children in the counter's high half
  std::uint64_t draw_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
};

}  // namespace coxext
