#pragma once

#include <array>
#include <cstdint>

namespace cpmom {

// Philox 4x32-10 counter-based generator. The output block is a pure
// function of (key, counter), so per-sample streams can be split across
// workers without changing the values drawn.
class Philox4x32 {
 public:
  // Stream `stream` under `key`; draws advance the low counter words.
  Philox4x32(std::uint64_t key, std::uint64_t stream)
      : key_(key), stream_(stream), draw_(0), buf_pos_(4), have_normal_(false) {}

  static std::array<std::uint32_t, 4> block(std::uint64_t key, std::uint64_t hi,
                                            std::uint64_t lo);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform on (0, 1], 53-bit resolution.
  double next_unit();

  // Standard normal via Box-Muller, two per uniform pair, buffered.
  double next_normal();

 private:
  std::uint64_t key_, stream_, draw_;
  std::array<std::uint32_t, 4> buf_{};
  unsigned buf_pos_;
  double normal_buf_ = 0;
  bool have_normal_;
};

}  // namespace cpmom
