#pragma once

#include <atomic>
#include <cstdint>

// Runtime resource knobs. Arithmetic in the Baumslag group can grow as a
// tower of exponents, so every operation that can blow up checks one of
// these caps and throws ResourceLimitError instead of truncating.

namespace hnnforge::config {

inline std::atomic<std::uint64_t>& bit_cap_ref() {
  static std::atomic<std::uint64_t> cap{1'000'000};
  return cap;
}

inline std::atomic<std::uint64_t>& syllable_cap_ref() {
  static std::atomic<std::uint64_t> cap{1'000'000};
  return cap;
}

inline std::atomic<int>& max_search_degree_ref() {
  static std::atomic<int> cap{7};
  return cap;
}

// Numerator size limit for dyadic rationals, in bits.
inline std::uint64_t bit_cap() { return bit_cap_ref().load(); }
inline void set_bit_cap(std::uint64_t bits) { bit_cap_ref().store(bits); }

// Limit on the number of t-syllables a single word may hold.
inline std::uint64_t syllable_cap() { return syllable_cap_ref().load(); }
inline void set_syllable_cap(std::uint64_t n) { syllable_cap_ref().store(n); }

// Largest symmetric-group degree the quotient search will accept.
// ABSOLUTE_MAX_DEGREE is a hard wall regardless of configuration.
inline constexpr int ABSOLUTE_MAX_DEGREE = 10;
inline int max_search_degree() { return max_search_degree_ref().load(); }
inline void set_max_search_degree(int n) {
  if (n > ABSOLUTE_MAX_DEGREE) n = ABSOLUTE_MAX_DEGREE;
  max_search_degree_ref().store(n);
}

// Scoped override, mainly for tests that exercise ResourceLimit paths.
class ScopedBitCap {
 public:
  explicit ScopedBitCap(std::uint64_t bits) : saved_(bit_cap()) { set_bit_cap(bits); }
  ~ScopedBitCap() { set_bit_cap(saved_); }
  ScopedBitCap(const ScopedBitCap&) = delete;
  ScopedBitCap& operator=(const ScopedBitCap&) = delete;

 private:
  std::uint64_t saved_;
};

}  // namespace hnnforge::config
