#include "parksim/rng.hpp"

#include <cmath>

namespace parksim {

double RngStream::uniform01() {
  // 53-bit mantissa from the top bits; shift into (0,1) by half an ulp
  for (;;) {
    double u = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    if (u > 0.0 && u < 1.0) return u;
  }
}

std::uint32_t RngStream::uniform_int(std::uint32_t n) {
  // Lemire-style rejection to stay unbiased
  if (n == 0) return 0;
  std::uint64_t threshold = (~std::uint64_t{0}) - (~std::uint64_t{0}) % n;
  for (;;) {
    std::uint64_t r = engine_();
    if (r < threshold) return static_cast<std::uint32_t>(r % n);
  }
}

double RngStream::exponential() {
  return -std::log(uniform01());
}

namespace detail {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

} // namespace detail

RngStream RngStreams::stream(int node, std::string_view purpose) const {
  std::uint64_t h = detail::splitmix64(master_);
  h = detail::splitmix64(h ^ detail::fnv1a64(purpose));
  h = detail::splitmix64(h ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(node)));
  return RngStream(h);
}

} // namespace parksim
