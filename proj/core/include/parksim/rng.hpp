#ifndef PARKSIM_RNG_HPP
#define PARKSIM_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace parksim {

// One independent random stream. Doubles are produced from the raw engine
// output instead of std::uniform_real_distribution so that identical seeds
// give identical draws on every implementation.
class RngStream {
public:
  RngStream() : engine_(0) {}
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  // uniform on (0,1); never returns 0 or 1
  double uniform01();

  // uniform integer in [0, n)
  std::uint32_t uniform_int(std::uint32_t n);

  // unit-mean exponential (Rayleigh fading power gain)
  double exponential();

  bool bernoulli(double p) { return uniform01() < p; }

  std::uint64_t raw() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

// Named substreams hung off one master seed. Streams are derived by hashing
// (master_seed, node, purpose) with stable labels, so adding a node or a new
// purpose never perturbs the draws of any existing stream.
class RngStreams {
public:
  explicit RngStreams(std::uint64_t master_seed) : master_(master_seed) {}

  std::uint64_t master_seed() const { return master_; }

  // purpose is a short stable label: "traffic", "backoff", "fading", "app"
  RngStream stream(int node, std::string_view purpose) const;

  // run-level stream not tied to a node
  RngStream stream(std::string_view purpose) const { return stream(-1, purpose); }

private:
  std::uint64_t master_;
};

namespace detail {
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view s);
} // namespace detail

} // namespace parksim

#endif
