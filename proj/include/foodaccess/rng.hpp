#pragma once

#include <cstdint>
#include <random>

namespace foodaccess {

/// Deterministic random stream. The engine is std::mt19937_64 (bit-exact by
/// the standard); every distribution below is implemented here rather than
/// with std::*_distribution so that draws are identical across standard
/// libraries and reruns. Streams for parallel work are derived with
/// `derive`, never by sharing or splitting a live engine.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Stream derived by hashing (base_seed, stream). Order-independent:
  /// worker threads pulling different stream ids never interact.
  static Rng derive(std::uint64_t base_seed, std::uint64_t stream);

  /// Two-level derivation for (replicate, phase) style substreams.
  static Rng derive(std::uint64_t base_seed, std::uint64_t stream, std::uint64_t substream);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on the open interval (0, 1); never returns an endpoint.
  double uniform();

  /// Uniform integer in [0, n). Unbiased (rejection on the modulus).
  std::uint64_t below(std::uint64_t n);

  /// Standard normal via inverse-CDF transform.
  double normal();

  /// Gamma(shape, scale), shape > 0, Marsaglia-Tsang squeeze.
  double gamma(double shape, double scale);

  /// Poisson(mean): Knuth product method for small means, Hormann's PTRD
  /// transformed rejection for mean >= 10.
  long long poisson(double mean);

  /// Chi-square with df degrees of freedom (gamma(df/2, 2)).
  double chi_square(double df);

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer; used for seed mixing.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace foodaccess
