#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace digitrec {

/// Deterministic random stream. All distribution transforms are implemented
/// here (not via std:: distributions, whose output is implementation-defined)
/// so that a seed pins the exact sample sequence.
///
/// Streams form a tree: every module derives its own child stream from the
/// run seed by a fixed label or index, which keeps results independent of
/// evaluation order and scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64();

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform();

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);

  /// Uniform integer in [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n);

  /// Standard normal via Box-Muller (one value per draw; no cached pair).
  double normal();

  /// Child stream for a named module ("augment", "init", ...).
  Rng derive(std::string_view label) const;

  /// Child stream for an indexed item (dataset entry, epoch, ...).
  Rng derive(std::uint64_t index) const;

  /// In-place Fisher-Yates shuffle.
  template <typename Seq>
  void shuffle(Seq& seq) {
    for (std::size_t i = seq.size(); i > 1; --i) {
      std::size_t j = uniform_index(i);
      std::swap(seq[i - 1], seq[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace digitrec
