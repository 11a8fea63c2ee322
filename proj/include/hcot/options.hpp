#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hcot/matrix.hpp"

namespace hcot {

/// Knobs shared by every randomized or enumerating routine.
struct Options {
  std::uint64_t seed = 1;
  /// Largest finite set (e.g. |Hom|, |Ext|) enumerated exhaustively.
  std::uint64_t enumeration_cap = 1u << 16;
  /// Random trials before a search gives up as inconclusive.
  int trial_budget = 256;
};

/// splitmix64: fixed-algorithm generator so reports are reproducible across
/// standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) noexcept { return n ? next() % n : 0; }
  Scalar scalar(const PrimeField& f) noexcept {
    return static_cast<Scalar>(below(f.p()));
  }
  /// Independent child stream, keyed by a label.
  Rng fork(std::uint64_t key) noexcept { return Rng(next() ^ (key * 0xD6E8FEB86659FD93ull)); }

private:
  std::uint64_t state_;
};

/// p^dim if it does not exceed `cap`, otherwise 0.
std::uint64_t bounded_power(std::uint64_t p, std::size_t dim, std::uint64_t cap);

/// Calls fn on every coefficient vector in GF(p)^dim, in lexicographic order
/// (the zero vector first). Stops early when fn returns false. Returns false if
/// p^dim exceeds `cap` (nothing is visited in that case).
bool for_each_vector(const PrimeField& f, std::size_t dim, std::uint64_t cap,
                     const std::function<bool(const std::vector<Scalar>&)>& fn);

}  // namespace hcot
