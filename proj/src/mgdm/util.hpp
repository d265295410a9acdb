#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mgdm {

// Counter-based splittable generator (SplitMix64). Chosen so that every
// language binding and test harness reproduces identical streams from a
// 64-bit seed; no platform-dependent distribution code is used on top of it.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). n must be > 0. Plain modulo: the bias for the n used
  // here (n <= a few thousand) is below 1e-15 and identical on all platforms.
  uint64_t next_below(uint64_t n) { return next() % n; }

  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

// Derive an independent stream for replica/cell indices from one master seed.
inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
  SplitMix64 g(seed ^ (0xA0761D6478BD642Full * (index + 1)));
  return g.next();
}

// Set of link ids as a bitmask. Topologies are capped at 64 links (the
// reference network has 26), which keeps disjointness checks a single AND.
using LinkMask = uint64_t;

inline LinkMask link_bit(int link_id) { return LinkMask{1} << link_id; }

inline bool masks_disjoint(LinkMask a, LinkMask b) { return (a & b) == 0; }

inline LinkMask mask_of(const std::vector<int>& link_ids) {
  LinkMask m = 0;
  for (int id : link_ids) m |= link_bit(id);
  return m;
}

std::string join_ints(const std::vector<int>& v, char sep);
std::vector<int> split_ints(const std::string& s, char sep);

// Shortest decimal form that round-trips the exact value; keeps CSV output
// byte-stable across runs.
std::string double_text(double v);

}  // namespace mgdm
