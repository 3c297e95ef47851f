#ifndef NOMA_RNG_HPP
#define NOMA_RNG_HPP

#include <cassert>
#include <cstdint>

namespace noma {

/// Provenance of a random stream: master seed plus the derived stream index.
struct SeedRecord {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;

  bool operator==(const SeedRecord&) const = default;
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Derives an independent child seed from a master seed and a stream index.
/// Used to give every Monte Carlo trial its own stream so that serial and
/// parallel runs produce identical results.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t s = master ^ (0xd1b54a32d192ed03ull * (stream + 1));
  splitmix64(s);
  return splitmix64(s);
}

/// xoshiro256** (Blackman/Vigna), seeded through splitmix64. Chosen over the
/// standard-library engines because its output is identical on every
/// platform, construction is cheap enough to reseed per trial, and bounded
/// draws below stay exactly uniform via rejection.
class SplitRng {
 public:
  SplitRng(std::uint64_t master, std::uint64_t stream) : record_{master, stream} {
    std::uint64_t s = derive_seed(master, stream);
    for (auto& word : state_) word = splitmix64(s);
  }

  explicit SplitRng(std::uint64_t master) : SplitRng(master, 0) {}

  const SeedRecord& record() const { return record_; }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform draw from {0, ..., bound-1} by bitmask rejection: unbiased for
  /// every bound, no reliance on implementation-defined distributions.
  std::uint64_t below(std::uint64_t bound) {
    assert(bound > 0);
    if (bound == 1) return 0;
    const std::uint64_t mask = mask_for(bound - 1);
    std::uint64_t v;
    do {
      v = next() & mask;
    } while (v >= bound);
    return v;
  }

  /// Bernoulli(num/den) draw with exact rational probability.
  bool bernoulli(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  static std::uint64_t mask_for(std::uint64_t max_value) {
    std::uint64_t mask = max_value;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    return mask;
  }

  SeedRecord record_;
  std::uint64_t state_[4];
};

}  // namespace noma

#endif  // NOMA_RNG_HPP
