#ifndef NOMA_CORE_HPP
#define NOMA_CORE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "noma/rational.hpp"
#include "noma/rng.hpp"

namespace noma {

/// z*n does not reduce to an integer allocation count.
struct NonIntegerLoadError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Allocation count zn falls outside 1 <= zn < m.
struct OverconstrainedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Validated network parameterization. m devices share n resource blocks at
/// overloading ratio z; every subframe allocates blocks to exactly zn = z*n
/// devices, so each labeled device is allocated with probability p = zn/m.
struct NetworkParams {
  unsigned m = 0;   // number of network devices
  unsigned n = 0;   // number of resource blocks
  Rational z;       // overloading ratio
  unsigned zn = 0;  // devices allocated per subframe
  Rational p;       // per-device allocation probability, zn/m
};

/// Validates (m, n, z) and fills the derived fields.
/// Throws NonIntegerLoadError when z*n is not an integer and
/// OverconstrainedError when zn < 1 or zn >= m.
NetworkParams make_params(unsigned m, unsigned n, const Rational& z);

/// Labeled binary degree vector: bit i says whether device i holds a
/// resource-block allocation in one subframe.
struct AllocationVector {
  std::vector<std::uint8_t> bits;

  unsigned ones() const {
    unsigned c = 0;
    for (auto b : bits) c += b;
    return c;
  }
  bool operator==(const AllocationVector&) const = default;
};

/// One TDD MAC frame: the uplink subframe strictly precedes the downlink.
struct Frame {
  AllocationVector uplink;
  AllocationVector downlink;

  bool operator==(const Frame&) const = default;
};

/// Ordered frame sequence together with the stream that generated it.
struct NetworkSequence {
  NetworkParams params;
  std::vector<Frame> frames;
  SeedRecord seed;
};

/// Number of distinct degree vectors, C(m, zn).
BigInt ensemble_size(const NetworkParams& params);

/// Reusable uniform zn-subset sampler. Keeps its index scratch between draws
/// so the Monte Carlo hot path does not allocate.
class AllocationSampler {
 public:
  explicit AllocationSampler(const NetworkParams& params);

  /// Overwrites `out` with a fresh uniform draw. Exactly uniform over all
  /// C(m, zn) vectors: the allocated set is the prefix of a partial
  /// Fisher-Yates shuffle driven by unbiased bounded draws.
  void sample_into(SplitRng& rng, AllocationVector& out);

 private:
  unsigned m_;
  unsigned zn_;
  std::vector<std::uint32_t> scratch_;
};

/// One uniform draw from the degree-vector ensemble.
AllocationVector sample_allocation(const NetworkParams& params, SplitRng& rng);

/// Samples N frames; uplink and downlink vectors are independent draws
/// (2N draws total, with replacement).
NetworkSequence sample_sequence(const NetworkParams& params, unsigned n_frames, SplitRng& rng);

/// Streams every valid degree vector exactly once, in lexicographic order of
/// the allocated index combination ({0,1} before {0,2} before {1,2}, ...).
class EnsembleEnumerator {
 public:
  explicit EnsembleEnumerator(const NetworkParams& params);

  /// Writes the next vector into `out`; returns false once exhausted.
  bool next(AllocationVector& out);

  void reset();

 private:
  unsigned m_;
  unsigned zn_;
  bool done_ = false;
  bool started_ = false;
  std::vector<unsigned> positions_;
};

/// Materializes the whole ensemble; intended for small C(m, zn) only.
std::vector<AllocationVector> enumerate_ensemble(const NetworkParams& params);

}  // namespace noma

#endif  // NOMA_CORE_HPP
