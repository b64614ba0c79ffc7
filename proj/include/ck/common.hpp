#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ck {

// Caller passed inconsistent or out-of-contract arguments.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// A size guard refused the computation before any allocation happened.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A verified theorem was contradicted at runtime. This is the test
// harness's tripwire; it must never fire on valid inputs.
struct ContradictionError : std::logic_error {
  explicit ContradictionError(const std::string& what) : std::logic_error(what) {}
};

// Greedy completion found no admissible vector at column `column`.
struct CompletionError : UsageError {
  int column;
  explicit CompletionError(int j)
      : UsageError("complete_subspace: no admissible vector at column " + std::to_string(j)),
        column(j) {}
};

// splitmix64: the single PRNG used by all sampling code. 64-bit state,
// state advances by the golden-ratio constant, output is the usual
// xor-shift-multiply finalizer. No platform entropy anywhere.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // uniform in [lo, hi] inclusive
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace ck
