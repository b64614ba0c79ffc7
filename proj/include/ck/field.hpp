#pragma once

#include <string>

#include "ck/common.hpp"
#include "ck/fp.hpp"
#include "ck/rat.hpp"

namespace ck {

// Runtime field descriptor: the rationals (p == 0) or a prime field.
// Containers carry one of these so that degenerate values (a 0xn basis,
// say) still know their field.
struct FieldDesc {
  long long p = 0;

  static FieldDesc rationals() { return FieldDesc{0}; }
  static FieldDesc prime(long long p) {
    if (!is_prime(p)) throw UsageError("not a prime: " + std::to_string(p));
    return FieldDesc{p};
  }

  bool is_rational() const { return p == 0; }
  friend bool operator==(const FieldDesc& a, const FieldDesc& b) { return a.p == b.p; }
  friend bool operator!=(const FieldDesc& a, const FieldDesc& b) { return a.p != b.p; }
  std::string str() const { return is_rational() ? "Q" : "F" + std::to_string(p); }
};

template <class K>
K make_scalar(const FieldDesc& f, long long v);

template <>
inline Rat make_scalar<Rat>(const FieldDesc& f, long long v) {
  if (!f.is_rational()) throw UsageError("rational scalar requested for a prime field");
  return Rat(v);
}

template <>
inline Fp make_scalar<Fp>(const FieldDesc& f, long long v) {
  if (f.is_rational()) throw UsageError("prime-field scalar requested over Q");
  return Fp(v, f.p);
}

}  // namespace ck
