#pragma once

#include <cstdint>
#include <string>

#include "ck/common.hpp"

namespace ck {

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

// Prime-field scalar: residue in [0, p) together with its modulus.
// A value constructed from a bare integer carries modulus 0 ("integer
// literal") and adopts the other operand's modulus on first use; two
// moded values must agree on p.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(long long v) : v_(v), p_(0) {}  // NOLINT: literal, implicit by design
  Fp(long long v, long long p) : v_(v), p_(p) { reduce(); }

  long long value() const { return v_; }
  long long modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }

  Fp inv() const {
    if (p_ == 0) {
      if (v_ == 1) return Fp(1);
      if (v_ == -1) return Fp(-1);
      throw UsageError("inverse of an unreduced integer literal");
    }
    if (v_ == 0) throw UsageError("division by zero");
    // extended Euclid for v^-1 mod p
    long long a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      long long q = a / b;
      long long t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return Fp(x0, p_);
  }

  Fp operator-() const { return Fp(-v_, p_); }

  friend Fp operator+(const Fp& a, const Fp& b) { return Fp(a.v_ + b.v_, join(a, b)); }
  friend Fp operator-(const Fp& a, const Fp& b) { return Fp(a.v_ - b.v_, join(a, b)); }
  friend Fp operator*(const Fp& a, const Fp& b) { return Fp(a.v_ * b.v_, join(a, b)); }
  friend Fp operator/(const Fp& a, const Fp& b) {
    long long p = join(a, b);
    return Fp(a.v_, p) * Fp(b.v_, p).inv();
  }
  Fp& operator+=(const Fp& b) { return *this = *this + b; }
  Fp& operator-=(const Fp& b) { return *this = *this - b; }
  Fp& operator*=(const Fp& b) { return *this = *this * b; }

  friend bool operator==(const Fp& a, const Fp& b) {
    long long p = join(a, b);
    if (p == 0) return a.v_ == b.v_;
    return Fp(a.v_, p).v_ == Fp(b.v_, p).v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  std::string str() const { return std::to_string(v_); }

 private:
  void reduce() {
    if (p_ == 0) return;
    v_ %= p_;
    if (v_ < 0) v_ += p_;
  }
  static long long join(const Fp& a, const Fp& b) {
    if (a.p_ == 0) return b.p_;
    if (b.p_ == 0) return a.p_;
    if (a.p_ != b.p_) throw UsageError("mixed prime-field moduli");
    return a.p_;
  }

  long long v_;
  long long p_;
};

}  // namespace ck
