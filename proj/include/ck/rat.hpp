#pragma once

#include <gmpxx.h>

#include <string>

#include "ck/common.hpp"

namespace ck {

// Exact rational scalar. Always stored canonically: numerator and
// denominator coprime, denominator positive. Arbitrary precision, so
// arithmetic never overflows.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long long n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit by design
  Rat(long long num, long long den) : v_(static_cast<long>(num), static_cast<long>(den)) {
    if (den == 0) throw UsageError("rational with zero denominator");
    v_.canonicalize();
  }

  static Rat parse(const std::string& s) {
    Rat r;
    if (s.empty() || mpq_set_str(r.v_.get_mpq_t(), s.c_str(), 10) != 0)
      throw UsageError("cannot parse rational: '" + s + "'");
    if (r.v_.get_den() == 0) throw UsageError("rational with zero denominator: '" + s + "'");
    r.v_.canonicalize();
    return r;
  }

  bool is_zero() const { return sgn(v_) == 0; }

  Rat inv() const {
    if (is_zero()) throw UsageError("division by zero");
    Rat r;
    r.v_ = 1 / v_;
    return r;
  }

  Rat operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
  }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw UsageError("division by zero");
    return Rat(a.v_ / b.v_);
  }
  Rat& operator+=(const Rat& b) { v_ += b.v_; return *this; }
  Rat& operator-=(const Rat& b) { v_ -= b.v_; return *this; }
  Rat& operator*=(const Rat& b) { v_ *= b.v_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

  // "a" for integers, "a/b" otherwise
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  explicit Rat(const mpq_class& q) : v_(q) {}
  mpq_class v_;
};

}  // namespace ck
