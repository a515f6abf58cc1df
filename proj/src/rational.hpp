#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace critic {

// Exact rational arithmetic on int64 with __int128 intermediates.  All bound
// comparisons in the lemma checks go through this type; no floating point.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  static Rational parse(const std::string& s) {
    // strict: the whole token must be consumed, so "1/2/3" or "3x" is rejected
    auto whole = [&](const std::string& part) {
      size_t used = 0;
      long long v;
      try {
        v = std::stoll(part, &used);
      } catch (const std::exception&) {
        fail(Err::Malformed, "bad rational literal: " + s);
      }
      if (used != part.size()) fail(Err::Malformed, "bad rational literal: " + s);
      return v;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(whole(s));
    return Rational(whole(s.substr(0, slash)), whole(s.substr(slash + 1)));
  }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  bool is_integer() const { return den_ == 1; }

  // floor(num/den) with correct behaviour for negatives
  long long floor() const {
    long long q = num_ / den_, r = num_ % den_;
    return (r != 0 && num_ < 0) ? q - 1 : q;
  }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(Err::BadParam, "rational division by zero");
    return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  static Rational from128(__int128 n, __int128 d) {
    if (d == 0) fail(Err::BadParam, "rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
    if (n < lo || n > hi || d > hi) fail(Err::TooLarge, "rational overflow");
    Rational r;
    r.num_ = (long long)n;
    r.den_ = (long long)d;
    return r;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    if (den_ == 0) fail(Err::BadParam, "rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num_, den_;
};

}  // namespace critic
