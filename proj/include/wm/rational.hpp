#pragma once

// Exact rational arithmetic on 64-bit numerator/denominator, with overflow
// guards through 128-bit intermediates.  No floating point anywhere.

#include <cstdint>
#include <numeric>
#include <string>

#include "wm/errors.hpp"

namespace wm {

using Entry = long long;

inline Entry checked_narrow(__int128 v) {
  if (v > INT64_MAX / 2 || v < INT64_MIN / 2)
    fail(Errc::Overflow, "integer result out of range");
  return static_cast<Entry>(v);
}

inline Entry checked_mul(Entry a, Entry b) {
  return checked_narrow(static_cast<__int128>(a) * b);
}

inline Entry checked_add(Entry a, Entry b) {
  return checked_narrow(static_cast<__int128>(a) + b);
}

struct Rat {
  Entry num = 0;
  Entry den = 1;  // always > 0, gcd(num, den) == 1

  Rat() = default;
  Rat(Entry n) : num(n), den(1) {}
  Rat(Entry n, Entry d) { assign(n, d); }

  void assign(Entry n, Entry d) {
    if (d == 0) fail(Errc::Internal, "zero denominator");
    if (d < 0) { n = -n; d = -d; }
    Entry g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    num = n;
    den = d;
  }

  bool is_zero() const { return num == 0; }
  bool is_negative() const { return num < 0; }
  bool is_positive() const { return num > 0; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    __int128 n = static_cast<__int128>(a.num) * b.den +
                 static_cast<__int128>(b.num) * a.den;
    __int128 d = static_cast<__int128>(a.den) * b.den;
    return make(n, d);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    __int128 n = static_cast<__int128>(a.num) * b.den -
                 static_cast<__int128>(b.num) * a.den;
    __int128 d = static_cast<__int128>(a.den) * b.den;
    return make(n, d);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(static_cast<__int128>(a.num) * b.num,
                static_cast<__int128>(a.den) * b.den);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) fail(Errc::Internal, "rational division by zero");
    return make(static_cast<__int128>(a.num) * b.den,
                static_cast<__int128>(a.den) * b.num);
  }
  Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

  Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
  Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }
  Rat& operator*=(const Rat& b) { *this = *this * b; return *this; }
  Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

 private:
  static Rat make(__int128 n, __int128 d) {
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    Rat r;
    r.num = checked_narrow(n);
    r.den = checked_narrow(d);
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a;
  }
};

}  // namespace wm
