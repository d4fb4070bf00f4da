//  Copyright 2026 The ulst Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef ULST_RATIONAL_HPP_
#define ULST_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "ulst/error.hpp"

namespace ulst {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact rational scalar. Values that fit in int64 numerator/denominator are
// kept inline; anything larger transparently promotes to cpp_rational and
// demotes back when it fits again. All arithmetic is exact.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : n_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : n_(n) {}        // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d) {
    if (d == 0) throw Error("rational with zero denominator");
    if (d < 0) {
      // INT64_MIN has no int64 negation; route through the big path.
      if (n == INT64_MIN || d == INT64_MIN) {
        assign_big(BigRat(BigInt(n)) / BigInt(d));
        return;
      }
      n = -n;
      d = -d;
    }
    if (n == INT64_MIN) {
      assign_big(BigRat(BigInt(n)) / BigInt(d));
      return;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    n_ = n;
    d_ = d;
  }
  explicit Rational(const BigRat& b) { assign_big(b); }

  Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
    if (o.big_) big_ = std::make_unique<BigRat>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      n_ = o.n_;
      d_ = o.d_;
      big_ = o.big_ ? std::make_unique<BigRat>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  static Rational from_string(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) {
        BigInt n(s);
        return Rational(BigRat(n));
      }
      BigInt n(s.substr(0, slash));
      BigInt d(s.substr(slash + 1));
      if (d == 0) throw Error("rational with zero denominator");
      return Rational(BigRat(n) / d);
    } catch (const std::runtime_error& e) {
      throw Error(std::string("bad rational literal '") + s + "': " + e.what());
    }
  }

  bool is_small() const { return !big_; }
  bool is_zero() const { return big_ ? big_->is_zero() : n_ == 0; }
  int sign() const {
    if (big_) return big_->sign();
    return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0);
  }

  BigInt numerator() const {
    return big_ ? boost::multiprecision::numerator(*big_) : BigInt(n_);
  }
  BigInt denominator() const {
    return big_ ? boost::multiprecision::denominator(*big_) : BigInt(d_);
  }
  BigRat to_big() const { return big_ ? *big_ : BigRat(BigInt(n_)) / BigInt(d_); }

  double to_double() const {
    if (big_) return big_->convert_to<double>();
    return static_cast<double>(n_) / static_cast<double>(d_);
  }

  // Largest integer <= value.
  BigInt floor_int() const {
    BigInt n = numerator(), d = denominator();
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
  }
  BigInt ceil_int() const {
    BigInt n = numerator(), d = denominator();
    BigInt q = n / d;
    if (n > 0 && q * d != n) ++q;
    return q;
  }

  std::string to_string() const {
    if (big_) {
      BigInt n = boost::multiprecision::numerator(*big_);
      BigInt d = boost::multiprecision::denominator(*big_);
      if (d == 1) return n.str();
      return n.str() + "/" + d.str();
    }
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.both_small32(b)) {
      long long n = a.n_ * b.d_ + b.n_ * a.d_;
      long long d = a.d_ * b.d_;
      return reduced_small(n, d);
    }
    if (!a.big_ && !b.big_) {
      I128 n = static_cast<I128>(a.n_) * b.d_ + static_cast<I128>(b.n_) * a.d_;
      I128 d = static_cast<I128>(a.d_) * b.d_;
      return from_i128(n, d);
    }
    return Rational(a.to_big() + b.to_big());
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.both_small32(b)) {
      long long n = a.n_ * b.d_ - b.n_ * a.d_;
      long long d = a.d_ * b.d_;
      return reduced_small(n, d);
    }
    if (!a.big_ && !b.big_) {
      I128 n = static_cast<I128>(a.n_) * b.d_ - static_cast<I128>(b.n_) * a.d_;
      I128 d = static_cast<I128>(a.d_) * b.d_;
      return from_i128(n, d);
    }
    return Rational(a.to_big() - b.to_big());
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.both_small32(b)) {
      return reduced_small(a.n_ * b.n_, a.d_ * b.d_);
    }
    if (!a.big_ && !b.big_) {
      I128 n = static_cast<I128>(a.n_) * b.n_;
      I128 d = static_cast<I128>(a.d_) * b.d_;
      return from_i128(n, d);
    }
    return Rational(a.to_big() * b.to_big());
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("rational division by zero");
    if (a.both_small32(b)) {
      long long n = a.n_ * b.d_;
      long long d = a.d_ * b.n_;
      if (d < 0) {
        n = -n;
        d = -d;
      }
      return reduced_small(n, d);
    }
    if (!a.big_ && !b.big_) {
      I128 n = static_cast<I128>(a.n_) * b.d_;
      I128 d = static_cast<I128>(a.d_) * b.n_;
      if (d < 0) {
        n = -n;
        d = -d;
      }
      return from_i128(n, d);
    }
    return Rational(a.to_big() / b.to_big());
  }
  Rational operator-() const {
    if (!big_) {
      if (n_ == INT64_MIN) return Rational(-to_big());
      Rational r;
      r.n_ = -n_;
      r.d_ = d_;
      return r;
    }
    return Rational(-*big_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // Three-way compare: -1, 0, 1.
  friend int cmp(const Rational& a, const Rational& b) {
    if (a.both_small32(b)) {
      long long l = a.n_ * b.d_, r = b.n_ * a.d_;
      return l < r ? -1 : (l > r ? 1 : 0);
    }
    if (!a.big_ && !b.big_) {
      I128 l = static_cast<I128>(a.n_) * b.d_, r = static_cast<I128>(b.n_) * a.d_;
      return l < r ? -1 : (l > r ? 1 : 0);
    }
    BigRat l = a.to_big(), r = b.to_big();
    return l < r ? -1 : (l > r ? 1 : 0);
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    return cmp(a, b) == 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  using I128 = __int128;
  using U128 = unsigned __int128;

  long long n_ = 0;
  long long d_ = 1;
  std::unique_ptr<BigRat> big_;

  // Both operands small with 32-bit magnitudes: int64 cross products are safe.
  bool both_small32(const Rational& o) const {
    if (big_ || o.big_) return false;
    constexpr long long kLim = 1LL << 31;
    return n_ > -kLim && n_ < kLim && d_ < kLim && o.n_ > -kLim && o.n_ < kLim &&
           o.d_ < kLim;
  }

  static Rational reduced_small(long long n, long long d) {
    long long g = std::gcd(n < 0 ? -n : n, d);
    Rational r;
    if (g > 1) {
      n /= g;
      d /= g;
    }
    r.n_ = n;
    r.d_ = d;
    return r;
  }

  static U128 gcd128(U128 a, U128 b) {
    while (b != 0) {
      U128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static BigInt to_bigint(I128 v) {
    bool neg = v < 0;
    U128 m = neg ? U128(0) - static_cast<U128>(v) : static_cast<U128>(v);
    BigInt r = static_cast<std::uint64_t>(m >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(m);
    return neg ? BigInt(-r) : r;
  }

  // d > 0 required.
  static Rational from_i128(I128 n, I128 d) {
    U128 an = n < 0 ? U128(0) - static_cast<U128>(n) : static_cast<U128>(n);
    U128 g = gcd128(an, static_cast<U128>(d));
    if (g > 1) {
      n /= static_cast<I128>(g);
      d /= static_cast<I128>(g);
    }
    if (n > INT64_MIN && n <= INT64_MAX && d <= INT64_MAX) {
      Rational r;
      r.n_ = static_cast<long long>(n);
      r.d_ = static_cast<long long>(d);
      return r;
    }
    return Rational(BigRat(to_bigint(n)) / to_bigint(d));
  }

  void assign_big(const BigRat& b) {
    BigInt n = boost::multiprecision::numerator(b);
    BigInt d = boost::multiprecision::denominator(b);
    if (n >= INT64_MIN + 1 && n <= INT64_MAX && d <= INT64_MAX) {
      n_ = n.convert_to<long long>();
      d_ = d.convert_to<long long>();
      big_.reset();
    } else {
      n_ = 0;
      d_ = 1;
      big_ = std::make_unique<BigRat>(b);
    }
  }
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// 2^k as an exact rational, k may be negative.
inline Rational pow2(long long k) {
  if (k >= 0 && k < 62) return Rational(1LL << k);
  if (k < 0 && k > -62) return Rational(1, 1LL << (-k));
  BigInt p = BigInt(1) << static_cast<unsigned>(k >= 0 ? k : -k);
  return k >= 0 ? Rational(BigRat(p)) : Rational(BigRat(1) / p);
}

// Closed interval with exact rational endpoints; used for float-mode
// enclosures where values themselves may be irrational.
struct Interval {
  Rational lo, hi;

  Interval() = default;
  Interval(Rational v) : lo(v), hi(std::move(v)) {}  // NOLINT
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw Error("interval with hi < lo");
  }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo - b.hi, a.hi - b.lo);
  }
  Interval operator-() const { return Interval(-hi, -lo); }

  friend Interval meet(const Interval& a, const Interval& b) {
    return Interval(min(a.lo, b.lo), min(a.hi, b.hi));
  }
  friend Interval join(const Interval& a, const Interval& b) {
    return Interval(max(a.lo, b.lo), max(a.hi, b.hi));
  }
  friend Interval abs(const Interval& a) {
    if (a.lo.sign() >= 0) return a;
    if (a.hi.sign() <= 0) return -a;
    return Interval(Rational(0), max(-a.lo, a.hi));
  }
  friend Interval scale(const Rational& c, const Interval& a) {
    if (c.sign() >= 0) return Interval(c * a.lo, c * a.hi);
    return Interval(c * a.hi, c * a.lo);
  }
};

}  // namespace ulst

#endif  // ULST_RATIONAL_HPP_
