#pragma once

// Exact scalars: extended naturals {0,1,...,inf} and nonnegative rationals
// with inf. Products follow 0*inf = 0.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cucalc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t n) : n_(n) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtNat infinity() {
    ExtNat r;
    r.inf_ = true;
    return r;
  }

  bool is_inf() const { return inf_; }
  bool is_zero() const { return !inf_ && n_ == 0; }
  // Only meaningful when finite.
  std::uint64_t value() const { return n_; }

  friend ExtNat operator+(const ExtNat& a, const ExtNat& b);
  friend ExtNat operator*(const ExtNat& a, const ExtNat& b);
  ExtNat& operator+=(const ExtNat& o) { return *this = *this + o; }

  friend bool operator==(const ExtNat& a, const ExtNat& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.n_ == b.n_);
  }
  friend std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
    if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
    return a.n_ <=> b.n_;
  }

  std::string str() const;

 private:
  std::uint64_t n_ = 0;
  bool inf_ = false;
};

class QInf {
 public:
  QInf() = default;
  QInf(std::int64_t n);  // NOLINT(google-explicit-constructor)
  explicit QInf(Rational r);
  QInf(std::int64_t p, std::int64_t q);
  explicit QInf(const ExtNat& n);

  static QInf infinity() {
    QInf r;
    r.inf_ = true;
    return r;
  }

  bool is_inf() const { return inf_; }
  bool is_zero() const { return !inf_ && v_ == 0; }
  bool is_integer() const;
  // Only meaningful when finite.
  const Rational& value() const { return v_; }

  friend QInf operator+(const QInf& a, const QInf& b);
  friend QInf operator*(const QInf& a, const QInf& b);
  // a - b for finite a >= b.
  friend QInf operator-(const QInf& a, const QInf& b);
  // a / b for finite b > 0.
  friend QInf operator/(const QInf& a, const QInf& b);

  friend bool operator==(const QInf& a, const QInf& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend std::strong_ordering operator<=>(const QInf& a, const QInf& b) {
    if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Integer part when finite and integral; throws otherwise.
  ExtNat to_extnat() const;

  // "inf", "3", or "3/2".
  std::string str() const;

 private:
  Rational v_ = 0;
  bool inf_ = false;
};

// Accepts "inf", "∞", "n", "p/q". Throws DomainError on bad input.
QInf parse_qinf(std::string_view text);
ExtNat parse_extnat(std::string_view text);

}  // namespace cucalc
