#include "cucalc/scalar.hpp"

#include <cctype>
#include <limits>

#include "cucalc/error.hpp"

namespace cucalc {

ExtNat operator+(const ExtNat& a, const ExtNat& b) {
  if (a.inf_ || b.inf_) return ExtNat::infinity();
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a.n_, b.n_, &r)) throw DomainError("extnat addition overflow");
  return ExtNat(r);
}

ExtNat operator*(const ExtNat& a, const ExtNat& b) {
  if (a.is_zero() || b.is_zero()) return ExtNat(0);
  if (a.inf_ || b.inf_) return ExtNat::infinity();
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a.n_, b.n_, &r)) throw DomainError("extnat product overflow");
  return ExtNat(r);
}

std::string ExtNat::str() const { return inf_ ? "inf" : std::to_string(n_); }

QInf::QInf(std::int64_t n) : v_(n) {
  if (n < 0) throw DomainError("negative scalar");
}

QInf::QInf(Rational r) : v_(std::move(r)) {
  if (v_ < 0) throw DomainError("negative scalar");
}

QInf::QInf(std::int64_t p, std::int64_t q) {
  if (q == 0) throw DomainError("zero denominator");
  v_ = Rational(p, q);
  if (v_ < 0) throw DomainError("negative scalar");
}

QInf::QInf(const ExtNat& n) {
  if (n.is_inf()) {
    inf_ = true;
  } else {
    v_ = Rational(BigInt(n.value()));
  }
}

bool QInf::is_integer() const {
  return !inf_ && boost::multiprecision::denominator(v_) == 1;
}

QInf operator+(const QInf& a, const QInf& b) {
  if (a.inf_ || b.inf_) return QInf::infinity();
  return QInf(a.v_ + b.v_);
}

QInf operator*(const QInf& a, const QInf& b) {
  if (a.is_zero() || b.is_zero()) return QInf(0);
  if (a.inf_ || b.inf_) return QInf::infinity();
  return QInf(a.v_ * b.v_);
}

QInf operator-(const QInf& a, const QInf& b) {
  if (a.inf_ || b.inf_) throw DomainError("subtraction involving inf");
  if (a.v_ < b.v_) throw DomainError("negative difference");
  return QInf(a.v_ - b.v_);
}

QInf operator/(const QInf& a, const QInf& b) {
  if (b.inf_ || b.is_zero()) throw DomainError("division by zero or inf");
  if (a.inf_) return QInf::infinity();
  return QInf(a.v_ / b.v_);
}

ExtNat QInf::to_extnat() const {
  if (inf_) return ExtNat::infinity();
  if (!is_integer()) throw DomainError("not a natural number: " + str());
  const BigInt n = boost::multiprecision::numerator(v_);
  if (n > std::numeric_limits<std::uint64_t>::max()) throw DomainError("natural number too large");
  return ExtNat(n.convert_to<std::uint64_t>());
}

std::string QInf::str() const {
  if (inf_) return "inf";
  const BigInt num = boost::multiprecision::numerator(v_);
  const BigInt den = boost::multiprecision::denominator(v_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

QInf parse_qinf(std::string_view text) {
  text = trim(text);
  if (text == "inf" || text == "\xE2\x88\x9E") return QInf::infinity();
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!all_digits(text)) throw DomainError("bad rational literal '" + std::string(text) + "'");
    return QInf(Rational(BigInt(std::string(text))));
  }
  const auto p = trim(text.substr(0, slash));
  const auto q = trim(text.substr(slash + 1));
  if (!all_digits(p) || !all_digits(q)) {
    throw DomainError("bad rational literal '" + std::string(text) + "'");
  }
  const BigInt den(std::string{q});
  if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return QInf(Rational(BigInt(std::string(p)), den));
}

ExtNat parse_extnat(std::string_view text) {
  const QInf q = parse_qinf(text);
  return q.to_extnat();
}

}  // namespace cucalc
