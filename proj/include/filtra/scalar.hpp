#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace filtra {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Element of the field Q(sqrt5): a + b*sqrt(5). The b-part is zero everywhere
// except in golden-ratio constructions, so plain rational work pays only a
// comparison against zero.
class Scalar {
 public:
  Scalar() : a_(0), b_(0) {}
  Scalar(int v) : a_(v), b_(0) {}                 // NOLINT(runtime/explicit)
  Scalar(long long v) : a_(v), b_(0) {}           // NOLINT(runtime/explicit)
  Scalar(const Rat& v) : a_(v), b_(0) {}          // NOLINT(runtime/explicit)
  Scalar(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

  static Scalar ratio(const BigInt& num, const BigInt& den) {
    return Scalar(Rat(num, den));
  }
  static Scalar sqrt5() { return Scalar(Rat(0), Rat(1)); }
  // Golden-ratio conjugate (sqrt(5)-1)/2, the root of x^2 + x = 1.
  static Scalar golden_conjugate() { return Scalar(Rat(-1, 2), Rat(1, 2)); }

  const Rat& rational_part() const { return a_; }
  const Rat& sqrt5_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }

  const Rat& as_rational() const {
    if (b_ != 0) throw std::domain_error("Scalar: not a rational value");
    return a_;
  }

  bool is_zero() const { return a_ == 0 && b_ == 0; }

  int sign() const {
    int sa = a_.sign();
    int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Mixed signs: sign(a + b*sqrt5) = sign(b) * sign(5*b^2 - a^2).
    Rat d = 5 * b_ * b_ - a_ * a_;
    int sd = d.sign();
    if (sd == 0) return 0;
    return sb * sd;
  }

  Scalar operator-() const { return Scalar(-a_, -b_); }
  Scalar& operator+=(const Scalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (b_ == 0 && o.b_ == 0) {
      a_ *= o.a_;
      return *this;
    }
    Rat na = a_ * o.a_ + 5 * b_ * o.b_;
    Rat nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    if (b_ == 0 && o.b_ == 0) {
      a_ /= o.a_;
      return *this;
    }
    // 1/(c + d*sqrt5) = (c - d*sqrt5)/(c^2 - 5d^2)
    Rat den = o.a_ * o.a_ - 5 * o.b_ * o.b_;
    Rat na = (a_ * o.a_ - 5 * b_ * o.b_) / den;
    Rat nb = (b_ * o.a_ - a_ * o.b_) / den;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
  friend bool operator<(const Scalar& x, const Scalar& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const Scalar& x, const Scalar& y) { return y < x; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return !(y < x); }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return !(x < y); }

  double to_double() const {
    double v = a_.convert_to<double>();
    if (b_ != 0) v += b_.convert_to<double>() * 2.2360679774997896964;
    return v;
  }

  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  // Canonical textual form: "p/q" (or "p") for rationals,
  // "p/q+r/s*sqrt5" otherwise. Parsed back by parse().
  std::string str() const;
  static Scalar parse(const std::string& text);

  // Deterministic serialization for hashing/interning.
  std::string key() const { return str(); }

 private:
  Rat a_;
  Rat b_;
};

inline std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

inline std::string Scalar::str() const {
  if (b_ == 0) return rat_str(a_);
  std::string s = rat_str(a_);
  if (b_.sign() >= 0) s += "+";
  s += rat_str(b_);
  s += "*sqrt5";
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

namespace detail {
inline Rat parse_rat(const std::string& text) {
  // Accepts "p", "p/q" and decimal notation "x.yz".
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    BigInt num(digits);
    BigInt den(1);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rat(num, den);
  }
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(BigInt(text));
  BigInt num(text.substr(0, slash));
  BigInt den(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rat(num, den);
}
}  // namespace detail

inline Scalar Scalar::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty scalar literal");
  auto star = text.find("*sqrt5");
  if (star == std::string::npos) return Scalar(detail::parse_rat(text));
  // split "A+B*sqrt5" / "A-B*sqrt5" at the last +/- before '*sqrt5'
  std::string head = text.substr(0, star);
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' &&
        head[i - 1] != '+' && head[i - 1] != '-') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos)
    throw std::invalid_argument("malformed Q(sqrt5) literal: " + text);
  Rat a = detail::parse_rat(head.substr(0, split));
  std::string btxt = head.substr(split);
  if (btxt[0] == '+') btxt = btxt.substr(1);
  Rat b = detail::parse_rat(btxt);
  return Scalar(a, b);
}

}  // namespace filtra
