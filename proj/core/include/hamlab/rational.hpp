#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hamlab {

/// Exact rational number. All comparisons cross-multiply in 128-bit
/// arithmetic; nothing here ever touches floating point.
struct Rational {
  long long num = 0;
  long long den = 1;  // always > 0, fraction always reduced

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

/// Toughness value: min |S| / s(G\S) over separators, or infinite for
/// complete graphs (every K_n, n >= 1).
class Toughness {
 public:
  static Toughness infinite() { return Toughness(true, Rational(0)); }
  static Toughness finite(Rational value) { return Toughness(false, value); }

  bool is_infinite() const { return infinite_; }

  /// Finite value; throws if infinite.
  const Rational& value() const {
    if (infinite_) throw std::logic_error("toughness is infinite");
    return value_;
  }

  bool at_least(const Rational& t) const {
    return infinite_ || value_ >= t;
  }
  bool greater_than(const Rational& t) const {
    return infinite_ || value_ > t;
  }

  friend bool operator==(const Toughness& a, const Toughness& b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.value_ == b.value_;
  }

  std::string str() const { return infinite_ ? "inf" : value_.str(); }

 private:
  Toughness(bool inf, Rational value) : infinite_(inf), value_(value) {}

  bool infinite_;
  Rational value_;
};

}  // namespace hamlab
