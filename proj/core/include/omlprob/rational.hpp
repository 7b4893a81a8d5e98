#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace omlprob {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Backed by GMP, so numerators and denominators are unbounded.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

  /// Parses "p/q", "p", or "-p/q". Whitespace is not accepted.
  /// Throws std::invalid_argument on malformed text or a zero denominator.
  static Rat parse(std::string_view text);

  /// "p/q" in lowest terms, or "p" when the denominator is 1.
  std::string str() const;

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

  /// Lossy conversion for display and benchmarks only.
  double to_double() const { return v_.get_d(); }

  const mpq_class& raw() const { return v_; }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline bool in_unit_interval(const Rat& r) { return r.sign() >= 0 && r <= Rat(1); }

}  // namespace omlprob
