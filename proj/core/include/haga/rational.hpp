#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace haga {

/// Exact rational number in canonical form (denominator > 0, lowest terms).
///
/// Thin value wrapper over GMP's mpq_class. Every arithmetic result is
/// canonicalized by GMP itself; construction from a numerator/denominator
/// pair canonicalizes explicitly.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  Rat(long num, long den);
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p" or "p/q" with optional leading sign. Decimals are rejected.
  static std::optional<Rat> parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  Rat abs() const { return Rat(::abs(q_)); }

  double to_double() const { return q_.get_d(); }

  /// Canonical "p/q", or "p" when q = 1.
  std::string to_string() const;

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat square(const Rat& r) { return r * r; }

/// Rational square root. Empty when `s` is not the square of a rational.
/// Throws GeometryError(NegativeInput) when s < 0.
std::optional<Rat> sqrt_rat(const Rat& s);

}  // namespace haga
