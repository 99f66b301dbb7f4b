#include "haga/rational.hpp"

#include <cctype>
#include <ostream>

#include "haga/errors.hpp"

namespace haga {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::NotASquare: return "NotASquare";
    case ErrorCode::InvalidTriangle: return "InvalidTriangle";
    case ErrorCode::InvalidSquare: return "InvalidSquare";
    case ErrorCode::UnsupportedPair: return "UnsupportedPair";
    case ErrorCode::NoSuchCircle: return "NoSuchCircle";
    case ErrorCode::NoF: return "NoF";
    case ErrorCode::NoGH: return "NoGH";
    case ErrorCode::NearDegenerate: return "NearDegenerate";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::UnknownCircle: return "UnknownCircle";
    case ErrorCode::UnknownPreset: return "UnknownPreset";
  }
  return "Unknown";
}

Rat::Rat(long num, long den) {
  if (den == 0) throw GeometryError(ErrorCode::DegenerateInput, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw GeometryError(ErrorCode::DegenerateInput, "division by zero");
  q_ /= o.q_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rat> Rat::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  if (negative) n = -n;
  return Rat(mpq_class(n, d));
}

std::string Rat::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

std::optional<Rat> sqrt_rat(const Rat& s) {
  if (s.sign() < 0) throw GeometryError(ErrorCode::NegativeInput, s.to_string());
  // Canonical form means p/q is a rational square iff both p and q are perfect squares.
  const mpz_class num = s.numerator();
  const mpz_class den = s.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  return Rat(mpq_class(sqrt(num), sqrt(den)));
}

}  // namespace haga
