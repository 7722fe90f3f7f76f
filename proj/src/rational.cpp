#include "twomode/rational.hpp"

#include <stdexcept>

#include "twomode/error.hpp"

namespace twomode {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::IntraPartEdge: return "IntraPartEdge";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::InvalidSize: return "InvalidSize";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::RootNotAdjacentToAllA1: return "RootNotAdjacentToAllA1";
    case ErrorKind::DegreeGapTooSmall: return "DegreeGapTooSmall";
    case ErrorKind::RootDegreeOne: return "RootDegreeOne";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::DuplicatePair: return "DuplicatePair";
    case ErrorKind::LabelInBothParts: return "LabelInBothParts";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q_.canonicalize();
}

Rational Rational::from_strings(std::string_view num, std::string_view den) {
  mpz_class n, d;
  if (n.set_str(std::string(num), 10) != 0 || d.set_str(std::string(den), 10) != 0) {
    throw std::invalid_argument("Rational: not an integer literal");
  }
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return numerator();
  return numerator() + "/" + denominator();
}

std::string Rational::to_decimal(int places) const {
  if (places < 0) places = 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));

  const bool negative = sgn(q_) < 0;
  mpz_class num = abs(q_.get_num()) * scale;
  const mpz_class& den = q_.get_den();

  // round(num/den) half away from zero on the magnitude
  mpz_class scaled = (2 * num + den) / (2 * den);

  std::string digits = scaled.get_str();
  if (static_cast<int>(digits.size()) <= places) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out;
  if (negative && scaled != 0) out.push_back('-');
  const std::size_t int_len = digits.size() - static_cast<std::size_t>(places);
  out.append(digits, 0, int_len);
  if (places > 0) {
    out.push_back('.');
    out.append(digits, int_len, std::string::npos);
  }
  return out;
}

Rational reciprocal(std::uint64_t den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  return Rational(1, static_cast<std::int64_t>(den));
}

}  // namespace twomode
