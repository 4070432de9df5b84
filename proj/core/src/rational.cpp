#include "tri3/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "tri3/errors.hpp"

namespace tri3 {

namespace {

bool is_decimal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_decimal(num, true) || (slash != std::string_view::npos && !is_decimal(den, false)))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  if (!num.empty() && num.front() == '+') num.remove_prefix(1);

  Rational r;
  mpz_class n(std::string(num), 10);
  mpz_class d(1);
  if (slash != std::string_view::npos) d = mpz_class(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("rational '" + std::string(text) + "' has zero denominator");
  r.q_ = mpq_class(n, d);
  r.q_.canonicalize();
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  q_ /= o.q_;
  return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  q_ += a.q_ * b.q_;
}

void Rational::sub_product(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  q_ -= a.q_ * b.q_;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum: length mismatch");
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference: length mismatch");
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v);
  for (auto& x : r) x *= s;
  return r;
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

}  // namespace tri3
