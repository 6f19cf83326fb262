#include "tanerve/scalar.hpp"

#include <stdexcept>

namespace tanerve {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("scalar: " + msg);
}

std::int64_t mod_pos(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1 % p;
  base = mod_pos(base, p);
  while (exp > 0) {
    if (exp & 1) result = (__int128)result * base % p;
    base = (__int128)base * base % p;
    exp >>= 1;
  }
  return result;
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (p < 2) fail("prime modulus must be at least 2");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) fail("modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text.rfind("Fp:", 0) == 0) {
    try {
      return prime(std::stoll(text.substr(3)));
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      fail("bad field spec '" + text + "'");
    }
  }
  fail("bad field spec '" + text + "' (expected Q or Fp:<p>)");
}

std::string Field::describe() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f) { return Scalar(f); }

Scalar Scalar::one(const Field& f) { return from_integer(f, 1); }

Scalar Scalar::from_integer(const Field& f, long long value) {
  Scalar s(f);
  if (f.is_rational())
    s.q_ = value;
  else
    s.r_ = mod_pos(value, f.prime_modulus());
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  auto slash = text.find('/');
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  Scalar s(f);
  try {
    if (f.is_rational()) {
      boost::multiprecision::cpp_int n(num), d(den);
      if (d == 0) fail("zero denominator in '" + text + "'");
      if (d < 0) {
        n = -n;
        d = -d;
      }
      s.q_ = BigRational(n, d);
    } else {
      std::int64_t p = f.prime_modulus();
      std::int64_t n = mod_pos(std::stoll(num), p);
      std::int64_t d = mod_pos(std::stoll(den), p);
      if (d == 0) fail("denominator of '" + text + "' vanishes mod " +
                       std::to_string(p));
      s.r_ = (__int128)n * mod_pow(d, p - 2, p) % p;
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    fail("bad scalar '" + text + "'");
  }
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? q_ == 0 : r_ == 0;
}

std::string Scalar::str() const {
  if (!field_.is_rational()) return std::to_string(r_);
  if (denominator(q_) == 1) return numerator(q_).str();
  return numerator(q_).str() + "/" + denominator(q_).str();
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.prime_modulus() - r_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (field_ != rhs.field_) fail("field mismatch");
  if (field_.is_rational())
    q_ += rhs.q_;
  else
    r_ = (r_ + rhs.r_) % field_.prime_modulus();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (field_ != rhs.field_) fail("field mismatch");
  if (field_.is_rational())
    q_ *= rhs.q_;
  else
    r_ = (__int128)r_ * rhs.r_ % field_.prime_modulus();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail("division by zero");
  Scalar s(field_);
  if (field_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = mod_pow(r_, field_.prime_modulus() - 2, field_.prime_modulus());
  return s;
}

bool Scalar::operator==(const Scalar& rhs) const {
  if (field_ != rhs.field_) return false;
  return field_.is_rational() ? q_ == rhs.q_ : r_ == rhs.r_;
}

Scalar sign_of(const Field& f, long long exponent) {
  return Scalar::from_integer(f, (exponent % 2 + 2) % 2 == 0 ? 1 : -1);
}

}  // namespace tanerve
