#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace tanerve {

using BigRational = boost::multiprecision::cpp_rational;

// The base field: exact rationals or a prime field F_p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::int64_t p);
  // "Q" or "Fp:<p>"
  static Field parse(const std::string& text);

  bool is_rational() const { return p_ == 0; }
  std::int64_t prime_modulus() const { return p_; }
  std::string describe() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::int64_t p) : p_(p) {}
  std::int64_t p_;
};

// An exact field element. Rationals are kept in lowest terms with a
// positive denominator; F_p residues live in [0, p).
class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}
  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_integer(const Field& f, long long value);
  // Accepts "n" or "n/d".
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  Scalar inverse() const;
  bool operator==(const Scalar& rhs) const;

 private:
  explicit Scalar(const Field& f) : field_(f) {}
  Field field_;
  BigRational q_ = 0;   // used when the field is Q
  std::int64_t r_ = 0;  // residue when the field is F_p
};

// (-1)^e as a field element.
Scalar sign_of(const Field& f, long long exponent);

}  // namespace tanerve
