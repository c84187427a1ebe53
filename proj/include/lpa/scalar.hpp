#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace lpa {

class Scalar;

/// The coefficient field: the rationals (modulus 0) or GF(p).
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);
  /// Accepts "rat", "q", "rationals" or "gf:p".
  static Field parse(const std::string& spec);

  bool is_rational() const noexcept { return modulus_ == 0; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;
  /// Parses "p", "-p" or "p/q".
  Scalar parse_scalar(const std::string& text) const;

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t modulus) : modulus_(modulus) {}
  std::uint64_t modulus_ = 0;
};

/// An exact field element. Rationals are kept reduced with positive
/// denominator; residues live in [0, p).
class Scalar {
 public:
  /// The rational zero.
  Scalar() = default;

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// True when the value is negative as a rational; always false for residues.
  bool is_negative() const;
  /// "p" or "p/q" for rationals, the residue for GF(p).
  std::string to_string() const;

 private:
  friend class Field;
  void check_same_field(const Scalar& other) const;

  mpq_class rational_;
  std::uint64_t modulus_ = 0;
  std::uint64_t residue_ = 0;
};

}  // namespace lpa
