#include "lpa/scalar.hpp"

#include <cctype>

#include "lpa/errors.hpp"

namespace lpa {
namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r = value % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= kMaxModulus || !is_prime(p)) {
    throw PreconditionError("field modulus must be a prime below 2^32, got " + std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(const std::string& spec) {
  if (spec.empty() || spec == "rat" || spec == "q" || spec == "Q" || spec == "rationals") {
    return rationals();
  }
  if (spec.rfind("gf:", 0) == 0 || spec.rfind("GF:", 0) == 0) {
    const std::string digits = spec.substr(3);
    if (digits.empty() || digits.size() > 10) throw ParseError("bad field spec '" + spec + "'");
    for (char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad field spec '" + spec + "'");
    }
    return prime(std::stoull(digits));
  }
  throw ParseError("bad field spec '" + spec + "' (expected rat or gf:p)");
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const {
  return from_fraction(mpz_class(value), mpz_class(1));
}

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw PreconditionError("zero denominator");
  Scalar s;
  s.modulus_ = modulus_;
  if (modulus_ == 0) {
    s.rational_ = mpq_class(num, den);
    s.rational_.canonicalize();
  } else {
    const std::uint64_t d = reduce(den, modulus_);
    if (d == 0) throw PreconditionError("denominator vanishes modulo " + std::to_string(modulus_));
    s.residue_ = mul_mod(reduce(num, modulus_), pow_mod(d, modulus_ - 2, modulus_), modulus_);
  }
  return s;
}

Scalar Field::parse_scalar(const std::string& text) const {
  const auto slash = text.find('/');
  try {
    mpz_class num(text.substr(0, slash), 10);
    mpz_class den = slash == std::string::npos ? mpz_class(1) : mpz_class(text.substr(slash + 1), 10);
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return from_fraction(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad scalar '" + text + "'");
  }
}

std::string Field::to_string() const {
  return modulus_ == 0 ? std::string("rat") : "gf:" + std::to_string(modulus_);
}

Field Scalar::field() const {
  return modulus_ == 0 ? Field::rationals() : Field::prime(modulus_);
}

bool Scalar::is_zero() const { return modulus_ == 0 ? rational_ == 0 : residue_ == 0; }
bool Scalar::is_one() const { return modulus_ == 0 ? rational_ == 1 : residue_ == 1; }

void Scalar::check_same_field(const Scalar& other) const {
  if (modulus_ != other.modulus_) throw PreconditionError("scalars from different fields");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (modulus_ == 0) {
    s.rational_ = -rational_;
  } else {
    s.residue_ = residue_ == 0 ? 0 : modulus_ - residue_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (modulus_ == 0) {
    rational_ += rhs.rational_;
  } else {
    residue_ = (residue_ + rhs.residue_) % modulus_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (modulus_ == 0) {
    rational_ *= rhs.rational_;
  } else {
    residue_ = mul_mod(residue_, rhs.residue_, modulus_);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero scalar");
  Scalar s = *this;
  if (modulus_ == 0) {
    s.rational_ = 1 / rational_;
  } else {
    s.residue_ = pow_mod(residue_, modulus_ - 2, modulus_);
  }
  return s;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) return false;
  return a.modulus_ == 0 ? a.rational_ == b.rational_ : a.residue_ == b.residue_;
}

bool Scalar::is_negative() const { return modulus_ == 0 && rational_ < 0; }

std::string Scalar::to_string() const {
  if (modulus_ != 0) return std::to_string(residue_);
  return rational_.get_str();
}

}  // namespace lpa
