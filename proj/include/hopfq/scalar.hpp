#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hopfq {

/// The ground field: either the rationals or a word-size prime field GF(p).
class FieldSpec {
 public:
  enum class Kind { rationals, prime_field };

  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws Error{NotPrime} unless 2 <= p < 2^31 and p is prime.
  static FieldSpec prime_field(std::uint32_t p);
  /// Accepts "q", "Q", "rationals", "gf:p", "GF(p)".
  static FieldSpec parse(std::string_view text);

  Kind kind() const noexcept { return p_ == 0 ? Kind::rationals : Kind::prime_field; }
  bool is_rational() const noexcept { return p_ == 0; }
  /// 0 for the rationals.
  std::uint32_t modulus() const noexcept { return p_; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// An exact element of a FieldSpec.
///
/// Rationals are kept in lowest terms with a positive denominator. Small
/// values live inline as int64 pairs and are promoted to GMP rationals when an
/// operation would overflow; the promotion is invisible to callers. Prime
/// field residues are kept in [0, p).
///
/// Arithmetic between scalars of different fields throws FieldMismatch.
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;
  /// Rational integer.
  Scalar(std::int64_t v) : num_(v) {}  // NOLINT(google-explicit-constructor)

  static Scalar integer(const FieldSpec& f, std::int64_t v);
  static Scalar zero(const FieldSpec& f) { return integer(f, 0); }
  static Scalar one(const FieldSpec& f) { return integer(f, 1); }
  /// Rational a/b (b != 0), or a * b^{-1} in GF(p).
  static Scalar fraction(const FieldSpec& f, std::int64_t a, std::int64_t b);
  /// Parses "a/b", "a" (rationals) or a decimal residue (prime fields).
  static Scalar parse(const FieldSpec& f, std::string_view text);

  FieldSpec field() const;
  bool is_zero() const noexcept { return big_ ? false : num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  /// Exact equality; scalars of different fields compare unequal.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "a/b" with b omitted when 1; decimal residue for prime fields.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  static Scalar from_mpq(mpq_class q);
  mpq_class to_mpq() const;
  void check_same_field(const Scalar& other) const;

  std::uint32_t p_ = 0;
  std::int64_t num_ = 0;  // residue when p_ != 0
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;  // set iff the value does not fit inline
};

}  // namespace hopfq
