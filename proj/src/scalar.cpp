#include "hopfq/scalar.hpp"

#include <charconv>
#include <limits>
#include <string>

#include "hopfq/error.hpp"

namespace hopfq {

namespace {

using i128 = __int128;

constexpr std::int64_t kInlineMax = std::numeric_limits<std::int64_t>::max();

bool fits_inline(i128 v) { return v <= kInlineMax && v >= -kInlineMax; }

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_i128(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (exp != 0) {
    if (exp & 1U) r = r * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return r;
}

std::int64_t reduce_mod(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

}  // namespace

// ---------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (p >= (1U << 31) || !is_prime(p)) {
    throw Error(ErrorCode::NotPrime, "modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q" || text == "rationals") return rationals();
  std::string_view digits;
  if (text.starts_with("gf:") || text.starts_with("GF:")) {
    digits = text.substr(3);
  } else if ((text.starts_with("GF(") || text.starts_with("gf(")) && text.ends_with(")")) {
    digits = text.substr(3, text.size() - 4);
  } else {
    throw Error(ErrorCode::ParseError, "unknown field '" + std::string(text) + "' (expected q or gf:p)");
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || p >= (1ULL << 31)) {
    throw Error(ErrorCode::ParseError, "bad prime modulus in '" + std::string(text) + "'");
  }
  return prime_field(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const { return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")"; }

// ------------------------------------------------------------------ Scalar

Scalar Scalar::integer(const FieldSpec& f, std::int64_t v) {
  Scalar s;
  s.p_ = f.modulus();
  if (s.p_ != 0) {
    s.num_ = reduce_mod(v, s.p_);
  } else if (v == std::numeric_limits<std::int64_t>::min()) {
    s = from_mpq(mpq_class(mpz_from_i128(v)));
  } else {
    s.num_ = v;
  }
  return s;
}

Scalar Scalar::fraction(const FieldSpec& f, std::int64_t a, std::int64_t b) {
  if (b == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  return integer(f, a) / integer(f, b);
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  if (f.is_rational()) {
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0) {
      throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
    }
    if (q.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return from_mpq(std::move(q));
  }
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::ParseError, "bad residue '" + std::string(text) + "'");
  }
  return integer(f, v);
}

FieldSpec Scalar::field() const { return p_ == 0 ? FieldSpec::rationals() : FieldSpec::prime_field(p_); }

Scalar Scalar::from_mpq(mpq_class q) {
  Scalar s;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() && q.get_num() != std::numeric_limits<long>::min()) {
    s.num_ = q.get_num().get_si();
    s.den_ = q.get_den().get_si();
  } else {
    s.big_ = std::make_shared<const mpq_class>(std::move(q));
  }
  return s;
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

void Scalar::check_same_field(const Scalar& other) const {
  if (p_ != other.p_) {
    throw Error(ErrorCode::FieldMismatch,
                "arithmetic between " + field().to_string() + " and " + other.field().to_string());
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_ != 0) {
    r.num_ = num_ == 0 ? 0 : p_ - num_;
  } else if (big_) {
    r = from_mpq(-*big_);
  } else {
    r.num_ = -num_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (p_ != 0) {
    Scalar r = *this;
    r.num_ = static_cast<std::int64_t>(pow_mod(static_cast<std::uint64_t>(num_), p_ - 2, p_));
    return r;
  }
  if (big_) {
    mpq_class q = 1 / *big_;
    q.canonicalize();
    return from_mpq(std::move(q));
  }
  Scalar r;
  r.num_ = num_ < 0 ? -den_ : den_;
  r.den_ = num_ < 0 ? -num_ : num_;
  return r;
}

namespace {

// Builds a canonical inline rational from an int128 fraction, or returns false
// when the reduced result does not fit.
bool make_inline(i128 n, i128 d, std::int64_t& num, std::int64_t& den) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    num = 0;
    den = 1;
    return true;
  }
  const i128 g = gcd128(n, d);
  n /= g;
  d /= g;
  if (!fits_inline(n) || !fits_inline(d)) return false;
  num = static_cast<std::int64_t>(n);
  den = static_cast<std::int64_t>(d);
  return true;
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.p_ != 0) {
    Scalar r = a;
    r.num_ = (a.num_ + b.num_) % a.p_;
    return r;
  }
  if (!a.big_ && !b.big_) {
    Scalar r;
    if (a.den_ == 1 && b.den_ == 1) {
      const i128 s = static_cast<i128>(a.num_) + b.num_;
      if (fits_inline(s)) {
        r.num_ = static_cast<std::int64_t>(s);
        return r;
      }
    }
    const i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    const i128 d = static_cast<i128>(a.den_) * b.den_;
    // n fits in int128 because |num|, |den| < 2^63.
    if (make_inline(n, d, r.num_, r.den_)) return r;
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    q.canonicalize();
    return Scalar::from_mpq(std::move(q));
  }
  mpq_class q = a.to_mpq() + b.to_mpq();
  return Scalar::from_mpq(std::move(q));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.p_ != 0) {
    Scalar r = a;
    r.num_ = static_cast<std::int64_t>(static_cast<std::uint64_t>(a.num_) * static_cast<std::uint64_t>(b.num_) % a.p_);
    return r;
  }
  if (!a.big_ && !b.big_) {
    Scalar r;
    if (a.num_ == 0 || b.num_ == 0) return r;
    // Cross-cancel first so the products stay small.
    const i128 g1 = gcd128(a.num_, b.den_);
    const i128 g2 = gcd128(b.num_, a.den_);
    const i128 n = (static_cast<i128>(a.num_) / g1) * (static_cast<i128>(b.num_) / g2);
    const i128 d = (static_cast<i128>(a.den_) / g2) * (static_cast<i128>(b.den_) / g1);
    if (fits_inline(n) && fits_inline(d)) {
      r.num_ = static_cast<std::int64_t>(n);
      r.den_ = static_cast<std::int64_t>(d);
      return r;
    }
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    q.canonicalize();
    return Scalar::from_mpq(std::move(q));
  }
  mpq_class q = a.to_mpq() * b.to_mpq();
  return Scalar::from_mpq(std::move(q));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;  // canonical: inline and big never coincide
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string Scalar::to_string() const {
  if (p_ != 0) return std::to_string(num_);
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

// ------------------------------------------------------------------- Error

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::LatinSquareViolation: return "LatinSquareViolation";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::NotIPLoop: return "NotIPLoop";
    case ErrorCode::WrongFlavor: return "WrongFlavor";
    case ErrorCode::NotAnIntegral: return "NotAnIntegral";
    case ErrorCode::DegeneratePairing: return "DegeneratePairing";
    case ErrorCode::ModuleAxiomsFail: return "ModuleAxiomsFail";
    case ErrorCode::NotAnIntegralIn: return "NotAnIntegralIn";
    case ErrorCode::NotNormalizable: return "NotNormalizable";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::ZeroIntegral: return "ZeroIntegral";
    case ErrorCode::NotASubmodule: return "NotASubmodule";
    case ErrorCode::NotAProjection: return "NotAProjection";
  }
  return "Unknown";
}

}  // namespace hopfq
