#include <doctest.h>

#include <random>

#include "hopfq/error.hpp"
#include "hopfq/hopf.hpp"
#include "hopfq/matrix.hpp"

using namespace hopfq;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Matrix random_int_matrix(std::mt19937& rng, const FieldSpec& f, std::size_t rows, std::size_t cols, int lo, int hi,
                         int zero_bias) {
  std::uniform_int_distribution<int> val(lo, hi);
  std::uniform_int_distribution<int> coin(0, 9);
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = coin(rng) < zero_bias ? Scalar::zero(f) : Scalar::integer(f, val(rng));
  }
  return m;
}

}  // namespace

TEST_CASE("field spec parsing and primality") {
  CHECK(FieldSpec::parse("q").is_rational());
  CHECK(FieldSpec::parse("gf:7").modulus() == 7);
  CHECK(FieldSpec::parse("GF(2)").modulus() == 2);
  CHECK_THROWS_AS(FieldSpec::parse("gf:8"), Error);
  CHECK_THROWS_AS(FieldSpec::parse("gf:1"), Error);
  CHECK_THROWS_AS(FieldSpec::parse("reals"), Error);
  CHECK(FieldSpec::prime_field(2147483647).modulus() == 2147483647U);
}

TEST_CASE("rational canonical form and serialization") {
  CHECK(Scalar::fraction(Q, 2, 4).to_string() == "1/2");
  CHECK(Scalar::fraction(Q, 3, -6).to_string() == "-1/2");
  CHECK(Scalar::fraction(Q, 4, 2).to_string() == "2");
  CHECK(Scalar::parse(Q, "6/-4") == Scalar::fraction(Q, -3, 2));
  CHECK((Scalar::fraction(Q, 1, 3) + Scalar::fraction(Q, 1, 6)) == Scalar::fraction(Q, 1, 2));
  CHECK(Scalar::fraction(Q, 2, 3).inverse() == Scalar::fraction(Q, 3, 2));
  CHECK(Scalar::fraction(Q, -2, 3).inverse() == Scalar::fraction(Q, -3, 2));
  CHECK_THROWS_AS(Scalar::zero(Q).inverse(), Error);
}

TEST_CASE("rationals promote past 64 bits and demote back") {
  Scalar big = Scalar::integer(Q, 1) ;
  const Scalar base = Scalar::integer(Q, 1000000007);
  for (int i = 0; i < 5; ++i) big *= base;
  CHECK(big.to_string() == "1000000035000000490000003430000012005000016807");
  Scalar back = big;
  for (int i = 0; i < 5; ++i) back /= base;
  CHECK(back.is_one());
  CHECK(back == Scalar::one(Q));
  const Scalar tiny = Scalar::one(Q) / big;
  CHECK((tiny * big).is_one());
  CHECK((big - big).is_zero());
  CHECK(Scalar::integer(Q, std::numeric_limits<std::int64_t>::min()).to_string() == "-9223372036854775808");
  CHECK((Scalar::integer(Q, std::numeric_limits<std::int64_t>::max()) + Scalar::one(Q)).to_string() ==
        "9223372036854775808");
}

TEST_CASE("prime field arithmetic") {
  const FieldSpec f = FieldSpec::prime_field(7);
  CHECK(Scalar::integer(f, -1).to_string() == "6");
  CHECK((Scalar::integer(f, 3) * Scalar::integer(f, 5)).to_string() == "1");
  CHECK(Scalar::integer(f, 3).inverse() == Scalar::integer(f, 5));
  CHECK(Scalar::fraction(f, 1, 2) == Scalar::integer(f, 4));
  CHECK(Scalar::integer(FieldSpec::prime_field(2), 2).is_zero());
  CHECK_THROWS_AS(Scalar::integer(f, 1) + Scalar::integer(Q, 1), Error);
  CHECK(Scalar::integer(f, 1) != Scalar::integer(Q, 1));
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace(Matrix::identity(Q, 2)).empty());
  const auto ns = nullspace(Matrix::from_rows(Q, {{1, -1}}));
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == Vector{Scalar(1), Scalar(1)});
  // first nonzero entry normalized to 1
  const auto ns2 = nullspace(Matrix::from_rows(Q, {{0, 2, 4}}));
  REQUIRE(ns2.size() == 2);
  CHECK(ns2[0] == Vector{Scalar(1), Scalar(0), Scalar(0)});
  CHECK(ns2[1] == Vector{Scalar(0), Scalar(1), Scalar::fraction(Q, -1, 2)});
}

TEST_CASE("determinant examples") {
  CHECK(determinant(Matrix::identity(Q, 5)).is_one());
  CHECK(determinant(Matrix::from_rows(Q, {{0, 1}, {1, 0}})) == Scalar(-1));
  CHECK(determinant(Matrix::from_rows(Q, {{2, 3}, {4, 6}})).is_zero());
  CHECK(determinant(Matrix::from_rows(Q, {{0, 0, 1}, {0, 2, 0}, {3, 0, 0}})) == Scalar(-6));
  CHECK_THROWS_AS(determinant(Matrix(Q, 2, 3)), Error);
  // Gram matrix ∫(uv) on kZ2 with ∫ the identity-coefficient functional is the identity.
  CHECK(determinant(Matrix::from_rows(Q, {{1, 0}, {0, 1}})).is_one());
}

TEST_CASE("invert examples") {
  CHECK(invert(Matrix::identity(Q, 3)) == Matrix::identity(Q, 3));
  Matrix expect(Q, 2, 2);
  expect(0, 0) = Scalar::fraction(Q, 1, 2);
  expect(1, 1) = Scalar(1);
  CHECK(invert(Matrix::from_rows(Q, {{2, 0}, {0, 1}})) == expect);
  CHECK_THROWS_AS(invert(Matrix::from_rows(Q, {{1, 2}, {2, 4}})), Error);
  CHECK_THROWS_AS(invert(Matrix(Q, 1, 2)), Error);

  const HopfData kz4 = group_algebra(builtin_loop("cyclic:4"), Q);
  CHECK(invert(kz4.antipode()) == kz4.antipode().transpose());
}

TEST_CASE("linear algebra invariants on random matrices") {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    const Matrix m = random_int_matrix(rng, Q, rows, cols, -3, 3, 5);
    const auto ns = nullspace(m);
    CHECK(rank(m) + ns.size() == cols);
    for (const Vector& v : ns) {
      CHECK(is_zero(m * std::span<const Scalar>(v)));
      std::size_t lead = 0;
      while (v[lead].is_zero()) ++lead;
      CHECK(v[lead].is_one());
    }
    if (!ns.empty()) CHECK(rank(Matrix::from_columns(Q, cols, ns)) == ns.size());
    if (rows == cols) {
      const Scalar det = determinant(m);
      CHECK(det.is_zero() == !ns.empty());
      if (!det.is_zero()) CHECK((m * invert(m)).is_identity());
    }
  }
}

TEST_CASE("prime field agrees with rationals reduced mod p") {
  std::mt19937 rng(7);
  const FieldSpec f = FieldSpec::prime_field(101);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Matrix mq = random_int_matrix(rng, Q, n, n, -9, 9, 3);
    Matrix mp(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) mp(i, j) = Scalar::parse(f, mq(i, j).to_string());
    }
    // the determinant of an integer matrix is an integer, so it reduces directly
    CHECK(Scalar::parse(f, determinant(mq).to_string()) == determinant(mp));
  }
}

TEST_CASE("column basis coordinates and canonical spans") {
  const Matrix b = Matrix::from_rows(Q, {{1, 0}, {1, 1}, {0, 2}});
  const ColumnBasis cb(b);
  const Vector v{Scalar(2), Scalar(5), Scalar(6)};
  CHECK(cb.contains(v));
  CHECK(cb.coordinates(v) == Vector{Scalar(2), Scalar(3)});
  CHECK_FALSE(cb.contains(Vector{Scalar(1), Scalar(0), Scalar(0)}));
  CHECK_THROWS_AS(cb.coordinates(Vector{Scalar(1), Scalar(0), Scalar(0)}), Error);
  CHECK((cb.left_inverse() * b).is_identity());

  const Matrix other = Matrix::from_rows(Q, {{1, 1}, {2, 1}, {2, 0}});
  CHECK(canonical_span(b) == canonical_span(other));
}
