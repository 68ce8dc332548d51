#include <doctest.h>

#include "hopfq/error.hpp"
#include "hopfq/fourier.hpp"
#include "hopfq/integrals.hpp"
#include "support.hpp"

using namespace hopfq;
using hopfq::testing::first_breaking_mutation;

namespace {

const FieldSpec Q = FieldSpec::rationals();

void require_all_pass(const CheckReport& r) {
  for (const Check& c : r.checks()) {
    CAPTURE(c.name);
    CAPTURE(c.lhs);
    CAPTURE(c.rhs);
    CHECK(c.outcome != Outcome::fail);
  }
}

}  // namespace

TEST_CASE("transform of a delta is the inverse group element") {
  for (const std::string& name : standard_builtins()) {
    CAPTURE(name);
    const LoopTable loop = builtin_loop(name);
    const HopfData h = function_algebra(loop, Q);
    const FourierData fd = build_fourier(h);
    CHECK(fd.integral == Vector(h.dim(), Scalar(1)));
    // H* of k[G] is kG with the group elements as the dual basis
    for (int s = 0; s < h.dim(); ++s) {
      CHECK(fd.transform.column(s) == unit_vector(Q, h.dim(), loop.inv(s)));
    }
  }
}

TEST_CASE("convolution of deltas is the reversed product delta") {
  for (const std::string& name : standard_builtins()) {
    CAPTURE(name);
    const LoopTable loop = builtin_loop(name);
    const HopfData h = function_algebra(loop, Q);
    const FourierData fd = build_fourier(h);
    for (int s = 0; s < h.dim(); ++s) {
      for (int t = 0; t < h.dim(); ++t) {
        CHECK(convolution(fd, h.basis(s), h.basis(t)) == h.basis(loop.mul(t, s)));
      }
      CHECK(is_zero(convolution(fd, h.basis(s), zero_vector(Q, h.dim()))));
    }
  }
}

TEST_CASE("kZ2 transform and convolution table") {
  const HopfData h = group_algebra(builtin_loop("cyclic:2"), Q);
  const Functional I{Scalar(1), Scalar(0)};
  const FourierData fd = build_fourier(h, I, integrals(dual(h), {Side::right, Location::on}).basis[0]);
  CHECK(fd.transform.is_identity());
  // u*v = v when u = v and 0 otherwise
  const Element e = h.basis(0), g = h.basis(1), zero = zero_vector(Q, 2);
  CHECK(convolution(fd, e, e) == e);
  CHECK(convolution(fd, g, g) == g);
  CHECK(convolution(fd, e, g) == zero);
  CHECK(convolution(fd, g, e) == zero);
}

TEST_CASE("inverse transform") {
  for (const char* name : {"cyclic:4", "octonion"}) {
    CAPTURE(name);
    const LoopTable loop = builtin_loop(name);
    for (const HopfData& h : {group_algebra(loop, Q), function_algebra(loop, Q)}) {
      const FourierData fd = build_fourier(h);
      REQUIRE(fd.inverse.has_value());
      const CheckReport r = check_inverse(fd);
      CHECK(r.all_pass());
      CHECK(r.checks().size() == 3);
    }
  }
}

TEST_CASE("rescaling the integrals") {
  const HopfData h = group_algebra(builtin_loop("sym3"), Q);
  const FourierData base = build_fourier(h);
  const Scalar three(3);
  const FourierData big_mu = build_fourier(h, base.integral, scaled(base.dual_right_integral, three));
  CHECK(big_mu.mu == base.mu * three);
  CHECK(check_inverse(big_mu).all_pass());
  const Scalar c = Scalar::fraction(Q, -2, 5);
  const FourierData scaled_int = build_fourier(h, scaled(base.integral, c), base.dual_right_integral);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) CHECK(scaled_int.transform(i, j) == base.transform(i, j) * c);
  }
  CHECK(check_inverse(scaled_int).all_pass());
}

TEST_CASE("invalid integrals are rejected") {
  const HopfData h = group_algebra(builtin_loop("cyclic:2"), Q);
  const Element ir = integrals(dual(h), {Side::right, Location::on}).basis[0];
  const Vector zero = zero_vector(Q, 2);
  CHECK_THROWS_AS(build_fourier(h, zero, ir), Error);
  CHECK_THROWS_AS(build_fourier(h, Vector{Scalar(1), Scalar(0)}, zero), Error);
  try {
    build_fourier(h, h.counit(), ir);
    FAIL("expected NotAnIntegral");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnIntegral);
    CHECK(e.witness() == std::vector<int>{1});
  }
  FourierData fd = build_fourier(h);
  fd.inverse.reset();
  CHECK_THROWS_AS(check_inverse(fd), Error);
}

TEST_CASE("Fourier identities on every builtin") {
  for (const std::string& name : standard_builtins()) {
    CAPTURE(name);
    const LoopTable loop = builtin_loop(name);
    for (const HopfData& h : {group_algebra(loop, Q), function_algebra(loop, Q)}) {
      const CheckReport r = check_fourier_identities(build_fourier(h));
      require_all_pass(r);
      CHECK(r.all_conform());
      CHECK(r.contains("convolution to product: F(g*h) = F(g)F(h)"));
    }
  }
}

TEST_CASE("octonion Fourier identities include the paired form") {
  const CheckReport r = check_fourier_identities(build_fourier(group_algebra(builtin_loop("octonion"), Q)));
  CHECK(r.at("paired identity: ⟨F(h1 g), h2⟩ = ⟨F(h1)↼g, h2⟩").passed());
  CHECK(r.at("transform product: F(g)F(h) = F(F(g)⇀h)").passed());
  const CheckReport c = check_fourier_identities(build_fourier(function_algebra(builtin_loop("octonion"), Q)));
  for (const char* name : {"transform identity: F(ab) = F(a)↼b", "transform intertwines: F(φ⇀a) = φF(a)",
                           "transform is colinear: ρ(F(a)) = (F⊗id)Δa", "transform product: F(a)F(b) = F(F(a)⇀b)"}) {
    CAPTURE(name);
    CHECK(c.at(name).passed());
  }
}

TEST_CASE("antipode reverses convolution on k[Z2]") {
  const CheckReport r = check_fourier_identities(build_fourier(function_algebra(builtin_loop("cyclic:2"), Q)));
  CHECK(r.at("trace condition: ∫(hg) = ∫(g S²h)").passed());
  CHECK(r.at("antipode reverses convolution: S(g*h) = S(h)*S(g)").passed());
}

TEST_CASE("mutations break every Fourier identity") {
  auto verify = [](const HopfData& m) {
    const FourierData fd = build_fourier(m);
    CheckReport r = check_fourier_identities(fd);
    if (fd.inverse) r.append(check_inverse(fd));
    return r;
  };
  const LoopTable sym3 = builtin_loop("sym3");
  for (const HopfData& h : {group_algebra(sym3, Q).with_flavor(Flavor::hopf_quasigroup),
                            function_algebra(sym3, Q).with_flavor(Flavor::hopf_coquasigroup)}) {
    const CheckReport base = verify(h);
    for (const Check& c : base.checks()) {
      if (c.expected != true || c.outcome != Outcome::pass) continue;
      CAPTURE(c.name);
      const auto broken = first_breaking_mutation(h, c.name, verify);
      REQUIRE(broken.has_value());
      CHECK(broken->lhs != broken->rhs);
    }
  }
}
