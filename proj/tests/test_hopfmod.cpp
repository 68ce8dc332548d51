#include <doctest.h>

#include "hopfq/error.hpp"
#include "hopfq/hopfmod.hpp"
#include "hopfq/integrals.hpp"

using namespace hopfq;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Matrix span_of(const Matrix& columns) { return canonical_span(columns); }

Matrix integral_span(const HopfData& h) {
  return span_of(Matrix::from_columns(h.field(), h.dim(), integrals(h, {Side::left, Location::on}).basis));
}

void require_all_pass(const CheckReport& r) {
  for (const Check& c : r.checks()) {
    CAPTURE(c.name);
    CAPTURE(c.lhs);
    CAPTURE(c.rhs);
    CHECK(c.outcome != Outcome::fail);
  }
}

// Perturbs one action or coaction entry at a time until the named check fails.
std::optional<Check> first_breaking_module_mutation(const HopfModule& m, const std::string& name) {
  const Scalar two = Scalar::integer(m.parent().field(), 2);
  auto probe = [&](const HopfModule& mm) -> std::optional<Check> {
    const CheckReport r = verify_hopf_module(mm);
    if (r.contains(name) && r.at(name).outcome == Outcome::fail) return r.at(name);
    return std::nullopt;
  };
  const int d = m.dim();
  const int n = m.parent().dim();
  for (int p = 0; p < d; ++p) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < d; ++k) {
        if (auto c = probe(m.with_action(p, j, k, m.action()(p, j, k) + two))) return c;
      }
    }
  }
  for (int p = 0; p < d; ++p) {
    for (int k = 0; k < d; ++k) {
      for (int i = 0; i < n; ++i) {
        if (auto c = probe(m.with_coaction(p, k, i, m.coaction()(p, k, i) + two))) return c;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("dual module of kZ2 has the left integrals as coinvariants") {
  const HopfData h = group_algebra(builtin_loop("cyclic:2"), Q);
  const HopfModule m = dual_hopf_module(h);
  CHECK(m.dim() == 2);
  const CheckReport r = verify_hopf_module(m);
  require_all_pass(r);
  const Matrix co = coinvariants(m, false);
  CHECK(co.cols() == 1);
  CHECK(span_of(co) == integral_span(h));
}

TEST_CASE("dual modules verify in their flavor") {
  require_all_pass(verify_hopf_module(dual_hopf_module(group_algebra(builtin_loop("octonion"), Q))));
  const HopfModule fo = dual_hopf_module(function_algebra(builtin_loop("octonion"), Q));
  const CheckReport r = verify_hopf_module(fo);
  CHECK(r.contains("coaction inverse: m00⊗S(m01)m1 = m⊗1"));
  CHECK(r.contains("coaction inverse: m00⊗m01 S(m1) = m⊗1"));
  require_all_pass(r);
}

TEST_CASE("induced coaction agrees with the coaction on commutative flexible duals") {
  for (const char* name : {"cyclic:4", "octonion"}) {
    CAPTURE(name);
    const HopfModule m = dual_hopf_module(function_algebra(builtin_loop(name), Q));
    require_all_pass(verify_hopf_module(m));
    CHECK(induced_coaction(m) == m.coaction());
    CHECK(span_of(coinvariants(m, true)) == span_of(coinvariants(m, false)));
  }
}

TEST_CASE("coinvariants of dual modules are the left integrals") {
  for (const std::string& name : standard_builtins()) {
    CAPTURE(name);
    const LoopTable loop = builtin_loop(name);
    for (const HopfData& h : {group_algebra(loop, Q), function_algebra(loop, Q)}) {
      CHECK(span_of(coinvariants(dual_hopf_module(h), false)) == integral_span(h));
    }
  }
}

TEST_CASE("free modules have coinvariants W⊗1") {
  const HopfData h = group_algebra(builtin_loop("sym3"), Q);
  const HopfModule m = free_hopf_module(h, 3);
  CHECK(m.dim() == 18);
  require_all_pass(verify_hopf_module(m));
  const Matrix co = coinvariants(m, false);
  CHECK(co.cols() == 3);
  // each coinvariant is supported on the b_r ⊗ 1 coordinates
  for (std::size_t c = 0; c < co.cols(); ++c) {
    for (std::size_t row = 0; row < co.rows(); ++row) {
      if (static_cast<int>(row) % h.dim() != 0) CHECK(co(row, c).is_zero());
    }
  }
  const StructureIsomorphism iso = structure_isomorphism_check(m);
  require_all_pass(iso.checks);
}

TEST_CASE("structure isomorphism on every dual module") {
  for (const std::string& name : standard_builtins()) {
    CAPTURE(name);
    const LoopTable loop = builtin_loop(name);
    for (const HopfData& h : {group_algebra(loop, Q), function_algebra(loop, Q)}) {
      const StructureIsomorphism iso = structure_isomorphism_check(dual_hopf_module(h));
      require_all_pass(iso.checks);
      CHECK(iso.checks.all_conform());
      CHECK((iso.sigma * iso.sigma_inverse).is_identity());
      CHECK((iso.sigma_inverse * iso.sigma).is_identity());
      CHECK(static_cast<int>(iso.coinvariant_basis.cols()) * h.dim() == h.dim());
    }
  }
}

TEST_CASE("structure isomorphism on the octonion function algebra") {
  const HopfData h = function_algebra(builtin_loop("octonion"), Q).with_flavor(Flavor::hopf_coquasigroup);
  const StructureIsomorphism iso = structure_isomorphism_check(dual_hopf_module(h));
  CHECK(iso.sigma.rows() == 16);
  CHECK(iso.sigma.cols() == 16);
  CHECK(iso.checks.at("dimension count: dim M = dim coinvariants × dim H").passed());
  require_all_pass(iso.checks);
}

TEST_CASE("invariants comparison") {
  for (const std::string& name : standard_builtins()) {
    CAPTURE(name);
    const HopfData h = function_algebra(builtin_loop(name), Q);
    const InvariantsComparison cmp = invariants_comparison(dual_hopf_module(h));
    CHECK(cmp.quotient.rows() == 1);
    CHECK(cmp.induced_basis.cols() == 1);
    CHECK((cmp.omega * cmp.omega_inverse).is_identity());
    CHECK((cmp.omega_inverse * cmp.omega).is_identity());
    require_all_pass(cmp.checks);
  }
  const HopfData z2 = function_algebra(builtin_loop("cyclic:2"), Q);
  const InvariantsComparison free = invariants_comparison(free_hopf_module(z2, 3));
  CHECK(free.quotient.rows() == 3);
  require_all_pass(free.checks);

  CHECK_THROWS_AS(invariants_comparison(dual_hopf_module(group_algebra(builtin_loop("octonion"), Q))), Error);
}

TEST_CASE("broken modules are rejected before the structure maps") {
  const HopfModule m = dual_hopf_module(group_algebra(builtin_loop("cyclic:2"), Q));
  const HopfModule bad = m.with_action(0, 1, 0, Scalar(5));
  try {
    structure_isomorphism_check(bad);
    FAIL("expected ModuleAxiomsFail");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ModuleAxiomsFail);
  }
}

TEST_CASE("mutations break every module axiom") {
  for (const HopfModule& m : {dual_hopf_module(group_algebra(builtin_loop("sym3"), Q).with_flavor(Flavor::hopf_quasigroup)),
                              dual_hopf_module(function_algebra(builtin_loop("cyclic:4"), Q)
                                                   .with_flavor(Flavor::hopf_coquasigroup))}) {
    const CheckReport base = verify_hopf_module(m);
    for (const Check& c : base.checks()) {
      REQUIRE(c.passed());
      CAPTURE(c.name);
      const auto broken = first_breaking_module_mutation(m, c.name);
      REQUIRE(broken.has_value());
      CHECK_FALSE(broken->witness.empty());
      CHECK(broken->lhs != broken->rhs);
    }
  }
  // a single action entry breaks compatibility with a witness
  const HopfModule m = dual_hopf_module(group_algebra(builtin_loop("cyclic:2"), Q));
  const Check c =
      verify_hopf_module(m.with_action(0, 1, 0, Scalar(1))).at("compatibility: (m◁h)0⊗(m◁h)1 = m0◁h1⊗m1 h2");
  CHECK(c.outcome == Outcome::fail);
  CHECK(c.witness.size() == 2);
}

TEST_CASE("module shape validation") {
  const HopfData h = group_algebra(builtin_loop("cyclic:2"), Q);
  CHECK_THROWS_AS(HopfModule(h, Tensor3(Q, 2, 2, 2), Tensor3(Q, 2, 3, 2)), Error);
}
