#include "hopfq/integrals.hpp"

#include "hopfq/error.hpp"

namespace hopfq {

namespace {

constexpr const char* kOnQuasigroup = "integrals on Hopf quasigroups";
constexpr const char* kOnCoquasigroup = "integrals on Hopf coquasigroups";
constexpr const char* kRightIntegrals = "right integrals on Hopf quasigroups";
constexpr const char* kUniqueness = "integral existence and uniqueness";
constexpr const char* kBijective = "bijectivity of the antipode";
constexpr const char* kMeasured = "measured quantity";

using Pair = std::pair<Vector, Vector>;
using Tuple = std::vector<int>;

}  // namespace

std::string_view to_string(Side s) { return s == Side::left ? "left" : "right"; }
std::string_view to_string(Location l) { return l == Location::on ? "on" : "in"; }

Matrix integral_system(const HopfData& h, IntegralQuery q) {
  const int n = h.dim();
  Matrix a(h.field(), static_cast<std::size_t>(n) * n, n);
  for (int i = 0; i < n; ++i) {
    const std::size_t row0 = static_cast<std::size_t>(i) * n;
    if (q.location == Location::on) {
      for (const auto& t : h.coproduct_terms(i)) {
        if (q.side == Side::left) {
          a(row0 + t.left, t.right) += t.coeff;
        } else {
          a(row0 + t.right, t.left) += t.coeff;
        }
      }
      for (int k = 0; k < n; ++k) a(row0 + k, i) -= h.unit()[k];
    } else {
      for (int j = 0; j < n; ++j) {
        const auto& terms = q.side == Side::left ? h.product_terms(i, j) : h.product_terms(j, i);
        for (const auto& t : terms) a(row0 + t.index, j) += t.coeff;
      }
      for (int k = 0; k < n; ++k) a(row0 + k, k) -= h.counit()[i];
    }
  }
  return a;
}

IntegralSpace integrals(const HopfData& h, IntegralQuery q) {
  return IntegralSpace{q, nullspace(integral_system(h, q))};
}

std::optional<int> integral_violation(const HopfData& h, const Vector& v, IntegralQuery q) {
  if (static_cast<int>(v.size()) != h.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "integral candidate has the wrong length");
  }
  const Vector r = integral_system(h, q) * std::span<const Scalar>(v);
  const int n = h.dim();
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (!r[static_cast<std::size_t>(i) * n + k].is_zero()) return i;
    }
  }
  return std::nullopt;
}

CheckReport check_integral_identities(const HopfData& h, const Functional& integral, Side side,
                                      Precondition pre) {
  const IntegralQuery q{side, Location::on};
  if (static_cast<int>(integral.size()) != h.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "integral candidate has the wrong length");
  }
  if (const auto bad = pre == Precondition::enforce ? integral_violation(h, integral, q) : std::nullopt) {
    throw Error(ErrorCode::NotAnIntegral,
                "functional is not a " + std::string(to_string(side)) + " integral on H (fails at e_" +
                    std::to_string(*bad) + ")",
                {*bad});
  }
  if (is_zero(integral)) throw Error(ErrorCode::NotAnIntegral, "the zero functional is excluded");

  const int n = h.dim();
  const FieldSpec& f = h.field();
  auto e = [&](int i) { return h.basis(i); };
  auto eval = [&](const Functional& phi, const Element& x) { return h.pair(phi, x); };
  auto dual_counit = [&](const Functional& phi) { return h.pair(phi, h.unit()); };
  CheckReport r;

  if (side == Side::left) {
    const char* th = has_quasigroup(h.flavor()) ? kOnQuasigroup : kOnCoquasigroup;
    r.add(exhaustive_check("left integral: h1∫(h2) = ∫(h)1", th, n, 1, n, 1, [&](const Tuple& t) {
      Vector lhs = zero_vector(f, n);
      for (const auto& c : h.coproduct_terms(t[0])) lhs[c.left] += c.coeff * integral[c.right];
      return Pair{lhs, scaled(h.unit(), integral[t[0]])};
    }));
    r.add(exhaustive_check("integral in the dual: φ∫ = ε(φ)∫", th, n, 1, n, 1, [&](const Tuple& t) {
      return Pair{h.dual_mul(e(t[0]), integral), scaled(integral, dual_counit(e(t[0])))};
    }));
    const Functional s_int = h.dual_antipode(integral);
    r.add(exhaustive_check("antipode of integral is right integral: (S∫)(h1)h2 = (S∫)(h)1", th, n, 1, n, 1,
                           [&](const Tuple& t) {
                             Vector lhs = zero_vector(f, n);
                             for (const auto& c : h.coproduct_terms(t[0])) lhs[c.right] += c.coeff * s_int[c.left];
                             return Pair{lhs, scaled(h.unit(), s_int[t[0]])};
                           }));
    const Scalar norm = eval(integral, h.unit());
    if (norm.is_zero()) {
      r.add(skipped_check("normalized integral is antipode invariant: ∫ = S∫", th, "not normalizable: ∫(1) = 0"));
    } else {
      const Functional normalized = scaled(integral, norm.inverse());
      const Functional turned = h.dual_antipode(normalized);
      r.add(exhaustive_check("normalized integral is antipode invariant: ∫ = S∫", th, n, 1, n, 0,
                             [&](const Tuple& t) { return Pair{Vector{normalized[t[0]]}, Vector{turned[t[0]]}}; }));
    }
    // h1∫(h2 Sg) = g2∫(h Sg1)
    r.add(exhaustive_check("integral identity: h1∫(h2 Sg) = g2∫(h Sg1)", th, n, 2, n, 1, [&](const Tuple& t) {
      const Element sg = h.apply_antipode(e(t[1]));
      Vector lhs = zero_vector(f, n);
      for (const auto& c : h.coproduct_terms(t[0])) {
        lhs[c.left] += c.coeff * eval(integral, h.mul(e(c.right), sg));
      }
      Vector rhs = zero_vector(f, n);
      for (const auto& c : h.coproduct_terms(t[1])) {
        rhs[c.right] += c.coeff * eval(integral, h.mul(e(t[0]), h.apply_antipode(e(c.left))));
      }
      return Pair{lhs, rhs};
    }));
    // h1∫(g h2) = Sg1 ∫(g2 h)
    r.add(exhaustive_check("integral identity: h1∫(g h2) = S(g1)∫(g2 h)", th, n, 2, n, 1, [&](const Tuple& t) {
      Vector lhs = zero_vector(f, n);
      for (const auto& c : h.coproduct_terms(t[0])) {
        lhs[c.left] += c.coeff * eval(integral, h.mul(e(t[1]), e(c.right)));
      }
      Vector rhs = zero_vector(f, n);
      for (const auto& c : h.coproduct_terms(t[1])) {
        axpy(rhs, c.coeff * eval(integral, h.mul(e(c.right), e(t[0]))), h.apply_antipode(e(c.left)));
      }
      return Pair{lhs, rhs};
    }));
    return r;
  }

  // Right integrals: the identities are established for Hopf quasigroups and
  // are informational otherwise.
  const std::optional<bool> expected =
      has_quasigroup(h.flavor()) ? std::optional<bool>(true) : std::optional<bool>();
  auto tag = [&](Check c) {
    c.expected = expected;
    return c;
  };
  r.add(tag(exhaustive_check("right integral: ∫R(h1)h2 = ∫R(h)1", kRightIntegrals, n, 1, n, 1, [&](const Tuple& t) {
    Vector lhs = zero_vector(f, n);
    for (const auto& c : h.coproduct_terms(t[0])) lhs[c.right] += c.coeff * integral[c.left];
    return Pair{lhs, scaled(h.unit(), integral[t[0]])};
  })));
  r.add(tag(exhaustive_check("right integral in the dual: ∫Rφ = ε(φ)∫R", kRightIntegrals, n, 1, n, 1,
                             [&](const Tuple& t) {
                               return Pair{h.dual_mul(integral, e(t[0])), scaled(integral, dual_counit(e(t[0])))};
                             })));
  // ∫R((Sg)h1)h2 = ∫R((Sg2)h)g1
  r.add(tag(exhaustive_check("right integral identity: ∫R((Sg)h1)h2 = ∫R((Sg2)h)g1", kRightIntegrals, n, 2, n, 1,
                             [&](const Tuple& t) {
                               const Element sg = h.apply_antipode(e(t[1]));
                               Vector lhs = zero_vector(f, n);
                               for (const auto& c : h.coproduct_terms(t[0])) {
                                 lhs[c.right] += c.coeff * eval(integral, h.mul(sg, e(c.left)));
                               }
                               Vector rhs = zero_vector(f, n);
                               for (const auto& c : h.coproduct_terms(t[1])) {
                                 rhs[c.left] +=
                                     c.coeff * eval(integral, h.mul(h.apply_antipode(e(c.right)), e(t[0])));
                               }
                               return Pair{lhs, rhs};
                             })));
  // ∫R(g1 h)g2 = ∫R(g h1)Sh2
  r.add(tag(exhaustive_check("right integral identity: ∫R(g1 h)g2 = ∫R(g h1)S(h2)", kRightIntegrals, n, 2, n, 1,
                             [&](const Tuple& t) {
                               Vector lhs = zero_vector(f, n);
                               for (const auto& c : h.coproduct_terms(t[1])) {
                                 lhs[c.right] += c.coeff * eval(integral, h.mul(e(c.left), e(t[0])));
                               }
                               Vector rhs = zero_vector(f, n);
                               for (const auto& c : h.coproduct_terms(t[0])) {
                                 axpy(rhs, c.coeff * eval(integral, h.mul(e(t[1]), e(c.left))),
                                      h.apply_antipode(e(c.right)));
                               }
                               return Pair{lhs, rhs};
                             })));
  return r;
}

UniquenessCertificate uniqueness_certificate(const HopfData& h) {
  UniquenessCertificate cert;
  cert.dim_left_on = integrals(h, {Side::left, Location::on}).dim();
  cert.dim_right_on = integrals(h, {Side::right, Location::on}).dim();
  cert.dim_left_in = integrals(h, {Side::left, Location::in}).dim();
  cert.antipode_det = determinant(h.antipode());

  const bool quasigroup = has_quasigroup(h.flavor());
  const bool comm_flexible = has_coquasigroup(h.flavor()) && is_commutative(h) && is_flexible_coquasigroup(h);
  const std::optional<bool> unique = (quasigroup || comm_flexible) ? std::optional<bool>(true) : std::nullopt;
  const std::optional<bool> measured;

  cert.checks.add(decided_check("left integrals on H form a line: dim = 1", kUniqueness, cert.dim_left_on == 1,
                                "dim = " + std::to_string(cert.dim_left_on), "dim = 1", unique));
  cert.checks.add(decided_check("right integrals on H form a line: dim = 1", kUniqueness, cert.dim_right_on == 1,
                                "dim = " + std::to_string(cert.dim_right_on), "dim = 1",
                                quasigroup ? std::optional<bool>(true) : measured));
  cert.checks.add(decided_check("left integrals in H form a line: dim = 1", kMeasured, cert.dim_left_in == 1,
                                "dim = " + std::to_string(cert.dim_left_in), "dim = 1", measured));
  cert.checks.add(decided_check("left and right integral spaces on H have equal dimension", kMeasured,
                                cert.dim_left_on == cert.dim_right_on, "dim = " + std::to_string(cert.dim_left_on),
                                "dim = " + std::to_string(cert.dim_right_on), measured));
  cert.checks.add(decided_check("antipode invertible: det S ≠ 0", kBijective, !cert.antipode_det.is_zero(),
                                "det = " + cert.antipode_det.to_string(), "nonzero",
                                quasigroup ? std::optional<bool>(true) : measured));
  return cert;
}

}  // namespace hopfq
