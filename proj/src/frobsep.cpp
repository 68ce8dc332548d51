#include "hopfq/frobsep.hpp"

#include "hopfq/error.hpp"
#include "hopfq/integrals.hpp"

namespace hopfq {

namespace {

constexpr const char* kFrobeniusQuasigroup = "Frobenius Hopf quasigroups";
constexpr const char* kFrobeniusCoquasigroup = "Frobenius Hopf coquasigroups";
constexpr const char* kSeparable = "separability from an integral in H";
constexpr const char* kSemisimple = "semisimplicity criterion";
constexpr const char* kMaschke = "Maschke projection";

using Pair = std::pair<Vector, Vector>;
using Tuple = std::vector<int>;

void require_integral_in(const HopfData& h, const Element& lambda) {
  if (const auto bad = integral_violation(h, lambda, {Side::left, Location::in})) {
    throw Error(ErrorCode::NotAnIntegralIn, "element is not a left integral in H", {*bad});
  }
}

Matrix module_matrix(const HopfData& a, const Tensor3& act, const Element& x) {
  const int m = act.extent(1);
  Matrix out(a.field(), m, m);
  for (int j = 0; j < a.dim(); ++j) {
    if (x[j].is_zero()) continue;
    for (int p = 0; p < m; ++p) {
      for (int q = 0; q < m; ++q) {
        if (!act(j, p, q).is_zero()) out(q, p) += x[j] * act(j, p, q);
      }
    }
  }
  return out;
}

bool columns_in_span(const Matrix& cols, const ColumnBasis& span) {
  for (std::size_t c = 0; c < cols.cols(); ++c) {
    if (!span.contains(cols.column(c))) return false;
  }
  return true;
}

}  // namespace

FrobeniusResult frobenius_check(const HopfData& h, const Functional& integral) {
  if (is_zero(integral)) throw Error(ErrorCode::NotAnIntegral, "the zero functional is excluded");
  if (const auto bad = integral_violation(h, integral, {Side::left, Location::on})) {
    throw Error(ErrorCode::NotAnIntegral, "functional is not a left integral on H", {*bad});
  }
  const int n = h.dim();
  auto e = [&](int i) { return h.basis(i); };
  auto B = [&](const Element& x, const Element& y) { return h.pair(integral, h.mul(x, y)); };

  FrobeniusResult out;
  out.form.gram = Matrix(h.field(), n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.form.gram(i, j) = B(e(i), e(j));
  }
  out.form.det = determinant(out.form.gram);
  CheckReport& r = out.checks;

  if (has_quasigroup(h.flavor())) {
    // Each identity is Σ over Δh of a bilinear expression against ε(h)B(1,g) or ε(h)B(g,1).
    auto inverse_assoc = [&](const char* name, bool unit_left, auto&& term) {
      r.add(exhaustive_check(name, kFrobeniusQuasigroup, n, 2, n, 0, [&](const Tuple& t) {
        Scalar lhs = h.zero();
        for (const auto& c : h.coproduct_terms(t[0])) lhs += c.coeff * term(c.left, c.right, t[1]);
        const Scalar rhs = h.counit()[t[0]] * (unit_left ? B(h.unit(), e(t[1])) : B(e(t[1]), h.unit()));
        return Pair{Vector{lhs}, Vector{rhs}};
      }));
    };
    inverse_assoc("inverse associative: B(h1, S(h2)g) = ε(h)B(1,g)", true, [&](int a, int b, int g) {
      return B(e(a), h.mul(h.apply_antipode(e(b)), e(g)));
    });
    inverse_assoc("inverse associative: B(S(h1), h2 g) = ε(h)B(1,g)", true, [&](int a, int b, int g) {
      return B(h.apply_antipode(e(a)), h.mul(e(b), e(g)));
    });
    inverse_assoc("inverse associative: B(g h1, S(h2)) = ε(h)B(g,1)", false, [&](int a, int b, int g) {
      return B(h.mul(e(g), e(a)), h.apply_antipode(e(b)));
    });
    inverse_assoc("inverse associative: B(g S(h1), h2) = ε(h)B(g,1)", false, [&](int a, int b, int g) {
      return B(h.mul(e(g), h.apply_antipode(e(a))), e(b));
    });
  }
  if (has_coquasigroup(h.flavor())) {
    r.add(exhaustive_check("associative form: B(a, bc) = B(ab, c)", kFrobeniusCoquasigroup, n, 3, n, 0,
                           [&](const Tuple& t) {
                             return Pair{Vector{B(e(t[0]), h.mul(e(t[1]), e(t[2])))},
                                         Vector{B(h.mul(e(t[0]), e(t[1])), e(t[2]))}};
                           }));
  }
  const bool predicted = has_quasigroup(h.flavor()) || (is_commutative(h) && is_flexible_coquasigroup(h));
  r.add(decided_check("nondegenerate form: det Gram ≠ 0",
                      has_quasigroup(h.flavor()) ? kFrobeniusQuasigroup : kFrobeniusCoquasigroup,
                      !out.form.det.is_zero(), "det = " + out.form.det.to_string(), "nonzero",
                      predicted ? std::optional<bool>(true) : std::nullopt));
  return out;
}

SeparabilityResult separability_element(const HopfData& h, const Element& lambda) {
  if (is_zero(lambda)) throw Error(ErrorCode::NotAnIntegralIn, "the zero element is excluded");
  require_integral_in(h, lambda);
  const Scalar eps = h.counit_of(lambda);
  if (eps.is_zero()) throw Error(ErrorCode::NotNormalizable, "ε(Λ) = 0, the integral cannot be normalized");
  const int n = h.dim();
  const FieldSpec& f = h.field();
  SeparabilityResult out{eps.inverse(), Matrix(f, n, n), {}};
  const Element normalized = scaled(lambda, out.scale);
  for (const auto& t : h.coproduct_terms_of(normalized)) {
    for (const auto& s : h.antipode_terms(t.right)) out.omega(t.left, s.index) += t.coeff * s.coeff;
  }
  // ω as a flattened vector in H ⊗ H
  Vector w = zero_vector(f, static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) w[static_cast<std::size_t>(a) * n + b] = out.omega(a, b);
  }
  auto e = [&](int i) { return h.basis(i); };
  Vector product = zero_vector(f, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!out.omega(a, b).is_zero()) axpy(product, out.omega(a, b), h.mul(e(a), e(b)));
    }
  }
  // compared coordinate by coordinate so a failure names the basis element
  out.checks.add(exhaustive_check("separability: ω1 ω2 = 1", kSeparable, n, 1, n, 0, [&](const Tuple& t) {
    return Pair{Vector{product[t[0]]}, Vector{h.unit()[t[0]]}};
  }));
  out.checks.add(exhaustive_check("separability: hω1⊗ω2 = ω1⊗ω2h", kSeparable, n, 1, n, 2, [&](const Tuple& t) {
    Vector lhs = zero_vector(f, static_cast<std::size_t>(n) * n);
    Vector rhs = zero_vector(f, static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const Scalar& c = out.omega(a, b);
        if (c.is_zero()) continue;
        add_kron(lhs, c, h.mul(e(t[0]), e(a)), e(b));
        add_kron(rhs, c, e(a), h.mul(e(b), e(t[0])));
      }
    }
    return Pair{lhs, rhs};
  }));
  return out;
}

SemisimplicityResult semisimplicity_check(const HopfData& a, const Element& lambda) {
  if (!is_associative(a)) {
    throw Error(ErrorCode::NotAssociative, "the semisimplicity criterion needs an associative algebra");
  }
  if (is_zero(lambda)) throw Error(ErrorCode::ZeroIntegral, "the integral must be nonzero");
  require_integral_in(a, lambda);
  SemisimplicityResult out;
  out.epsilon_of_lambda = a.counit_of(lambda);
  out.semisimple = !out.epsilon_of_lambda.is_zero();
  out.checks.add(decided_check("left integral in A: aΛ = ε(a)Λ", kSemisimple, true, "holds", "holds"));
  out.checks.add(decided_check("semisimple: ε(Λ) ≠ 0", kSemisimple, out.semisimple,
                               "ε(Λ) = " + out.epsilon_of_lambda.to_string(), "nonzero", std::nullopt));
  return out;
}

Tensor3 regular_module(const HopfData& a) {
  const int n = a.dim();
  Tensor3 act(a.field(), n, n, n);
  for (int j = 0; j < n; ++j) {
    for (int p = 0; p < n; ++p) {
      for (const auto& t : a.product_terms(j, p)) act(j, p, t.index) = t.coeff;
    }
  }
  return act;
}

MaschkeResult maschke_projection(const HopfData& a, const Tensor3& left_action, const Matrix& submodule,
                                 const Matrix& e, const Element& lambda) {
  const int n = a.dim();
  const int m = left_action.extent(1);
  const FieldSpec& f = a.field();
  if (left_action.extent(0) != n || left_action.extent(2) != m || static_cast<int>(submodule.rows()) != m ||
      static_cast<int>(e.rows()) != m || static_cast<int>(e.cols()) != m) {
    throw Error(ErrorCode::DimensionMismatch, "module data shapes disagree");
  }
  if (is_zero(lambda)) throw Error(ErrorCode::NotAnIntegralIn, "the zero element is excluded");
  require_integral_in(a, lambda);
  const Scalar eps = a.counit_of(lambda);
  if (eps.is_zero()) throw Error(ErrorCode::NotNormalizable, "ε(Λ) = 0, the integral cannot be normalized");

  const ColumnBasis n_span(submodule);
  std::vector<Matrix> acts;
  for (int j = 0; j < n; ++j) acts.push_back(module_matrix(a, left_action, a.basis(j)));
  for (int j = 0; j < n; ++j) {
    if (!columns_in_span(acts[j] * submodule, n_span)) {
      throw Error(ErrorCode::NotASubmodule, "e_" + std::to_string(j) + " moves N outside itself", {j});
    }
  }
  if (!(e * submodule == submodule) || !columns_in_span(e, n_span)) {
    throw Error(ErrorCode::NotAProjection, "E is not a projection onto N");
  }

  const Element normalized = scaled(lambda, eps.inverse());
  MaschkeResult out;
  out.projection = Matrix(f, m, m);
  for (const auto& t : a.coproduct_terms_of(normalized)) {
    const Matrix right = module_matrix(a, left_action, a.apply_antipode(a.basis(t.right)));
    const Matrix term = acts[t.left] * e * right;
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < m; ++k) {
        if (!term(i, k).is_zero()) out.projection(i, k) += t.coeff * term(i, k);
      }
    }
  }
  out.complement = nullspace(out.projection);

  CheckReport& r = out.checks;
  auto b = [&](int p) { return unit_vector(f, m, p); };
  r.add(exhaustive_check("module action unital: 1▷m = m", kMaschke, {m}, {m}, [&](const Tuple& t) {
    return Pair{module_matrix(a, left_action, a.unit()) * std::span<const Scalar>(b(t[0])), b(t[0])};
  }));
  r.add(exhaustive_check("module action associative: a▷(b▷m) = (ab)▷m", kMaschke, {n, n, m}, {m},
                         [&](const Tuple& t) {
                           const Vector inner = acts[t[1]] * std::span<const Scalar>(b(t[2]));
                           return Pair{acts[t[0]] * std::span<const Scalar>(inner),
                                       module_matrix(a, left_action, a.mul(a.basis(t[0]), a.basis(t[1]))) *
                                           std::span<const Scalar>(b(t[2]))};
                         }));
  r.add(matrix_check("projection fixes N: E₀|N = id", kMaschke, out.projection * submodule, submodule));
  Check image = decided_check("projection maps into N: im E₀ ⊆ N", kMaschke,
                              columns_in_span(out.projection, n_span), "", "");
  r.add(image);
  r.add(matrix_check("projection is idempotent: E₀∘E₀ = E₀", kMaschke, out.projection * out.projection,
                     out.projection));
  r.add(exhaustive_check("projection is A-linear: E₀(a▷m) = a▷E₀(m)", kMaschke, {n, m}, {m}, [&](const Tuple& t) {
    const Vector am = acts[t[0]] * std::span<const Scalar>(b(t[1]));
    const Vector em = out.projection * std::span<const Scalar>(b(t[1]));
    return Pair{out.projection * std::span<const Scalar>(am), acts[t[0]] * std::span<const Scalar>(em)};
  }));
  const std::size_t expected_complement = static_cast<std::size_t>(m) - submodule.cols();
  r.add(decided_check("complement dimension: dim ker E₀ = dim M − dim N", kMaschke,
                      out.complement.size() == expected_complement,
                      "dim = " + std::to_string(out.complement.size()),
                      "dim = " + std::to_string(expected_complement)));
  return out;
}

}  // namespace hopfq
