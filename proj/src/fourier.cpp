#include "hopfq/fourier.hpp"

#include "hopfq/error.hpp"
#include "hopfq/integrals.hpp"

namespace hopfq {

namespace {

constexpr const char* kInversion = "Fourier inversion";
constexpr const char* kQuasigroup = "Fourier transform on Hopf quasigroups";
constexpr const char* kCoquasigroup = "Fourier transform on Hopf coquasigroups";
constexpr const char* kConvolution = "Fourier transform of convolution";
constexpr const char* kAntipode = "antipode of convolution";

using Pair = std::pair<Vector, Vector>;
using Tuple = std::vector<int>;

}  // namespace

FourierData build_fourier(const HopfData& h, const Functional& integral, const Element& dual_right_integral) {
  if (is_zero(integral)) throw Error(ErrorCode::NotAnIntegral, "the zero functional is not a usable integral");
  if (const auto bad = integral_violation(h, integral, {Side::left, Location::on})) {
    throw Error(ErrorCode::NotAnIntegral, "functional is not a left integral on H", {*bad});
  }
  if (is_zero(dual_right_integral)) {
    throw Error(ErrorCode::NotAnIntegral, "the zero element is not a usable right integral on H*");
  }
  if (const auto bad = integral_violation(dual(h), dual_right_integral, {Side::right, Location::on})) {
    throw Error(ErrorCode::NotAnIntegral, "element is not a right integral on H*", {*bad});
  }
  const int n = h.dim();
  const FieldSpec& f = h.field();
  FourierData fd{h, integral, dual_right_integral, h.pair(integral, dual_right_integral), Matrix(f, n, n), {}};
  for (int i = 0; i < n; ++i) {
    const Functional col = h.right_action(integral, h.basis(i));
    for (int j = 0; j < n; ++j) fd.transform(j, i) = col[j];
  }
  if (!fd.mu.is_zero()) {
    const Scalar inv_mu = fd.mu.inverse();
    Matrix finv(f, n, n);
    for (int a = 0; a < n; ++a) {
      const Element col = h.left_hit(h.basis(a), dual_right_integral);
      for (int k = 0; k < n; ++k) finv(k, a) = col[k] * inv_mu;
    }
    fd.inverse = std::move(finv);
  }
  return fd;
}

FourierData build_fourier(const HopfData& h) {
  const IntegralSpace left = integrals(h, {Side::left, Location::on});
  if (left.dim() == 0) throw Error(ErrorCode::NotAnIntegral, "H has no nonzero left integral");
  const IntegralSpace right = integrals(dual(h), {Side::right, Location::on});
  if (right.dim() == 0) throw Error(ErrorCode::NotAnIntegral, "H* has no nonzero right integral");
  return build_fourier(h, left.basis.front(), right.basis.front());
}

CheckReport check_inverse(const FourierData& fd) {
  if (!fd.inverse) throw Error(ErrorCode::DegeneratePairing, "μ = ⟨∫, ∫*_R⟩ vanishes");
  const HopfData& h = fd.parent;
  const std::size_t n = static_cast<std::size_t>(h.dim());
  CheckReport r;
  r.add(matrix_check("inverse after transform: F⁻¹∘F = id on H", kInversion, *fd.inverse * fd.transform,
                     Matrix::identity(h.field(), n)));
  r.add(matrix_check("transform after inverse: F∘F⁻¹ = id on H*", kInversion, fd.transform * *fd.inverse,
                     Matrix::identity(h.field(), n)));
  const Scalar s_mu = h.pair(h.dual_antipode(fd.integral), fd.dual_right_integral);
  r.add(decided_check("pairing with antipode: ⟨S∫, ∫*R⟩ = μ", kInversion, s_mu == fd.mu, s_mu.to_string(),
                      fd.mu.to_string()));
  return r;
}

Element convolution(const FourierData& fd, const Element& g, const Element& h) {
  const HopfData& H = fd.parent;
  const Element sg = H.apply_antipode(g);
  Element out = zero_vector(H.field(), H.dim());
  for (const auto& t : H.coproduct_terms_of(h)) {
    out[t.left] += t.coeff * H.pair(fd.integral, H.mul(H.basis(t.right), sg));
  }
  return out;
}

CheckReport check_fourier_identities(const FourierData& fd) {
  const HopfData& h = fd.parent;
  const int n = h.dim();
  const FieldSpec& f = h.field();
  auto e = [&](int i) { return h.basis(i); };
  auto F = [&](const Element& x) { return fd.transform * std::span<const Scalar>(x); };
  // ρ(φ) = Σ_i f^i φ ⊗ e_i on H*, flattened (k, i).
  auto rho = [&](const Functional& phi) {
    Vector out = zero_vector(f, static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      const Functional fi = h.dual_mul(e(i), phi);
      for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k) * n + i] = fi[k];
    }
    return out;
  };
  auto F_tensor_id = [&](int i) {
    Vector out = zero_vector(f, static_cast<std::size_t>(n) * n);
    for (const auto& t : h.coproduct_terms(i)) add_kron(out, t.coeff, F(e(t.left)), e(t.right));
    return out;
  };
  CheckReport r;

  if (has_quasigroup(h.flavor())) {
    r.add(exhaustive_check("transform identity: F(h1 S(h2)) = F(h1)↼S(h2)", kQuasigroup, n, 1, n, 1,
                           [&](const Tuple& t) {
                             Vector lhs = zero_vector(f, n), rhs = zero_vector(f, n);
                             for (const auto& c : h.coproduct_terms(t[0])) {
                               const Element s = h.apply_antipode(e(c.right));
                               axpy(lhs, c.coeff, F(h.mul(e(c.left), s)));
                               axpy(rhs, c.coeff, h.right_action(F(e(c.left)), s));
                             }
                             return Pair{lhs, rhs};
                           }));
    r.add(exhaustive_check("transform identity: F(S(h1)h2) = F(S(h1))↼h2", kQuasigroup, n, 1, n, 1,
                           [&](const Tuple& t) {
                             Vector lhs = zero_vector(f, n), rhs = zero_vector(f, n);
                             for (const auto& c : h.coproduct_terms(t[0])) {
                               const Element s = h.apply_antipode(e(c.left));
                               axpy(lhs, c.coeff, F(h.mul(s, e(c.right))));
                               axpy(rhs, c.coeff, h.right_action(F(s), e(c.right)));
                             }
                             return Pair{lhs, rhs};
                           }));
    r.add(exhaustive_check("transform intertwines: F(φ⇀h) = φF(h)", kQuasigroup, n, 2, n, 1, [&](const Tuple& t) {
      return Pair{F(h.left_hit(e(t[0]), e(t[1]))), h.dual_mul(e(t[0]), F(e(t[1])))};
    }));
    r.add(exhaustive_check("transform is colinear: ρ(F(h)) = (F⊗id)Δh", kQuasigroup, n, 1, n, 2,
                           [&](const Tuple& t) { return Pair{rho(F(e(t[0]))), F_tensor_id(t[0])}; }));
    const bool gated = is_cocommutative(h) && is_flexible_quasigroup(h);
    const char* paired = "paired identity: ⟨F(h1 g), h2⟩ = ⟨F(h1)↼g, h2⟩";
    if (gated) {
      r.add(exhaustive_check(paired, kQuasigroup, n, 2, n, 0, [&](const Tuple& t) {
        Scalar lhs = h.zero(), rhs = h.zero();
        for (const auto& c : h.coproduct_terms(t[0])) {
          lhs += c.coeff * h.pair(F(h.mul(e(c.left), e(t[1]))), e(c.right));
          rhs += c.coeff * h.pair(h.right_action(F(e(c.left)), e(t[1])), e(c.right));
        }
        return Pair{Vector{lhs}, Vector{rhs}};
      }));
    } else {
      r.add(skipped_check(paired, kQuasigroup, "hypothesis failed: needs cocommutative and flexible"));
    }
    r.add(exhaustive_check("transform product: F(g)F(h) = F(F(g)⇀h)", kQuasigroup, n, 2, n, 1, [&](const Tuple& t) {
      const Functional fg = F(e(t[0]));
      return Pair{h.dual_mul(fg, F(e(t[1]))), F(h.left_hit(fg, e(t[1])))};
    }));
  }
  if (has_coquasigroup(h.flavor())) {
    r.add(exhaustive_check("transform identity: F(ab) = F(a)↼b", kCoquasigroup, n, 2, n, 1, [&](const Tuple& t) {
      return Pair{F(h.mul(e(t[0]), e(t[1]))), h.right_action(F(e(t[0])), e(t[1]))};
    }));
    r.add(exhaustive_check("transform intertwines: F(φ⇀a) = φF(a)", kCoquasigroup, n, 2, n, 1, [&](const Tuple& t) {
      return Pair{F(h.left_hit(e(t[0]), e(t[1]))), h.dual_mul(e(t[0]), F(e(t[1])))};
    }));
    r.add(exhaustive_check("transform is colinear: ρ(F(a)) = (F⊗id)Δa", kCoquasigroup, n, 1, n, 2,
                           [&](const Tuple& t) { return Pair{rho(F(e(t[0]))), F_tensor_id(t[0])}; }));
    r.add(exhaustive_check("transform product: F(a)F(b) = F(F(a)⇀b)", kCoquasigroup, n, 2, n, 1,
                           [&](const Tuple& t) {
                             const Functional fa = F(e(t[0]));
                             return Pair{h.dual_mul(fa, F(e(t[1]))), F(h.left_hit(fa, e(t[1])))};
                           }));
  }

  r.add(exhaustive_check("convolution to product: F(g*h) = F(g)F(h)", kConvolution, n, 2, n, 1, [&](const Tuple& t) {
    return Pair{F(convolution(fd, e(t[0]), e(t[1]))), h.dual_mul(F(e(t[0])), F(e(t[1])))};
  }));

  // Trace-type hypothesis ∫(hg) = ∫(g S²h), reported as its own flag.
  Check hyp = as_flag(exhaustive_check("trace condition: ∫(hg) = ∫(g S²h)", kAntipode, n, 2, n, 0, [&](const Tuple& t) {
    const Element s2 = h.apply_antipode(h.apply_antipode(e(t[0])));
    return Pair{Vector{h.pair(fd.integral, h.mul(e(t[0]), e(t[1])))},
                Vector{h.pair(fd.integral, h.mul(e(t[1]), s2))}};
  }));
  const bool trace = hyp.passed();
  r.add(std::move(hyp));
  const char* name = "antipode reverses convolution: S(g*h) = S(h)*S(g)";
  if (trace) {
    r.add(exhaustive_check(name, kAntipode, n, 2, n, 1, [&](const Tuple& t) {
      return Pair{h.apply_antipode(convolution(fd, e(t[0]), e(t[1]))),
                  convolution(fd, h.apply_antipode(e(t[1])), h.apply_antipode(e(t[0])))};
    }));
  } else {
    r.add(skipped_check(name, kAntipode, "hypothesis failed: trace condition"));
  }
  return r;
}

}  // namespace hopfq
