#include "hopfq/hopfmod.hpp"

#include "hopfq/error.hpp"

namespace hopfq {

namespace {

constexpr const char* kModuleQuasigroup = "Hopf modules over Hopf quasigroups";
constexpr const char* kModuleCoquasigroup = "Hopf modules over Hopf coquasigroups";
constexpr const char* kStructureQuasigroup = "structure theorem for Hopf modules over Hopf quasigroups";
constexpr const char* kStructureCoquasigroup = "structure theorem for Hopf modules over Hopf coquasigroups";
constexpr const char* kInvariants = "invariants versus induced coinvariants";
constexpr const char* kMeasured = "measured quantity";

using Pair = std::pair<Vector, Vector>;
using Tuple = std::vector<int>;

std::string dims(std::size_t a) { return "dim = " + std::to_string(a); }

/// Throws ModuleAxiomsFail on the first expected-pass check that failed.
void require_module(const HopfModule& m) {
  const CheckReport r = verify_hopf_module(m);
  for (const Check& c : r.checks()) {
    if (!c.conforms()) {
      throw Error(ErrorCode::ModuleAxiomsFail, "Hopf module axiom fails: " + c.name, c.witness);
    }
  }
}

}  // namespace

HopfModule::HopfModule(HopfData parent, Tensor3 action, Tensor3 coaction)
    : parent_(std::move(parent)),
      m_(action.extent(0)),
      n_(parent_.dim()),
      action_(std::move(action)),
      coaction_(std::move(coaction)) {
  if (action_.extent(1) != n_ || action_.extent(2) != m_ || coaction_.extent(0) != m_ ||
      coaction_.extent(1) != m_ || coaction_.extent(2) != n_) {
    throw Error(ErrorCode::DimensionMismatch, "inconsistent Hopf module tensor shapes");
  }
  action_nz_.assign(static_cast<std::size_t>(m_) * n_, {});
  coaction_nz_.assign(m_, {});
  for (int p = 0; p < m_; ++p) {
    for (int j = 0; j < n_; ++j) {
      for (int k = 0; k < m_; ++k) {
        if (!action_(p, j, k).is_zero()) action_nz_[p * n_ + j].push_back({k, action_(p, j, k)});
      }
    }
    for (int k = 0; k < m_; ++k) {
      for (int i = 0; i < n_; ++i) {
        if (!coaction_(p, k, i).is_zero()) coaction_nz_[p].push_back({k, i, coaction_(p, k, i)});
      }
    }
  }
}

Vector HopfModule::act(const Vector& v, const Element& h) const {
  Vector out = zero_vector(parent_.field(), m_);
  for (int p = 0; p < m_; ++p) {
    if (v[p].is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (h[j].is_zero()) continue;
      const Scalar c = v[p] * h[j];
      for (const auto& t : action_terms(p, j)) out[t.index] += c * t.coeff;
    }
  }
  return out;
}

Vector HopfModule::coact(const Vector& v) const {
  Vector out = zero_vector(parent_.field(), static_cast<std::size_t>(m_) * n_);
  for (int p = 0; p < m_; ++p) {
    if (v[p].is_zero()) continue;
    for (const auto& t : coaction_terms(p)) out[t.module * n_ + t.algebra] += v[p] * t.coeff;
  }
  return out;
}

Matrix HopfModule::action_matrix(const Element& h) const {
  Matrix a(parent_.field(), m_, m_);
  for (int p = 0; p < m_; ++p) {
    const Vector col = act(unit_vector(parent_.field(), m_, p), h);
    for (int k = 0; k < m_; ++k) a(k, p) = col[k];
  }
  return a;
}

HopfModule HopfModule::with_action(int p, int j, int k, Scalar v) const {
  Tensor3 a = action_;
  a(p, j, k) = std::move(v);
  return HopfModule(parent_, std::move(a), coaction_);
}

HopfModule HopfModule::with_coaction(int p, int k, int i, Scalar v) const {
  Tensor3 c = coaction_;
  c(p, k, i) = std::move(v);
  return HopfModule(parent_, action_, std::move(c));
}

HopfModule dual_hopf_module(const HopfData& h) {
  const int n = h.dim();
  const FieldSpec& f = h.field();
  Tensor3 action(f, n, n, n);
  Tensor3 coaction(f, n, n, n);
  // (f^p ◁ e_j)(e_a) = coefficient of e_p in e_a S(e_j)
  for (int a = 0; a < n; ++a) {
    for (int j = 0; j < n; ++j) {
      for (const auto& s : h.antipode_terms(j)) {
        for (const auto& t : h.product_terms(a, s.index)) action(t.index, j, a) += s.coeff * t.coeff;
      }
    }
  }
  // f^i f^p = Σ_k d[k][i][p] f^k
  for (int k = 0; k < n; ++k) {
    for (const auto& t : h.coproduct_terms(k)) coaction(t.right, k, t.left) += t.coeff;
  }
  return HopfModule(h, std::move(action), std::move(coaction));
}

HopfModule free_hopf_module(const HopfData& h, int w) {
  const int n = h.dim();
  const int m = w * n;
  const FieldSpec& f = h.field();
  Tensor3 action(f, m, n, m);
  Tensor3 coaction(f, m, m, n);
  for (int r = 0; r < w; ++r) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (const auto& t : h.product_terms(i, j)) action(r * n + i, j, r * n + t.index) += t.coeff;
      }
      for (const auto& t : h.coproduct_terms(i)) coaction(r * n + i, r * n + t.left, t.right) += t.coeff;
    }
  }
  return HopfModule(h, std::move(action), std::move(coaction));
}

CheckReport verify_hopf_module(const HopfModule& mod) {
  const HopfData& h = mod.parent();
  const FieldSpec& f = h.field();
  const int m = mod.dim();
  const int n = h.dim();
  auto b = [&](int p) { return unit_vector(f, m, p); };
  auto e = [&](int i) { return h.basis(i); };
  const std::size_t mn = static_cast<std::size_t>(m) * n;
  const bool quasi = has_quasigroup(h.flavor());
  const bool coquasi = has_coquasigroup(h.flavor());
  const char* th = quasi ? kModuleQuasigroup : kModuleCoquasigroup;
  CheckReport r;

  r.add(exhaustive_check("action unital: m◁1 = m", th, {m}, {m},
                         [&](const Tuple& t) { return Pair{mod.act(b(t[0]), h.unit()), b(t[0])}; }));
  if (quasi) {
    r.add(exhaustive_check("action inverse: (m◁h1)◁S(h2) = ε(h)m", kModuleQuasigroup, {m, n}, {m},
                           [&](const Tuple& t) {
                             Vector lhs = zero_vector(f, m);
                             for (const auto& c : h.coproduct_terms(t[1])) {
                               axpy(lhs, c.coeff, mod.act(mod.act(b(t[0]), e(c.left)), h.apply_antipode(e(c.right))));
                             }
                             return Pair{lhs, scaled(b(t[0]), h.counit()[t[1]])};
                           }));
    r.add(exhaustive_check("action inverse: (m◁S(h1))◁h2 = ε(h)m", kModuleQuasigroup, {m, n}, {m},
                           [&](const Tuple& t) {
                             Vector lhs = zero_vector(f, m);
                             for (const auto& c : h.coproduct_terms(t[1])) {
                               axpy(lhs, c.coeff, mod.act(mod.act(b(t[0]), h.apply_antipode(e(c.left))), e(c.right)));
                             }
                             return Pair{lhs, scaled(b(t[0]), h.counit()[t[1]])};
                           }));
    r.add(exhaustive_check("coaction coassociative: m00⊗m01⊗m1 = m0⊗m11⊗m12", kModuleQuasigroup, {m}, {m, n, n},
                           [&](const Tuple& t) {
                             Vector lhs = zero_vector(f, mn * n);
                             Vector rhs = zero_vector(f, mn * n);
                             for (const auto& c : mod.coaction_terms(t[0])) {
                               for (const auto& d : mod.coaction_terms(c.module)) {
                                 lhs[(static_cast<std::size_t>(d.module) * n + d.algebra) * n + c.algebra] +=
                                     c.coeff * d.coeff;
                               }
                               for (const auto& d : h.coproduct_terms(c.algebra)) {
                                 rhs[(static_cast<std::size_t>(c.module) * n + d.left) * n + d.right] +=
                                     c.coeff * d.coeff;
                               }
                             }
                             return Pair{lhs, rhs};
                           }));
  }
  if (coquasi) {
    r.add(exhaustive_check("action associative: (m◁a)◁b = m◁(ab)", kModuleCoquasigroup, {m, n, n}, {m},
                           [&](const Tuple& t) {
                             return Pair{mod.act(mod.act(b(t[0]), e(t[1])), e(t[2])),
                                         mod.act(b(t[0]), h.mul(e(t[1]), e(t[2])))};
                           }));
    auto inverse = [&](bool antipode_first) {
      return [&, antipode_first](const Tuple& t) {
        Vector lhs = zero_vector(f, mn);
        for (const auto& c : mod.coaction_terms(t[0])) {
          for (const auto& d : mod.coaction_terms(c.module)) {
            const Element leg = antipode_first ? h.mul(h.apply_antipode(e(d.algebra)), e(c.algebra))
                                               : h.mul(e(d.algebra), h.apply_antipode(e(c.algebra)));
            add_kron(lhs, c.coeff * d.coeff, b(d.module), leg);
          }
        }
        return Pair{lhs, kron(b(t[0]), h.unit())};
      };
    };
    r.add(exhaustive_check("coaction inverse: m00⊗S(m01)m1 = m⊗1", kModuleCoquasigroup, {m}, {m, n}, inverse(true)));
    r.add(exhaustive_check("coaction inverse: m00⊗m01 S(m1) = m⊗1", kModuleCoquasigroup, {m}, {m, n}, inverse(false)));
  }
  r.add(exhaustive_check("coaction counital: m0 ε(m1) = m", th, {m}, {m}, [&](const Tuple& t) {
    Vector lhs = zero_vector(f, m);
    for (const auto& c : mod.coaction_terms(t[0])) lhs[c.module] += c.coeff * h.counit()[c.algebra];
    return Pair{lhs, b(t[0])};
  }));
  r.add(exhaustive_check("compatibility: (m◁h)0⊗(m◁h)1 = m0◁h1⊗m1 h2", th, {m, n}, {m, n}, [&](const Tuple& t) {
    const Vector lhs = mod.coact(mod.act(b(t[0]), e(t[1])));
    Vector rhs = zero_vector(f, mn);
    for (const auto& c : mod.coaction_terms(t[0])) {
      for (const auto& d : h.coproduct_terms(t[1])) {
        add_kron(rhs, c.coeff * d.coeff, mod.act(b(c.module), e(d.left)), h.mul(e(c.algebra), e(d.right)));
      }
    }
    return Pair{lhs, rhs};
  }));
  return r;
}

Tensor3 induced_coaction(const HopfModule& mod) {
  const HopfData& h = mod.parent();
  const FieldSpec& f = h.field();
  const int m = mod.dim();
  const int n = h.dim();
  Tensor3 out(f, m, m, n);
  for (int p = 0; p < m; ++p) {
    for (const auto& c : mod.coaction_terms(p)) {
      for (const auto& d : mod.coaction_terms(c.module)) {
        const Element s = h.apply_antipode(h.basis(d.algebra));
        for (const auto& x : h.coproduct_terms(c.algebra)) {
          const Vector moved = mod.act(unit_vector(f, m, d.module), h.mul(s, h.basis(x.left)));
          const Scalar coeff = c.coeff * d.coeff * x.coeff;
          for (int k = 0; k < m; ++k) {
            if (!moved[k].is_zero()) out(p, k, x.right) += coeff * moved[k];
          }
        }
      }
    }
  }
  return out;
}

Matrix coinvariants(const HopfModule& mod, bool use_induced) {
  const HopfData& h = mod.parent();
  const int m = mod.dim();
  const int n = h.dim();
  const Tensor3 rho = use_induced ? induced_coaction(mod) : mod.coaction();
  Matrix sys(h.field(), static_cast<std::size_t>(m) * n, m);
  for (int p = 0; p < m; ++p) {
    for (int k = 0; k < m; ++k) {
      for (int i = 0; i < n; ++i) {
        Scalar v = rho(p, k, i);
        if (k == p) v -= h.unit()[i];
        sys(static_cast<std::size_t>(k) * n + i, p) = v;
      }
    }
  }
  return Matrix::from_columns(h.field(), m, nullspace(sys));
}

StructureIsomorphism structure_isomorphism_check(const HopfModule& mod) {
  require_module(mod);
  const HopfData& h = mod.parent();
  const FieldSpec& f = h.field();
  const int m = mod.dim();
  const int n = h.dim();
  const bool quasi = has_quasigroup(h.flavor());
  const char* th = quasi ? kStructureQuasigroup : kStructureCoquasigroup;

  StructureIsomorphism out;
  out.coinvariant_basis = coinvariants(mod, !quasi);
  const Matrix& cb = out.coinvariant_basis;
  const int c = static_cast<int>(cb.cols());
  const ColumnBasis coords(cb);

  out.sigma = Matrix(f, m, static_cast<std::size_t>(c) * n);
  for (int r = 0; r < c; ++r) {
    const Vector cr = cb.column(r);
    for (int j = 0; j < n; ++j) {
      const Vector col = mod.act(cr, h.basis(j));
      for (int k = 0; k < m; ++k) out.sigma(k, static_cast<std::size_t>(r) * n + j) = col[k];
    }
  }

  // m ↦ m⁰⁰◁S(m⁰¹) ⊗ m¹, then each M-leg is written in coinvariant coordinates.
  out.sigma_inverse = Matrix(f, static_cast<std::size_t>(c) * n, m);
  std::optional<std::vector<int>> outside;
  for (int p = 0; p < m && !outside; ++p) {
    std::vector<Vector> legs(n, zero_vector(f, m));
    for (const auto& x : mod.coaction_terms(p)) {
      for (const auto& y : mod.coaction_terms(x.module)) {
        axpy(legs[x.algebra], x.coeff * y.coeff,
             mod.act(unit_vector(f, m, y.module), h.apply_antipode(h.basis(y.algebra))));
      }
    }
    for (int i = 0; i < n; ++i) {
      if (!coords.contains(legs[i])) {
        outside = std::vector<int>{p, i};
        break;
      }
      const Vector cc = coords.coordinates(legs[i]);
      for (int r = 0; r < c; ++r) out.sigma_inverse(static_cast<std::size_t>(r) * n + i, p) = cc[r];
    }
  }

  CheckReport& r = out.checks;
  Check lands = decided_check("inverse map lands in coinvariants⊗H", th, !outside, outside ? "outside" : "inside",
                              "inside");
  if (outside) lands.witness = *outside;
  r.add(lands);
  if (outside) {
    r.add(skipped_check("σ∘σ⁻¹ = id on M", th, "hypothesis failed: inverse map undefined"));
    r.add(skipped_check("σ⁻¹∘σ = id on coinvariants⊗H", th, "hypothesis failed: inverse map undefined"));
  } else {
    r.add(matrix_check("σ∘σ⁻¹ = id on M", th, out.sigma * out.sigma_inverse, Matrix::identity(f, m)));
    r.add(matrix_check("σ⁻¹∘σ = id on coinvariants⊗H", th, out.sigma_inverse * out.sigma,
                       Matrix::identity(f, static_cast<std::size_t>(c) * n)));
  }
  r.add(decided_check("dimension count: dim M = dim coinvariants × dim H", th, m == c * n, dims(m),
                      std::to_string(c) + " × " + std::to_string(n)));

  auto sigma_of = [&](int row, const Element& x) { return mod.act(cb.column(row), x); };
  r.add(exhaustive_check("σ is a module map: σ(c⊗h)◁g = σ(c⊗hg)", th, {c, n, n}, {m}, [&](const Tuple& t) {
    return Pair{mod.act(sigma_of(t[0], h.basis(t[1])), h.basis(t[2])),
                sigma_of(t[0], h.mul(h.basis(t[1]), h.basis(t[2])))};
  }));
  r.add(exhaustive_check("σ is a comodule map: ρ(σ(c⊗h)) = σ(c⊗h1)⊗h2", th, {c, n}, {m, n}, [&](const Tuple& t) {
    const Vector lhs = mod.coact(sigma_of(t[0], h.basis(t[1])));
    Vector rhs = zero_vector(f, static_cast<std::size_t>(m) * n);
    for (const auto& d : h.coproduct_terms(t[1])) add_kron(rhs, d.coeff, sigma_of(t[0], h.basis(d.left)), h.basis(d.right));
    return Pair{lhs, rhs};
  }));
  const Scalar det = determinant(h.antipode());
  r.add(decided_check("antipode invertible: det S ≠ 0", kMeasured, !det.is_zero(), "det = " + det.to_string(),
                      "nonzero", std::nullopt));
  return out;
}

InvariantsComparison invariants_comparison(const HopfModule& mod) {
  const HopfData& h = mod.parent();
  if (!has_coquasigroup(h.flavor())) {
    throw Error(ErrorCode::WrongFlavor, "invariants comparison needs a Hopf coquasigroup, got " +
                                            std::string(to_string(h.flavor())));
  }
  require_module(mod);
  const FieldSpec& f = h.field();
  const int m = mod.dim();
  const int n = h.dim();

  // Kernel of π: span{b_p◁e_j − ε(e_j) b_p}.
  Matrix k(f, m, static_cast<std::size_t>(m) * n);
  for (int p = 0; p < m; ++p) {
    for (int j = 0; j < n; ++j) {
      Vector col = mod.act(unit_vector(f, m, p), h.basis(j));
      col[p] -= h.counit()[j];
      for (int q = 0; q < m; ++q) k(q, static_cast<std::size_t>(p) * n + j) = col[q];
    }
  }
  const std::vector<Vector> w = nullspace(k.transpose());
  const Matrix wm = Matrix::from_columns(f, m, w);
  InvariantsComparison out;
  out.quotient = wm.transpose();
  const Matrix right_inv = ColumnBasis(wm).left_inverse().transpose();

  // τ(m) = m⁰◁S(m¹)
  Matrix tau(f, m, m);
  for (int p = 0; p < m; ++p) {
    Vector col = zero_vector(f, m);
    for (const auto& x : mod.coaction_terms(p)) {
      axpy(col, x.coeff, mod.act(unit_vector(f, m, x.module), h.apply_antipode(h.basis(x.algebra))));
    }
    for (int q = 0; q < m; ++q) tau(q, p) = col[q];
  }

  out.induced_basis = coinvariants(mod, true);
  const ColumnBasis coords(out.induced_basis);
  const std::size_t q = w.size();
  const std::size_t c = out.induced_basis.cols();
  CheckReport& r = out.checks;

  r.add(matrix_check("inverse map is well defined: τ(m◁a − ε(a)m) = 0", kInvariants, tau * k,
                     Matrix(f, m, k.cols())));
  std::optional<int> outside;
  for (int p = 0; p < m && !outside; ++p) {
    if (!coords.contains(tau.column(p))) outside = p;
  }
  Check lands = decided_check("inverse map lands in induced coinvariants: ρ̂(τm) = τm⊗1", kInvariants, !outside,
                              outside ? "outside" : "inside", "inside");
  if (outside) lands.witness = {*outside};
  r.add(lands);
  r.add(decided_check("invariants and induced coinvariants have equal dimension", kInvariants, q == c, dims(q),
                      dims(c)));

  out.omega = out.quotient * out.induced_basis;
  if (outside) {
    r.add(skipped_check("ω∘ω⁻¹ = id on invariants", kInvariants, "hypothesis failed: inverse map undefined"));
    r.add(skipped_check("ω⁻¹∘ω = id on induced coinvariants", kInvariants, "hypothesis failed: inverse map undefined"));
    return out;
  }
  out.omega_inverse = coords.left_inverse() * tau * right_inv;
  r.add(matrix_check("ω∘ω⁻¹ = id on invariants", kInvariants, out.omega * out.omega_inverse, Matrix::identity(f, q)));
  r.add(matrix_check("ω⁻¹∘ω = id on induced coinvariants", kInvariants, out.omega_inverse * out.omega,
                     Matrix::identity(f, c)));
  return out;
}

}  // namespace hopfq
