#pragma once

#include <vector>

#include "hopfq/hopf.hpp"

namespace hopfq {

/// A right Hopf module M over a Hopf (co)quasigroup H, against a basis {b_p}:
///
///   b_p ◁ e_j = Σ_k action(p, j, k) b_k
///   ρ(b_p)    = Σ_{k,i} coaction(p, k, i) b_k ⊗ e_i
///
/// Elements of M ⊗ H are flattened as k * dim H + i. The axiom set checked is
/// the one matching the parent's flavor.
class HopfModule {
 public:
  HopfModule(HopfData parent, Tensor3 action, Tensor3 coaction);

  const HopfData& parent() const noexcept { return parent_; }
  int dim() const noexcept { return m_; }
  const Tensor3& action() const noexcept { return action_; }
  const Tensor3& coaction() const noexcept { return coaction_; }

  Vector act(const Vector& v, const Element& h) const;
  /// ρ(v) flattened in M ⊗ H.
  Vector coact(const Vector& v) const;
  /// m × m matrix of v ↦ v ◁ h.
  Matrix action_matrix(const Element& h) const;

  struct Term2 {
    int module;
    int algebra;
    Scalar coeff;
  };
  const std::vector<HopfData::Term1>& action_terms(int p, int j) const { return action_nz_[p * n_ + j]; }
  const std::vector<Term2>& coaction_terms(int p) const { return coaction_nz_[p]; }

  HopfModule with_action(int p, int j, int k, Scalar v) const;
  HopfModule with_coaction(int p, int k, int i, Scalar v) const;

 private:
  HopfData parent_;
  int m_ = 0;
  int n_ = 0;
  Tensor3 action_;
  Tensor3 coaction_;
  std::vector<std::vector<HopfData::Term1>> action_nz_;
  std::vector<std::vector<Term2>> coaction_nz_;
};

/// H* as a right H-Hopf module: (φ◁h)(x) = φ(x Sh), ρ(φ) = Σ_i f^i φ ⊗ e_i.
HopfModule dual_hopf_module(const HopfData& h);

/// W ⊗ H with W of dimension w: (b ⊗ h)◁g = b ⊗ hg and ρ = id ⊗ Δ.
/// Basis index r * dim H + i stands for b_r ⊗ e_i.
HopfModule free_hopf_module(const HopfData& h, int w);

CheckReport verify_hopf_module(const HopfModule& m);

/// The induced coaction ρ̂(m) = m⁰⁰◁((Sm⁰¹)m¹₁) ⊗ m¹₂ as a coaction tensor.
Tensor3 induced_coaction(const HopfModule& m);

/// Basis (as columns) of {m : ρ(m) = m ⊗ 1}, or of the ρ̂ version.
Matrix coinvariants(const HopfModule& m, bool use_induced);

struct StructureIsomorphism {
  Matrix coinvariant_basis;  // m × c
  Matrix sigma;              // m × (c·n): c_r ⊗ e_j ↦ c_r ◁ e_j
  Matrix sigma_inverse;      // (c·n) × m: m ↦ m⁰⁰◁Sm⁰¹ ⊗ m¹
  CheckReport checks;
};

/// Builds σ: M^{co} ⊗ H → M and its claimed inverse and checks both
/// composites, the dimension count and that σ is a Hopf module map. The
/// coinvariants are taken with ρ for Hopf quasigroups and with ρ̂ for Hopf
/// coquasigroups. Throws ModuleAxiomsFail.
StructureIsomorphism structure_isomorphism_check(const HopfModule& m);

struct InvariantsComparison {
  Matrix quotient;           // q × m, the projection π: M → M^A
  Matrix induced_basis;      // m × c, basis of M^{ĉo}
  Matrix omega;              // q × c
  Matrix omega_inverse;      // c × q
  CheckReport checks;
};

/// Compares the invariants M^A = M / span{m◁a − ε(a)m} with the induced
/// coinvariants via ω = π restricted to M^{ĉo} and ω⁻¹(π(m)) = m⁰◁Sm¹.
/// Needs the coquasigroup flavor (WrongFlavor); throws ModuleAxiomsFail.
InvariantsComparison invariants_comparison(const HopfModule& m);

}  // namespace hopfq
