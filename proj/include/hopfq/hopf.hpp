#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "hopfq/check.hpp"
#include "hopfq/loop.hpp"
#include "hopfq/matrix.hpp"

namespace hopfq {

enum class Flavor { hopf_quasigroup, hopf_coquasigroup, both };

std::string_view to_string(Flavor f);
Flavor parse_flavor(std::string_view s);
inline bool has_quasigroup(Flavor f) { return f != Flavor::hopf_coquasigroup; }
inline bool has_coquasigroup(Flavor f) { return f != Flavor::hopf_quasigroup; }

/// Coordinates of an element of H (against {e_i}) or of H* (against the dual
/// basis {f^i}).
using Element = Vector;
using Functional = Vector;

/// Dense n0 x n1 x n2 array of scalars.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(const FieldSpec& f, int n0, int n1, int n2);

  int extent(int axis) const { return dims_[axis]; }
  Scalar& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
  const Scalar& operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dims_[1] + j) * dims_[2] + k;
  }
  std::array<int, 3> dims_{0, 0, 0};
  std::vector<Scalar> data_;
};

/// A finite-dimensional Hopf quasigroup and/or Hopf coquasigroup as structure
/// constants against a basis {e_i}:
///
///   e_i e_j  = sum_k product(i,j,k) e_k
///   Δ e_i    = sum_{j,k} coproduct(i,j,k) e_j ⊗ e_k
///   S e_j    = sum_i antipode(i,j) e_i         (column j is S e_j)
///   1        = sum_i unit[i] e_i,   ε(e_i) = counit[i]
///
/// Values are immutable. Only shapes are validated at construction; the
/// algebraic laws are the business of the verifiers, so that deliberately
/// broken data can be built and inspected.
class HopfData {
 public:
  HopfData(FieldSpec field, Vector unit, Tensor3 product, Vector counit, Tensor3 coproduct, Matrix antipode,
           Flavor flavor);

  const FieldSpec& field() const noexcept { return field_; }
  int dim() const noexcept { return n_; }
  Flavor flavor() const noexcept { return flavor_; }
  const Vector& unit() const noexcept { return unit_; }
  const Vector& counit() const noexcept { return counit_; }
  const Tensor3& product() const noexcept { return product_; }
  const Tensor3& coproduct() const noexcept { return coproduct_; }
  const Matrix& antipode() const noexcept { return antipode_; }

  friend bool operator==(const HopfData& a, const HopfData& b);

  // --- evaluation on coordinate vectors ------------------------------------

  Element basis(int i) const { return unit_vector(field_, n_, i); }
  Scalar zero() const { return Scalar::zero(field_); }
  Scalar one() const { return Scalar::one(field_); }

  Element mul(const Element& x, const Element& y) const;
  Element apply_antipode(const Element& x) const;
  Scalar counit_of(const Element& x) const;
  /// Δx as a flattened n x n tensor (index a*n + b).
  Vector coproduct_of(const Element& x) const;

  struct Term1 {
    int index;
    Scalar coeff;
  };
  struct Term2 {
    int left;
    int right;
    Scalar coeff;
  };
  /// Nonzero structure constants of e_i e_j.
  const std::vector<Term1>& product_terms(int i, int j) const { return product_nz_[i * n_ + j]; }
  /// Nonzero Sweedler terms of Δe_i.
  const std::vector<Term2>& coproduct_terms(int i) const { return coproduct_nz_[i]; }
  /// Nonzero entries of column j of S.
  const std::vector<Term1>& antipode_terms(int j) const { return antipode_nz_[j]; }
  /// Merged nonzero terms of Δx.
  std::vector<Term2> coproduct_terms_of(const Element& x) const;

  // --- dual-space operations -----------------------------------------------
  //
  // H* carries the transposed structure: (φψ)(h) = φ(h₁)ψ(h₂),
  // Δφ(h⊗g) = φ(hg), 1 = ε, ε(φ) = φ(1), (Sφ)(h) = φ(Sh).

  Scalar pair(const Functional& phi, const Element& h) const;
  Functional dual_mul(const Functional& phi, const Functional& psi) const;
  Functional dual_antipode(const Functional& phi) const;
  /// φ ↼ h = φ₁⟨φ₂, Sh⟩, i.e. ⟨φ↼h, x⟩ = ⟨φ, x Sh⟩.
  Functional right_action(const Functional& phi, const Element& h) const;
  /// φ ⇀ h = h₁⟨φ, h₂⟩.
  Element left_hit(const Functional& phi, const Element& h) const;

  // --- single-entry perturbations for negative tests -----------------------

  HopfData with_product(int i, int j, int k, Scalar v) const;
  HopfData with_coproduct(int i, int j, int k, Scalar v) const;
  HopfData with_antipode(int i, int j, Scalar v) const;
  HopfData with_unit(int i, Scalar v) const;
  HopfData with_counit(int i, Scalar v) const;
  HopfData with_flavor(Flavor f) const;

 private:
  void build_indexes();

  FieldSpec field_;
  int n_ = 0;
  Vector unit_;
  Tensor3 product_;
  Vector counit_;
  Tensor3 coproduct_;
  Matrix antipode_;
  Flavor flavor_;

  std::vector<std::vector<Term1>> product_nz_;
  std::vector<std::vector<Term2>> coproduct_nz_;
  std::vector<std::vector<Term1>> antipode_nz_;
};

/// kG: basis the loop elements, Δu = u⊗u, ε(u) = 1, Su = u^{-1}.
/// Throws NotIPLoop. Flavor is `both` for groups.
HopfData group_algebra(const LoopTable& loop, const FieldSpec& field);

/// k[G]: basis the delta functions, δ_sδ_t = [s=t]δ_t, 1 = Σδ_t,
/// Δδ_s = Σ_t δ_t⊗δ_{t^{-1}s}, ε(δ_s) = [s=e], Sδ_s = δ_{s^{-1}}.
/// Throws NotIPLoop. Flavor is `both` for groups.
HopfData function_algebra(const LoopTable& loop, const FieldSpec& field);

/// The dual H* against the dual basis: structure tensors transposed and the
/// flavor flipped.
HopfData dual(const HopfData& h);

/// Exhaustive verification of the Hopf quasigroup axioms plus the derived
/// antipode properties and the property flags. Throws WrongFlavor.
CheckReport verify_hopf_quasigroup(const HopfData& h);

/// Exhaustive verification of the Hopf coquasigroup axioms plus flags.
/// Throws WrongFlavor.
CheckReport verify_hopf_coquasigroup(const HopfData& a);

// Cheap structural predicates used to gate theorems.
bool is_cocommutative(const HopfData& h);
bool is_commutative(const HopfData& h);
bool is_associative(const HopfData& h);
bool is_coassociative(const HopfData& h);
/// h₁(gh₂) = (h₁g)h₂ on all basis pairs.
bool is_flexible_quasigroup(const HopfData& h);
/// a₁a₂₂⊗a₂₁ = a₁₁a₂⊗a₁₂ on all basis elements.
bool is_flexible_coquasigroup(const HopfData& a);

}  // namespace hopfq
