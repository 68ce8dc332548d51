#pragma once

#include <vector>

#include "hopfq/hopf.hpp"

namespace hopfq {

/// B(h, g) = ∫(hg) as its Gram matrix against the basis.
struct FrobeniusForm {
  Matrix gram;
  Scalar det;
};

struct FrobeniusResult {
  FrobeniusForm form;
  CheckReport checks;
};

/// Gram matrix, the inverse-associativity (quasigroup) or associativity
/// (coquasigroup) identities of B, and non-degeneracy. Throws NotAnIntegral.
FrobeniusResult frobenius_check(const HopfData& h, const Functional& integral);

struct SeparabilityResult {
  Scalar scale;  // 1/ε(Λ) applied to the integral
  Matrix omega;  // omega(a, b) is the coefficient of e_a ⊗ e_b
  CheckReport checks;
};

/// ω = Λ₁ ⊗ S(Λ₂) for the integral rescaled to ε(Λ) = 1, with the two
/// separability identities checked. Throws NotAnIntegralIn, NotNormalizable.
SeparabilityResult separability_element(const HopfData& h, const Element& lambda);

struct SemisimplicityResult {
  Scalar epsilon_of_lambda;
  bool semisimple = false;
  CheckReport checks;
};

/// Semisimplicity criterion ε(Λ) ≠ 0 for associative inputs. Throws
/// NotAssociative (nonassociative inputs are refused), ZeroIntegral,
/// NotAnIntegralIn.
SemisimplicityResult semisimplicity_check(const HopfData& a, const Element& lambda);

/// Left regular module: left_action(j, p, q) is the coefficient of e_q in e_j e_p.
Tensor3 regular_module(const HopfData& a);

struct MaschkeResult {
  Matrix projection;               // E₀
  std::vector<Vector> complement;  // basis of ker E₀
  CheckReport checks;
};

/// E₀(m) = Λ₁ ▷ E(S(Λ₂) ▷ m) for a left module given by
/// left_action(j, p, q) = coefficient of b_q in e_j ▷ b_p.
/// `submodule` holds a basis of N as columns and `e` is a projection onto N.
/// Throws NotASubmodule, NotAProjection, NotAnIntegralIn, NotNormalizable.
MaschkeResult maschke_projection(const HopfData& a, const Tensor3& left_action, const Matrix& submodule,
                                 const Matrix& e, const Element& lambda);

}  // namespace hopfq
