#pragma once

#include <optional>

#include "hopfq/hopf.hpp"

namespace hopfq {

/// Fourier transform F: H → H*, F(h) = ∫↼h, and its inverse
/// F⁻¹(φ) = (1/μ) φ⇀∫*_R with μ = ⟨∫, ∫*_R⟩.
///
/// `transform` has column i equal to F(e_i) in dual-basis coordinates, so
/// transform(j, i) = ∫(e_j S e_i). `inverse` is absent when μ = 0.
struct FourierData {
  HopfData parent;
  Functional integral;
  Element dual_right_integral;
  Scalar mu;
  Matrix transform;
  std::optional<Matrix> inverse;
};

/// Throws NotAnIntegral when `integral` is not a nonzero left integral on H
/// or `dual_right_integral` is not a nonzero right integral on H*.
FourierData build_fourier(const HopfData& h, const Functional& integral, const Element& dual_right_integral);

/// Uses the normalized basis vectors of the left integrals on H and of the
/// right integrals on H*. Throws NotAnIntegral when either space is zero.
FourierData build_fourier(const HopfData& h);

/// F⁻¹∘F = id, F∘F⁻¹ = id and ⟨S∫, ∫*_R⟩ = μ. Throws DegeneratePairing.
CheckReport check_inverse(const FourierData& fd);

/// g*h = h₁⟨∫, h₂ S(g)⟩.
Element convolution(const FourierData& fd, const Element& g, const Element& h);

/// Transform properties, the product law F(g*h) = F(g)F(h), and the
/// hypothesis-gated antipode law for the convolution.
CheckReport check_fourier_identities(const FourierData& fd);

}  // namespace hopfq
