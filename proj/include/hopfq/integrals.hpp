#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hopfq/hopf.hpp"

namespace hopfq {

enum class Side { left, right };
enum class Location { on, in };

std::string_view to_string(Side s);
std::string_view to_string(Location l);

struct IntegralQuery {
  Side side = Side::left;
  Location location = Location::on;
};

/// Integrals on H are functionals, integrals in H are elements; both are
/// coordinate vectors of length dim H.
struct IntegralSpace {
  IntegralQuery query;
  std::vector<Vector> basis;

  std::size_t dim() const noexcept { return basis.size(); }
};

/// The n²×n system whose kernel is the integral space. Row (i, k) is the k-th
/// coordinate of the defining identity evaluated at e_i:
///
///   left on:   h₁∫(h₂) = ∫(h)1        right on:  ∫(h₁)h₂ = ∫(h)1
///   left in:   hx = ε(h)x              right in:  xh = ε(h)x
Matrix integral_system(const HopfData& h, IntegralQuery q);

IntegralSpace integrals(const HopfData& h, IntegralQuery q);

/// Index of the first basis element at which v violates the defining
/// identity, or nullopt when v is an integral of the requested kind.
std::optional<int> integral_violation(const HopfData& h, const Vector& v, IntegralQuery q);

enum class Precondition { enforce, skip };

/// Verifies the identities satisfied by an integral on H. For side = left,
/// `integral` must be a left integral on H; for side = right, a right one.
/// Throws NotAnIntegral (witness: the failing basis index) unless the
/// precondition is skipped, in which case the defining identity simply
/// reports as failed (used for mutation testing).
CheckReport check_integral_identities(const HopfData& h, const Functional& integral, Side side,
                                      Precondition pre = Precondition::enforce);

struct UniquenessCertificate {
  std::size_t dim_left_on = 0;
  std::size_t dim_right_on = 0;
  std::size_t dim_left_in = 0;
  Scalar antipode_det;
  CheckReport checks;
};

/// Integral-space dimensions and det S, with the dimension-one and
/// invertibility expectations attached where the theory predicts them.
UniquenessCertificate uniqueness_certificate(const HopfData& h);

}  // namespace hopfq
