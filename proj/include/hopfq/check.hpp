#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfq/matrix.hpp"

namespace hopfq {

enum class Outcome { pass, fail, skipped };

std::string_view to_string(Outcome o);

/// One verified identity or decided property.
///
/// `expected` is what conformance to theory requires: true for axioms and
/// theorems, false for properties that are known to fail on the input (for
/// example associativity of a nonassociative loop algebra), and nullopt for
/// purely informational flags. Skipped checks are hypothesis-gated identities
/// whose hypothesis did not hold; `lhs` then names the failed hypothesis.
struct Check {
  std::string name;
  std::string theorem;
  Outcome outcome = Outcome::pass;
  std::vector<int> witness;
  std::string lhs;
  std::string rhs;
  std::optional<bool> expected = true;

  bool passed() const noexcept { return outcome == Outcome::pass; }
  /// Agrees with `expected`; skipped and informational checks always conform.
  bool conforms() const noexcept;
};

class CheckReport {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  void append(const CheckReport& other);

  const std::vector<Check>& checks() const noexcept { return checks_; }
  std::vector<Check>& checks() noexcept { return checks_; }
  bool empty() const noexcept { return checks_.empty(); }

  /// Throws std::out_of_range when absent.
  const Check& at(std::string_view name) const;
  Check& at(std::string_view name);
  bool contains(std::string_view name) const;

  bool all_pass() const;
  bool all_conform() const;

 private:
  std::vector<Check> checks_;
};

/// Renders a flattened tensor of the given arity over an n-dimensional basis
/// as its nonzero coordinates, e.g. "{(0,1): 2, (3,3): -1/2}" or "0".
std::string format_tensor(const Vector& v, int n, int arity);
/// Same rendering for a tensor with per-axis extents (row-major flattening).
std::string format_tensor(const Vector& v, const std::vector<int>& shape);

/// Evaluates lhs/rhs on every basis tuple of the given arity in lexicographic
/// order and records the first disagreement.
///
/// `eval` returns the pair of flattened tensors to compare; `out_arity` and
/// `out_dim` describe their shape for the witness rendering.
Check exhaustive_check(std::string name, std::string theorem, int n, int arity, int out_dim, int out_arity,
                       const std::function<std::pair<Vector, Vector>(const std::vector<int>&)>& eval);

/// Mixed-shape variant: tuple slot k ranges over [0, extents[k]) and the
/// compared tensors have shape `out_shape`.
Check exhaustive_check(std::string name, std::string theorem, const std::vector<int>& extents,
                       const std::vector<int>& out_shape,
                       const std::function<std::pair<Vector, Vector>(const std::vector<int>&)>& eval);

/// Compares two matrices entrywise; the witness is the first differing
/// (row, col) and lhs/rhs hold the two entries there.
Check matrix_check(std::string name, std::string theorem, const Matrix& lhs, const Matrix& rhs);

/// A check decided elsewhere, with rendered values for the report.
Check decided_check(std::string name, std::string theorem, bool holds, std::string lhs, std::string rhs,
                    std::optional<bool> expected = true);

/// A property flag (expected = nullopt) built from a finished identity check.
Check as_flag(Check c);

/// A hypothesis-gated check that did not run.
Check skipped_check(std::string name, std::string theorem, std::string reason);

}  // namespace hopfq
