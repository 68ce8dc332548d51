#pragma once

#include <functional>
#include <optional>
#include <string>

#include "hopfq/hopf.hpp"

namespace hopfq::testing {

using Verifier = std::function<CheckReport(const HopfData&)>;

/// Perturbs one structure constant at a time (by +2, units first, then the
/// antipode, product and coproduct) until `verify` reports the named check
/// failing, and returns that failing check. Verifiers may throw on a
/// perturbed input; such mutations are skipped.
inline std::optional<Check> first_breaking_mutation(const HopfData& h, const std::string& name,
                                                    const Verifier& verify) {
  const int n = h.dim();
  const Scalar two = Scalar::integer(h.field(), 2);
  auto probe = [&](const HopfData& m) -> std::optional<Check> {
    try {
      const CheckReport r = verify(m);
      if (r.contains(name) && r.at(name).outcome == Outcome::fail) return r.at(name);
    } catch (const Error&) {
    }
    return std::nullopt;
  };
  for (int i = 0; i < n; ++i) {
    if (auto c = probe(h.with_unit(i, h.unit()[i] + two))) return c;
    if (auto c = probe(h.with_counit(i, h.counit()[i] + two))) return c;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (auto c = probe(h.with_antipode(i, j, h.antipode()(i, j) + two))) return c;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (auto c = probe(h.with_product(i, j, k, h.product()(i, j, k) + two))) return c;
        if (auto c = probe(h.with_coproduct(i, j, k, h.coproduct()(i, j, k) + two))) return c;
      }
    }
  }
  return std::nullopt;
}

}  // namespace hopfq::testing
