// Exhaustive axiom verification for Hopf quasigroups and coquasigroups.
//
// Every identity is multilinear, so checking it on all basis tuples is
// equivalent to checking it everywhere. Composites are contracted left to
// right over the nonzero Sweedler terms of the coproduct tensor.

#include "hopfq/error.hpp"
#include "hopfq/hopf.hpp"

namespace hopfq {

namespace {

constexpr const char* kQuasigroupAxioms = "Hopf quasigroup definition";
constexpr const char* kQuasigroupAntipode = "Hopf quasigroup antipode properties";
constexpr const char* kQuasigroupAdjoint = "cocommutative flexible Hopf quasigroup lemma";
constexpr const char* kCoquasigroupAxioms = "Hopf coquasigroup definition";
constexpr const char* kCoquasigroupAntipode = "Hopf coquasigroup antipode properties";
constexpr const char* kCoquasigroupFlexible = "commutative flexible Hopf coquasigroup lemma";
constexpr const char* kFlag = "property flag";

using Pair = std::pair<Vector, Vector>;
using Tuple = std::vector<int>;

/// Σ over Sweedler terms of Δe_i of coeff * f(left, right).
template <class F>
Vector sweedler_sum(const HopfData& h, int i, std::size_t out_size, F&& f) {
  Vector out = zero_vector(h.field(), out_size);
  for (const auto& t : h.coproduct_terms(i)) axpy(out, t.coeff, f(t.left, t.right));
  return out;
}

Check flag(Check c) { return as_flag(std::move(c)); }

// Checks shared by both flavors: unit, counit, and the bialgebra-style
// compatibility of Δ and ε with the product.
void add_common_checks(const HopfData& h, CheckReport& r, const char* theorem) {
  const int n = h.dim();
  const std::size_t n2 = static_cast<std::size_t>(n) * n;
  auto e = [&](int i) { return h.basis(i); };

  r.add(exhaustive_check("left unit: 1h = h", theorem, n, 1, n, 1,
                         [&](const Tuple& t) { return Pair{h.mul(h.unit(), e(t[0])), e(t[0])}; }));
  r.add(exhaustive_check("right unit: h1 = h", theorem, n, 1, n, 1,
                         [&](const Tuple& t) { return Pair{h.mul(e(t[0]), h.unit()), e(t[0])}; }));
  r.add(exhaustive_check("counit law: ε(h1)h2 = h", theorem, n, 1, n, 1, [&](const Tuple& t) {
    Vector lhs = sweedler_sum(h, t[0], n, [&](int a, int b) { return scaled(e(b), h.counit()[a]); });
    return Pair{lhs, e(t[0])};
  }));
  r.add(exhaustive_check("counit law: h1ε(h2) = h", theorem, n, 1, n, 1, [&](const Tuple& t) {
    Vector lhs = sweedler_sum(h, t[0], n, [&](int a, int b) { return scaled(e(a), h.counit()[b]); });
    return Pair{lhs, e(t[0])};
  }));
  r.add(exhaustive_check("coproduct multiplicative: Δ(hg) = Δ(h)Δ(g)", theorem, n, 2, n, 2, [&](const Tuple& t) {
    Vector lhs = h.coproduct_of(h.mul(e(t[0]), e(t[1])));
    Vector rhs = zero_vector(h.field(), n2);
    for (const auto& x : h.coproduct_terms(t[0])) {
      for (const auto& y : h.coproduct_terms(t[1])) {
        add_kron(rhs, x.coeff * y.coeff, h.mul(e(x.left), e(y.left)), h.mul(e(x.right), e(y.right)));
      }
    }
    return Pair{lhs, rhs};
  }));
  r.add(exhaustive_check("coproduct unital: Δ1 = 1⊗1", theorem, n, 0, n, 2, [&](const Tuple&) {
    return Pair{h.coproduct_of(h.unit()), kron(h.unit(), h.unit())};
  }));
  r.add(exhaustive_check("counit multiplicative: ε(hg) = ε(h)ε(g)", theorem, n, 2, n, 0, [&](const Tuple& t) {
    return Pair{Vector{h.counit_of(h.mul(e(t[0]), e(t[1])))}, Vector{h.counit()[t[0]] * h.counit()[t[1]]}};
  }));
  r.add(exhaustive_check("counit unital: ε(1) = 1", theorem, n, 0, n, 0, [&](const Tuple&) {
    return Pair{Vector{h.counit_of(h.unit())}, Vector{h.one()}};
  }));
}

Check coassociativity_check(const HopfData& h, const char* theorem) {
  const int n = h.dim();
  const std::size_t n3 = static_cast<std::size_t>(n) * n * n;
  return exhaustive_check("coassociativity: h11⊗h12⊗h2 = h1⊗h21⊗h22", theorem, n, 1, n, 3, [&](const Tuple& t) {
    Vector lhs = zero_vector(h.field(), n3);
    Vector rhs = zero_vector(h.field(), n3);
    for (const auto& x : h.coproduct_terms(t[0])) {
      for (const auto& y : h.coproduct_terms(x.left)) {
        lhs[(static_cast<std::size_t>(y.left) * n + y.right) * n + x.right] += x.coeff * y.coeff;
      }
      for (const auto& y : h.coproduct_terms(x.right)) {
        rhs[(static_cast<std::size_t>(x.left) * n + y.left) * n + y.right] += x.coeff * y.coeff;
      }
    }
    return Pair{lhs, rhs};
  });
}

Check associativity_check(const HopfData& h, const char* theorem) {
  const int n = h.dim();
  return exhaustive_check("associativity: (hg)f = h(gf)", theorem, n, 3, n, 1, [&](const Tuple& t) {
    const Vector a = h.basis(t[0]), b = h.basis(t[1]), c = h.basis(t[2]);
    return Pair{h.mul(h.mul(a, b), c), h.mul(a, h.mul(b, c))};
  });
}

Check commutativity_check(const HopfData& h) {
  const int n = h.dim();
  return exhaustive_check("commutative: hg = gh", kFlag, n, 2, n, 1, [&](const Tuple& t) {
    return Pair{h.mul(h.basis(t[0]), h.basis(t[1])), h.mul(h.basis(t[1]), h.basis(t[0]))};
  });
}

Check cocommutativity_check(const HopfData& h) {
  const int n = h.dim();
  return exhaustive_check("cocommutative: h1⊗h2 = h2⊗h1", kFlag, n, 1, n, 2, [&](const Tuple& t) {
    Vector lhs = h.coproduct_of(h.basis(t[0]));
    Vector rhs = zero_vector(h.field(), static_cast<std::size_t>(n) * n);
    for (const auto& x : h.coproduct_terms(t[0])) rhs[x.right * n + x.left] += x.coeff;
    return Pair{lhs, rhs};
  });
}

Check antimultiplicative_check(const HopfData& h, const char* theorem) {
  const int n = h.dim();
  return exhaustive_check("antipode antimultiplicative: S(hg) = S(g)S(h)", theorem, n, 2, n, 1, [&](const Tuple& t) {
    const Vector a = h.basis(t[0]), b = h.basis(t[1]);
    return Pair{h.apply_antipode(h.mul(a, b)), h.mul(h.apply_antipode(b), h.apply_antipode(a))};
  });
}

Check anticomultiplicative_check(const HopfData& h, const char* theorem) {
  const int n = h.dim();
  return exhaustive_check("antipode anticomultiplicative: Δ(Sh) = Sh2⊗Sh1", theorem, n, 1, n, 2, [&](const Tuple& t) {
    Vector lhs = h.coproduct_of(h.apply_antipode(h.basis(t[0])));
    Vector rhs = zero_vector(h.field(), static_cast<std::size_t>(n) * n);
    for (const auto& x : h.coproduct_terms(t[0])) {
      add_kron(rhs, x.coeff, h.apply_antipode(h.basis(x.right)), h.apply_antipode(h.basis(x.left)));
    }
    return Pair{lhs, rhs};
  });
}

Check antipode_involution_check(const HopfData& h, const char* theorem) {
  const int n = h.dim();
  return exhaustive_check("antipode involutive: S²h = h", theorem, n, 1, n, 1, [&](const Tuple& t) {
    return Pair{h.apply_antipode(h.apply_antipode(h.basis(t[0]))), h.basis(t[0])};
  });
}

// a1 a22 ⊗ a21 and a11 a2 ⊗ a12, optionally with S on the second product factor.
Pair coflexible_sides(const HopfData& h, int i, bool with_antipode) {
  const int n = h.dim();
  const std::size_t n2 = static_cast<std::size_t>(n) * n;
  auto second = [&](int k) { return with_antipode ? h.apply_antipode(h.basis(k)) : h.basis(k); };
  Vector lhs = zero_vector(h.field(), n2);
  Vector rhs = zero_vector(h.field(), n2);
  for (const auto& x : h.coproduct_terms(i)) {
    for (const auto& y : h.coproduct_terms(x.right)) {
      add_kron(lhs, x.coeff * y.coeff, h.mul(h.basis(x.left), second(y.right)), h.basis(y.left));
    }
    for (const auto& y : h.coproduct_terms(x.left)) {
      add_kron(rhs, x.coeff * y.coeff, h.mul(h.basis(y.left), second(x.right)), h.basis(y.right));
    }
  }
  return {lhs, rhs};
}

}  // namespace

// ------------------------------------------------------------ Hopf quasigroup

CheckReport verify_hopf_quasigroup(const HopfData& h) {
  if (!has_quasigroup(h.flavor())) {
    throw Error(ErrorCode::WrongFlavor, "verify_hopf_quasigroup needs a Hopf quasigroup, got " +
                                            std::string(to_string(h.flavor())));
  }
  const int n = h.dim();
  auto e = [&](int i) { return h.basis(i); };
  auto S = [&](const Vector& x) { return h.apply_antipode(x); };
  CheckReport r;

  r.add(coassociativity_check(h, kQuasigroupAxioms));
  add_common_checks(h, r, kQuasigroupAxioms);

  auto antipode_axiom = [&](std::string name, auto&& term) {
    r.add(exhaustive_check(std::move(name), kQuasigroupAxioms, n, 2, n, 1, [&](const Tuple& t) {
      const Vector g = e(t[1]);
      Vector lhs = sweedler_sum(h, t[0], n, [&](int a, int b) { return term(e(a), e(b), g); });
      return Pair{lhs, scaled(g, h.counit()[t[0]])};
    }));
  };
  antipode_axiom("antipode axiom: S(h1)(h2 g) = ε(h)g",
                 [&](const Vector& a, const Vector& b, const Vector& g) { return h.mul(S(a), h.mul(b, g)); });
  antipode_axiom("antipode axiom: h1(S(h2)g) = ε(h)g",
                 [&](const Vector& a, const Vector& b, const Vector& g) { return h.mul(a, h.mul(S(b), g)); });
  antipode_axiom("antipode axiom: (g S(h1))h2 = ε(h)g",
                 [&](const Vector& a, const Vector& b, const Vector& g) { return h.mul(h.mul(g, S(a)), b); });
  antipode_axiom("antipode axiom: (g h1)S(h2) = ε(h)g",
                 [&](const Vector& a, const Vector& b, const Vector& g) { return h.mul(h.mul(g, a), S(b)); });

  r.add(antimultiplicative_check(h, kQuasigroupAntipode));
  r.add(anticomultiplicative_check(h, kQuasigroupAntipode));

  r.add(flag(cocommutativity_check(h)));
  r.add(flag(commutativity_check(h)));
  r.add(flag(exhaustive_check("flexible: h1(g h2) = (h1 g)h2", kFlag, n, 2, n, 1, [&](const Tuple& t) {
    const Vector g = e(t[1]);
    Vector lhs = sweedler_sum(h, t[0], n, [&](int a, int b) { return h.mul(e(a), h.mul(g, e(b))); });
    Vector rhs = sweedler_sum(h, t[0], n, [&](int a, int b) { return h.mul(h.mul(e(a), g), e(b)); });
    return Pair{lhs, rhs};
  })));
  r.add(flag(exhaustive_check("moufang: h1(g(h2 f)) = ((h1 g)h2)f", kFlag, n, 3, n, 1, [&](const Tuple& t) {
    const Vector g = e(t[1]), f = e(t[2]);
    Vector lhs = sweedler_sum(h, t[0], n, [&](int a, int b) { return h.mul(e(a), h.mul(g, h.mul(e(b), f))); });
    Vector rhs = sweedler_sum(h, t[0], n, [&](int a, int b) { return h.mul(h.mul(h.mul(e(a), g), e(b)), f); });
    return Pair{lhs, rhs};
  })));
  r.add(flag(associativity_check(h, kFlag)));

  const bool gated = r.at("cocommutative: h1⊗h2 = h2⊗h1").passed() && r.at("flexible: h1(g h2) = (h1 g)h2").passed();
  const std::string reason = "hypothesis failed: needs cocommutative and flexible";
  if (gated) {
    r.add(antipode_involution_check(h, kQuasigroupAdjoint));
    r.add(exhaustive_check("adjoint identity: h1(g S(h2)) = (h1 g)S(h2)", kQuasigroupAdjoint, n, 2, n, 1,
                           [&](const Tuple& t) {
                             const Vector g = e(t[1]);
                             Vector lhs = sweedler_sum(h, t[0], n, [&](int a, int b) { return h.mul(e(a), h.mul(g, S(e(b)))); });
                             Vector rhs = sweedler_sum(h, t[0], n, [&](int a, int b) { return h.mul(h.mul(e(a), g), S(e(b))); });
                             return Pair{lhs, rhs};
                           }));
  } else {
    r.add(skipped_check("antipode involutive: S²h = h", kQuasigroupAdjoint, reason));
    r.add(skipped_check("adjoint identity: h1(g S(h2)) = (h1 g)S(h2)", kQuasigroupAdjoint, reason));
  }
  return r;
}

// ---------------------------------------------------------- Hopf coquasigroup

CheckReport verify_hopf_coquasigroup(const HopfData& a) {
  if (!has_coquasigroup(a.flavor())) {
    throw Error(ErrorCode::WrongFlavor, "verify_hopf_coquasigroup needs a Hopf coquasigroup, got " +
                                            std::string(to_string(a.flavor())));
  }
  const int n = a.dim();
  const std::size_t n2 = static_cast<std::size_t>(n) * n;
  const std::size_t n3 = n2 * n;
  auto e = [&](int i) { return a.basis(i); };
  auto S = [&](const Vector& x) { return a.apply_antipode(x); };
  CheckReport r;

  r.add(associativity_check(a, kCoquasigroupAxioms));
  add_common_checks(a, r, kCoquasigroupAxioms);

  // (1) and (2): contract Δa2, compare with 1⊗a.
  auto inner_right = [&](std::string name, auto&& first) {
    r.add(exhaustive_check(std::move(name), kCoquasigroupAxioms, n, 1, n, 2, [&](const Tuple& t) {
      Vector lhs = zero_vector(a.field(), n2);
      for (const auto& x : a.coproduct_terms(t[0])) {
        for (const auto& y : a.coproduct_terms(x.right)) {
          add_kron(lhs, x.coeff * y.coeff, first(e(x.left), e(y.left)), e(y.right));
        }
      }
      return Pair{lhs, kron(a.unit(), e(t[0]))};
    }));
  };
  inner_right("antipode axiom: S(a1)a21⊗a22 = 1⊗a",
              [&](const Vector& p, const Vector& q) { return a.mul(S(p), q); });
  inner_right("antipode axiom: a1 S(a21)⊗a22 = 1⊗a",
              [&](const Vector& p, const Vector& q) { return a.mul(p, S(q)); });
  // (3) and (4): contract Δa1, compare with a⊗1.
  auto inner_left = [&](std::string name, auto&& second) {
    r.add(exhaustive_check(std::move(name), kCoquasigroupAxioms, n, 1, n, 2, [&](const Tuple& t) {
      Vector lhs = zero_vector(a.field(), n2);
      for (const auto& x : a.coproduct_terms(t[0])) {
        for (const auto& y : a.coproduct_terms(x.left)) {
          add_kron(lhs, x.coeff * y.coeff, e(y.left), second(e(y.right), e(x.right)));
        }
      }
      return Pair{lhs, kron(e(t[0]), a.unit())};
    }));
  };
  inner_left("antipode axiom: a11⊗S(a12)a2 = a⊗1",
             [&](const Vector& p, const Vector& q) { return a.mul(S(p), q); });
  inner_left("antipode axiom: a11⊗a12 S(a2) = a⊗1",
             [&](const Vector& p, const Vector& q) { return a.mul(p, S(q)); });

  r.add(antimultiplicative_check(a, kCoquasigroupAntipode));
  r.add(anticomultiplicative_check(a, kCoquasigroupAntipode));

  r.add(flag(commutativity_check(a)));
  r.add(flag(cocommutativity_check(a)));
  r.add(flag(exhaustive_check("flexible: a1 a22⊗a21 = a11 a2⊗a12", kFlag, n, 1, n, 2,
                              [&](const Tuple& t) { return coflexible_sides(a, t[0], false); })));
  r.add(flag(exhaustive_check("moufang: a1 a221⊗a21⊗a222 = a111 a12⊗a112⊗a2", kFlag, n, 1, n, 3,
                              [&](const Tuple& t) {
                                Vector lhs = zero_vector(a.field(), n3);
                                Vector rhs = zero_vector(a.field(), n3);
                                for (const auto& x : a.coproduct_terms(t[0])) {
                                  for (const auto& y : a.coproduct_terms(x.right)) {
                                    for (const auto& z : a.coproduct_terms(y.right)) {
                                      const Vector p = a.mul(e(x.left), e(z.left));
                                      add_kron(lhs, x.coeff * y.coeff * z.coeff, p, kron(e(y.left), e(z.right)));
                                    }
                                  }
                                  for (const auto& y : a.coproduct_terms(x.left)) {
                                    for (const auto& z : a.coproduct_terms(y.left)) {
                                      const Vector p = a.mul(e(z.left), e(y.right));
                                      add_kron(rhs, x.coeff * y.coeff * z.coeff, p, kron(e(z.right), e(x.right)));
                                    }
                                  }
                                }
                                return Pair{lhs, rhs};
                              })));
  r.add(flag(coassociativity_check(a, kFlag)));

  const bool gated = r.at("commutative: hg = gh").passed() && r.at("flexible: a1 a22⊗a21 = a11 a2⊗a12").passed();
  const std::string reason = "hypothesis failed: needs commutative and flexible";
  if (gated) {
    r.add(antipode_involution_check(a, kCoquasigroupFlexible));
    r.add(exhaustive_check("flexible antipode identity: a1 S(a22)⊗a21 = a11 S(a2)⊗a12", kCoquasigroupFlexible, n, 1, n,
                           2, [&](const Tuple& t) { return coflexible_sides(a, t[0], true); }));
  } else {
    r.add(skipped_check("antipode involutive: S²h = h", kCoquasigroupFlexible, reason));
    r.add(skipped_check("flexible antipode identity: a1 S(a22)⊗a21 = a11 S(a2)⊗a12", kCoquasigroupFlexible, reason));
  }
  return r;
}

// ------------------------------------------------------- structural predicates

bool is_cocommutative(const HopfData& h) { return cocommutativity_check(h).passed(); }
bool is_commutative(const HopfData& h) { return commutativity_check(h).passed(); }
bool is_associative(const HopfData& h) { return associativity_check(h, kFlag).passed(); }
bool is_coassociative(const HopfData& h) { return coassociativity_check(h, kFlag).passed(); }

bool is_flexible_quasigroup(const HopfData& h) {
  const int n = h.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Vector g = h.basis(j);
      Vector lhs = sweedler_sum(h, i, n, [&](int a, int b) { return h.mul(h.basis(a), h.mul(g, h.basis(b))); });
      Vector rhs = sweedler_sum(h, i, n, [&](int a, int b) { return h.mul(h.mul(h.basis(a), g), h.basis(b)); });
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool is_flexible_coquasigroup(const HopfData& a) {
  for (int i = 0; i < a.dim(); ++i) {
    const auto [lhs, rhs] = coflexible_sides(a, i, false);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace hopfq
