// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "hopfq/error.hpp"
#include "hopfq/fourier.hpp"
#include "hopfq/frobsep.hpp"
#include "hopfq/hopfmod.hpp"
#include "hopfq/integrals.hpp"
#include "support.hpp"

using namespace hopfq;
using hopfq::testing::first_breaking_mutation;
using hopfq::testing::Verifier;

namespace {

const FieldSpec Q = FieldSpec::rationals();
constexpr IntegralQuery kLeftOn{Side::left, Location::on};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first problem found by a criterion; an empty note means pass.
struct Verdict {
  std::string problem;
  std::string detail;

  void fail(const std::string& what) {
    if (problem.empty()) problem = what;
  }
  bool ok() const { return problem.empty(); }
};

void require_report(Verdict& v, const CheckReport& r, const std::string& where) {
  for (const Check& c : r.checks()) {
    if (!c.conforms()) {
      v.fail(where + ": '" + c.name + "' does not conform");
      return;
    }
  }
}

std::vector<HopfData> constructions(const LoopTable& loop) {
  return {group_algebra(loop, Q), function_algebra(loop, Q)};
}

std::string label(const std::string& loop, const HopfData& h) {
  return (h.counit() == Vector(h.dim(), h.one()) ? "k" : "k^") + loop;
}

Verdict group_like_examples() {
  Verdict v;
  double worst = 0;
  for (const std::string& name : standard_builtins()) {
    const auto start = Clock::now();
    const LoopTable loop = builtin_loop(name);
    const HopfData h = function_algebra(loop, Q);
    const int n = h.dim();
    const IntegralSpace left = integrals(h, kLeftOn);
    if (left.dim() != 1 || left.basis[0] != Vector(n, h.one())) v.fail(name + ": left integrals are not the all-ones line");
    const FourierData fd = build_fourier(h, Vector(n, h.one()), integrals(dual(h), {Side::right, Location::on}).basis.at(0));
    for (int s = 0; s < n; ++s) {
      if (fd.transform.column(s) != unit_vector(Q, n, loop.inv(s))) v.fail(name + ": F(δ" + std::to_string(s) + ") ≠ s⁻¹");
      for (int t = 0; t < n; ++t) {
        if (convolution(fd, h.basis(s), h.basis(t)) != h.basis(loop.mul(t, s))) {
          v.fail(name + ": δ" + std::to_string(s) + "*δ" + std::to_string(t) + " ≠ δts");
        }
      }
    }
    const double dt = seconds_since(start);
    worst = std::max(worst, dt);
    if (dt >= 2.0) v.fail(name + ": took " + std::to_string(dt) + " s");
  }
  v.detail = "slowest loop " + std::to_string(worst) + " s";
  return v;
}

Verdict integral_lines() {
  Verdict v;
  const auto start = Clock::now();
  for (const std::string& name : standard_builtins()) {
    for (const HopfData& h : constructions(builtin_loop(name))) {
      const std::size_t dim = integrals(h, kLeftOn).dim();
      if (dim != 1) v.fail(label(name, h) + ": dim = " + std::to_string(dim));
    }
  }
  const double dt = seconds_since(start);
  if (dt >= 2.0) v.fail("took " + std::to_string(dt) + " s");
  v.detail = std::to_string(dt) + " s";
  return v;
}

Verdict antipode_bijective() {
  Verdict v;
  for (const std::string& name : standard_builtins()) {
    const Scalar det = determinant(group_algebra(builtin_loop(name), Q).antipode());
    if (det.is_zero()) v.fail("k" + name + ": det S = 0");
    v.detail += (v.detail.empty() ? "" : ", ") + name + ": " + det.to_string();
  }
  return v;
}

Verdict fourier_inversion() {
  Verdict v;
  const auto start = Clock::now();
  for (const HopfData& h : constructions(builtin_loop("octonion"))) {
    const FourierData fd = build_fourier(h);
    if (!fd.inverse) {
      v.fail(label("O16", h) + ": μ = 0");
      continue;
    }
    const CheckReport r = check_inverse(fd);
    if (!r.all_pass() || r.checks().size() != 3) v.fail(label("O16", h) + ": inversion checks fail");
  }
  const double dt = seconds_since(start);
  if (dt >= 5.0) v.fail("took " + std::to_string(dt) + " s");
  v.detail = std::to_string(dt) + " s";
  return v;
}

Verdict convolution_to_product() {
  Verdict v;
  double worst = 0;
  for (const std::string& name : standard_builtins()) {
    for (const HopfData& h : constructions(builtin_loop(name))) {
      const auto start = Clock::now();
      const FourierData fd = build_fourier(h);
      const int n = h.dim();
      for (int g = 0; g < n; ++g) {
        const Vector fg = fd.transform.column(g);
        for (int k = 0; k < n; ++k) {
          const Vector conv = convolution(fd, h.basis(g), h.basis(k));
          if (fd.transform * std::span<const Scalar>(conv) != h.dual_mul(fg, fd.transform.column(k))) {
            v.fail(label(name, h) + ": fails at (" + std::to_string(g) + "," + std::to_string(k) + ")");
          }
        }
      }
      const double dt = seconds_since(start);
      worst = std::max(worst, dt);
      if (dt >= 10.0) v.fail(label(name, h) + ": took " + std::to_string(dt) + " s");
    }
  }
  v.detail = "slowest construction " + std::to_string(worst) + " s";
  return v;
}

// Every identity must pass on every builtin, and for each one some single
// structure-constant perturbation must make that same named check fail with a witness.
Verdict identities_and_mutations() {
  Verdict v;
  for (const std::string& name : standard_builtins()) {
    for (const HopfData& h : constructions(builtin_loop(name))) {
      const std::string where = label(name, h);
      require_report(v, check_integral_identities(h, integrals(h, kLeftOn).basis.at(0), Side::left), where);
      require_report(v, check_integral_identities(h, integrals(h, {Side::right, Location::on}).basis.at(0), Side::right),
                     where);
      const FourierData fd = build_fourier(h);
      require_report(v, check_fourier_identities(fd), where);
      require_report(v, check_inverse(fd), where);
    }
  }

  const LoopTable sym3 = builtin_loop("sym3");
  const HopfData kg = group_algebra(sym3, Q).with_flavor(Flavor::hopf_quasigroup);
  const HopfData fg = function_algebra(sym3, Q).with_flavor(Flavor::hopf_coquasigroup);
  struct Target {
    HopfData h;
    Verifier verify;
  };
  auto integral_verifier = [](const HopfData& base, Side side) -> Verifier {
    const Vector fixed = integrals(base, {side, Location::on}).basis.at(0);
    return [fixed, side](const HopfData& m) { return check_integral_identities(m, fixed, side, Precondition::skip); };
  };
  const Verifier fourier_verifier = [](const HopfData& m) {
    const FourierData fd = build_fourier(m);
    CheckReport r = check_fourier_identities(fd);
    if (fd.inverse) r.append(check_inverse(fd));
    return r;
  };
  const std::vector<Target> targets{{kg, integral_verifier(kg, Side::left)},
                                    {kg, integral_verifier(kg, Side::right)},
                                    {fg, integral_verifier(fg, Side::left)},
                                    {kg, fourier_verifier},
                                    {fg, fourier_verifier}};
  int covered = 0;
  for (const Target& t : targets) {
    const CheckReport base = t.verify(t.h);
    for (const Check& c : base.checks()) {
      if (c.expected != true || c.outcome != Outcome::pass) continue;
      const auto broken = first_breaking_mutation(t.h, c.name, t.verify);
      if (!broken || broken->lhs == broken->rhs) {
        v.fail("no mutation breaks '" + c.name + "'");
      } else {
        ++covered;
      }
    }
  }
  v.detail = std::to_string(covered) + " identities broken by single mutations";
  return v;
}

Verdict structure_theorems() {
  Verdict v;
  for (const std::string& name : standard_builtins()) {
    for (const HopfData& h : constructions(builtin_loop(name))) {
      const StructureIsomorphism iso = structure_isomorphism_check(dual_hopf_module(h));
      if (!(iso.sigma * iso.sigma_inverse).is_identity() || !(iso.sigma_inverse * iso.sigma).is_identity()) {
        v.fail(label(name, h) + ": σ composites are not the identity");
      }
      require_report(v, iso.checks, label(name, h));
    }
    const HopfData fg = function_algebra(builtin_loop(name), Q);
    const InvariantsComparison cmp = invariants_comparison(dual_hopf_module(fg));
    require_report(v, cmp.checks, label(name, fg));
    if (!cmp.checks.all_pass()) v.fail(label(name, fg) + ": ω checks fail");
  }
  return v;
}

Verdict frobenius_and_separability() {
  Verdict v;
  for (const std::string& name : standard_builtins()) {
    for (const HopfData& h : constructions(builtin_loop(name))) {
      const FrobeniusResult fr = frobenius_check(h, integrals(h, kLeftOn).basis.at(0));
      if (fr.form.det.is_zero()) v.fail(label(name, h) + ": Gram determinant vanishes");
      require_report(v, fr.checks, label(name, h));
    }
    const HopfData fg = function_algebra(builtin_loop(name), Q);
    const SeparabilityResult s = separability_element(fg, integrals(fg, {Side::left, Location::in}).basis.at(0));
    if (!s.checks.all_pass()) v.fail(label(name, fg) + ": separability identities fail");
  }
  const HopfData ko = group_algebra(builtin_loop("octonion"), Q);
  const SeparabilityResult s = separability_element(ko, integrals(ko, {Side::left, Location::in}).basis.at(0));
  if (!s.checks.all_pass()) v.fail("kO16: separability identities fail");
  return v;
}

Verdict semisimplicity() {
  Verdict v;
  const LoopTable z2 = builtin_loop("cyclic:2");
  const FieldSpec f2 = FieldSpec::prime_field(2);
  const SemisimplicityResult q = semisimplicity_check(group_algebra(z2, Q), Vector(2, Scalar(1)));
  if (!q.semisimple || q.epsilon_of_lambda != Scalar(2)) v.fail("kZ2 over Q should be semisimple with ε(Λ) = 2");
  const SemisimplicityResult p = semisimplicity_check(group_algebra(z2, f2), Vector(2, Scalar::one(f2)));
  if (p.semisimple || !p.epsilon_of_lambda.is_zero()) v.fail("kZ2 over GF(2) should not be semisimple");
  const SemisimplicityResult d = semisimplicity_check(function_algebra(z2, f2), unit_vector(f2, 2, 0));
  if (!d.semisimple || !d.epsilon_of_lambda.is_one()) v.fail("k^Z2 over GF(2) should be semisimple with ε(δe) = 1");

  const HopfData a = group_algebra(z2, Q);
  Matrix e(Q, 2, 2);
  const Scalar half = Scalar::fraction(Q, 1, 2);
  e(0, 0) = e(1, 0) = e(0, 1) = e(1, 1) = half;
  const MaschkeResult m =
      maschke_projection(a, regular_module(a), Matrix::from_rows(Q, {{1}, {1}}), e, Vector(2, Scalar(1)));
  if (!m.checks.all_pass()) v.fail("Maschke projection checks fail");
  if (m.complement.size() != 1 || m.complement[0] != Vector{Scalar(1), Scalar(-1)}) {
    v.fail("complement is not span(e − g)");
  }
  return v;
}

Verdict deterministic_cli() {
  Verdict v;
  const std::string cmd = std::string("\"") + HOPFQ_CLI_PATH + "\" report --builtin octonion --suites all --format json";
  auto capture = [&](int& status) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    status = pclose(pipe);
    return out;
  };
  int s1 = -1, s2 = -1;
  const std::string a = capture(s1);
  const std::string b = capture(s2);
  if (a.empty()) v.fail("no output from the CLI");
  if (s1 != 0 || s2 != 0) v.fail("CLI exit status nonzero");
  if (a != b) v.fail("outputs differ");
  v.detail = std::to_string(a.size()) + " bytes";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"group-like examples: integral line, F(δs) = s⁻¹, δs*δt = δts", group_like_examples},
      {"left integrals on H form a line for every builtin construction", integral_lines},
      {"antipode of every builtin group algebra is invertible", antipode_bijective},
      {"Fourier transform and inverse compose to identities on kO16 and k^O16", fourier_inversion},
      {"F(g*h) = F(g)F(h) on every basis pair of every builtin construction", convolution_to_product},
      {"integral and Fourier identities pass everywhere and each is caught by a mutation", identities_and_mutations},
      {"structure isomorphisms and invariant comparisons are exact", structure_theorems},
      {"Frobenius forms nondegenerate and separability elements valid", frobenius_and_separability},
      {"semisimplicity criterion and Maschke projection", semisimplicity},
      {"report output is byte-identical across runs", deterministic_cli},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line << (v.ok() ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first;
    if (!v.ok()) line << "  -- " << v.problem;
    if (!v.detail.empty()) line << "  (" << v.detail << ")";
    std::cout << line.str() << std::endl;
    if (!v.ok()) ++failures;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
