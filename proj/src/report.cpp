#include "hopfq/report.hpp"

#include <map>
#include <set>
#include <sstream>

#include "hopfq/error.hpp"
#include "hopfq/fourier.hpp"
#include "hopfq/frobsep.hpp"
#include "hopfq/hopfmod.hpp"
#include "hopfq/integrals.hpp"

namespace hopfq {

std::string_view to_string(Construction c) {
  switch (c) {
    case Construction::group_algebra: return "group_algebra";
    case Construction::function_algebra: return "function_algebra";
    case Construction::both: return "both";
  }
  return "?";
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::axioms: return "axioms";
    case Suite::integrals: return "integrals";
    case Suite::modules: return "modules";
    case Suite::fourier: return "fourier";
    case Suite::frobenius: return "frobenius";
    case Suite::semisimple: return "semisimple";
  }
  return "?";
}

std::string_view to_string(Format f) { return f == Format::json ? "json" : "text"; }

Construction parse_construction(std::string_view s) {
  for (Construction c : {Construction::group_algebra, Construction::function_algebra, Construction::both}) {
    if (s == to_string(c)) return c;
  }
  throw Error(ErrorCode::BadParams, "unknown construction '" + std::string(s) + "'");
}

Format parse_format(std::string_view s) {
  if (s == "json") return Format::json;
  if (s == "text") return Format::text;
  throw Error(ErrorCode::BadParams, "unknown format '" + std::string(s) + "'");
}

std::vector<Suite> parse_suites(const std::vector<std::string>& names) {
  constexpr Suite kOrder[] = {Suite::axioms,  Suite::integrals, Suite::modules,
                              Suite::fourier, Suite::frobenius, Suite::semisimple};
  std::set<Suite> wanted;
  for (const std::string& raw : names) {
    std::stringstream ss(raw);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name.empty()) continue;
      if (name == "all") {
        wanted.insert(std::begin(kOrder), std::end(kOrder));
        continue;
      }
      bool found = false;
      for (Suite s : kOrder) {
        if (name == to_string(s)) {
          wanted.insert(s);
          found = true;
        }
      }
      if (!found) throw Error(ErrorCode::BadParams, "unknown suite '" + name + "'");
    }
  }
  if (wanted.empty()) throw Error(ErrorCode::BadParams, "no suites selected");
  std::vector<Suite> out;
  for (Suite s : kOrder) {
    if (wanted.contains(s)) out.push_back(s);
  }
  return out;
}

bool RunResult::conforms() const {
  for (const ReportEntry& e : entries) {
    if (!e.check.conforms()) return false;
  }
  return true;
}

LoopTable load_source(const RunConfig& config) {
  if (config.builtin.has_value() == config.loop_path.has_value()) {
    throw Error(ErrorCode::BadParams, "exactly one of --builtin and --loop is required");
  }
  return config.builtin ? builtin_loop(*config.builtin) : load_loop(*config.loop_path);
}

namespace {

constexpr const char* kExamples = "group-like examples";
constexpr const char* kModules = "structure of Hopf modules";
constexpr const char* kSuite = "suite execution";

using Tuple = std::vector<int>;
using Pair = std::pair<Vector, Vector>;

Json basis_json(const std::vector<Vector>& basis) {
  Json out = Json::array();
  for (const Vector& v : basis) out.push_back(to_json(v));
  return out;
}

Matrix columns(const HopfData& h, const std::vector<Vector>& basis) {
  return Matrix::from_columns(h.field(), h.dim(), basis);
}

void expect(CheckReport& r, const std::string& name, std::optional<bool> value) {
  if (r.contains(name)) r.at(name).expected = value;
}

std::optional<bool> only_if(bool holds) { return holds ? std::optional<bool>(true) : std::nullopt; }

// Property flags carry the outcome the loop's own properties predict.
void set_flag_expectations(CheckReport& r, Construction c, const LoopReport& loop) {
  if (c == Construction::group_algebra) {
    expect(r, "associativity: (hg)f = h(gf)", loop.associative.holds);
    expect(r, "commutative: hg = gh", loop.commutative.holds);
    expect(r, "cocommutative: h1⊗h2 = h2⊗h1", true);
    expect(r, "flexible: h1(g h2) = (h1 g)h2", loop.flexible.holds);
    expect(r, "moufang: h1(g(h2 f)) = ((h1 g)h2)f", loop.moufang.holds);
    expect(r, "coassociativity: h11⊗h12⊗h2 = h1⊗h21⊗h22", true);
  } else {
    expect(r, "coassociativity: h11⊗h12⊗h2 = h1⊗h21⊗h22", loop.associative.holds);
    expect(r, "cocommutative: h1⊗h2 = h2⊗h1", loop.commutative.holds);
    expect(r, "commutative: hg = gh", true);
    expect(r, "associativity: (hg)f = h(gf)", true);
    expect(r, "flexible: a1 a22⊗a21 = a11 a2⊗a12", only_if(loop.flexible.holds));
    expect(r, "moufang: a1 a221⊗a21⊗a222 = a111 a12⊗a112⊗a2", only_if(loop.moufang.holds));
  }
}

struct SuiteRun {
  CheckReport checks;
  Json data = Json::object();
  std::vector<std::string> facts;
};

SuiteRun axioms_suite(const HopfData& h, Construction c, const LoopReport& loop) {
  SuiteRun out;
  std::set<std::string> seen;
  auto take = [&](const CheckReport& r) {
    for (const Check& ch : r.checks()) {
      if (seen.insert(ch.name).second) out.checks.add(ch);
    }
  };
  if (c == Construction::group_algebra) {
    take(verify_hopf_quasigroup(h));
    if (has_coquasigroup(h.flavor())) take(verify_hopf_coquasigroup(h));
  } else {
    take(verify_hopf_coquasigroup(h));
    if (has_quasigroup(h.flavor())) take(verify_hopf_quasigroup(h));
  }
  set_flag_expectations(out.checks, c, loop);
  out.data["antipode_det"] = determinant(h.antipode()).to_string();
  return out;
}

SuiteRun integrals_suite(const HopfData& h) {
  SuiteRun out;
  const UniquenessCertificate cert = uniqueness_certificate(h);
  out.checks.append(cert.checks);
  const IntegralSpace left = integrals(h, {Side::left, Location::on});
  const IntegralSpace right = integrals(h, {Side::right, Location::on});
  out.data["left_on"] = basis_json(left.basis);
  out.data["right_on"] = basis_json(right.basis);
  out.data["left_in"] = basis_json(integrals(h, {Side::left, Location::in}).basis);
  out.data["right_in"] = basis_json(integrals(h, {Side::right, Location::in}).basis);
  out.data["antipode_det"] = cert.antipode_det.to_string();
  out.facts.push_back("dim_left_on=" + std::to_string(cert.dim_left_on));
  out.facts.push_back("dim_right_on=" + std::to_string(cert.dim_right_on));
  out.facts.push_back("dim_left_in=" + std::to_string(cert.dim_left_in));
  if (left.dim() > 0) {
    out.checks.append(check_integral_identities(h, left.basis.front(), Side::left));
  } else {
    out.checks.add(skipped_check("left integral identities", "integrals", "no nonzero left integral on H"));
  }
  if (right.dim() > 0) {
    out.checks.append(check_integral_identities(h, right.basis.front(), Side::right));
  } else {
    out.checks.add(skipped_check("right integral identities", "integrals", "no nonzero right integral on H"));
  }
  return out;
}

SuiteRun modules_suite(const HopfData& h) {
  SuiteRun out;
  const HopfModule m = dual_hopf_module(h);
  const CheckReport axioms = verify_hopf_module(m);
  out.checks.append(axioms);
  const Matrix co = coinvariants(m, false);
  const std::vector<Vector> left = integrals(h, {Side::left, Location::on}).basis;
  out.checks.add(decided_check("coinvariants of H* are the left integrals", kModules,
                               canonical_span(co) == canonical_span(columns(h, left)),
                               "dim = " + std::to_string(co.cols()), "dim = " + std::to_string(left.size())));
  out.data["module_dim"] = m.dim();
  out.data["coinvariant_dim"] = co.cols();
  if (has_coquasigroup(h.flavor())) {
    const bool equal = induced_coaction(m) == m.coaction();
    out.checks.add(decided_check("induced coaction equals coaction on H*", kModules, equal,
                                 equal ? "equal" : "differ", "equal",
                                 only_if(is_commutative(h) && is_flexible_coquasigroup(h))));
    out.data["induced_coinvariant_dim"] = coinvariants(m, true).cols();
  }
  if (!axioms.all_pass()) {
    out.checks.add(skipped_check("structure isomorphism", kModules, "module axioms fail"));
    return out;
  }
  const StructureIsomorphism iso = structure_isomorphism_check(m);
  out.checks.append(iso.checks);
  if (has_coquasigroup(h.flavor())) {
    const InvariantsComparison cmp = invariants_comparison(m);
    out.checks.append(cmp.checks);
    out.data["invariants_dim"] = cmp.quotient.rows();
  }
  return out;
}

SuiteRun fourier_suite(const HopfData& h, Construction c, const LoopTable& loop) {
  SuiteRun out;
  std::optional<FourierData> built;
  try {
    built = build_fourier(h);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotAnIntegral) throw;
    out.checks.add(skipped_check("Fourier transform", "Fourier transform", e.what()));
    return out;
  }
  const FourierData& fd = *built;
  out.data["integral"] = to_json(fd.integral);
  out.data["dual_right_integral"] = to_json(fd.dual_right_integral);
  out.data["mu"] = fd.mu.to_string();
  out.data["transform"] = to_json(fd.transform);
  out.data["inverse"] = fd.inverse ? to_json(*fd.inverse) : Json(nullptr);
  out.facts.push_back("mu=" + fd.mu.to_string());
  if (fd.inverse) {
    out.checks.append(check_inverse(fd));
  } else {
    out.checks.add(skipped_check("Fourier inversion", "Fourier inversion", "degenerate pairing: μ = 0"));
  }
  out.checks.append(check_fourier_identities(fd));
  if (c == Construction::function_algebra) {
    const int n = h.dim();
    const bool all_ones = fd.integral == Vector(n, h.one());
    auto gated = [&](Check ch) {
      if (!all_ones) ch.expected.reset();
      return ch;
    };
    out.checks.add(gated(exhaustive_check("transform of a delta: F(δs) = s⁻¹", kExamples, n, 1, n, 1,
                                          [&](const Tuple& t) {
                                            return Pair{fd.transform.column(t[0]),
                                                        unit_vector(h.field(), n, loop.inv(t[0]))};
                                          })));
    out.checks.add(gated(exhaustive_check("convolution of deltas: δs*δt = δts", kExamples, n, 2, n, 1,
                                          [&](const Tuple& t) {
                                            return Pair{convolution(fd, h.basis(t[0]), h.basis(t[1])),
                                                        h.basis(loop.mul(t[1], t[0]))};
                                          })));
  }
  return out;
}

SuiteRun frobenius_suite(const HopfData& h) {
  SuiteRun out;
  const IntegralSpace left = integrals(h, {Side::left, Location::on});
  if (left.dim() == 0) {
    out.checks.add(skipped_check("Frobenius form", "Frobenius", "no nonzero left integral on H"));
  } else {
    const FrobeniusResult fr = frobenius_check(h, left.basis.front());
    out.checks.append(fr.checks);
    out.data["gram"] = to_json(fr.form.gram);
    out.data["gram_det"] = fr.form.det.to_string();
  }
  const IntegralSpace in = integrals(h, {Side::left, Location::in});
  if (in.dim() == 0) {
    out.checks.add(skipped_check("separability element", "separability", "no nonzero left integral in H"));
    return out;
  }
  const Element& lambda = in.basis.front();
  out.data["lambda"] = to_json(lambda);
  if (h.counit_of(lambda).is_zero()) {
    out.checks.add(skipped_check("separability element", "separability", "not normalizable: ε(Λ) = 0"));
    return out;
  }
  const SeparabilityResult sep = separability_element(h, lambda);
  out.checks.append(sep.checks);
  out.data["omega"] = to_json(sep.omega);
  return out;
}

SuiteRun semisimple_suite(const HopfData& h) {
  SuiteRun out;
  if (!is_associative(h)) {
    out.checks.add(skipped_check("semisimplicity criterion", "semisimplicity criterion",
                                 "algebra is not associative; the criterion is not applied"));
    out.data["semisimple"] = nullptr;
    out.facts.push_back("semisimple=undetermined");
    return out;
  }
  const IntegralSpace in = integrals(h, {Side::left, Location::in});
  if (in.dim() == 0) {
    out.checks.add(skipped_check("semisimplicity criterion", "semisimplicity criterion",
                                 "no nonzero left integral in H"));
    out.data["semisimple"] = nullptr;
    out.facts.push_back("semisimple=undetermined");
    return out;
  }
  const Element& lambda = in.basis.front();
  const SemisimplicityResult res = semisimplicity_check(h, lambda);
  out.checks.append(res.checks);
  out.data["lambda"] = to_json(lambda);
  out.data["epsilon_of_lambda"] = res.epsilon_of_lambda.to_string();
  out.data["semisimple"] = res.semisimple;
  out.facts.push_back("epsilon_of_lambda=" + res.epsilon_of_lambda.to_string());
  out.facts.push_back(std::string("semisimple=") + (res.semisimple ? "true" : "false"));
  if (res.semisimple) {
    // N = kΛ is a submodule of the regular module; E projects along the first
    // coordinate where Λ is nonzero.
    const int n = h.dim();
    int k = 0;
    while (lambda[k].is_zero()) ++k;
    Matrix e(h.field(), n, n);
    const Scalar inv = lambda[k].inverse();
    for (int r = 0; r < n; ++r) e(r, k) = lambda[r] * inv;
    const MaschkeResult mr = maschke_projection(h, regular_module(h), columns(h, {lambda}), e, lambda);
    out.checks.append(mr.checks);
    out.data["maschke_complement_dim"] = mr.complement.size();
  }
  return out;
}

Json loop_json(const LoopTable& loop, const LoopReport& r) {
  Json out;
  out["order"] = loop.order();
  out["identity"] = loop.identity();
  Json props;
  auto flag = [&](const char* name, const LoopFlag& f) {
    props[name] = {{"holds", f.holds}, {"witness", f.witness}};
  };
  flag("ip", r.ip);
  flag("flexible", r.flexible);
  flag("moufang", r.moufang);
  flag("commutative", r.commutative);
  flag("associative", r.associative);
  out["properties"] = std::move(props);
  return out;
}

}  // namespace

RunResult run(const RunConfig& config) {
  const LoopTable loop = load_source(config);
  const FieldSpec field = FieldSpec::parse(config.field);
  const LoopReport props = classify(loop);

  std::vector<Construction> constructions;
  if (config.construction != Construction::function_algebra) constructions.push_back(Construction::group_algebra);
  if (config.construction != Construction::group_algebra) constructions.push_back(Construction::function_algebra);
  // Build everything first so input errors (non-IP loops) abort before any output.
  std::vector<HopfData> algebras;
  for (Construction c : constructions) {
    algebras.push_back(c == Construction::group_algebra ? group_algebra(loop, field) : function_algebra(loop, field));
  }

  RunResult result;
  Json& doc = result.document;
  Json cfg;
  cfg["command"] = config.command;
  cfg["source"] = config.builtin ? Json{{"builtin", *config.builtin}} : Json{{"loop", *config.loop_path}};
  cfg["field"] = field.to_string();
  cfg["construction"] = std::string(to_string(config.construction));
  Json suites = Json::array();
  for (Suite s : config.suites) suites.push_back(std::string(to_string(s)));
  cfg["suites"] = std::move(suites);
  doc["config"] = std::move(cfg);
  doc["loop"] = loop_json(loop, props);
  doc["constructions"] = Json::object();

  for (std::size_t i = 0; i < constructions.size(); ++i) {
    const Construction c = constructions[i];
    const HopfData& h = algebras[i];
    const std::string cname(to_string(c));
    Json cdata;
    cdata["dim"] = h.dim();
    cdata["flavor"] = std::string(to_string(h.flavor()));
    for (Suite s : config.suites) {
      const std::string sname(to_string(s));
      SuiteRun sr;
      try {
        switch (s) {
          case Suite::axioms: sr = axioms_suite(h, c, props); break;
          case Suite::integrals: sr = integrals_suite(h); break;
          case Suite::modules: sr = modules_suite(h); break;
          case Suite::fourier: sr = fourier_suite(h, c, loop); break;
          case Suite::frobenius: sr = frobenius_suite(h); break;
          case Suite::semisimple: sr = semisimple_suite(h); break;
        }
      } catch (const Error& e) {
        // A library error inside a suite is a finding about the data, not bad input.
        sr.checks.add(decided_check(sname + " suite completed", kSuite, false, e.what(), "completed"));
      }
      cdata[sname] = std::move(sr.data);
      for (const std::string& f : sr.facts) result.facts.push_back(cname + " " + f);
      for (const Check& ch : sr.checks.checks()) result.entries.push_back({sname, cname, ch});
    }
    doc["constructions"][cname] = std::move(cdata);
  }

  Json checks = Json::array();
  int passed = 0, failed = 0, skipped = 0, informational = 0, nonconforming = 0;
  for (const ReportEntry& e : result.entries) {
    Json j;
    j["suite"] = e.suite;
    j["construction"] = e.construction;
    const Json body = to_json(e.check);
    for (auto& [k, v] : body.items()) j[k] = v;
    checks.push_back(std::move(j));
    switch (e.check.outcome) {
      case Outcome::pass: ++passed; break;
      case Outcome::fail: ++failed; break;
      case Outcome::skipped: ++skipped; break;
    }
    if (!e.check.expected) ++informational;
    if (!e.check.conforms()) ++nonconforming;
  }
  doc["checks"] = std::move(checks);
  doc["summary"] = {{"passed", passed},
                    {"failed", failed},
                    {"skipped", skipped},
                    {"informational", informational},
                    {"nonconforming", nonconforming},
                    {"conforms", nonconforming == 0}};
  return result;
}

namespace {

std::string witness_text(const std::vector<int>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out + ")";
}

// Text output shortens long tensors; the JSON report keeps them whole.
std::string clip(const std::string& s) {
  constexpr std::size_t kLimit = 240;
  return s.size() <= kLimit ? s : s.substr(0, kLimit) + " ...";
}

std::string status_text(const Check& c) {
  switch (c.outcome) {
    case Outcome::skipped: return "SKIP";
    case Outcome::pass: return "PASS";
    case Outcome::fail: return "FAIL";
  }
  return "?";
}

std::string note_text(const Check& c) {
  if (c.outcome == Outcome::skipped) return "";
  if (!c.expected) return "flag";
  if (!c.conforms()) return "NONCONFORMING";
  return *c.expected ? "" : "expected fail";
}

}  // namespace

std::string render(const RunResult& result, Format format) {
  if (format == Format::json) return result.document.dump(2) + "\n";
  const Json& doc = result.document;
  std::ostringstream out;
  const Json& cfg = doc["config"];
  const Json& src = cfg["source"];
  out << "hopfq " << cfg["command"].get<std::string>() << ": "
      << (src.contains("builtin") ? "builtin " + src["builtin"].get<std::string>()
                                  : "loop " + src["loop"].get<std::string>())
      << ", field " << cfg["field"].get<std::string>() << ", construction "
      << cfg["construction"].get<std::string>() << "\n";
  const Json& loop = doc["loop"];
  out << "loop: order " << loop["order"].get<int>();
  for (const auto& [name, flag] : loop["properties"].items()) {
    out << ", " << name << "=" << (flag["holds"].get<bool>() ? "true" : "false");
  }
  out << "\n";
  for (const auto& [name, data] : doc["constructions"].items()) {
    out << name << ": dim " << data["dim"].get<int>() << ", flavor " << data["flavor"].get<std::string>() << "\n";
  }
  for (const std::string& f : result.facts) out << f << "\n";
  for (const ReportEntry& e : result.entries) {
    const Check& c = e.check;
    out << status_text(c) << "  " << e.suite << "/" << e.construction << "  " << c.name << "  [" << c.theorem
        << "]";
    const std::string note = note_text(c);
    if (!note.empty()) out << "  {" << note << "}";
    if (c.outcome == Outcome::fail) {
      out << "\n      witness=" << witness_text(c.witness) << " lhs=" << clip(c.lhs) << " rhs=" << clip(c.rhs);
    } else if (c.outcome == Outcome::skipped) {
      out << "\n      reason: " << c.lhs;
    }
    out << "\n";
  }
  const Json& s = doc["summary"];
  out << "summary: passed=" << s["passed"].get<int>() << " failed=" << s["failed"].get<int>()
      << " skipped=" << s["skipped"].get<int>() << " informational=" << s["informational"].get<int>()
      << " nonconforming=" << s["nonconforming"].get<int>() << "\n";
  out << "status: " << (s["conforms"].get<bool>() ? "conforms" : "NONCONFORMING") << "\n";
  return out.str();
}

}  // namespace hopfq
