#include "hopfq/json_io.hpp"

#include "hopfq/error.hpp"

namespace hopfq {

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const Scalar& s : v) out.push_back(s.to_string());
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const Tensor3& t) {
  Json out = Json::array();
  for (int i = 0; i < t.extent(0); ++i) {
    Json plane = Json::array();
    for (int j = 0; j < t.extent(1); ++j) {
      Json row = Json::array();
      for (int k = 0; k < t.extent(2); ++k) row.push_back(t(i, j, k).to_string());
      plane.push_back(std::move(row));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

Json to_json(const Check& c) {
  Json out;
  out["name"] = c.name;
  out["theorem"] = c.theorem;
  out["pass"] = c.outcome == Outcome::skipped ? Json(nullptr) : Json(c.passed());
  out["expected"] = c.expected ? Json(*c.expected) : Json(nullptr);
  out["witness"] = c.witness;
  out["lhs"] = c.lhs;
  out["rhs"] = c.rhs;
  return out;
}

Json to_json(const CheckReport& r) {
  Json out = Json::array();
  for (const Check& c : r.checks()) out.push_back(to_json(c));
  return out;
}

Json to_json(const HopfData& h) {
  Json out;
  out["field"] = h.field().to_string();
  out["flavor"] = std::string(to_string(h.flavor()));
  out["dim"] = h.dim();
  out["unit"] = to_json(h.unit());
  out["product"] = to_json(h.product());
  out["counit"] = to_json(h.counit());
  out["coproduct"] = to_json(h.coproduct());
  out["antipode"] = to_json(h.antipode());
  return out;
}

namespace {

const Json& member(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing key '") + key + "'");
  }
  return doc.at(key);
}

Scalar scalar_from(const FieldSpec& f, const Json& j) {
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar::integer(f, j.get<std::int64_t>());
  throw Error(ErrorCode::ParseError, "scalars must be strings or integers");
}

const Json& array_of(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "expected an array of length " + std::to_string(n));
  }
  return j;
}

Vector vector_from(const FieldSpec& f, const Json& j, int n) {
  Vector out;
  for (const Json& x : array_of(j, n)) out.push_back(scalar_from(f, x));
  return out;
}

Tensor3 tensor_from(const FieldSpec& f, const Json& j, int n) {
  Tensor3 t(f, n, n, n);
  for (int i = 0; i < n; ++i) {
    const Json& plane = array_of(array_of(j, n)[i], n);
    for (int k = 0; k < n; ++k) {
      const Vector row = vector_from(f, plane[k], n);
      for (int l = 0; l < n; ++l) t(i, k, l) = row[l];
    }
  }
  return t;
}

}  // namespace

HopfData hopf_from_json(const Json& doc) try {
  const FieldSpec f = FieldSpec::parse(member(doc, "field").get<std::string>());
  const Json& dim = member(doc, "dim");
  if (!dim.is_number_integer() || dim.get<int>() <= 0) throw Error(ErrorCode::ParseError, "dim must be positive");
  const int n = dim.get<int>();
  Matrix s(f, n, n);
  for (int r = 0; r < n; ++r) {
    const Vector row = vector_from(f, array_of(member(doc, "antipode"), n)[r], n);
    for (int c = 0; c < n; ++c) s(r, c) = row[c];
  }
  return HopfData(f, vector_from(f, member(doc, "unit"), n), tensor_from(f, member(doc, "product"), n),
                  vector_from(f, member(doc, "counit"), n), tensor_from(f, member(doc, "coproduct"), n),
                  std::move(s), parse_flavor(member(doc, "flavor").get<std::string>()));
} catch (const nlohmann::json::exception& e) {
  throw Error(ErrorCode::ParseError, e.what());
}

}  // namespace hopfq
