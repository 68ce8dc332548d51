#pragma once

#include <json.hpp>

#include "hopfq/check.hpp"
#include "hopfq/hopf.hpp"

namespace hopfq {

using Json = nlohmann::ordered_json;

Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Tensor3& t);
Json to_json(const Check& c);
Json to_json(const CheckReport& r);

/// {field, flavor, dim, unit, product, counit, coproduct, antipode} with all
/// scalars as strings and tensors as nested arrays.
Json to_json(const HopfData& h);

/// Inverse of to_json(HopfData). Throws ParseError on malformed documents and
/// DimensionMismatch on inconsistent shapes.
HopfData hopf_from_json(const Json& doc);

}  // namespace hopfq
