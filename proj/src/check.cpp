#include "hopfq/check.hpp"

#include <stdexcept>

namespace hopfq {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::skipped: return "skipped";
  }
  return "?";
}

bool Check::conforms() const noexcept {
  if (outcome == Outcome::skipped || !expected.has_value()) return true;
  return passed() == *expected;
}

void CheckReport::append(const CheckReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

const Check& CheckReport::at(std::string_view name) const {
  for (const Check& c : checks_) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named '" + std::string(name) + "'");
}

Check& CheckReport::at(std::string_view name) {
  for (Check& c : checks_) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named '" + std::string(name) + "'");
}

bool CheckReport::contains(std::string_view name) const {
  for (const Check& c : checks_) {
    if (c.name == name) return true;
  }
  return false;
}

bool CheckReport::all_pass() const {
  for (const Check& c : checks_) {
    if (c.outcome == Outcome::fail) return false;
  }
  return true;
}

bool CheckReport::all_conform() const {
  for (const Check& c : checks_) {
    if (!c.conforms()) return false;
  }
  return true;
}

std::string format_tensor(const Vector& v, const std::vector<int>& shape) {
  const int arity = static_cast<int>(shape.size());
  std::string out;
  for (std::size_t flat = 0; flat < v.size(); ++flat) {
    if (v[flat].is_zero()) continue;
    out += out.empty() ? "{" : ", ";
    if (arity == 0) {
      out += v[flat].to_string();
      continue;
    }
    std::vector<int> idx(arity);
    std::size_t rest = flat;
    for (int k = arity - 1; k >= 0; --k) {
      idx[k] = static_cast<int>(rest % static_cast<std::size_t>(shape[k]));
      rest /= static_cast<std::size_t>(shape[k]);
    }
    if (arity == 1) {
      out += std::to_string(idx[0]);
    } else {
      out += "(";
      for (int k = 0; k < arity; ++k) out += (k ? "," : "") + std::to_string(idx[k]);
      out += ")";
    }
    out += ": " + v[flat].to_string();
  }
  return out.empty() ? "0" : out + "}";
}

std::string format_tensor(const Vector& v, int n, int arity) {
  return format_tensor(v, std::vector<int>(arity, n));
}

Check exhaustive_check(std::string name, std::string theorem, const std::vector<int>& extents,
                       const std::vector<int>& out_shape,
                       const std::function<std::pair<Vector, Vector>(const std::vector<int>&)>& eval) {
  Check c;
  c.name = std::move(name);
  c.theorem = std::move(theorem);
  const int arity = static_cast<int>(extents.size());
  for (int e : extents) {
    if (e == 0) return c;
  }
  std::vector<int> tuple(arity, 0);
  while (true) {
    const auto [lhs, rhs] = eval(tuple);
    if (lhs != rhs) {
      c.outcome = Outcome::fail;
      c.witness = tuple;
      c.lhs = format_tensor(lhs, out_shape);
      c.rhs = format_tensor(rhs, out_shape);
      return c;
    }
    int k = arity - 1;
    while (k >= 0 && ++tuple[k] == extents[k]) tuple[k--] = 0;
    if (k < 0) break;
  }
  return c;
}

Check exhaustive_check(std::string name, std::string theorem, int n, int arity, int out_dim, int out_arity,
                       const std::function<std::pair<Vector, Vector>(const std::vector<int>&)>& eval) {
  return exhaustive_check(std::move(name), std::move(theorem), std::vector<int>(arity, n),
                          std::vector<int>(out_arity, out_dim), eval);
}

Check matrix_check(std::string name, std::string theorem, const Matrix& lhs, const Matrix& rhs) {
  Check c;
  c.name = std::move(name);
  c.theorem = std::move(theorem);
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    c.outcome = Outcome::fail;
    c.lhs = std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols());
    c.rhs = std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols());
    return c;
  }
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      if (lhs(i, j) != rhs(i, j)) {
        c.outcome = Outcome::fail;
        c.witness = {static_cast<int>(i), static_cast<int>(j)};
        c.lhs = lhs(i, j).to_string();
        c.rhs = rhs(i, j).to_string();
        return c;
      }
    }
  }
  return c;
}

Check decided_check(std::string name, std::string theorem, bool holds, std::string lhs, std::string rhs,
                    std::optional<bool> expected) {
  Check c;
  c.name = std::move(name);
  c.theorem = std::move(theorem);
  c.outcome = holds ? Outcome::pass : Outcome::fail;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.expected = expected;
  return c;
}

Check as_flag(Check c) {
  c.expected.reset();
  return c;
}

Check skipped_check(std::string name, std::string theorem, std::string reason) {
  Check c;
  c.name = std::move(name);
  c.theorem = std::move(theorem);
  c.outcome = Outcome::skipped;
  c.lhs = std::move(reason);
  return c;
}

}  // namespace hopfq
