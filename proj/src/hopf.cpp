#include "hopfq/hopf.hpp"

#include "hopfq/error.hpp"

namespace hopfq {

std::string_view to_string(Flavor f) {
  switch (f) {
    case Flavor::hopf_quasigroup: return "hopf_quasigroup";
    case Flavor::hopf_coquasigroup: return "hopf_coquasigroup";
    case Flavor::both: return "both";
  }
  return "?";
}

Flavor parse_flavor(std::string_view s) {
  if (s == "hopf_quasigroup") return Flavor::hopf_quasigroup;
  if (s == "hopf_coquasigroup") return Flavor::hopf_coquasigroup;
  if (s == "both") return Flavor::both;
  throw Error(ErrorCode::ParseError, "unknown flavor '" + std::string(s) + "'");
}

Tensor3::Tensor3(const FieldSpec& f, int n0, int n1, int n2)
    : dims_{n0, n1, n2}, data_(static_cast<std::size_t>(n0) * n1 * n2, Scalar::zero(f)) {}

// ----------------------------------------------------------------- HopfData

HopfData::HopfData(FieldSpec field, Vector unit, Tensor3 product, Vector counit, Tensor3 coproduct, Matrix antipode,
                   Flavor flavor)
    : field_(field),
      n_(static_cast<int>(unit.size())),
      unit_(std::move(unit)),
      product_(std::move(product)),
      counit_(std::move(counit)),
      coproduct_(std::move(coproduct)),
      antipode_(std::move(antipode)),
      flavor_(flavor) {
  auto cube = [&](const Tensor3& t) {
    return t.extent(0) == n_ && t.extent(1) == n_ && t.extent(2) == n_;
  };
  if (n_ == 0 || static_cast<int>(counit_.size()) != n_ || !cube(product_) || !cube(coproduct_) ||
      static_cast<int>(antipode_.rows()) != n_ || static_cast<int>(antipode_.cols()) != n_) {
    throw Error(ErrorCode::DimensionMismatch, "inconsistent structure-constant shapes");
  }
  build_indexes();
}

void HopfData::build_indexes() {
  product_nz_.assign(static_cast<std::size_t>(n_) * n_, {});
  coproduct_nz_.assign(n_, {});
  antipode_nz_.assign(n_, {});
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      for (int k = 0; k < n_; ++k) {
        if (!product_(i, j, k).is_zero()) product_nz_[i * n_ + j].push_back({k, product_(i, j, k)});
        if (!coproduct_(i, j, k).is_zero()) coproduct_nz_[i].push_back({j, k, coproduct_(i, j, k)});
      }
      if (!antipode_(i, j).is_zero()) antipode_nz_[j].push_back({i, antipode_(i, j)});
    }
  }
}

bool operator==(const HopfData& a, const HopfData& b) {
  return a.field_ == b.field_ && a.flavor_ == b.flavor_ && a.unit_ == b.unit_ && a.counit_ == b.counit_ &&
         a.product_ == b.product_ && a.coproduct_ == b.coproduct_ && a.antipode_ == b.antipode_;
}

Element HopfData::mul(const Element& x, const Element& y) const {
  Element out = zero_vector(field_, n_);
  for (int i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (const Term1& t : product_terms(i, j)) out[t.index] += xy * t.coeff;
    }
  }
  return out;
}

Element HopfData::apply_antipode(const Element& x) const {
  Element out = zero_vector(field_, n_);
  for (int j = 0; j < n_; ++j) {
    if (x[j].is_zero()) continue;
    for (const Term1& t : antipode_terms(j)) out[t.index] += t.coeff * x[j];
  }
  return out;
}

Scalar HopfData::counit_of(const Element& x) const {
  Scalar s = zero();
  for (int i = 0; i < n_; ++i) {
    if (!x[i].is_zero()) s += counit_[i] * x[i];
  }
  return s;
}

Vector HopfData::coproduct_of(const Element& x) const {
  Vector out = zero_vector(field_, static_cast<std::size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (const Term2& t : coproduct_terms(i)) out[t.left * n_ + t.right] += x[i] * t.coeff;
  }
  return out;
}

std::vector<HopfData::Term2> HopfData::coproduct_terms_of(const Element& x) const {
  const Vector d = coproduct_of(x);
  std::vector<Term2> out;
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (!d[a * n_ + b].is_zero()) out.push_back({a, b, d[a * n_ + b]});
    }
  }
  return out;
}

Scalar HopfData::pair(const Functional& phi, const Element& h) const {
  Scalar s = zero();
  for (int i = 0; i < n_; ++i) {
    if (!phi[i].is_zero() && !h[i].is_zero()) s += phi[i] * h[i];
  }
  return s;
}

Functional HopfData::dual_mul(const Functional& phi, const Functional& psi) const {
  Functional out = zero_vector(field_, n_);
  for (int k = 0; k < n_; ++k) {
    for (const Term2& t : coproduct_terms(k)) {
      if (!phi[t.left].is_zero() && !psi[t.right].is_zero()) out[k] += t.coeff * phi[t.left] * psi[t.right];
    }
  }
  return out;
}

Functional HopfData::dual_antipode(const Functional& phi) const {
  Functional out = zero_vector(field_, n_);
  for (int j = 0; j < n_; ++j) {
    for (const Term1& t : antipode_terms(j)) {
      if (!phi[t.index].is_zero()) out[j] += t.coeff * phi[t.index];
    }
  }
  return out;
}

Functional HopfData::right_action(const Functional& phi, const Element& h) const {
  const Element sh = apply_antipode(h);
  Functional out = zero_vector(field_, n_);
  for (int k = 0; k < n_; ++k) {
    for (int j = 0; j < n_; ++j) {
      if (sh[j].is_zero()) continue;
      for (const Term1& t : product_terms(k, j)) {
        if (!phi[t.index].is_zero()) out[k] += sh[j] * t.coeff * phi[t.index];
      }
    }
  }
  return out;
}

Element HopfData::left_hit(const Functional& phi, const Element& h) const {
  Element out = zero_vector(field_, n_);
  for (int i = 0; i < n_; ++i) {
    if (h[i].is_zero()) continue;
    for (const Term2& t : coproduct_terms(i)) {
      if (!phi[t.right].is_zero()) out[t.left] += h[i] * t.coeff * phi[t.right];
    }
  }
  return out;
}

HopfData HopfData::with_product(int i, int j, int k, Scalar v) const {
  Tensor3 p = product_;
  p(i, j, k) = std::move(v);
  return HopfData(field_, unit_, std::move(p), counit_, coproduct_, antipode_, flavor_);
}

HopfData HopfData::with_coproduct(int i, int j, int k, Scalar v) const {
  Tensor3 d = coproduct_;
  d(i, j, k) = std::move(v);
  return HopfData(field_, unit_, product_, counit_, std::move(d), antipode_, flavor_);
}

HopfData HopfData::with_antipode(int i, int j, Scalar v) const {
  Matrix s = antipode_;
  s(i, j) = std::move(v);
  return HopfData(field_, unit_, product_, counit_, coproduct_, std::move(s), flavor_);
}

HopfData HopfData::with_unit(int i, Scalar v) const {
  Vector u = unit_;
  u[i] = std::move(v);
  return HopfData(field_, std::move(u), product_, counit_, coproduct_, antipode_, flavor_);
}

HopfData HopfData::with_counit(int i, Scalar v) const {
  Vector c = counit_;
  c[i] = std::move(v);
  return HopfData(field_, unit_, product_, std::move(c), coproduct_, antipode_, flavor_);
}

HopfData HopfData::with_flavor(Flavor f) const {
  return HopfData(field_, unit_, product_, counit_, coproduct_, antipode_, f);
}

// ------------------------------------------------------------ constructions

namespace {

void require_ip(const LoopTable& loop) {
  const LoopReport r = classify(loop);
  if (!r.ip.holds) throw Error(ErrorCode::NotIPLoop, "loop lacks the inverse property", r.ip.witness);
}

}  // namespace

HopfData group_algebra(const LoopTable& loop, const FieldSpec& field) {
  require_ip(loop);
  const int n = loop.order();
  const Scalar one = Scalar::one(field);
  Tensor3 m(field, n, n, n);
  Tensor3 d(field, n, n, n);
  Matrix s(field, n, n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) m(u, v, loop.mul(u, v)) = one;
    d(u, u, u) = one;
    s(loop.inv(u), u) = one;
  }
  const Flavor flavor = classify(loop).associative.holds ? Flavor::both : Flavor::hopf_quasigroup;
  return HopfData(field, unit_vector(field, n, loop.identity()), std::move(m), Vector(n, one), std::move(d),
                  std::move(s), flavor);
}

HopfData function_algebra(const LoopTable& loop, const FieldSpec& field) {
  require_ip(loop);
  const int n = loop.order();
  const Scalar one = Scalar::one(field);
  Tensor3 m(field, n, n, n);
  Tensor3 d(field, n, n, n);
  Matrix s(field, n, n);
  for (int t = 0; t < n; ++t) {
    m(t, t, t) = one;
    s(loop.inv(t), t) = one;
    for (int x = 0; x < n; ++x) d(x, t, loop.mul(loop.inv(t), x)) = one;
  }
  const Flavor flavor = classify(loop).associative.holds ? Flavor::both : Flavor::hopf_coquasigroup;
  return HopfData(field, Vector(n, one), std::move(m), unit_vector(field, n, loop.identity()), std::move(d),
                  std::move(s), flavor);
}

HopfData dual(const HopfData& h) {
  const int n = h.dim();
  const FieldSpec& f = h.field();
  Tensor3 m(f, n, n, n);
  Tensor3 d(f, n, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        m(i, j, k) = h.coproduct()(k, i, j);
        d(k, i, j) = h.product()(i, j, k);
      }
    }
  }
  Flavor flipped = Flavor::both;
  if (h.flavor() == Flavor::hopf_quasigroup) flipped = Flavor::hopf_coquasigroup;
  if (h.flavor() == Flavor::hopf_coquasigroup) flipped = Flavor::hopf_quasigroup;
  return HopfData(f, h.counit(), std::move(m), h.unit(), std::move(d), h.antipode().transpose(), flipped);
}

}  // namespace hopfq
