#include "resmith/poly.hpp"

#include <algorithm>

#include "resmith/error.hpp"

namespace resmith {

namespace {

// Appends `coeff * monomial` to `out` in canonical signed form. An empty
// monomial stands for 1.
void append_term(std::string& out, const Scalar& coeff, const std::string& monomial) {
  std::string c = coeff.to_string();
  bool negative = !c.empty() && c[0] == '-';
  if (negative) c.erase(0, 1);
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? '-' : '+';
  }
  if (monomial.empty()) {
    out += c;
  } else if (c == "1") {
    out += monomial;
  } else {
    out += c + "*" + monomial;
  }
}

std::string power_string(char var, int k) {
  if (k == 0) return {};
  if (k == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(k);
}

}  // namespace

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(Field field, std::vector<Scalar> coeffs, Var var)
    : field_(field), var_(var), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (!(c.field() == field_)) throw Error(ErrorCode::MixedFields, "coefficient outside the polynomial's field");
  }
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Scalar& c, Var var) { return UniPoly(c.field(), {c}, var); }

UniPoly UniPoly::monomial(const Scalar& c, int k, Var var) {
  std::vector<Scalar> coeffs(static_cast<std::size_t>(k) + 1, c.field().zero());
  coeffs.back() = c;
  return UniPoly(c.field(), std::move(coeffs), var);
}

UniPoly UniPoly::linear(const Scalar& root, Var var) {
  return UniPoly(root.field(), {-root, root.field().one()}, var);
}

UniPoly UniPoly::linear_power(const Scalar& root, int k, Var var) {
  return linear(root, var).pow(static_cast<unsigned>(k));
}

UniPoly UniPoly::with_var(Var v) const {
  UniPoly r = *this;
  r.var_ = v;
  return r;
}

Scalar UniPoly::lead() const { return c_.empty() ? field_.zero() : c_.back(); }

Scalar UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return field_.zero();
  return c_[static_cast<std::size_t>(k)];
}

Scalar UniPoly::operator()(const Scalar& at) const {
  Scalar acc = field_.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (!(field_ == o.field_)) throw Error(ErrorCode::MixedFields, "polynomial addition");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (!(field_ == o.field_)) throw Error(ErrorCode::MixedFields, "polynomial subtraction");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (!(a.field_ == b.field_)) throw Error(ErrorCode::MixedFields, "polynomial product");
  UniPoly r(a.field_, a.var_);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  if (!(a.field_ == b.field_)) throw Error(ErrorCode::MixedFields, "polynomial comparison");
  return a.c_ == b.c_;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result = constant(field_.one(), var_);
  UniPoly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inv();
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (!(field_ == d.field_)) throw Error(ErrorCode::MixedFields, "polynomial division");
  UniPoly rem = *this;
  UniPoly quo(field_, var_);
  if (rem.degree() < d.degree()) return {quo, rem};
  quo.c_.assign(static_cast<std::size_t>(rem.degree() - d.degree() + 1), field_.zero());
  Scalar inv_lead = d.lead().inv();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    int shift = rem.degree() - d.degree();
    Scalar factor = rem.lead() * inv_lead;
    quo.c_[static_cast<std::size_t>(shift)] = factor;
    for (std::size_t k = 0; k < d.c_.size(); ++k) {
      rem.c_[k + static_cast<std::size_t>(shift)] -= factor * d.c_[k];
    }
    rem.trim();
  }
  quo.trim();
  return {quo, rem};
}

std::optional<UniPoly> UniPoly::divide_exact(const UniPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

UniPoly UniPoly::hasse(int k) const {
  UniPoly r(field_, var_);
  if (k < 0 || k > degree()) return r;
  std::vector<Scalar> out;
  out.reserve(c_.size() - static_cast<std::size_t>(k));
  for (int a = k; a <= degree(); ++a) {
    out.push_back(c_[static_cast<std::size_t>(a)] *
                  binomial_in_field(field_, static_cast<unsigned long>(a), static_cast<unsigned long>(k)));
  }
  return UniPoly(field_, std::move(out), var_);
}

UniPoly UniPoly::shifted(const Scalar& shift) const {
  // Horner in the shifted variable.
  UniPoly acc(field_, var_);
  UniPoly lin(field_, {shift, field_.one()}, var_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * lin;
    acc += constant(*it, var_);
  }
  return acc;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    append_term(out, c, power_string(static_cast<char>(var_), k));
  }
  return out;
}

UniPoly gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0)");
  UniPoly a = p, b = q;
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

int root_multiplicity(const UniPoly& p, const Scalar& y0) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root multiplicity of the zero polynomial");
  UniPoly lin = UniPoly::linear(y0, p.var());
  UniPoly cur = p;
  int mu = 0;
  while (true) {
    auto q = cur.divide_exact(lin);
    if (!q) return mu;
    cur = std::move(*q);
    ++mu;
  }
}

int root_multiplicity_hasse(const UniPoly& p, const Scalar& y0) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root multiplicity of the zero polynomial");
  for (int k = 0;; ++k) {
    if (!p.hasse(k)(y0).is_zero()) return k;
  }
}

// ----------------------------------------------------------------- BiPoly

BiPoly BiPoly::constant(const Scalar& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Scalar& c, int i, int j) {
  BiPoly p(c.field());
  p.add_term(i, j, c);
  return p;
}

BiPoly BiPoly::from_x_coeffs(const Field& field, std::span<const UniPoly> coeffs) {
  BiPoly p(field);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    auto cs = coeffs[i].coeffs();
    for (std::size_t j = 0; j < cs.size(); ++j) p.add_term(static_cast<int>(i), static_cast<int>(j), cs[j]);
  }
  return p;
}

BiPoly BiPoly::from_uni(const UniPoly& u) {
  BiPoly p(u.field());
  auto cs = u.coeffs();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (u.var() == Var::X) {
      p.add_term(static_cast<int>(k), 0, cs[k]);
    } else {
      p.add_term(0, static_cast<int>(k), cs[k]);
    }
  }
  return p;
}

Scalar BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? field_.zero() : it->second;
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

int BiPoly::deg_x() const {
  // Map is ordered by x exponent first.
  return terms_.empty() ? -1 : terms_.rbegin()->first.first;
}

int BiPoly::deg_y() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

UniPoly BiPoly::x_coeff(int i) const {
  std::vector<Scalar> cs;
  for (auto it = terms_.lower_bound({i, 0}); it != terms_.end() && it->first.first == i; ++it) {
    auto j = static_cast<std::size_t>(it->first.second);
    if (cs.size() <= j) cs.resize(j + 1, field_.zero());
    cs[j] = it->second;
  }
  return UniPoly(field_, std::move(cs), Var::Y);
}

std::vector<UniPoly> BiPoly::x_coeffs() const {
  std::vector<UniPoly> out;
  int d = deg_x();
  out.reserve(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) out.push_back(x_coeff(i));
  return out;
}

void BiPoly::add_term(int i, int j, const Scalar& c) {
  if (!(c.field() == field_)) throw Error(ErrorCode::MixedFields, "term outside the polynomial's field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (!(field_ == o.field_)) throw Error(ErrorCode::MixedFields, "bivariate addition");
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (!(field_ == o.field_)) throw Error(ErrorCode::MixedFields, "bivariate subtraction");
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (!(a.field_ == b.field_)) throw Error(ErrorCode::MixedFields, "bivariate product");
  BiPoly r(a.field_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  }
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

bool operator==(const BiPoly& a, const BiPoly& b) {
  if (!(a.field_ == b.field_)) throw Error(ErrorCode::MixedFields, "bivariate comparison");
  return a.terms_ == b.terms_;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result = constant(field_.one());
  BiPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Scalar>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
    if (l.first.second != r.first.second) return l.first.second > r.first.second;
    return l.first.first > r.first.first;
  });
  std::string out;
  for (const auto& [e, c] : sorted) {
    std::string mono = power_string('x', e.first);
    std::string ypart = power_string('y', e.second);
    if (!ypart.empty()) mono = mono.empty() ? ypart : mono + "*" + ypart;
    append_term(out, c, mono);
  }
  return out;
}

std::optional<BiPoly> try_exact_div(const BiPoly& p, const BiPoly& q) {
  if (q.is_zero()) throw Error(ErrorCode::DivisionByZero, "bivariate division by zero");
  if (!(p.field() == q.field())) throw Error(ErrorCode::MixedFields, "bivariate division");
  // Lex order with x > y is the map order, so the leading term is the last one.
  const auto& [lead_exp, lead_c] = *q.terms().rbegin();
  Scalar inv_lead = lead_c.inv();
  BiPoly rem = p;
  BiPoly quo(p.field());
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    if (re.first < lead_exp.first || re.second < lead_exp.second) return std::nullopt;
    BiPoly t = BiPoly::monomial(rc * inv_lead, re.first - lead_exp.first, re.second - lead_exp.second);
    rem -= t * q;
    quo += t;
  }
  return quo;
}

BiPoly exact_div(const BiPoly& p, const BiPoly& q) {
  auto r = try_exact_div(p, q);
  if (!r) throw Error(ErrorCode::NotDivisible, q.to_string() + " does not divide " + p.to_string());
  return *r;
}

BiPoly hasse_derivative(const BiPoly& p, int i, int j) {
  BiPoly r(p.field());
  const Field& f = p.field();
  for (const auto& [e, c] : p.terms()) {
    auto [a, b] = e;
    if (a < i || b < j) continue;
    r.add_term(a - i, b - j,
               c * binomial_in_field(f, static_cast<unsigned long>(a), static_cast<unsigned long>(i)) *
                   binomial_in_field(f, static_cast<unsigned long>(b), static_cast<unsigned long>(j)));
  }
  return r;
}

Scalar eval(const BiPoly& p, const Scalar& x0, const Scalar& y0) { return eval_x(p, x0)(y0); }

UniPoly eval_x(const BiPoly& p, const Scalar& x0) {
  const Field& f = p.field();
  UniPoly acc(f, Var::Y);
  auto coeffs = p.x_coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= x0;
    acc += *it;
  }
  return acc;
}

UniPoly eval_y(const BiPoly& p, const Scalar& y0) {
  const Field& f = p.field();
  std::vector<Scalar> out;
  auto coeffs = p.x_coeffs();
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c(y0));
  return UniPoly(f, std::move(out), Var::X);
}

BiPoly reverse_x(const BiPoly& p, int grade) {
  if (grade < p.deg_x()) {
    throw Error(ErrorCode::GradeTooSmall,
                "grade " + std::to_string(grade) + " below deg_x " + std::to_string(p.deg_x()));
  }
  BiPoly r(p.field());
  for (const auto& [e, c] : p.terms()) r.add_term(grade - e.first, e.second, c);
  return r;
}

BiPoly reverse_x(const BiPoly& p) { return reverse_x(p, std::max(p.deg_x(), 0)); }

BiPoly swap_xy(const BiPoly& p) {
  BiPoly r(p.field());
  for (const auto& [e, c] : p.terms()) r.add_term(e.second, e.first, c);
  return r;
}

BiPoly translate(const BiPoly& p, const Scalar& x0, const Scalar& y0) {
  // Taylor coefficients at (x0, y0) are the Hasse derivatives evaluated there.
  BiPoly r(p.field());
  int dx = p.deg_x(), dy = p.deg_y();
  for (int i = 0; i <= dx; ++i) {
    for (int j = 0; j <= dy; ++j) {
      BiPoly d = hasse_derivative(p, i, j);
      if (d.is_zero()) continue;
      r.add_term(i, j, eval(d, x0, y0));
    }
  }
  return r;
}

MoebiusMap::MoebiusMap(Scalar a, Scalar b, Scalar c, Scalar d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (c_.is_zero()) throw Error(ErrorCode::InvalidMoebius, "c must be nonzero");
  if (!(a_ * d_ - b_ * c_).is_one()) throw Error(ErrorCode::InvalidMoebius, "ad - bc must equal 1");
}

Scalar MoebiusMap::preimage(const Scalar& x0) const {
  Scalar den = a_ - c_ * x0;
  if (den.is_zero()) throw Error(ErrorCode::InvalidMoebius, "a - c*x0 vanishes; x0 is sent to infinity");
  return (d_ * x0 - b_) / den;
}

BiPoly moebius_substitute(const BiPoly& p, const MoebiusMap& m, std::optional<int> grade) {
  const Field& f = p.field();
  int g = grade.value_or(std::max(p.deg_x(), 0));
  if (g < p.deg_x()) throw Error(ErrorCode::GradeTooSmall, "Moebius grade below deg_x");
  BiPoly num = BiPoly::monomial(m.a(), 1, 0) + BiPoly::constant(m.b());  // a z + b
  BiPoly den = BiPoly::monomial(m.c(), 1, 0) + BiPoly::constant(m.d());  // c z + d
  std::vector<BiPoly> num_pow{BiPoly::constant(f.one())};
  std::vector<BiPoly> den_pow{BiPoly::constant(f.one())};
  for (int k = 1; k <= g; ++k) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  BiPoly r(f);
  auto coeffs = p.x_coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    r += BiPoly::from_uni(coeffs[i]) * num_pow[i] * den_pow[static_cast<std::size_t>(g) - i];
  }
  return r;
}

}  // namespace resmith
