#include "resmith/dual.hpp"

#include <algorithm>
#include <set>

#include "resmith/error.hpp"
#include "resmith/linalg.hpp"

namespace resmith {

DualFunctional DualFunctional::monomial(const Field& field, int i, int j) {
  DualFunctional d(field);
  d.add(i, j, field.one());
  return d;
}

Scalar DualFunctional::coeff(int i, int j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? field_.zero() : it->second;
}

void DualFunctional::add(int i, int j, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = c_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

DualFunctional& DualFunctional::operator+=(const DualFunctional& o) {
  for (const auto& [k, c] : o.c_) add(k.first, k.second, c);
  return *this;
}

DualFunctional& DualFunctional::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& [k, c] : c_) c *= s;
  return *this;
}

bool operator==(const DualFunctional& a, const DualFunctional& b) { return a.c_ == b.c_; }

Scalar DualFunctional::apply(const BiPoly& p, const Scalar& x0, const Scalar& y0) const {
  BiPoly t = translate(p, x0, y0);
  Scalar acc = field_.zero();
  for (const auto& [k, c] : c_) acc += c * t.coeff(k.first, k.second);
  return acc;
}

std::string DualFunctional::to_string() const {
  if (c_.empty()) return "0";
  std::vector<std::pair<Index, Scalar>> terms(c_.begin(), c_.end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& l, const auto& r) { return lex_less(LexOrder::XLessY, r.first, l.first); });
  std::string out;
  for (const auto& [k, c] : terms) {
    std::string mono = "D[" + std::to_string(k.first) + "," + std::to_string(k.second) + "]";
    std::string cs = c.to_string();
    bool neg = cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (!out.empty() || neg) out += neg ? "-" : "+";
    out += cs == "1" ? mono : cs + "*" + mono;
  }
  return out;
}

DualFunctional antiderivative(const DualFunctional& phi, Var var) {
  DualFunctional r(phi.field());
  for (const auto& [k, c] : phi.coeffs()) {
    if (var == Var::X && k.first > 0) r.add(k.first - 1, k.second, c);
    if (var == Var::Y && k.second > 0) r.add(k.first, k.second - 1, c);
  }
  return r;
}

bool lex_less(LexOrder order, const DualFunctional::Index& a, const DualFunctional::Index& b) {
  if (order == LexOrder::XLessY) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  }
  if (a.first != b.first) return a.first < b.first;
  return a.second < b.second;
}

DualFunctional::Index leading_monomial(const DualFunctional& phi, LexOrder order) {
  if (phi.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading monomial of the zero functional");
  DualFunctional::Index best = phi.coeffs().begin()->first;
  for (const auto& [k, c] : phi.coeffs()) {
    if (lex_less(order, best, k)) best = k;
  }
  return best;
}

namespace {

std::vector<DualFunctional::Index> monomials_up_to(int t) {
  std::vector<DualFunctional::Index> out;
  for (int d = 0; d <= t; ++d) {
    for (int i = d; i >= 0; --i) out.push_back({i, d - i});
  }
  return out;
}

// Rank of a set of functionals as coordinate vectors.
std::size_t functional_rank(const Field& field, const std::vector<DualFunctional>& fs) {
  std::set<DualFunctional::Index> support;
  for (const auto& f : fs) {
    for (const auto& [k, c] : f.coeffs()) support.insert(k);
  }
  std::vector<DualFunctional::Index> cols(support.begin(), support.end());
  Matrix m(field, fs.size(), cols.size());
  for (std::size_t r = 0; r < fs.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = fs[r].coeff(cols[c].first, cols[c].second);
  }
  return m.rank();
}

}  // namespace

bool is_closed(const std::vector<DualFunctional>& basis) {
  if (basis.empty()) return true;
  const Field& field = basis.front().field();
  std::size_t r = functional_rank(field, basis);
  for (const auto& phi : basis) {
    for (Var v : {Var::X, Var::Y}) {
      DualFunctional a = antiderivative(phi, v);
      if (a.is_zero()) continue;
      std::vector<DualFunctional> ext = basis;
      ext.push_back(a);
      if (functional_rank(field, ext) != r) return false;
    }
  }
  return true;
}

DualSpace dual_space(const BiPoly& f, const BiPoly& g, const Scalar& x0, const Scalar& y0,
                     const DualOptions& options) {
  const Field& field = f.field();
  if (!eval(f, x0, y0).is_zero() || !eval(g, x0, y0).is_zero()) {
    throw Error(ErrorCode::NotOnVariety, "(" + x0.to_string() + "," + y0.to_string() + ") is not a common zero");
  }
  const BiPoly ft = translate(f, x0, y0), gt = translate(g, x0, y0);
  // A finite local multiplicity never exceeds the product of total degrees.
  const long bezout_bound = static_cast<long>(std::max(f.total_degree(), 0)) * std::max(g.total_degree(), 0);

  std::vector<DualFunctional> prev;
  for (int t = 0; t <= options.max_degree; ++t) {
    auto monos = monomials_up_to(t);
    std::vector<Vector> rows;
    for (const BiPoly* p : {&ft, &gt}) {
      for (const auto& [a, b] : monos) {
        Vector row(monos.size(), field.zero());
        bool any = false;
        for (const auto& [e, c] : p->terms()) {
          int i = e.first + a, j = e.second + b;
          if (i + j > t) continue;
          // position of (i, j) in monos: degree block start + offset
          int d = i + j;
          std::size_t pos = static_cast<std::size_t>(d * (d + 1) / 2 + (d - i));
          row[pos] += c;
          any = true;
        }
        if (any) rows.push_back(std::move(row));
      }
    }
    std::vector<Vector> ns;
    if (rows.empty()) {
      for (std::size_t k = 0; k < monos.size(); ++k) {
        Vector e(monos.size(), field.zero());
        e[k] = field.one();
        ns.push_back(std::move(e));
      }
    } else {
      ns = Matrix::from_rows(field, rows).nullspace();
    }
    std::vector<DualFunctional> cur;
    for (const auto& v : ns) {
      DualFunctional phi(field);
      for (std::size_t k = 0; k < v.size(); ++k) phi.add(monos[k].first, monos[k].second, v[k]);
      cur.push_back(std::move(phi));
    }
    if (t > 0 && cur.size() == prev.size()) {
      if (!is_closed(prev)) throw Error(ErrorCode::InternalInconsistency, "computed dual space is not closed");
      return DualSpace{x0, y0, std::move(prev), t - 1};
    }
    if (bezout_bound > 0 && static_cast<long>(cur.size()) > bezout_bound) {
      throw Error(ErrorCode::NotZeroDimensional,
                  "local dual space exceeds the Bezout bound " + std::to_string(bezout_bound));
    }
    if (bezout_bound == 0 && t > 0) {
      // a constant generator: the point could only be on the variety if it vanished identically
      throw Error(ErrorCode::NotZeroDimensional, "a generator vanishes identically");
    }
    prev = std::move(cur);
  }
  throw Error(ErrorCode::NotZeroDimensional,
              "dual space still growing at degree " + std::to_string(options.max_degree));
}

GaussBasis gauss_basis(const std::vector<DualFunctional>& basis, LexOrder order) {
  GaussBasis gb;
  gb.order = order;
  if (basis.empty()) return gb;
  const Field& field = basis.front().field();
  std::set<DualFunctional::Index> support;
  for (const auto& f : basis) {
    for (const auto& [k, c] : f.coeffs()) support.insert(k);
  }
  std::vector<DualFunctional::Index> cols(support.begin(), support.end());
  std::sort(cols.begin(), cols.end(), [&](const auto& a, const auto& b) { return lex_less(order, b, a); });
  Matrix m(field, basis.size(), cols.size());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = basis[r].coeff(cols[c].first, cols[c].second);
  }
  auto pivots = m.rref();
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    DualFunctional phi(field);
    for (std::size_t c = 0; c < cols.size(); ++c) phi.add(cols[c].first, cols[c].second, m(r, c));
    gb.elements.push_back(std::move(phi));
    gb.leading_monomials.push_back(cols[pivots[r]]);
  }
  std::reverse(gb.elements.begin(), gb.elements.end());
  std::reverse(gb.leading_monomials.begin(), gb.leading_monomials.end());
  return gb;
}

GaussBasis gauss_basis(const DualSpace& v, LexOrder order) {
  if (v.basis.empty()) throw Error(ErrorCode::MalformedBasis, "Gauss basis of the trivial space");
  return gauss_basis(v.basis, order);
}

int MoellerIndices::total() const {
  int s = 0;
  for (int a : alpha) s += a;
  return s;
}

MoellerIndices moeller_indices(const GaussBasis& gb) {
  // Work in (column, height) coordinates: for x < y the columns are the
  // first index, for y < x the second.
  const bool wrt_y = gb.order == LexOrder::XLessY;
  std::set<std::pair<int, int>> lm;
  for (const auto& [i, j] : gb.leading_monomials) lm.insert(wrt_y ? std::pair{i, j} : std::pair{j, i});
  if (lm.empty()) throw Error(ErrorCode::MalformedBasis, "empty basis");
  for (const auto& [c, h] : lm) {
    if ((c > 0 && !lm.count({c - 1, h})) || (h > 0 && !lm.count({c, h - 1}))) {
      throw Error(ErrorCode::MalformedBasis, "leading monomials do not form a staircase");
    }
  }
  MoellerIndices mi;
  while (lm.count({mi.beta, 0})) ++mi.beta;
  for (int c = 0; c < mi.beta; ++c) {
    int h = 0;
    while (lm.count({c, h})) ++h;
    mi.alpha.push_back(h);
  }
  if (mi.total() != static_cast<int>(lm.size())) {
    throw Error(ErrorCode::MalformedBasis, "leading monomials outside the staircase columns");
  }
  return mi;
}

std::vector<DualFunctional> leading_vectors(const GaussBasis& gb, const MoellerIndices& mi) {
  const bool wrt_y = gb.order == LexOrder::XLessY;
  std::vector<DualFunctional> out;
  for (int c = 0; c < mi.beta; ++c) {
    int top = mi.alpha[static_cast<std::size_t>(c)] - 1;
    DualFunctional::Index want = wrt_y ? DualFunctional::Index{c, top} : DualFunctional::Index{top, c};
    auto it = std::find(gb.leading_monomials.begin(), gb.leading_monomials.end(), want);
    if (it == gb.leading_monomials.end()) {
      throw Error(ErrorCode::ShapeViolation, "no basis element with the leading monomial of column " + std::to_string(c));
    }
    const DualFunctional& phi = gb.elements[static_cast<std::size_t>(it - gb.leading_monomials.begin())];
    for (const auto& [k, coeff] : phi.coeffs()) {
      if (k == want) continue;
      int height = wrt_y ? k.second : k.first;
      if (height >= top) {
        throw Error(ErrorCode::ShapeViolation, "leading vector " + std::to_string(c) + " has a tail at height " +
                                                   std::to_string(height));
      }
    }
    out.push_back(phi);
  }
  return out;
}

int beta_via_gcd(const BiPoly& f, const BiPoly& g, const Scalar& x0, const Scalar& y0) {
  if (!eval(f, x0, y0).is_zero() || !eval(g, x0, y0).is_zero()) {
    throw Error(ErrorCode::NotOnVariety, "(" + x0.to_string() + "," + y0.to_string() + ") is not a common zero");
  }
  UniPoly fp = eval_y(f, y0), gp = eval_y(g, y0);
  if (fp.is_zero() && gp.is_zero()) {
    throw Error(ErrorCode::SpecializationVanishes, "f and g vanish identically at y = " + y0.to_string());
  }
  return root_multiplicity(gcd(fp, gp), x0);
}

}  // namespace resmith
