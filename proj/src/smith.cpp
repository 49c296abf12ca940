#include "resmith/smith.hpp"

#include <algorithm>
#include <functional>

#include "resmith/error.hpp"

namespace resmith {

PolyMatrix SmithForm::diagonal(std::size_t rows, std::size_t cols) const {
  const Field field = invariant_factors.empty() ? Field::rationals() : invariant_factors.front().field();
  PolyMatrix d(field, rows, cols);
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) d(i, i) = invariant_factors[i];
  return d;
}

namespace {

class Reducer {
 public:
  Reducer(const PolyMatrix& m, bool track)
      : a_(m), track_(track), r_(m.rows()), c_(m.cols()) {
    if (track_) {
      u_ = PolyMatrix::identity(m.field(), r_);
      v_ = PolyMatrix::identity(m.field(), c_);
    }
  }

  SmithForm run() {
    const std::size_t n = std::min(r_, c_);
    std::size_t t = 0;
    for (; t < n; ++t) {
      if (!reduce_at(t)) break;
    }
    SmithForm sf;
    for (std::size_t i = 0; i < n; ++i) sf.invariant_factors.push_back(i < t ? a_(i, i) : UniPoly(a_.field()));
    if (track_) {
      sf.U = std::move(u_);
      sf.V = std::move(v_);
    }
    return sf;
  }

 private:
  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < c_; ++j) std::swap(a_(i, j), a_(k, j));
    if (track_) {
      for (std::size_t j = 0; j < r_; ++j) std::swap((*u_)(i, j), (*u_)(k, j));
    }
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < r_; ++i) std::swap(a_(i, j), a_(i, k));
    if (track_) {
      for (std::size_t i = 0; i < c_; ++i) std::swap((*v_)(i, j), (*v_)(i, k));
    }
  }
  // row_i -= q * row_k
  void row_axpy(std::size_t i, const UniPoly& q, std::size_t k) {
    for (std::size_t j = 0; j < c_; ++j) {
      if (!a_(k, j).is_zero()) a_(i, j) -= q * a_(k, j);
    }
    if (track_) {
      for (std::size_t j = 0; j < r_; ++j) {
        if (!(*u_)(k, j).is_zero()) (*u_)(i, j) -= q * (*u_)(k, j);
      }
    }
  }
  // col_j -= q * col_k
  void col_axpy(std::size_t j, const UniPoly& q, std::size_t k) {
    for (std::size_t i = 0; i < r_; ++i) {
      if (!a_(i, k).is_zero()) a_(i, j) -= a_(i, k) * q;
    }
    if (track_) {
      for (std::size_t i = 0; i < c_; ++i) {
        if (!(*v_)(i, k).is_zero()) (*v_)(i, j) -= (*v_)(i, k) * q;
      }
    }
  }
  void scale_row(std::size_t i, const Scalar& s) {
    for (std::size_t j = 0; j < c_; ++j) a_(i, j) *= s;
    if (track_) {
      for (std::size_t j = 0; j < r_; ++j) (*u_)(i, j) *= s;
    }
  }

  // Returns false when the trailing block is zero.
  bool reduce_at(std::size_t t) {
    while (true) {
      std::size_t pi = r_, pj = c_;
      for (std::size_t i = t; i < r_; ++i) {
        for (std::size_t j = t; j < c_; ++j) {
          if (a_(i, j).is_zero()) continue;
          if (pi == r_ || a_(i, j).degree() < a_(pi, pj).degree()) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == r_) return false;
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r_; ++i) {
        if (a_(i, t).is_zero()) continue;
        auto [q, rem] = a_(i, t).divmod(a_(t, t));
        row_axpy(i, q, t);
        if (!rem.is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < c_; ++j) {
        if (a_(t, j).is_zero()) continue;
        auto [q, rem] = a_(t, j).divmod(a_(t, t));
        col_axpy(j, q, t);
        if (!rem.is_zero()) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < r_ && divides; ++i) {
        for (std::size_t j = t + 1; j < c_; ++j) {
          if (!a_(i, j).is_zero() && !a_(i, j).divmod(a_(t, t)).second.is_zero()) {
            row_axpy(t, -UniPoly::constant(a_.field().one()), i);
            divides = false;
            break;
          }
        }
      }
      if (!divides) continue;
      scale_row(t, a_(t, t).lead().inv());
      return true;
    }
  }

  PolyMatrix a_;
  bool track_;
  std::size_t r_, c_;
  std::optional<PolyMatrix> u_, v_;
};

void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

SmithForm smith_form(const PolyMatrix& m, bool want_transforms) { return Reducer(m, want_transforms).run(); }

std::vector<UniPoly> determinantal_divisors(const PolyMatrix& m) {
  std::vector<UniPoly> out;
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= n; ++k) {
    UniPoly d(m.field());
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        UniPoly minor = m.submatrix(rows, cols).det();
        if (!minor.is_zero()) d = d.is_zero() ? minor.monic() : gcd(d, minor);
        return !d.is_one();
      });
      return !d.is_one();
    });
    if (d.is_zero()) break;
    out.push_back(d);
  }
  return out;
}

std::vector<UniPoly> invariant_factors_from_divisors(const std::vector<UniPoly>& d, std::size_t size) {
  std::vector<UniPoly> out;
  const Field field = d.empty() ? Field::rationals() : d.front().field();
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k == 0) {
      out.push_back(d[0]);
    } else {
      auto q = d[k].divide_exact(d[k - 1]);
      if (!q) throw Error(ErrorCode::InternalInconsistency, "determinantal divisors do not form a chain");
      out.push_back(*q);
    }
  }
  while (out.size() < size) out.push_back(UniPoly(field));
  return out;
}

int PartialMultiplicities::algebraic() const {
  int s = 0;
  for (int k : kappas) s += k;
  return s;
}

PartialMultiplicities partial_multiplicities(const SmithForm& sf, const Scalar& y0) {
  PartialMultiplicities pm{y0, {}};
  for (const auto& d : sf.invariant_factors) {
    if (d.is_zero()) continue;
    int v = root_multiplicity(d, y0);
    if (v > 0) pm.kappas.push_back(v);
  }
  std::sort(pm.kappas.begin(), pm.kappas.end(), std::greater<>());
  return pm;
}

namespace {

using Series = std::vector<Scalar>;

int series_valuation(const Series& s) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (!s[k].is_zero()) return static_cast<int>(k);
  }
  return static_cast<int>(s.size());
}

Series series_mul(const Series& a, const Series& b) {
  Series r(a.size(), a.front().field().zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Series series_inverse(const Series& u) {
  const std::size_t n = u.size();
  Series inv(n, u.front().field().zero());
  Scalar c0 = u[0].inv();
  inv[0] = c0;
  for (std::size_t k = 1; k < n; ++k) {
    Scalar acc = u.front().field().zero();
    for (std::size_t j = 1; j <= k; ++j) acc += u[j] * inv[k - j];
    inv[k] = -acc * c0;
  }
  return inv;
}

}  // namespace

std::vector<int> local_partial_multiplicities(const PolyMatrix& m, const Scalar& y0) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "local Smith form of a non-square matrix");
  UniPoly det = m.det();
  if (det.is_zero()) throw Error(ErrorCode::DimensionMismatch, "local Smith form of a singular matrix");
  const Field& field = m.field();
  const std::size_t prec = static_cast<std::size_t>(root_multiplicity(det, y0)) + 1;
  const std::size_t n = m.rows();
  std::vector<Series> a(n * n, Series(prec, field.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      UniPoly s = m(i, j).shifted(y0);
      for (std::size_t k = 0; k < prec && static_cast<int>(k) <= s.degree(); ++k) {
        a[i * n + j][k] = s.coeff(static_cast<int>(k));
      }
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> Series& { return a[i * n + j]; };
  std::vector<int> kappas;
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pi = n, pj = n;
    int best = static_cast<int>(prec);
    for (std::size_t i = t; i < n; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        int v = series_valuation(at(i, j));
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == n) throw Error(ErrorCode::InternalInconsistency, "local Smith form lost precision");
    for (std::size_t j = 0; j < n; ++j) std::swap(at(t, j), at(pi, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(at(i, t), at(i, pj));
    if (best > 0) kappas.push_back(best);
    // pivot = t^best * unit; eliminate the rest of column t and row t
    Series unit(at(t, t).begin() + best, at(t, t).end());
    unit.resize(prec, field.zero());
    Series uinv = series_inverse(unit);
    for (std::size_t i = t + 1; i < n; ++i) {
      Series q(at(i, t).begin() + best, at(i, t).end());
      q.resize(prec, field.zero());
      q = series_mul(q, uinv);  // entry / pivot
      for (std::size_t j = t; j < n; ++j) {
        Series prod = series_mul(q, at(t, j));
        for (std::size_t k = 0; k < prec; ++k) at(i, j)[k] -= prod[k];
      }
    }
    for (std::size_t j = t + 1; j < n; ++j) at(t, j).assign(prec, field.zero());
  }
  std::sort(kappas.begin(), kappas.end(), std::greater<>());
  return kappas;
}

}  // namespace resmith
