#pragma once

#include <random>

#include "resmith/error.hpp"
#include "resmith/parser.hpp"
#include "resmith/poly.hpp"
#include "resmith/poly_matrix.hpp"

namespace testing_support {

using namespace resmith;

inline BiPoly P(const char* s, const Field& f = Field::rationals()) { return parse_poly(s, f); }

inline Scalar small_scalar(const Field& f, std::mt19937_64& rng, int span = 5) {
  return f.from_int(static_cast<long long>(rng() % static_cast<std::uint64_t>(2 * span + 1)) - span);
}

inline BiPoly random_bipoly(const Field& f, std::mt19937_64& rng, int dx, int dy, int density = 3) {
  BiPoly p(f);
  for (int i = 0; i <= dx; ++i) {
    for (int j = 0; j <= dy; ++j) {
      if (static_cast<int>(rng() % static_cast<std::uint64_t>(density)) == 0) continue;
      p.add_term(i, j, small_scalar(f, rng));
    }
  }
  return p;
}

inline UniPoly random_unipoly(const Field& f, std::mt19937_64& rng, int deg) {
  std::vector<Scalar> c;
  for (int k = 0; k <= deg; ++k) c.push_back(small_scalar(f, rng, 4));
  return UniPoly(f, c);
}

inline PolyMatrix random_poly_matrix(const Field& f, std::mt19937_64& rng, std::size_t n, int max_deg) {
  PolyMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rng() % 4 == 0) continue;
      m(i, j) = random_unipoly(f, rng, static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg + 1)));
    }
  }
  return m;
}

template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

}  // namespace testing_support
