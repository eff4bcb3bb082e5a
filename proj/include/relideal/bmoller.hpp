/*
 * Copyright 2026 The relideal Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef RELIDEAL_BMOLLER_HPP
#define RELIDEAL_BMOLLER_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "relideal/multipoly.hpp"

namespace relideal {

// Buchberger-Moeller over an exact field: reduced lex Groebner basis of the
// vanishing ideal of a finite point set, the order ideal, its corners and
// the separators. Runs over Q or F_p (never Z/p^e with e > 1).

template <class Ring>
struct PointSet {
  int n = 0;
  std::vector<std::vector<typename Ring::Elem>> points;

  static PointSet make(const Ring& R, int n,
                       std::vector<std::vector<typename Ring::Elem>> pts) {
    PointSet X;
    X.n = n;
    X.points = std::move(pts);
    for (const auto& p : X.points)
      if (static_cast<int>(p.size()) != n)
        throw Error("point arity mismatch");
    for (std::size_t i = 0; i < X.points.size(); ++i)
      for (std::size_t j = i + 1; j < X.points.size(); ++j) {
        bool same = true;
        for (int k = 0; k < n && same; ++k)
          same = R.eq(X.points[i][k], X.points[j][k]);
        if (same) throw Error("duplicate points in point set");
      }
    return X;
  }
};

template <class Ring>
struct BMResult {
  std::vector<MPoly<Ring>> groebner;        // reduced, by ascending lex lead
  std::vector<Monomial> order_ideal;        // ascending lex
  std::vector<Monomial> corners;            // C(X), ascending lex
  std::vector<MPoly<Ring>> separators;      // one per point, same order
};

namespace bm_detail {

struct MonoLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.lex_less(b);
  }
};

}  // namespace bm_detail

template <class Ring>
BMResult<Ring> buchberger_moeller(const Ring& R, const PointSet<Ring>& X,
                                  std::size_t cap = 10000) {
  using Elem = typename Ring::Elem;
  if (X.points.empty()) throw Error("empty point set");
  if (X.points.size() > cap) throw Error("point set exceeds cap");
  const int n = X.n;
  const std::size_t N = X.points.size();

  BMResult<Ring> out;
  // reduced evaluation rows with their pivot column and the polynomial
  // (an O-monomial plus lex-smaller O-monomial tail) they evaluate
  std::vector<std::vector<Elem>> rows;
  std::vector<std::size_t> pivot;
  std::vector<MPoly<Ring>> row_poly;

  std::set<Monomial, bm_detail::MonoLexLess> queue;
  queue.insert(Monomial(n));
  while (!queue.empty()) {
    Monomial m = *queue.begin();
    queue.erase(queue.begin());
    bool corner_multiple = false;
    for (const Monomial& c : out.corners)
      if (c.divides(m)) {
        corner_multiple = true;
        break;
      }
    if (corner_multiple) continue;

    std::vector<Elem> v;
    v.reserve(N);
    for (const auto& pt : X.points) {
      Elem t = R.one();
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < m.deg(i); ++k) t = R.mul(t, pt[i]);
      v.push_back(t);
    }
    MPoly<Ring> q(n);
    q.add_term(R, m, R.one());
    for (std::size_t t = 0; t < rows.size(); ++t) {
      if (R.is_zero(v[pivot[t]])) continue;
      Elem alpha = R.mul(v[pivot[t]], R.inv(rows[t][pivot[t]]));
      for (std::size_t j = 0; j < N; ++j)
        v[j] = R.sub(v[j], R.mul(alpha, rows[t][j]));
      q = mp_sub(R, q, mp_scale(R, row_poly[t], alpha));
    }
    std::size_t piv = N;
    for (std::size_t j = 0; j < N; ++j)
      if (!R.is_zero(v[j])) {
        piv = j;
        break;
      }
    if (piv == N) {
      out.groebner.push_back(std::move(q));
      out.corners.push_back(m);
    } else {
      rows.push_back(std::move(v));
      pivot.push_back(piv);
      row_poly.push_back(std::move(q));
      out.order_ideal.push_back(m);
      for (int i = 0; i < n; ++i) queue.insert(m * Monomial::unit(n, i));
    }
  }
  if (out.order_ideal.size() != N)
    throw Error("order ideal size does not match point count");

  // separators: solve sum_t beta_t * rows[t] = e_j in pivot order
  for (std::size_t j = 0; j < N; ++j) {
    std::vector<Elem> target(N, R.zero());
    target[j] = R.one();
    MPoly<Ring> h(n);
    for (std::size_t t = 0; t < rows.size(); ++t) {
      if (R.is_zero(target[pivot[t]])) continue;
      Elem beta = R.mul(target[pivot[t]], R.inv(rows[t][pivot[t]]));
      for (std::size_t s = 0; s < N; ++s)
        target[s] = R.sub(target[s], R.mul(beta, rows[t][s]));
      h = mp_add(R, h, mp_scale(R, row_poly[t], beta));
    }
    for (std::size_t s = 0; s < N; ++s)
      if (!R.is_zero(target[s]))
        throw Error("separator solve failed; points not in general position?");
    out.separators.push_back(std::move(h));
  }
  return out;
}

// the unique interpolant supported on the order ideal of X
template <class Ring>
MPoly<Ring> interpolate_values(const Ring& R, const BMResult<Ring>& bm,
                               const std::vector<typename Ring::Elem>& values) {
  if (values.size() != bm.separators.size())
    throw Error("value count does not match point count");
  MPoly<Ring> out(bm.separators.empty() ? 0 : bm.separators[0].arity());
  for (std::size_t j = 0; j < values.size(); ++j)
    out = mp_add(R, out, mp_scale(R, bm.separators[j], values[j]));
  return out;
}

template <class Ring>
MPoly<Ring> interpolate_values(const Ring& R, const PointSet<Ring>& X,
                               const std::vector<typename Ring::Elem>& values) {
  return interpolate_values(R, buchberger_moeller(R, X), values);
}

}  // namespace relideal

#endif
