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
#include "relideal/splitfield.hpp"

#include <algorithm>
#include <map>

namespace relideal {

namespace {

// dense Gaussian solve over Q; returns false when singular
bool solve_system(std::vector<std::vector<Rat>>& A, std::vector<Rat>& b) {
  const std::size_t n = A.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(A[piv][col]) == 0) ++piv;
    if (piv == n) return false;
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    Rat inv = 1 / A[col][col];
    for (std::size_t j = col; j < n; ++j) A[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(A[r][col]) == 0) continue;
      Rat factor = A[r][col];
      for (std::size_t j = col; j < n; ++j) A[r][j] -= factor * A[col][j];
      b[r] -= factor * b[col];
    }
  }
  return true;
}

}  // namespace

SplittingField::SplittingField(TriangularBasis basis)
    : basis_(std::move(basis)) {
  basis_.validate();
  obasis_ = order_ideal(basis_.n, basis_.degrees);
}

std::vector<Rat> SplittingField::coords(const QPoly& reduced) const {
  std::map<Monomial, std::size_t, MonoLexGreater> index;
  for (std::size_t i = 0; i < obasis_.size(); ++i) index[obasis_[i]] = i;
  std::vector<Rat> c(obasis_.size(), Rat(0));
  for (const auto& [m, v] : reduced.terms()) {
    auto it = index.find(m);
    if (it == index.end())
      throw Error("polynomial is not supported on the order ideal");
    c[it->second] = v;
  }
  return c;
}

QPoly SplittingField::from_coords(const std::vector<Rat>& c) const {
  RatField F;
  QPoly p(basis_.n);
  for (std::size_t i = 0; i < c.size(); ++i)
    p.add_term(F, obasis_[i], c[i]);
  return p;
}

FieldElem::FieldElem(std::shared_ptr<const SplittingField> field,
                     const QPoly& rep)
    : field_(std::move(field)), rep_(normal_form(rep, field_->basis())) {}

namespace {

const SplittingField& common_field(const FieldElem& a, const FieldElem& b) {
  if (a.field_ptr().get() != b.field_ptr().get() &&
      !(a.field().basis().degrees == b.field().basis().degrees &&
        a.field().basis().polys == b.field().basis().polys))
    throw Error("field elements belong to different splitting fields");
  return a.field();
}

}  // namespace

FieldElem field_add(const FieldElem& a, const FieldElem& b) {
  common_field(a, b);
  RatField F;
  return {a.field_ptr(), mp_add(F, a.rep(), b.rep())};
}

FieldElem field_sub(const FieldElem& a, const FieldElem& b) {
  common_field(a, b);
  RatField F;
  return {a.field_ptr(), mp_sub(F, a.rep(), b.rep())};
}

FieldElem field_mul(const FieldElem& a, const FieldElem& b) {
  common_field(a, b);
  RatField F;
  return {a.field_ptr(), mp_mul(F, a.rep(), b.rep())};
}

FieldElem field_inv(const FieldElem& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero field element");
  const SplittingField& L = a.field();
  RatField F;
  const std::size_t dim = L.dimension();
  // columns: coordinates of NF(a * o_j)
  std::vector<std::vector<Rat>> A(dim, std::vector<Rat>(dim, Rat(0)));
  for (std::size_t j = 0; j < dim; ++j) {
    QPoly prod(L.basis().n);
    prod.add_term(F, L.monomial_basis()[j], Rat(1));
    prod = normal_form(mp_mul(F, a.rep(), prod), L.basis());
    std::vector<Rat> col = L.coords(prod);
    for (std::size_t i = 0; i < dim; ++i) A[i][j] = col[i];
  }
  std::vector<Rat> rhs = L.coords(mp_const(F, L.basis().n, Rat(1)));
  if (!solve_system(A, rhs))
    throw InvalidBasis(
        "multiplication matrix is singular; the basis does not present a "
        "field");
  return {a.field_ptr(), L.from_coords(rhs)};
}

UniPoly minimal_poly_of(const FieldElem& a) {
  const SplittingField& L = a.field();
  RatField F;
  const std::size_t dim = L.dimension();
  // Krylov sequence 1, a, a^2, ... reduced row by row; the first linear
  // dependence yields the monic minimal polynomial
  std::vector<std::vector<Rat>> rows;        // reduced vectors
  std::vector<std::size_t> pivots;
  std::vector<std::vector<Rat>> combos;      // coefficients over powers
  QPoly power = mp_const(F, L.basis().n, Rat(1));
  for (std::size_t k = 0;; ++k) {
    std::vector<Rat> v = L.coords(power);
    std::vector<Rat> combo(k + 1, Rat(0));
    combo[k] = 1;
    for (std::size_t t = 0; t < rows.size(); ++t) {
      if (sgn(v[pivots[t]]) == 0) continue;
      Rat alpha = v[pivots[t]] / rows[t][pivots[t]];
      for (std::size_t j = 0; j < dim; ++j) v[j] -= alpha * rows[t][j];
      for (std::size_t j = 0; j <= std::min(k, combos[t].size() - 1); ++j)
        combo[j] -= alpha * combos[t][j];
    }
    std::size_t piv = dim;
    for (std::size_t j = 0; j < dim; ++j)
      if (sgn(v[j]) != 0) {
        piv = j;
        break;
      }
    if (piv == dim) {
      // combo gives sum c_k a^k = 0 with c_k monic at the top
      Rat lead = combo[k];
      std::vector<Rat> c(combo.size());
      for (std::size_t j = 0; j < combo.size(); ++j) c[j] = combo[j] / lead;
      return UniPoly(std::move(c));
    }
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    combos.push_back(std::move(combo));
    if (k + 1 > dim) throw Error("minimal polynomial search exceeded dimension");
    power = normal_form(mp_mul(F, power, a.rep()), L.basis());
  }
}

}  // namespace relideal
