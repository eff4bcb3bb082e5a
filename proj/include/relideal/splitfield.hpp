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
#ifndef RELIDEAL_SPLITFIELD_HPP
#define RELIDEAL_SPLITFIELD_HPP

#include <memory>
#include <vector>

#include "relideal/multipoly.hpp"
#include "relideal/padiclift.hpp"

namespace relideal {

// Arithmetic in L = Q[T1..Tn]/I through normal-form representatives on the
// order ideal of a triangular basis. Elements are immutable values sharing
// the field context.
class SplittingField {
 public:
  explicit SplittingField(TriangularBasis basis);

  const TriangularBasis& basis() const { return basis_; }
  const std::vector<Monomial>& monomial_basis() const { return obasis_; }
  std::size_t dimension() const { return obasis_.size(); }

  // coordinates of an order-ideal-supported polynomial
  std::vector<Rat> coords(const QPoly& reduced) const;
  QPoly from_coords(const std::vector<Rat>& c) const;

 private:
  TriangularBasis basis_;
  std::vector<Monomial> obasis_;  // descending lex
};

class FieldElem {
 public:
  FieldElem(std::shared_ptr<const SplittingField> field, const QPoly& rep);

  const QPoly& rep() const { return rep_; }
  const SplittingField& field() const { return *field_; }
  std::shared_ptr<const SplittingField> field_ptr() const { return field_; }
  bool is_zero() const { return rep_.is_zero(); }

 private:
  std::shared_ptr<const SplittingField> field_;
  QPoly rep_;  // normal form
};

FieldElem field_add(const FieldElem& a, const FieldElem& b);
FieldElem field_sub(const FieldElem& a, const FieldElem& b);
FieldElem field_mul(const FieldElem& a, const FieldElem& b);

// solves the multiplication-by-a linear system on the monomial basis;
// DivisionByZero for a = 0, InvalidBasis when the system is singular (the
// ideal is not maximal)
FieldElem field_inv(const FieldElem& a);

// monic least-degree univariate polynomial vanishing at a
UniPoly minimal_poly_of(const FieldElem& a);

}  // namespace relideal

#endif
