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
#ifndef RELIDEAL_MULTIPOLY_HPP
#define RELIDEAL_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "relideal/exactring.hpp"

namespace relideal {

// Exponent vector of fixed arity. Variables are T1..Tn with the
// lexicographic order T1 < ... < Tn, so comparison runs from Tn down.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int arity) : e_(arity, 0) {}
  Monomial(std::initializer_list<int> e) : e_(e) {}
  static Monomial unit(int arity, int var, int deg = 1) {
    Monomial m(arity);
    m.e_[var] = deg;
    return m;
  }

  int arity() const { return static_cast<int>(e_.size()); }
  int deg(int var) const { return e_[var]; }
  int& deg(int var) { return e_[var]; }
  int total_degree() const {
    int s = 0;
    for (int d : e_) s += d;
    return s;
  }
  bool is_one() const { return total_degree() == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial m(*this);
    for (int i = 0; i < arity(); ++i) m.e_[i] += o.e_[i];
    return m;
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < arity(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  Monomial quotient(const Monomial& o) const {  // *this / o
    Monomial m(*this);
    for (int i = 0; i < arity(); ++i) m.e_[i] -= o.e_[i];
    return m;
  }

  // lex with T1 < ... < Tn
  bool lex_less(const Monomial& o) const {
    for (int i = arity() - 1; i >= 0; --i)
      if (e_[i] != o.e_[i]) return e_[i] < o.e_[i];
    return false;
  }
  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

  const std::vector<int>& exponents() const { return e_; }

 private:
  std::vector<int> e_;
};

struct MonoLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return b.lex_less(a);
  }
};

// Sparse multivariate polynomial over a ring context; terms are kept in
// descending lex order, which is also the canonical printing order.
template <class Ring>
class MPoly {
 public:
  using Coef = typename Ring::Elem;
  using TermMap = std::map<Monomial, Coef, MonoLexGreater>;

  MPoly() : arity_(0) {}
  explicit MPoly(int arity) : arity_(arity) {}

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Ring& R, const Monomial& m, const Coef& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!R.is_zero(c)) terms_.emplace(m, c);
    } else {
      it->second = R.add(it->second, c);
      if (R.is_zero(it->second)) terms_.erase(it);
    }
  }

  const Monomial& leading_monomial() const {
    if (terms_.empty()) throw Error("leading monomial of zero polynomial");
    return terms_.begin()->first;
  }
  const Coef& leading_coefficient() const {
    if (terms_.empty()) throw Error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
  }

  int degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.deg(var));
    return d;
  }

  bool operator==(const MPoly& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }

 private:
  int arity_;
  TermMap terms_;
};

template <class Ring>
MPoly<Ring> mp_const(const Ring& R, int arity, const typename Ring::Elem& c) {
  MPoly<Ring> p(arity);
  p.add_term(R, Monomial(arity), c);
  return p;
}

template <class Ring>
MPoly<Ring> mp_add(const Ring& R, const MPoly<Ring>& a, const MPoly<Ring>& b) {
  if (a.arity() != b.arity()) throw Error("arity mismatch in add");
  MPoly<Ring> out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(R, m, c);
  return out;
}

template <class Ring>
MPoly<Ring> mp_sub(const Ring& R, const MPoly<Ring>& a, const MPoly<Ring>& b) {
  if (a.arity() != b.arity()) throw Error("arity mismatch in sub");
  MPoly<Ring> out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(R, m, R.neg(c));
  return out;
}

template <class Ring>
MPoly<Ring> mp_mul(const Ring& R, const MPoly<Ring>& a, const MPoly<Ring>& b) {
  if (a.arity() != b.arity()) throw Error("arity mismatch in mul");
  MPoly<Ring> out(a.arity());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      out.add_term(R, ma * mb, R.mul(ca, cb));
  return out;
}

template <class Ring>
MPoly<Ring> mp_scale(const Ring& R, const MPoly<Ring>& a,
                     const typename Ring::Elem& c) {
  MPoly<Ring> out(a.arity());
  if (R.is_zero(c)) return out;
  for (const auto& [m, v] : a.terms()) out.add_term(R, m, R.mul(v, c));
  return out;
}

template <class Ring>
typename Ring::Elem mp_eval(const Ring& R, const MPoly<Ring>& a,
                            const std::vector<typename Ring::Elem>& pt) {
  if (static_cast<int>(pt.size()) != a.arity())
    throw Error("arity mismatch in evaluate");
  auto total = R.zero();
  for (const auto& [m, c] : a.terms()) {
    auto t = c;
    for (int i = 0; i < a.arity(); ++i)
      for (int k = 0; k < m.deg(i); ++k) t = R.mul(t, pt[i]);
    total = R.add(total, t);
  }
  return total;
}

using QPoly = MPoly<RatField>;
using ZpePoly = MPoly<ModRing>;

// ---- text format -------------------------------------------------------
//
// The canonical form is e.g. `T2^4 + 2/13*T1^4*T2^3 - 14/13*T2^3`; the
// parser also accepts the same with the `*` between coefficient and
// monomial omitted, and `Z` as an alias for `T1` in univariate input.

std::string to_string(const QPoly& p);
QPoly parse_qpoly(const std::string& text, int arity);

ZpePoly reduce_mod(const ModRing& R, const QPoly& p);

// ---- triangular bases --------------------------------------------------

// [f1^, ..., fn^] with fi^ in Q[T1..Ti], monic of degree di in Ti and of
// degree < dj in each earlier Tj. Such a list is a reduced lex Groebner
// basis of the ideal it generates.
struct TriangularBasis {
  int n = 0;
  std::vector<int> degrees;   // d1..dn
  std::vector<QPoly> polys;   // f1^..fn^

  // checks the staircase shape invariants; throws InvalidBasis
  void validate() const;
};

// monomials below the staircase: {T^b : b_i < d_i}, descending lex
std::vector<Monomial> order_ideal(int n, const std::vector<int>& degrees);

bool supported_on_order_ideal(const QPoly& p, const std::vector<int>& degrees);

// remainder of P on division by the triangular set; unique, supported on
// the order ideal, and Q-linear in P
QPoly normal_form(const QPoly& P, const TriangularBasis& B);

}  // namespace relideal

#endif
