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
#ifndef RELIDEAL_PADICLIFT_HPP
#define RELIDEAL_PADICLIFT_HPP

#include <string>
#include <vector>

#include "relideal/exactring.hpp"

namespace relideal {

struct BadPrime : Error {
  using Error::Error;
};

// Monic univariate polynomial over Q; coefficient i belongs to Z^i.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);  // low -> high

  static UniPoly parse(const std::string& text);  // accepts Z or T1

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(int i) const { return c_[i]; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool monic() const { return c_.back() == 1; }

  Rat eval(const Rat& x) const;
  Int eval_mod(const Int& x, const Int& m) const;  // needs integral scaled form

  UniPoly derivative() const;
  // least c > 0 with c*f integral; the paper's gamma
  Int content_denominator() const;
  // c*f as integer coefficients, low -> high
  std::vector<Int> scaled_integer_coeffs() const;

  std::string to_string() const;

 private:
  std::vector<Rat> c_;
};

// d(f) = prod_{r<s} (x_r - x_s)^2, computed exactly via Res(f, f')
Rat discriminant(const UniPoly& f);

// roots of c*f in F_p, ascending; empty result is meaningful
std::vector<Int> roots_mod_p(const UniPoly& f, const Int& p);

// true when c*f has deg(f) distinct roots mod p
bool splits_completely(const UniPoly& f, const Int& p);

// smallest odd prime >= start that is coprime to the scaling constant and
// the discriminant and splits f completely; throws NoSplitPrimeFound
Int find_split_prime(const UniPoly& f, const Int& start,
                     const Int& cap = Int(1000000));

// f, p, e and the n labeled roots of f in Z/p^e (order: ascending mod-p value
// after hensel_lift; reconstruction relabels them separately)
struct RootSystem {
  UniPoly f;
  Modulus mod;              // p^e
  std::vector<Int> roots;   // residues mod p^e, pairwise distinct mod p

  const Int& p() const { return mod.p(); }
  unsigned e() const { return mod.e(); }
};

// lifts the F_p roots to Z/p^e by quadratic Newton steps
RootSystem hensel_lift(const UniPoly& f, const Int& p, unsigned e);

// Bound data of the reconstruction theorems: gamma, the discriminant, the
// Cauchy-style root bounds M and D, and per-index Delta_i, lambda_i, e_i.
struct BoundData {
  Int gamma;
  Rat disc;
  Rat M, D;
  std::vector<Int> delta;     // Delta_1..Delta_n (signed, per the formula)
  std::vector<Rat> lambda;    // lambda_1..lambda_n
  std::vector<unsigned> e_i;  // per-index precision exponents
  unsigned e = 0;             // max over e_i
};

// Delta_i = gamma^(n(n-1)*ceil(i/2)+d_i) * d(f)^ceil(i/2), an integer
Int clearing_constant(int n, int i_1based, const Int& gamma, const Rat& disc,
                      const std::vector<int>& degrees);

// lambda_i = max(|Delta_i|, max over exponent tuples of the coefficient
// bound); requires M, D >= 1
Rat coefficient_bound(int n, int i_1based, const Int& gamma, const Rat& M,
                      const Rat& D, const std::vector<int>& degrees,
                      const Int& delta_i);

// smallest e with p^e > 2*lambda - 1, by exact integer comparison
unsigned precision_exponent(const Rat& lambda, const Int& p);

BoundData compute_bounds(const UniPoly& f, const std::vector<int>& degrees,
                         const Int& p);

}  // namespace relideal

#endif
