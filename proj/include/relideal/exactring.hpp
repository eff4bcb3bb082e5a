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
#ifndef RELIDEAL_EXACTRING_HPP
#define RELIDEAL_EXACTRING_HPP

#include <gmpxx.h>

#include <string>

#include "relideal/errors.hpp"

namespace relideal {

// Arbitrary-precision integers and rationals. Rationals are kept reduced
// with positive denominator by gmp itself.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// p^e for an odd prime p. Everything modular in this project lives in one
// of these; elements are plain Int residues in [0, p^e).
class Modulus {
 public:
  Modulus(Int p, unsigned e);

  const Int& p() const { return p_; }
  unsigned e() const { return e_; }
  const Int& value() const { return m_; }  // p^e

  bool operator==(const Modulus& o) const { return p_ == o.p_ && e_ == o.e_; }

  Int reduce(const Int& x) const {
    Int r = x % m_;
    if (r < 0) r += m_;
    return r;
  }

 private:
  Int p_;
  unsigned e_;
  Int m_;
};

// unique z with |z| <= (p^e - 1)/2 and z = x mod p^e
Int symmetric_lift(const Int& x, const Modulus& m);

// inverse mod p^e; throws NotAUnit when gcd(x, p) > 1
Int mod_inverse(const Int& x, const Modulus& m);

// Ring contexts. Generic polynomial code is parameterised over one of
// these; elements are raw values, the context owns the arithmetic.

struct RatField {
  using Elem = Rat;
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw DivisionByZero("division by zero in Q");
    return 1 / a;
  }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
};

// Z/p^e (a field when e = 1)
struct ModRing {
  explicit ModRing(const Modulus& m) : mod(&m) {}
  const Modulus* mod;

  using Elem = Int;
  Elem zero() const { return Int(0); }
  Elem one() const { return Int(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const {
    Int r = a + b;
    if (r >= mod->value()) r -= mod->value();
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Int r = a - b;
    if (r < 0) r += mod->value();
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const { return a * b % mod->value(); }
  Elem neg(const Elem& a) const { return sgn(a) == 0 ? a : Int(mod->value() - a); }
  Elem inv(const Elem& a) const { return mod_inverse(a, *mod); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem from_int(const Int& x) const { return mod->reduce(x); }
  // reduce a rational; denominator must be a unit mod p
  Elem from_rat(const Rat& q) const {
    return mul(mod->reduce(q.get_num()), inv(mod->reduce(q.get_den())));
  }
};

// spec-level value type bundling residue and modulus
class ModRingElem {
 public:
  ModRingElem(const Modulus& m, const Int& v) : mod_(&m), v_(m.reduce(v)) {}

  const Int& residue() const { return v_; }
  const Modulus& modulus() const { return *mod_; }

  ModRingElem inverse() const { return {*mod_, mod_inverse(v_, *mod_)}; }
  Int lift_symmetric() const { return symmetric_lift(v_, *mod_); }

  friend ModRingElem operator+(const ModRingElem& a, const ModRingElem& b) {
    return {*a.mod_, a.v_ + b.v_};
  }
  friend ModRingElem operator-(const ModRingElem& a, const ModRingElem& b) {
    return {*a.mod_, a.v_ - b.v_};
  }
  friend ModRingElem operator*(const ModRingElem& a, const ModRingElem& b) {
    return {*a.mod_, a.v_ * b.v_};
  }
  friend bool operator==(const ModRingElem& a, const ModRingElem& b) {
    return *a.mod_ == *b.mod_ && a.v_ == b.v_;
  }

 private:
  const Modulus* mod_;
  Int v_;
};

Int pow_int(const Int& base, unsigned long e);

}  // namespace relideal

#endif
