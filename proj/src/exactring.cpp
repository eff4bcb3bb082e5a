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
#include "relideal/exactring.hpp"

namespace relideal {

Modulus::Modulus(Int p, unsigned e) : p_(std::move(p)), e_(e) {
  if (p_ < 3 || mpz_even_p(p_.get_mpz_t()))
    throw Error("modulus requires an odd prime, got " + p_.get_str());
  if (e_ == 0) throw Error("modulus exponent must be positive");
  mpz_pow_ui(m_.get_mpz_t(), p_.get_mpz_t(), e_);
}

Int symmetric_lift(const Int& x, const Modulus& m) {
  Int r = m.reduce(x);
  // (p^e - 1)/2 is exact: p^e is odd
  if (r > (m.value() - 1) / 2) r -= m.value();
  return r;
}

Int mod_inverse(const Int& x, const Modulus& m) {
  Int r = m.reduce(x);
  Int out;
  if (mpz_invert(out.get_mpz_t(), r.get_mpz_t(), m.value().get_mpz_t()) == 0)
    throw NotAUnit("residue " + r.get_str() + " is not a unit mod " +
                   m.p().get_str() + "^" + std::to_string(m.e()));
  return out;
}

Int pow_int(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace relideal
