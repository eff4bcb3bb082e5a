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
#ifndef RELIDEAL_RECONSTRUCT_HPP
#define RELIDEAL_RECONSTRUCT_HPP

#include <optional>
#include <string>
#include <vector>

#include "relideal/multipoly.hpp"
#include "relideal/orbit.hpp"
#include "relideal/padiclift.hpp"
#include "relideal/permgrp.hpp"

namespace relideal {

// A triangular basis over Q recovered from one modular image, together
// with the provenance needed to reproduce and verify it.
struct ReconstructedBasis {
  TriangularBasis basis;
  Int p;
  unsigned e = 0;
  std::vector<Int> delta;
  std::vector<Rat> lambda;
  std::vector<unsigned> e_i;
  std::vector<Int> labeling;               // labeled roots, residues mod p^e
  std::vector<Int> observed_denominators;  // lcm of coefficient denominators
};

// Interpolates each g_i over Z/p^e on the labeled orbit, clears with
// Delta_i, lifts symmetrically and divides back over Q. Throws
// InconsistentLabeling when a lifted coefficient violates the lambda_i
// bound (the labeling does not realize the Galois action).
ReconstructedBasis reconstruct_basis(const UniPoly& f, const PermGroup& G,
                                     const StabChain& chain,
                                     const RootSystem& rs,
                                     const std::vector<Int>& labeling,
                                     const BoundData& bd,
                                     ExecPolicy policy = ExecPolicy::serial);

// Finds a labeling of the lifted roots for which the group realizes the
// Galois action. Tries the supplied candidates first (tuples of mod-p
// residues); with none given, searches all n! labelings for n <= 8 with an
// early g_2 rejection test. Returns the reconstructed basis of the first
// (lex-least) labeling that reconstructs and verifies.
ReconstructedBasis align_action(
    const UniPoly& f, const PermGroup& G, const StabChain& chain,
    const RootSystem& rs, const BoundData& bd,
    const std::vector<std::vector<Int>>& candidates = {},
    ExecPolicy policy = ExecPolicy::serial);

struct VerifyReport {
  bool shape_ok = false;
  bool integral_ok = false;     // Delta_i * fi^ has integer coefficients
  bool bound_ok = false;        // those coefficients are <= lambda_i
  bool vanishing_ok = false;    // all fi^ vanish on the orbit at a second prime
  bool normal_form_ok = false;  // NF(fi^) = 0 under the basis itself
  Int second_prime;
  std::string detail;

  bool ok() const {
    return shape_ok && integral_ok && bound_ok && vanishing_ok &&
           normal_form_ok;
  }
};

// Full verification per the uniqueness theorem: shape, integrality after
// clearing, bound, vanishing at a fresh split prime, and NF annihilation.
VerifyReport verify_basis(const ReconstructedBasis& rb, const UniPoly& f,
                          const PermGroup& G, const StabChain& chain);

// When d_i = 1, f_i^ = T_i - P with P in Q[T_1..T_{i-1}]: the i-th root as
// a polynomial in the earlier ones. Returns nothing when d_i > 1.
std::optional<QPoly> express_root(const ReconstructedBasis& rb, int i_1based);

}  // namespace relideal

#endif
