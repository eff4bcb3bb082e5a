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
#ifndef RELIDEAL_PERMGRP_HPP
#define RELIDEAL_PERMGRP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "relideal/errors.hpp"

namespace relideal {

// Permutation of {0..n-1} as an image list; the paper-facing convention is
// 1-based, converted at the text boundary.
class Perm {
 public:
  Perm() = default;
  static Perm identity(int n);
  explicit Perm(std::vector<int> images);

  // disjoint-cycle notation with 1-based points, e.g. "(1 2 3 4 5)(6 7)".
  // "()" or "" is the identity.
  static Perm from_cycles(int n, const std::string& text);
  // 1-based image list
  static Perm from_images_1based(const std::vector<int>& images);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  Perm compose(const Perm& o) const;  // (this o other)(i) = this(other(i))
  Perm inverse() const;
  bool is_identity() const;

  std::string cycle_string() const;  // 1-based disjoint cycles

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

class PermGroup {
 public:
  // closure of the generators; throws GroupTooLarge past the cap
  static PermGroup enumerate(int n, std::vector<Perm> generators,
                             std::size_t cap = 1000000);

  int n() const { return n_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elems_; }  // sorted
  std::size_t order() const { return elems_.size(); }
  bool contains(const Perm& p) const;

 private:
  int n_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
};

// Pointwise stabilizer chain G = G_0 >= G_1 >= ... >= G_n = {id} with
// G_i fixing positions 0..i-1, the index sequence d_i = [G_{i-1} : G_i],
// and lex-least coset representatives for each G / G_i.
class StabChain {
 public:
  explicit StabChain(const PermGroup& g);

  const PermGroup& group() const { return *g_; }
  int n() const { return g_->n(); }
  const std::vector<int>& indices() const { return d_; }  // d_1..d_n

  // elements of G_k (fixing positions 0..k-1); level 0 is all of G
  const std::vector<Perm>& level(int k) const { return levels_[k]; }
  // lex-least representatives of G / G_{k+1}, sorted by image tuple
  const std::vector<Perm>& reps(int k) const { return reps_[k]; }
  // orbit of position k under G_k, sorted
  const std::vector<int>& level_orbit(int k) const { return orbit_[k]; }

  // index form of B(rho, k+1): positions rho(m), m in the G_k-orbit of k,
  // with rho(k) removed; size d_{k+1} - 1
  std::vector<int> b_index_set(const Perm& rho, int k) const;

 private:
  const PermGroup* g_;
  std::vector<std::vector<Perm>> levels_;
  std::vector<std::vector<Perm>> reps_;
  std::vector<std::vector<int>> orbit_;
  std::vector<int> d_;
};

// values of B(rho, k+1) over a coefficient tuple (usually roots)
template <class Elem>
std::vector<Elem> b_set(const Perm& rho, int k, const StabChain& chain,
                        const std::vector<Elem>& roots) {
  std::vector<Elem> out;
  for (int idx : chain.b_index_set(rho, k)) out.push_back(roots[idx]);
  return out;
}

}  // namespace relideal

#endif
