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
#include "relideal/permgrp.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace relideal {

Perm Perm::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  return Perm(std::move(img));
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= n() || seen[v])
      throw Error("image list is not a permutation");
    seen[v] = true;
  }
}

Perm Perm::from_images_1based(const std::vector<int>& images) {
  std::vector<int> img;
  img.reserve(images.size());
  for (int v : images) img.push_back(v - 1);
  return Perm(std::move(img));
}

Perm Perm::from_cycles(int n, const std::string& text) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    skip();
    while (i < text.size() && text[i] != ')') {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (i == start) throw ParseError("expected a point in cycle notation");
      int v = std::stoi(text.substr(start, i - start));
      if (v < 1 || v > n) throw ParseError("cycle point out of range 1..n");
      cyc.push_back(v - 1);
      skip();
    }
    if (i >= text.size()) throw ParseError("unterminated cycle");
    ++i;  // ')'
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      if (img[from] != from) throw ParseError("cycles are not disjoint");
      img[from] = to;
    }
    skip();
  }
  // the disjointness check above used img[from] == from as "unassigned",
  // which also rejects repeated points across cycles
  std::vector<bool> seen(n, false);
  for (int v : img) {
    if (seen[v]) throw ParseError("cycles are not disjoint");
    seen[v] = true;
  }
  return Perm(std::move(img));
}

Perm Perm::compose(const Perm& o) const {
  if (n() != o.n()) throw Error("permutation size mismatch");
  std::vector<int> img(n());
  for (int i = 0; i < n(); ++i) img[i] = img_[o.img_[i]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(n());
  for (int i = 0; i < n(); ++i) img[img_[i]] = i;
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::string Perm::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(n(), false);
  bool any = false;
  for (int i = 0; i < n(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    os << '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      os << (j + 1);
      first = false;
      j = img_[j];
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "()";
}

PermGroup PermGroup::enumerate(int n, std::vector<Perm> generators,
                               std::size_t cap) {
  for (const Perm& g : generators)
    if (g.n() != n) throw Error("generator degree mismatch");
  PermGroup G;
  G.n_ = n;
  G.gens_ = generators;
  std::set<Perm> elems;
  std::vector<Perm> frontier;
  elems.insert(Perm::identity(n));
  frontier.push_back(Perm::identity(n));
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& e : frontier) {
      for (const Perm& g : generators) {
        Perm h = g.compose(e);
        if (elems.insert(h).second) {
          if (elems.size() > cap)
            throw GroupTooLarge("group order exceeds cap " +
                                std::to_string(cap));
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  G.elems_.assign(elems.begin(), elems.end());
  return G;
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elems_.begin(), elems_.end(), p);
}

StabChain::StabChain(const PermGroup& g) : g_(&g) {
  int n = g.n();
  levels_.resize(n + 1);
  levels_[0] = g.elements();
  for (int k = 1; k <= n; ++k) {
    for (const Perm& s : levels_[k - 1])
      if (s(k - 1) == k - 1) levels_[k].push_back(s);
  }
  d_.resize(n);
  for (int k = 0; k < n; ++k) {
    if (levels_[k].size() % levels_[k + 1].size() != 0)
      throw Error("stabilizer chain index is not integral");
    d_[k] = static_cast<int>(levels_[k].size() / levels_[k + 1].size());
  }
  reps_.resize(n);
  for (int k = 0; k < n; ++k) {
    std::map<std::vector<int>, Perm> buckets;
    for (const Perm& s : g.elements()) {
      std::vector<int> key(s.images().begin(), s.images().begin() + k + 1);
      auto it = buckets.find(key);
      if (it == buckets.end())
        buckets.emplace(std::move(key), s);
      else if (s < it->second)
        it->second = s;
    }
    for (auto& [key, s] : buckets) reps_[k].push_back(s);
  }
  orbit_.resize(n);
  for (int k = 0; k < n; ++k) {
    std::set<int> orb;
    for (const Perm& s : levels_[k]) orb.insert(s(k));
    orbit_[k].assign(orb.begin(), orb.end());
  }
}

std::vector<int> StabChain::b_index_set(const Perm& rho, int k) const {
  std::vector<int> out;
  out.reserve(orbit_[k].size() - 1);
  for (int m : orbit_[k])
    if (rho(m) != rho(k)) out.push_back(rho(m));
  return out;
}

}  // namespace relideal
