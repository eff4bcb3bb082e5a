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
#ifndef RELIDEAL_IO_HPP
#define RELIDEAL_IO_HPP

#include <string>
#include <vector>

#include "relideal/bmoller.hpp"
#include "relideal/permgrp.hpp"
#include "relideal/reconstruct.hpp"

namespace relideal {

// `{"n": 5, "generators": ["(1 2 3 4 5)"]}`; generators may also be
// 1-based image lists
PermGroup parse_group_json(const std::string& text);
std::string group_to_json(const PermGroup& g);

// self-contained basis document ("format": 1) holding f, the group, the
// labeling and the reconstructed basis with its provenance
std::string basis_to_json(const UniPoly& f, const PermGroup& g,
                          const ReconstructedBasis& rb);
struct BasisDocument {
  UniPoly f;
  std::vector<std::string> group_generators;
  int n = 0;
  Int p;
  unsigned e = 0;
  std::vector<int> degree_profile;
  std::vector<QPoly> polys;
  std::vector<Int> labeling_mod_p;
};
BasisDocument parse_basis_json(const std::string& text);

// human-readable basis with a provenance block
std::string basis_to_text(const UniPoly& f, const PermGroup& g,
                          const ReconstructedBasis& rb);

// `{"n": 2, "field": "Q" | {"p": "5"}, "points": [["0","0"], ...]}`
struct PointSetDocument {
  int n = 0;
  bool rational = false;
  Int p;  // when not rational
  std::vector<std::vector<std::string>> points;
};
PointSetDocument parse_pointset_json(const std::string& text);

std::string read_text_or_file(const std::string& value);

}  // namespace relideal

#endif
