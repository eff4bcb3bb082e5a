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
#ifndef RELIDEAL_ERRORS_HPP
#define RELIDEAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace relideal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// residue divisible by p where a unit was required (root collision / bad prime)
struct NotAUnit : Error {
  using Error::Error;
};

struct GroupTooLarge : Error {
  using Error::Error;
};

struct NoSplitPrimeFound : Error {
  using Error::Error;
};

// no root labeling makes the given group act as the Galois group
struct ActionMismatch : Error {
  using Error::Error;
};

// reconstruction or verification failed for the labeling in use
struct InconsistentLabeling : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct InvalidBasis : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

}  // namespace relideal

#endif
