// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BLOCKDM_ERRORS_HPP_
#define BLOCKDM_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace blockdm {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated an API contract (mixed fields, index out of range, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// An input that must satisfy a mathematical precondition does not, e.g. a
// matching that is not independent, or dependent rows passed for completion.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Some block A_ab has rank >= 2. `blocks` lists every offender as 0-based
// (row block, column block) pairs.
class RankConditionViolated : public Error {
 public:
  explicit RankConditionViolated(std::vector<std::pair<std::size_t, std::size_t>> blocks);

  const std::vector<std::pair<std::size_t, std::size_t>>& blocks() const { return blocks_; }

 private:
  std::vector<std::pair<std::size_t, std::size_t>> blocks_;
};

// The brute-force oracle was asked for an instance outside its enumeration
// bounds.
class OracleBoundsError : public UsageError {
 public:
  using UsageError::UsageError;
};

}  // namespace blockdm

#endif  // BLOCKDM_ERRORS_HPP_
