// Copyright 2026 The spacetime-swap Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace spacetime {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

/// Raised by the block Sylvester solver when a block that must vanish
/// (both eigenvalues zero) carries weight.
class InconsistentSystem : public Error {
 public:
  using Error::Error;
};

class NotDichotomic : public Error {
 public:
  using Error::Error;
};

/// A matrix that should be a density operator is not Hermitian, not unit
/// trace, or not positive semi-definite.
class InvalidState : public Error {
 public:
  using Error::Error;
};
using NotAState = InvalidState;

class InvalidChannel : public Error {
 public:
  using Error::Error;
};

class SynthesisFailure : public Error {
 public:
  using Error::Error;
};

class RankDeficient : public Error {
 public:
  using Error::Error;
};

class IncompleteTable : public Error {
 public:
  using Error::Error;
};

}  // namespace spacetime
