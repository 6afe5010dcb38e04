// Copyright 2026 The chordspace Authors
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

namespace chordspace {

/// Base class for every domain error raised by the library. The CLI maps
/// these to exit code 2 (precondition violation).
class ChordspaceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Both endpoints of a chord coincide after canonicalization.
class DegenerateChord : public ChordspaceError {
 public:
  using ChordspaceError::ChordspaceError;
};

class InvalidParameter : public ChordspaceError {
 public:
  using ChordspaceError::ChordspaceError;
};

class PreconditionViolated : public ChordspaceError {
 public:
  using ChordspaceError::ChordspaceError;
};

/// The geometry is valid but outside the region where a closed form is known.
class UnsupportedGeometry : public ChordspaceError {
 public:
  using ChordspaceError::ChordspaceError;
};

/// The endpoint neighbourhoods of a ball overlap, so it is not a tube.
class BallTooLarge : public ChordspaceError {
 public:
  using ChordspaceError::ChordspaceError;
};

/// A log-log fit has no spread in its dependent variable.
class DegenerateFit : public ChordspaceError {
 public:
  using ChordspaceError::ChordspaceError;
};

}  // namespace chordspace
