// Copyright 2026 The hqcdfs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HQCDFS_ERRORS_H
#define HQCDFS_ERRORS_H

#include <stdexcept>
#include <string>

namespace hqcdfs {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A requested operator dimension exceeds the configured cap.
class DimensionCapError : public Error {
   public:
    using Error::Error;
};

/// A qubit, block, or basis index is out of range.
class IndexError : public Error {
   public:
    using Error::Error;
};

/// Operand shapes are incompatible.
class ShapeError : public Error {
   public:
    using Error::Error;
};

/// An algebraic contract (hermiticity, unitarity, finiteness) is violated.
class ContractViolation : public Error {
   public:
    using Error::Error;
};

/// The chained projector overlap matrix became rank deficient.
class SingularChainError : public Error {
   public:
    using Error::Error;
};

/// Invalid configuration: couplings, recipes, bases, ensembles.
class ConfigError : public Error {
   public:
    using Error::Error;
};

/// Cyclicity or parallel-transport preconditions failed before a holonomy reconstruction.
class PreconditionError : public Error {
   public:
    using Error::Error;
};

}  // namespace hqcdfs

#endif  // HQCDFS_ERRORS_H
