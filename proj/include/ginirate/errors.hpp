// Copyright 2026 The ginirate Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GINIRATE_ERRORS_HPP
#define GINIRATE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ginirate {

// Input outside an operation's domain (bad n, bad radius, bad grid...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// gamma_n <= 0: n is below the validity threshold of the edge scaling.
class GammaNonpositive : public DomainError {
 public:
  explicit GammaNonpositive(const std::string& what) : DomainError(what) {}
};

class EmptySample : public DomainError {
 public:
  explicit EmptySample(const std::string& what) : DomainError(what) {}
};

class EmptyAnnulus : public DomainError {
 public:
  explicit EmptyAnnulus(const std::string& what) : DomainError(what) {}
};

// Failures of a numerical procedure on otherwise valid input.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

class NonConvergence : public NumericError {
 public:
  explicit NonConvergence(const std::string& what) : NumericError(what) {}
};

class BracketTooNarrow : public NumericError {
 public:
  explicit BracketTooNarrow(const std::string& what) : NumericError(what) {}
};

class EigenFailure : public NumericError {
 public:
  explicit EigenFailure(const std::string& what) : NumericError(what) {}
};

}  // namespace ginirate

#endif  // GINIRATE_ERRORS_HPP
