#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The eulerq Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <stdexcept>
#include <string>

namespace eulerq {

/// Base of every error raised by the library.
class error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the requested function.
class domain_error : public error
{
public:
  using error::error;
};

/// A truncation criterion was not met within EvalConfig::max_terms.
class max_terms_exceeded : public error
{
public:
  using error::error;
};

/// The function has a pole at the requested point.
class pole_error : public domain_error
{
public:
  using domain_error::domain_error;
};

/// A nonterminating series was requested outside its disk of convergence.
class divergent_series : public domain_error
{
public:
  using domain_error::domain_error;
};

/// A lower parameter of a basic hypergeometric series produced a zero factor.
class zero_denominator : public domain_error
{
public:
  using domain_error::domain_error;
};

/// The value overflowed binary64.
class overflow_error : public domain_error
{
public:
  using domain_error::domain_error;
};

/// No identity with the given id exists in the registry.
class unknown_identity : public error
{
public:
  explicit unknown_identity(std::string const &id)
    : error("unknown identity: " + id)
  {}
};

}  // namespace eulerq
