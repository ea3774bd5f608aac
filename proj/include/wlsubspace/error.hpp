// SPDX-License-Identifier: Apache-2.0
//
// wlsubspace: conventional and widely linear subspace channel estimation
// Copyright (C) 2026 The wlsubspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wls {

// Base of every exception thrown by the library. The C API maps each
// subclass onto one status code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain of a function (e.g. phase of zero).
class DomainError : public Error {
public:
    using Error::Error;
};

// Result not representable in double precision.
class OverflowError : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    NumericalError(const std::string& what, std::size_t iterations)
        : Error(what), iterations_(iterations) {}
    std::size_t iterations() const noexcept { return iterations_; }

private:
    std::size_t iterations_;
};

class ConfigError : public Error {
public:
    ConfigError(const std::string& what, std::string key, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what),
          key_(std::move(key)),
          line_(line) {}
    const std::string& key() const noexcept { return key_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string key_;
    std::size_t line_;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace wls
