// Copyright 2026 The hetnet Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace hetnet {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid network description or configuration file.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An iterative numerical routine did not converge.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace hetnet
