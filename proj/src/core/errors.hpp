/*
 * (C) Copyright 2026 rcbethe developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace rcbethe {

// Mirrors the status codes of the C API (see rcbethe.h).
enum class ErrorCode {
    InvalidArgument = 1,
    OutOfScope = 2,
    IncompleteCensus = 3,
    NoConvergence = 4,
    DivergentEnergy = 5,
    ZeroVector = 6,
    PoleInC = 7,
    NonDistinct = 8,
    Internal = 99,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& w) : Error(ErrorCode::InvalidArgument, w) {}
};

struct OutOfScope : Error {
    explicit OutOfScope(const std::string& w) : Error(ErrorCode::OutOfScope, w) {}
};

}  // namespace rcbethe
