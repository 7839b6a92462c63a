// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef CUBEDEG_ERROR_HPP
#define CUBEDEG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubedeg {

enum class ErrorCode {
    EmptyDomain,
    Syntax,
    VariableOutOfRange,
    ComponentCount,
    InvalidArgument,
    EmptyInterval,
    DegenerateInterval,
    NoFaces,
    CannotSplit,
    Undecidable,
    MalformedList,
    InsufficientInheritance,
    SampleHitZero,
    CannotResolve,
    ZeroAtEndpoint,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Syntax errors carry the byte offset of the offending token in the input text.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& what)
        : Error(ErrorCode::Syntax, what + " at offset " + std::to_string(offset)), offset_(offset)
    {
    }

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace cubedeg

#endif
