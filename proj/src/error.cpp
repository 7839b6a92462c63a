// Copyright 2026 The cubedeg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cubedeg/error.hpp"

namespace cubedeg {

const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::EmptyDomain: return "EmptyDomain";
    case ErrorCode::Syntax: return "Syntax";
    case ErrorCode::VariableOutOfRange: return "VariableOutOfRange";
    case ErrorCode::ComponentCount: return "ComponentCount";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyInterval: return "EmptyInterval";
    case ErrorCode::DegenerateInterval: return "DegenerateInterval";
    case ErrorCode::NoFaces: return "NoFaces";
    case ErrorCode::CannotSplit: return "CannotSplit";
    case ErrorCode::Undecidable: return "Undecidable";
    case ErrorCode::MalformedList: return "MalformedList";
    case ErrorCode::InsufficientInheritance: return "InsufficientInheritance";
    case ErrorCode::SampleHitZero: return "SampleHitZero";
    case ErrorCode::CannotResolve: return "CannotResolve";
    case ErrorCode::ZeroAtEndpoint: return "ZeroAtEndpoint";
    }
    return "Unknown";
}

} // namespace cubedeg
