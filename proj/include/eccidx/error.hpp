/*
Copyright 2026 The eccidx Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eccidx {

enum class ErrorKind {
    InvalidArgument,
    InvalidEdge,
    Disconnected,
    NotATree,
    NotAdjacent,
    EmptyMovedSet,
    PreconditionFailed,
    MalformedEncoding,
    OutOfCap,
    Overflow,
    InternalMismatch,
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::InvalidEdge: return "InvalidEdge";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::NotATree: return "NotATree";
        case ErrorKind::NotAdjacent: return "NotAdjacent";
        case ErrorKind::EmptyMovedSet: return "EmptyMovedSet";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::MalformedEncoding: return "MalformedEncoding";
        case ErrorKind::OutOfCap: return "OutOfCap";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::InternalMismatch: return "InternalMismatch";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a kind so callers can branch
/// on it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Checked 64-bit arithmetic. All index values and bounds go through these.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer addition overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer subtraction overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer multiplication overflow");
    return r;
}

}  // namespace eccidx
