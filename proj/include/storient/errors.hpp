#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace storient {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (graph6, digraph text). byte_offset points at the
// first offending byte of the record.
struct FormatError : Error {
    std::size_t byte_offset;
    FormatError(const std::string& msg, std::size_t offset)
        : Error(msg + " (byte " + std::to_string(offset) + ")"), byte_offset(offset) {}
};

struct ArgumentError : Error {
    using Error::Error;
};

struct UnsupportedSizeError : Error {
    using Error::Error;
};

// A caller violated an operation's stated precondition.
struct PreconditionError : Error {
    using Error::Error;
};

// Search budget exhausted; carries the partial node/pruning counts.
struct ResourceError : Error {
    std::uint64_t nodes;
    std::uint64_t prunings;
    ResourceError(const std::string& msg, std::uint64_t nodes_, std::uint64_t prunings_)
        : Error(msg), nodes(nodes_), prunings(prunings_) {}
};

}  // namespace storient
