#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace blockseq {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid parameter combination (bad residue, k < t+2 where t+2 is required, s < 3, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

// Malformed block data: wrong size, out-of-range vertex id, repeated vertex.
class StructuralError : public Error {
public:
    using Error::Error;
};

// Bad runtime input to an operation (out-of-range vertex set, duplicate positions, ...).
class InputError : public Error {
public:
    using Error::Error;
};

// A documented precondition was violated by the caller, or an internal
// invariant check failed.
class ContractError : public Error {
public:
    using Error::Error;
};

// File parsing or writing problem.
class IoError : public Error {
public:
    using Error::Error;
};

// Resampling did not settle within the allowed budget; carries the count so
// callers can report how far the run got.
class NonconvergenceError : public Error {
public:
    NonconvergenceError(const std::string& msg, std::uint64_t resamples)
        : Error(msg), resample_count(resamples) {}
    std::uint64_t resample_count;
};

// Repair could not find a movable vertex: every vertex sits in a buffer or
// would complete a block next to the deficient class.
class RepairStuckError : public Error {
public:
    RepairStuckError(const std::string& msg, std::size_t buffered, std::size_t blocked,
                     std::uint32_t n)
        : Error(msg), buffered_vertices(buffered), blocked_vertices(blocked), vertex_count(n) {}
    std::size_t buffered_vertices;  // vertices excluded because they lie in some buffer
    std::size_t blocked_vertices;   // vertices excluded because moving them completes a block
    std::uint32_t vertex_count;
};

}  // namespace blockseq
