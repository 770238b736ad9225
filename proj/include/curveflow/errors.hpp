#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace curveflow {

class DiffPoly;

/// Input to an inverse-derivative operation has no polynomial antiderivative.
/// Carries the Euler derivative of the offending element as a witness (zero
/// when the failure is a nonvanishing constant term).
class NotExactError : public std::runtime_error {
public:
    NotExactError(std::string where, std::string witness)
        : std::runtime_error("not exact in " + where + ": Euler witness " + witness),
          where_(std::move(where)),
          witness_(std::move(witness)) {}

    const std::string& where() const noexcept { return where_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string where_;
    std::string witness_;
};

/// Rejected text input; `offset` is a 1-based byte position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail)
        : std::runtime_error("parse error at byte " + std::to_string(offset) + ": " + detail),
          offset_(offset),
          expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

class DegenerateGridError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BlowupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GaugeDriftError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace curveflow
