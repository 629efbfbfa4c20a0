// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spmv {

// Input longer than the available slot count.
class OverLengthError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Decryption attempted on a ciphertext whose noise budget is exhausted.
class NoiseExhaustedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two entries share the same (row, col) position.
class DuplicateEntryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An aligned column exceeds the chunk slot budget; partition the rows first.
class ColumnTooTallError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IndexOutOfRangeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonSquareError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input file; carries the 1-based line number of the offence.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class UnsupportedFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace spmv
