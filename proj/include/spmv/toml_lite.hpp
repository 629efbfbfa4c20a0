// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "spmv/errors.hpp"

namespace spmv {

// Just enough TOML for benchmark configs: top-level scalars plus arrays of
// tables ([[name]] sections), with string / integer / float / boolean values
// and # comments. Not a general TOML implementation.
struct TomlValue {
    enum class Kind { String, Integer, Float, Boolean };
    Kind kind = Kind::String;
    std::string str;
    std::int64_t integer = 0;
    double real = 0.0;
    bool boolean = false;

    double as_number() const { return kind == Kind::Integer ? static_cast<double>(integer) : real; }
};

using TomlTable = std::map<std::string, TomlValue>;

struct TomlDocument {
    TomlTable root;
    std::map<std::string, std::vector<TomlTable>> table_arrays;
};

TomlDocument parse_toml(std::istream& in);
TomlDocument parse_toml_file(const std::string& path);

// Lookup helpers; each throws std::runtime_error on a type mismatch and
// returns the fallback when the key is absent.
std::int64_t toml_int(const TomlTable& t, const std::string& key, std::int64_t fallback);
double toml_double(const TomlTable& t, const std::string& key, double fallback);
bool toml_bool(const TomlTable& t, const std::string& key, bool fallback);
std::string toml_string(const TomlTable& t, const std::string& key, const std::string& fallback);
bool toml_has(const TomlTable& t, const std::string& key);

}  // namespace spmv
