// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#include "spmv/toml_lite.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spmv {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Cuts a trailing comment, respecting quoted strings.
std::string strip_comment(const std::string& s) {
    bool in_string = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '"') {
            in_string = !in_string;
        } else if (s[i] == '#' && !in_string) {
            return s.substr(0, i);
        }
    }
    return s;
}

TomlValue parse_value(const std::string& raw, std::size_t lineno) {
    TomlValue v;
    if (raw.empty()) {
        throw ParseError("missing value", lineno);
    }
    if (raw.front() == '"') {
        if (raw.size() < 2 || raw.back() != '"') {
            throw ParseError("unterminated string", lineno);
        }
        v.kind = TomlValue::Kind::String;
        v.str = raw.substr(1, raw.size() - 2);
        return v;
    }
    if (raw == "true" || raw == "false") {
        v.kind = TomlValue::Kind::Boolean;
        v.boolean = raw == "true";
        return v;
    }
    const bool looks_float = raw.find_first_of(".eE") != std::string::npos;
    std::istringstream num(raw);
    if (looks_float) {
        v.kind = TomlValue::Kind::Float;
        if (!(num >> v.real) || !(num >> std::ws).eof()) {
            throw ParseError("malformed number '" + raw + "'", lineno);
        }
    } else {
        v.kind = TomlValue::Kind::Integer;
        if (!(num >> v.integer) || !(num >> std::ws).eof()) {
            throw ParseError("malformed integer '" + raw + "'", lineno);
        }
    }
    return v;
}

}  // namespace

TomlDocument parse_toml(std::istream& in) {
    TomlDocument doc;
    TomlTable* current = &doc.root;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string text = strip(strip_comment(line));
        if (text.empty()) {
            continue;
        }
        if (text.starts_with("[[") && text.ends_with("]]")) {
            const std::string name = strip(text.substr(2, text.size() - 4));
            if (name.empty()) {
                throw ParseError("empty table-array name", lineno);
            }
            doc.table_arrays[name].emplace_back();
            current = &doc.table_arrays[name].back();
            continue;
        }
        if (text.starts_with("[")) {
            throw ParseError("plain [table] sections are not supported; use [[name]]", lineno);
        }
        const std::size_t eq = text.find('=');
        if (eq == std::string::npos) {
            throw ParseError("expected key = value", lineno);
        }
        const std::string key = strip(text.substr(0, eq));
        if (key.empty()) {
            throw ParseError("empty key", lineno);
        }
        (*current)[key] = parse_value(strip(text.substr(eq + 1)), lineno);
    }
    return doc;
}

TomlDocument parse_toml_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return parse_toml(in);
}

namespace {

const TomlValue* find(const TomlTable& t, const std::string& key) {
    auto it = t.find(key);
    return it == t.end() ? nullptr : &it->second;
}

[[noreturn]] void type_error(const std::string& key, const char* wanted) {
    throw std::runtime_error("config key '" + key + "' is not " + wanted);
}

}  // namespace

bool toml_has(const TomlTable& t, const std::string& key) { return t.contains(key); }

std::int64_t toml_int(const TomlTable& t, const std::string& key, std::int64_t fallback) {
    const TomlValue* v = find(t, key);
    if (!v) return fallback;
    if (v->kind != TomlValue::Kind::Integer) type_error(key, "an integer");
    return v->integer;
}

double toml_double(const TomlTable& t, const std::string& key, double fallback) {
    const TomlValue* v = find(t, key);
    if (!v) return fallback;
    if (v->kind != TomlValue::Kind::Integer && v->kind != TomlValue::Kind::Float) {
        type_error(key, "a number");
    }
    return v->as_number();
}

bool toml_bool(const TomlTable& t, const std::string& key, bool fallback) {
    const TomlValue* v = find(t, key);
    if (!v) return fallback;
    if (v->kind != TomlValue::Kind::Boolean) type_error(key, "a boolean");
    return v->boolean;
}

std::string toml_string(const TomlTable& t, const std::string& key, const std::string& fallback) {
    const TomlValue* v = find(t, key);
    if (!v) return fallback;
    if (v->kind != TomlValue::Kind::String) type_error(key, "a string");
    return v->str;
}

}  // namespace spmv
