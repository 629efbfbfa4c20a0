// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#include "spmv/mmio.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace spmv {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

CooMatrix read_matrix_market(std::istream& in, double scale) {
    std::string line;
    std::size_t lineno = 0;

    if (!std::getline(in, line)) {
        throw ParseError("empty input", 1);
    }
    lineno = 1;
    std::istringstream header(line);
    std::string banner, object, format, field, symmetry;
    header >> banner >> object >> format >> field >> symmetry;
    if (lower(banner) != "%%matrixmarket") {
        throw ParseError("missing %%MatrixMarket banner", lineno);
    }
    object = lower(object);
    format = lower(format);
    field = lower(field);
    symmetry = lower(symmetry);
    if (object != "matrix") {
        throw UnsupportedFormatError("unsupported object '" + object + "'");
    }
    if (format != "coordinate") {
        throw UnsupportedFormatError("unsupported format '" + format + "'; only coordinate");
    }
    if (field != "real" && field != "integer" && field != "pattern") {
        throw UnsupportedFormatError("unsupported field '" + field + "'");
    }
    if (symmetry != "general" && symmetry != "symmetric") {
        throw UnsupportedFormatError("unsupported symmetry '" + symmetry + "'");
    }
    const bool pattern = field == "pattern";
    const bool symmetric = symmetry == "symmetric";

    // Size line, after any comments.
    std::size_t rows = 0, cols = 0, declared_nnz = 0;
    for (;;) {
        if (!std::getline(in, line)) {
            throw ParseError("missing size line", lineno + 1);
        }
        ++lineno;
        if (!line.empty() && line[0] == '%') {
            continue;
        }
        if (blank(line)) {
            continue;
        }
        std::istringstream sizes(line);
        if (!(sizes >> rows >> cols >> declared_nnz)) {
            throw ParseError("malformed size line", lineno);
        }
        break;
    }

    CooMatrix coo;
    coo.rows = rows;
    coo.cols = cols;
    coo.entries.reserve(declared_nnz);
    std::size_t seen = 0;
    while (seen < declared_nnz) {
        if (!std::getline(in, line)) {
            throw ParseError("unexpected end of file; expected " + std::to_string(declared_nnz) +
                                 " entries, got " + std::to_string(seen),
                             lineno + 1);
        }
        ++lineno;
        if ((!line.empty() && line[0] == '%') || blank(line)) {
            continue;
        }
        std::istringstream entry(line);
        std::size_t i = 0, j = 0;
        if (!(entry >> i >> j)) {
            throw ParseError("malformed entry", lineno);
        }
        std::int64_t value = 1;
        if (!pattern) {
            double raw = 0.0;
            if (!(entry >> raw)) {
                throw ParseError("malformed entry value", lineno);
            }
            value = std::llround(raw * scale);
        }
        if (i < 1 || i > rows || j < 1 || j > cols) {
            throw ParseError("entry position (" + std::to_string(i) + ", " + std::to_string(j) +
                                 ") outside " + std::to_string(rows) + "x" + std::to_string(cols),
                             lineno);
        }
        ++seen;
        if (value == 0) {
            continue;
        }
        coo.entries.push_back({i - 1, j - 1, value});
        if (symmetric && i != j) {
            coo.entries.push_back({j - 1, i - 1, value});
        }
    }
    return coo;
}

CooMatrix read_matrix_market_file(const std::string& path, double scale) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return read_matrix_market(in, scale);
}

std::vector<std::int64_t> read_vector_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::vector<std::int64_t> v;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) {
            continue;
        }
        std::istringstream entry(line);
        std::int64_t value = 0;
        if (!(entry >> value)) {
            throw ParseError("expected one integer per line", lineno);
        }
        v.push_back(value);
    }
    return v;
}

}  // namespace spmv
