// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "spmv/sparse.hpp"

namespace spmv {

// Reads a Matrix Market coordinate file. Supported: field real, integer or
// pattern (pattern entries become 1); symmetry general or symmetric, with
// off-diagonal entries mirrored. Array and complex files raise
// UnsupportedFormatError; malformed content raises ParseError with the line.
//
// Real values are quantized to integers as round(value * scale). Entries that
// quantize to zero are dropped, as are explicit zeros.
CooMatrix read_matrix_market(std::istream& in, double scale = 1.0);
CooMatrix read_matrix_market_file(const std::string& path, double scale = 1.0);

// One integer per line; blank lines are skipped.
std::vector<std::int64_t> read_vector_file(const std::string& path);

}  // namespace spmv
