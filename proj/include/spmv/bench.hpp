// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spmv/cost.hpp"
#include "spmv/diagonal.hpp"
#include "spmv/protocol.hpp"

namespace spmv {

// One benchmark input: either a Matrix Market file or a synthetic instance.
struct MatrixSpec {
    std::string name;
    std::string path;  // empty selects the synthetic generator
    double scale = 1.0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t nnz = 0;
};

struct BenchConfig {
    HeParams params;
    std::size_t chunk_size = 8192;
    std::uint64_t seed = 1;
    PartyRole key_holder = PartyRole::ClientA;
    bool run_baseline = true;
    CostTable costs;
    std::vector<MatrixSpec> matrices;
};

// Reads the TOML form:
//   slots = 8192            # optional, defaults shown
//   plaintext_modulus = 65537
//   chunk_size = 8192
//   seed = 1
//   key_holder = "A"        # or "B"
//   run_baseline = true
//   [[matrix]]              # file input
//   name = "arc130"
//   path = "cache/arc130.mtx"
//   scale = 1.0
//   [[synthetic]]           # generated input
//   name = "synth_1k"
//   rows = 200
//   cols = 200
//   nnz = 1000
BenchConfig load_bench_config(const std::string& path);

struct BenchRecord {
    std::string name;
    bool ok = false;
    std::string error;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t nnz = 0;
    std::size_t n_ct = 0;
    OpLedger ops;
    double estimated_time_ms = 0.0;
    double simulated_cloud_ms = 0.0;
    double est_memory_mb = 0.0;
    double a_to_cloud_mb = 0.0;
    double b_to_cloud_mb = 0.0;
    std::uint64_t a_to_b_bytes = 0;
    int noise_remaining_bits = 0;
    bool audit_passed = false;
    std::optional<OpLedger> baseline_ops;
    double baseline_time_ms = 0.0;
    bool baseline_matches = false;
};

struct BenchReport {
    std::vector<BenchRecord> records;  // sorted by nnz ascending
    std::optional<double> loglog_slope;
};

// Runs every input through the protocol (row-partitioned as needed), and the
// diagonal baseline where it applies (square, with the doubled-vector layout
// fitting the slots). A failing input is recorded and skipped, not fatal.
// The scaling slope is a least-squares fit of log10(simulated cloud ms)
// against log10(nnz) over the successful records.
BenchReport run_bench(const BenchConfig& config);

// Least-squares slope through (log10 x, log10 y); nullopt with fewer than two
// distinct x values.
std::optional<double> fit_loglog_slope(const std::vector<std::pair<double, double>>& points);

nlohmann::ordered_json op_ledger_json(const OpLedger& ledger);
nlohmann::ordered_json transcript_json(const MessageLedger& ledger);
MessageLedger transcript_from_json(const nlohmann::json& j);

nlohmann::ordered_json bench_report_json(const BenchReport& report, const BenchConfig& config);

// CSV of "nnz,simulated_cloud_cost_ms" rows over the successful records.
void write_scaling_csv(std::ostream& out, const BenchReport& report);

// Report for a single protocol run, transcript included so the leakage audit
// can be replayed from the file alone.
nlohmann::ordered_json run_report_json(const std::string& matrix_name, const CsrMatrix& m,
                                       const SpmvResult& result, const HeParams& params,
                                       std::size_t chunk_size, const CostTable& costs = {});

}  // namespace spmv
