// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

#include "spmv/bench.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "spmv/mmio.hpp"
#include "spmv/synthetic.hpp"
#include "spmv/toml_lite.hpp"

namespace spmv {

namespace {

PartyRole parse_key_holder(const std::string& s) {
    if (s == "A") return PartyRole::ClientA;
    if (s == "B") return PartyRole::ClientB;
    throw std::runtime_error("key_holder must be \"A\" or \"B\", got \"" + s + "\"");
}

bool baseline_applies(const CsrMatrix& m, const HeParams& params) {
    if (m.rows != m.cols || m.rows == 0) {
        return false;
    }
    return 2 * m.rows <= params.slot_count || m.rows == params.slot_count;
}

}  // namespace

BenchConfig load_bench_config(const std::string& path) {
    const TomlDocument doc = parse_toml_file(path);
    BenchConfig config;
    config.params.slot_count =
        static_cast<std::size_t>(toml_int(doc.root, "slots", 8192));
    config.params.plaintext_modulus =
        static_cast<std::uint64_t>(toml_int(doc.root, "plaintext_modulus", 65537));
    config.params.ciphertext_size_mb =
        toml_double(doc.root, "ciphertext_size_mb", config.params.ciphertext_size_mb);
    config.chunk_size = static_cast<std::size_t>(
        toml_int(doc.root, "chunk_size", static_cast<std::int64_t>(config.params.slot_count)));
    config.seed = static_cast<std::uint64_t>(toml_int(doc.root, "seed", 1));
    config.key_holder = parse_key_holder(toml_string(doc.root, "key_holder", "A"));
    config.run_baseline = toml_bool(doc.root, "run_baseline", true);

    auto files = doc.table_arrays.find("matrix");
    if (files != doc.table_arrays.end()) {
        for (const TomlTable& t : files->second) {
            MatrixSpec spec;
            spec.name = toml_string(t, "name", "");
            spec.path = toml_string(t, "path", "");
            spec.scale = toml_double(t, "scale", 1.0);
            if (spec.path.empty()) {
                throw std::runtime_error("[[matrix]] entries need a path");
            }
            if (spec.name.empty()) {
                spec.name = spec.path;
            }
            config.matrices.push_back(std::move(spec));
        }
    }
    auto synth = doc.table_arrays.find("synthetic");
    if (synth != doc.table_arrays.end()) {
        for (const TomlTable& t : synth->second) {
            MatrixSpec spec;
            spec.name = toml_string(t, "name", "");
            spec.rows = static_cast<std::size_t>(toml_int(t, "rows", 0));
            spec.cols = static_cast<std::size_t>(toml_int(t, "cols", 0));
            spec.nnz = static_cast<std::size_t>(toml_int(t, "nnz", 0));
            if (spec.rows == 0 || spec.cols == 0) {
                throw std::runtime_error("[[synthetic]] entries need rows and cols");
            }
            if (spec.name.empty()) {
                spec.name = "synthetic_" + std::to_string(config.matrices.size());
            }
            config.matrices.push_back(std::move(spec));
        }
    }
    return config;
}

BenchReport run_bench(const BenchConfig& config) {
    BenchReport report;
    const SimBackend backend(config.params);

    for (std::size_t idx = 0; idx < config.matrices.size(); ++idx) {
        const MatrixSpec& spec = config.matrices[idx];
        BenchRecord record;
        record.name = spec.name;
        try {
            CsrMatrix m;
            if (spec.path.empty()) {
                m = random_sparse_csr(spec.rows, spec.cols, spec.nnz, config.seed + idx);
            } else {
                m = coo_to_csr(read_matrix_market_file(spec.path, spec.scale));
            }
            const std::vector<std::int64_t> v =
                random_vector(m.cols, config.seed + idx);

            const SpmvResult result =
                spmv_partitioned(backend, m, v, config.chunk_size, config.key_holder);

            record.rows = m.rows;
            record.cols = m.cols;
            record.nnz = m.nnz();
            record.n_ct = result.n_ct;
            record.ops = result.op_ledger;
            record.estimated_time_ms = estimate_time_ms(result.op_ledger, config.costs);
            record.simulated_cloud_ms = estimate_cloud_time_ms(result.op_ledger, config.costs);
            record.est_memory_mb = estimate_memory_mb(result.op_ledger, config.params);
            record.a_to_cloud_mb =
                static_cast<double>(result.message_ledger.ciphertexts_between(
                    PartyRole::ClientA, PartyRole::Cloud)) *
                config.params.ciphertext_size_mb;
            record.b_to_cloud_mb =
                static_cast<double>(result.message_ledger.ciphertexts_between(
                    PartyRole::ClientB, PartyRole::Cloud)) *
                config.params.ciphertext_size_mb;
            record.a_to_b_bytes =
                result.message_ledger.bytes_between(PartyRole::ClientA, PartyRole::ClientB);
            record.noise_remaining_bits = result.noise_budget_remaining_bits;
            record.audit_passed = audit_leakage(result.message_ledger).passed;

            if (config.run_baseline && baseline_applies(m, config.params)) {
                const SpmvResult base = diag_spmv(backend, m, v, config.key_holder);
                record.baseline_ops = base.op_ledger;
                record.baseline_time_ms = estimate_time_ms(base.op_ledger, config.costs);
                record.baseline_matches = base.values == result.values;
            }
            record.ok = true;
        } catch (const std::exception& e) {
            record.ok = false;
            record.error = e.what();
        }
        report.records.push_back(std::move(record));
    }

    std::stable_sort(report.records.begin(), report.records.end(),
                     [](const BenchRecord& a, const BenchRecord& b) { return a.nnz < b.nnz; });

    std::vector<std::pair<double, double>> points;
    for (const BenchRecord& r : report.records) {
        if (r.ok && r.nnz > 0 && r.simulated_cloud_ms > 0.0) {
            points.emplace_back(static_cast<double>(r.nnz), r.simulated_cloud_ms);
        }
    }
    report.loglog_slope = fit_loglog_slope(points);
    return report;
}

std::optional<double> fit_loglog_slope(const std::vector<std::pair<double, double>>& points) {
    std::vector<std::pair<double, double>> logs;
    for (const auto& [x, y] : points) {
        if (x > 0.0 && y > 0.0) {
            logs.emplace_back(std::log10(x), std::log10(y));
        }
    }
    if (logs.size() < 2) {
        return std::nullopt;
    }
    double mean_x = 0.0, mean_y = 0.0;
    for (const auto& [x, y] : logs) {
        mean_x += x;
        mean_y += y;
    }
    mean_x /= static_cast<double>(logs.size());
    mean_y /= static_cast<double>(logs.size());
    double cov = 0.0, var = 0.0;
    for (const auto& [x, y] : logs) {
        cov += (x - mean_x) * (y - mean_y);
        var += (x - mean_x) * (x - mean_x);
    }
    if (var == 0.0) {
        return std::nullopt;
    }
    return cov / var;
}

nlohmann::ordered_json op_ledger_json(const OpLedger& ledger) {
    return nlohmann::ordered_json{
        {"n_mult_cc", ledger.n_mult_cc}, {"n_mult_cp", ledger.n_mult_cp},
        {"n_rot", ledger.n_rot},         {"n_add", ledger.n_add},
        {"n_enc", ledger.n_enc},         {"n_dec", ledger.n_dec},
    };
}

nlohmann::ordered_json transcript_json(const MessageLedger& ledger) {
    nlohmann::ordered_json messages = nlohmann::ordered_json::array();
    for (const Message& m : ledger.messages) {
        messages.push_back(nlohmann::ordered_json{
            {"from", to_string(m.from)},
            {"to", to_string(m.to)},
            {"kind", to_string(m.kind)},
            {"payload_bytes", m.payload_bytes},
            {"ciphertext_count", m.ciphertext_count},
        });
    }
    return nlohmann::ordered_json{
        {"key_holder", to_string(ledger.key_holder)},
        {"messages", std::move(messages)},
    };
}

namespace {

PartyRole party_from_string(const std::string& s) {
    if (s == "A") return PartyRole::ClientA;
    if (s == "B") return PartyRole::ClientB;
    if (s == "Cloud") return PartyRole::Cloud;
    throw std::runtime_error("unknown party \"" + s + "\"");
}

MessageKind kind_from_string(const std::string& s) {
    if (s == "ciphertext_batch") return MessageKind::CiphertextBatch;
    if (s == "column_index_plain") return MessageKind::ColumnIndexPlain;
    if (s == "chunk_shape_meta") return MessageKind::ChunkShapeMeta;
    if (s == "result_ciphertext") return MessageKind::ResultCiphertext;
    if (s == "plaintext_values") return MessageKind::PlaintextValues;
    throw std::runtime_error("unknown message kind \"" + s + "\"");
}

}  // namespace

MessageLedger transcript_from_json(const nlohmann::json& j) {
    MessageLedger ledger;
    ledger.key_holder = party_from_string(j.at("key_holder").get<std::string>());
    for (const auto& m : j.at("messages")) {
        ledger.append({
            party_from_string(m.at("from").get<std::string>()),
            party_from_string(m.at("to").get<std::string>()),
            kind_from_string(m.at("kind").get<std::string>()),
            m.at("payload_bytes").get<std::uint64_t>(),
            m.at("ciphertext_count").get<std::size_t>(),
        });
    }
    return ledger;
}

nlohmann::ordered_json bench_report_json(const BenchReport& report, const BenchConfig& config) {
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const BenchRecord& r : report.records) {
        nlohmann::ordered_json rec{
            {"name", r.name},
            {"ok", r.ok},
        };
        if (!r.ok) {
            rec["error"] = r.error;
            records.push_back(std::move(rec));
            continue;
        }
        rec["rows"] = r.rows;
        rec["cols"] = r.cols;
        rec["nnz"] = r.nnz;
        rec["n_ct"] = r.n_ct;
        rec["op_counts"] = op_ledger_json(r.ops);
        rec["estimated_time_ms"] = r.estimated_time_ms;
        rec["simulated_cloud_ms"] = r.simulated_cloud_ms;
        rec["est_memory_mb"] = r.est_memory_mb;
        rec["comm"] = nlohmann::ordered_json{
            {"a_to_cloud_mb", r.a_to_cloud_mb},
            {"b_to_cloud_mb", r.b_to_cloud_mb},
            {"a_to_b_bytes", r.a_to_b_bytes},
        };
        rec["noise_remaining_bits"] = r.noise_remaining_bits;
        rec["audit_passed"] = r.audit_passed;
        if (r.baseline_ops) {
            rec["baseline"] = nlohmann::ordered_json{
                {"op_counts", op_ledger_json(*r.baseline_ops)},
                {"estimated_time_ms", r.baseline_time_ms},
                {"matches", r.baseline_matches},
                {"speedup_estimate",
                 r.estimated_time_ms > 0.0 ? r.baseline_time_ms / r.estimated_time_ms : 0.0},
            };
        } else {
            rec["baseline"] = nullptr;
        }
        records.push_back(std::move(rec));
    }

    nlohmann::ordered_json j{
        {"config",
         nlohmann::ordered_json{
             {"slot_count", config.params.slot_count},
             {"plaintext_modulus", config.params.plaintext_modulus},
             {"ciphertext_size_mb", config.params.ciphertext_size_mb},
             {"chunk_size", config.chunk_size},
             {"seed", config.seed},
             {"key_holder", to_string(config.key_holder)},
             {"run_baseline", config.run_baseline},
         }},
        {"records", std::move(records)},
    };
    if (report.loglog_slope) {
        j["loglog_slope"] = *report.loglog_slope;
    } else {
        j["loglog_slope"] = nullptr;
    }
    return j;
}

void write_scaling_csv(std::ostream& out, const BenchReport& report) {
    out << "nnz,simulated_cloud_cost_ms\n";
    for (const BenchRecord& r : report.records) {
        if (r.ok) {
            out << r.nnz << "," << r.simulated_cloud_ms << "\n";
        }
    }
}

nlohmann::ordered_json run_report_json(const std::string& matrix_name, const CsrMatrix& m,
                                       const SpmvResult& result, const HeParams& params,
                                       std::size_t chunk_size, const CostTable& costs) {
    const AuditReport audit = audit_leakage(result.message_ledger);
    return nlohmann::ordered_json{
        {"matrix",
         nlohmann::ordered_json{
             {"name", matrix_name}, {"rows", m.rows}, {"cols", m.cols}, {"nnz", m.nnz()}}},
        {"params",
         nlohmann::ordered_json{
             {"slot_count", params.slot_count},
             {"plaintext_modulus", params.plaintext_modulus},
             {"ciphertext_size_mb", params.ciphertext_size_mb},
             {"noise",
              nlohmann::ordered_json{
                  {"initial_budget_bits", params.noise.initial_budget_bits},
                  {"cost_ct_ct_mult_bits", params.noise.cost_ct_ct_mult_bits},
                  {"cost_ct_pt_mult_bits", params.noise.cost_ct_pt_mult_bits},
                  {"cost_add_bits", params.noise.cost_add_bits},
                  {"cost_rot_bits", params.noise.cost_rot_bits},
              }},
         }},
        {"chunk_size", chunk_size},
        {"n_ct", result.n_ct},
        {"op_counts", op_ledger_json(result.op_ledger)},
        {"estimated_time_ms", estimate_time_ms(result.op_ledger, costs)},
        {"comm",
         nlohmann::ordered_json{
             {"a_to_cloud_mb",
              static_cast<double>(result.message_ledger.ciphertexts_between(
                  PartyRole::ClientA, PartyRole::Cloud)) *
                  params.ciphertext_size_mb},
             {"b_to_cloud_mb",
              static_cast<double>(result.message_ledger.ciphertexts_between(
                  PartyRole::ClientB, PartyRole::Cloud)) *
                  params.ciphertext_size_mb},
             {"a_to_b_bytes",
              result.message_ledger.bytes_between(PartyRole::ClientA, PartyRole::ClientB)},
         }},
        {"noise_remaining_bits", result.noise_budget_remaining_bits},
        {"audit", nlohmann::ordered_json{{"passed", audit.passed}, {"violations", audit.violations}}},
        {"transcript", transcript_json(result.message_ledger)},
        {"result", result.values},
    };
}

}  // namespace spmv
