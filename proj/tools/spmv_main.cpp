// Copyright (c) 2026 The cssc-spmv Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: convert matrices into the packed column format,
// run the three-party protocol on the simulator, benchmark a suite, audit a
// recorded transcript, or fetch a SuiteSparse matrix into the local cache.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "spmv/bench.hpp"
#include "spmv/mmio.hpp"
#include "spmv/synthetic.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

spmv::PartyRole parse_holder(const std::string& s) {
    if (s == "A") return spmv::PartyRole::ClientA;
    if (s == "B") return spmv::PartyRole::ClientB;
    throw CLI::ValidationError("--key-holder", "must be A or B");
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << content;
}

int cmd_convert(const std::string& in_path, const std::string& out_path, double scale) {
    const spmv::CsrMatrix m = spmv::coo_to_csr(spmv::read_matrix_market_file(in_path, scale));
    const spmv::CsscMatrix cssc = spmv::csr_to_cssc(m);
    const auto violations = spmv::validate_cssc(cssc);
    if (!violations.empty()) {
        std::cerr << "conversion produced an invalid structure:\n";
        for (const auto& v : violations) {
            std::cerr << "  " << v << "\n";
        }
        return 1;
    }
    ordered_json j{
        {"rows", cssc.rows}, {"cols", cssc.cols}, {"va", cssc.va},
        {"ci", cssc.ci},     {"rm", cssc.rm},     {"cp", cssc.cp},
    };
    write_text_file(out_path, j.dump(2) + "\n");
    std::cout << "wrote " << out_path << ": " << cssc.rows << "x" << cssc.cols << ", nnz "
              << cssc.nnz() << ", " << cssc.aligned_cols() << " aligned columns\n";
    return 0;
}

int cmd_run(const std::string& matrix_path, const std::string& vector_path,
            std::uint64_t random_seed, bool seed_given, std::size_t slots, std::uint64_t modulus,
            std::size_t chunk_size, const std::string& key_holder, const std::string& report_path,
            double scale) {
    spmv::HeParams params;
    params.slot_count = slots;
    params.plaintext_modulus = modulus;
    const spmv::SimBackend backend(params);

    const spmv::CsrMatrix m =
        spmv::coo_to_csr(spmv::read_matrix_market_file(matrix_path, scale));
    std::vector<std::int64_t> v;
    if (!vector_path.empty()) {
        v = spmv::read_vector_file(vector_path);
    } else if (seed_given) {
        v = spmv::random_vector(m.cols, random_seed);
    } else {
        std::cerr << "need --vector or --random-seed\n";
        return 1;
    }

    if (chunk_size == 0) {
        chunk_size = slots;
    }
    const spmv::SpmvResult result =
        spmv::spmv_partitioned(backend, m, v, chunk_size, parse_holder(key_holder));
    const spmv::AuditReport audit = spmv::audit_leakage(result.message_ledger);

    const ordered_json report = spmv::run_report_json(
        fs::path(matrix_path).filename().string(), m, result, params, chunk_size);
    if (!report_path.empty()) {
        write_text_file(report_path, report.dump(2) + "\n");
    }

    std::cout << "matrix " << m.rows << "x" << m.cols << ", nnz " << m.nnz() << ", " << result.n_ct
              << " chunk ciphertext(s)\n";
    std::cout << "ops: cc_mult " << result.op_ledger.n_mult_cc << ", cp_mult "
              << result.op_ledger.n_mult_cp << ", rot " << result.op_ledger.n_rot << ", add "
              << result.op_ledger.n_add << "\n";
    std::cout << "estimated time " << spmv::estimate_time_ms(result.op_ledger)
              << " ms, noise remaining " << result.noise_budget_remaining_bits << " bits\n";
    std::cout << "leakage audit: " << (audit.passed ? "PASS" : "FAIL") << "\n";
    for (const auto& violation : audit.violations) {
        std::cout << "  " << violation << "\n";
    }
    if (!report_path.empty()) {
        std::cout << "report written to " << report_path << "\n";
    }
    return audit.passed ? 0 : 1;
}

int cmd_bench(const std::string& config_path, const std::string& out_path,
              const std::string& csv_path) {
    const spmv::BenchConfig config = spmv::load_bench_config(config_path);
    const spmv::BenchReport report = spmv::run_bench(config);
    const ordered_json j = spmv::bench_report_json(report, config);
    if (!out_path.empty()) {
        write_text_file(out_path, j.dump(2) + "\n");
        std::cout << "report written to " << out_path << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) {
            throw std::runtime_error("cannot write " + csv_path);
        }
        spmv::write_scaling_csv(csv, report);
        std::cout << "scaling data written to " << csv_path << "\n";
    }
    bool all_ok = true;
    for (const auto& r : report.records) {
        if (!r.ok) {
            std::cerr << "record '" << r.name << "' failed: " << r.error << "\n";
            all_ok = false;
        }
    }
    if (report.loglog_slope) {
        std::cout << "log-log slope of cloud cost vs nnz: " << *report.loglog_slope << "\n";
    }
    return all_ok ? 0 : 1;
}

int cmd_audit(const std::string& report_path) {
    std::ifstream in(report_path);
    if (!in) {
        std::cerr << "cannot open " << report_path << "\n";
        return 1;
    }
    nlohmann::json j;
    in >> j;
    const spmv::MessageLedger ledger = spmv::transcript_from_json(j.at("transcript"));
    const spmv::AuditReport audit = spmv::audit_leakage(ledger);
    std::cout << "leakage audit: " << (audit.passed ? "PASS" : "FAIL") << "\n";
    for (const auto& violation : audit.violations) {
        std::cout << "  " << violation << "\n";
    }
    return audit.passed ? 0 : 1;
}

fs::path cache_dir(const std::string& override_dir) {
    if (!override_dir.empty()) {
        return override_dir;
    }
    if (const char* env = std::getenv("SPMV_CACHE_DIR")) {
        return env;
    }
    if (const char* home = std::getenv("HOME")) {
        return fs::path(home) / ".cache" / "spmv";
    }
    return fs::path(".") / ".spmv-cache";
}

// Downloads <group>/<name>.tar.gz from the SuiteSparse collection and leaves
// <name>.mtx in the cache. Network access happens only here, never in runs
// or benchmarks.
int cmd_fetch(const std::string& name, const std::string& group, const std::string& dir_override) {
    const fs::path dir = cache_dir(dir_override);
    const fs::path target = dir / (name + ".mtx");
    if (fs::exists(target)) {
        std::cout << "already cached: " << target.string() << "\n";
        return 0;
    }
    fs::create_directories(dir);
    const std::string url = "https://suitesparse-collection-website.herokuapp.com/MM/" + group +
                            "/" + name + ".tar.gz";
    const fs::path archive = dir / (name + ".tar.gz");
    const std::string fetch_cmd =
        "curl -fsSL -o '" + archive.string() + "' '" + url + "'";
    std::cout << fetch_cmd << "\n";
    if (std::system(fetch_cmd.c_str()) != 0) {
        std::cerr << "download failed\n";
        return 1;
    }
    const std::string extract_cmd = "tar -xzf '" + archive.string() + "' -C '" + dir.string() +
                                    "' '" + name + "/" + name + ".mtx'";
    if (std::system(extract_cmd.c_str()) != 0) {
        std::cerr << "extraction failed\n";
        return 1;
    }
    fs::rename(dir / name / (name + ".mtx"), target);
    fs::remove_all(dir / name);
    fs::remove(archive);
    std::cout << "cached " << target.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Privacy-preserving sparse matrix-vector multiplication (simulator)"};
    app.require_subcommand(1);

    // convert
    std::string conv_in, conv_out;
    double conv_scale = 1.0;
    auto* convert = app.add_subcommand("convert", "Convert Matrix Market to the packed format");
    convert->add_option("--in", conv_in, "input .mtx file")->required();
    convert->add_option("--out", conv_out, "output file (JSON content)")->required();
    convert->add_option("--scale", conv_scale, "quantization scale for real values");

    // run
    std::string run_matrix, run_vector, run_holder = "A", run_report;
    std::uint64_t run_seed = 0, run_modulus = 65537;
    std::size_t run_slots = 8192, run_chunk = 0;
    double run_scale = 1.0;
    auto* run = app.add_subcommand("run", "Run the protocol once on the simulator");
    run->add_option("--matrix", run_matrix, "matrix .mtx file")->required();
    run->add_option("--vector", run_vector, "vector file, one integer per line");
    auto* seed_opt = run->add_option("--random-seed", run_seed, "generate the vector from a seed");
    run->add_option("--slots", run_slots, "SIMD slot count");
    run->add_option("--t", run_modulus, "plaintext modulus");
    run->add_option("--chunk-size", run_chunk, "slots per chunk (default: slot count)");
    run->add_option("--key-holder", run_holder, "who decrypts: A or B");
    run->add_option("--report", run_report, "write a JSON report here");
    run->add_option("--scale", run_scale, "quantization scale for real values");

    // bench
    std::string bench_config, bench_out, bench_csv;
    auto* bench = app.add_subcommand("bench", "Run a benchmark suite from a TOML config");
    bench->add_option("--config", bench_config, "bench config (TOML)")->required();
    bench->add_option("--out", bench_out, "write the JSON report here");
    bench->add_option("--scaling-csv", bench_csv, "write nnz vs cloud cost CSV here");

    // audit
    std::string audit_report;
    auto* audit = app.add_subcommand("audit", "Re-check the leakage audit of a run report");
    audit->add_option("--report", audit_report, "run report JSON")->required();

    // fetch
    std::string fetch_name, fetch_group = "HB", fetch_dir;
    auto* fetch = app.add_subcommand("fetch", "Download a SuiteSparse matrix into the cache");
    fetch->add_option("--name", fetch_name, "matrix name, e.g. arc130")->required();
    fetch->add_option("--group", fetch_group, "SuiteSparse group (default HB)");
    fetch->add_option("--cache-dir", fetch_dir, "cache directory (default $SPMV_CACHE_DIR)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (convert->parsed()) {
            return cmd_convert(conv_in, conv_out, conv_scale);
        }
        if (run->parsed()) {
            return cmd_run(run_matrix, run_vector, run_seed, seed_opt->count() > 0, run_slots,
                           run_modulus, run_chunk, run_holder, run_report, run_scale);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_config, bench_out, bench_csv);
        }
        if (audit->parsed()) {
            return cmd_audit(audit_report);
        }
        if (fetch->parsed()) {
            return cmd_fetch(fetch_name, fetch_group, fetch_dir);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
