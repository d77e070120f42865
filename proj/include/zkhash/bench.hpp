#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zkhash/params.hpp"

namespace zkhash::bench {

enum class MeasureTarget { permutation, full_hash, merkle_build };

const char* to_string(MeasureTarget target);
MeasureTarget measure_target_from_string(const std::string& name);

struct BenchConfig {
    uint32_t batch_size = 13;      // items per worker per batch
    uint32_t num_batches = 8;      // auto-scaled up to keep timed runs >= 10 ms
    uint32_t warmup_batches = 2;
    uint32_t worker_count = 1;
    MeasureTarget target = MeasureTarget::permutation;
    uint64_t seed = 1;
};

struct BenchReport {
    std::string hash_name;
    MeasureTarget target = MeasureTarget::permutation;
    uint32_t batch_size = 0;
    uint32_t worker_count = 0;
    uint64_t seed = 0;
    uint64_t ops_measured = 0;
    double amortized_latency_us = 0.0;
    double throughput_kops = 0.0;  // always 1000 / amortized_latency_us
    double total_wall_time_s = 0.0;
    uint64_t rounds_executed = 0;
    std::string cpu_model;
    uint64_t output_checksum = 0;  // keeps the measured work observable
};

/// Warmup then timed batches over pre-generated random inputs; inputs are
/// produced outside the timed region and outputs checksummed after it. The
/// timed segment is stretched to at least 10 ms by scaling num_batches.
BenchReport run(const BenchConfig& config, const HashParams& params);

struct ComparisonRow {
    std::string hash_name;
    double amortized_latency_us = 0.0;
    double speedup_vs_first = 0.0;  // first report's latency / this latency
};

/// Throws MismatchedTargets when the reports measure different targets;
/// requires at least two reports.
std::vector<ComparisonRow> compare(const std::vector<BenchReport>& reports);

std::string to_csv(const std::vector<BenchReport>& reports);   // with header row
std::string to_json(const std::vector<BenchReport>& reports);

} // namespace zkhash::bench
