#include "zkhash/bench.hpp"

#include <bit>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "zkhash/griffin.hpp"
#include "zkhash/merkle.hpp"
#include "zkhash/permutation.hpp"
#include "zkhash/sponge.hpp"

namespace zkhash::bench {

namespace {

using Clock = std::chrono::steady_clock;

std::string cpu_model() {
    std::ifstream in("/proc/cpuinfo");
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("model name", 0) == 0) {
            size_t colon = line.find(':');
            if (colon != std::string::npos && colon + 2 <= line.size()) {
                return line.substr(colon + 2);
            }
        }
    }
    return "unknown";
}

uint64_t checksum(const State& s) {
    uint64_t acc = 0;
    for (const FieldElement& v : s) {
        for (uint64_t limb : v.limbs) acc ^= limb;
    }
    return acc;
}

/// Single-input griffin runs overlap the inverse power map with the cheap
/// lanes on a helper thread; batching already saturates the cores, so
/// batched runs keep sequential lanes.
bool use_dual_lanes(const BenchConfig& config, const HashParams& params) {
    return config.target == MeasureTarget::permutation && config.batch_size == 1
           && config.worker_count == 1 && params.kind == HashKind::griffin
           && std::thread::hardware_concurrency() > 1;
}

/// One worker's measured loop over its slice of pre-generated states.
uint64_t run_slice(const BenchConfig& config, const HashParams& params,
                   std::span<const State> states) {
    uint64_t acc = 0;
    switch (config.target) {
        case MeasureTarget::permutation:
            if (use_dual_lanes(config, params)) {
                for (const State& s : states) {
                    acc ^= checksum(griffin::permute(s, params, griffin::LaneMode::dual_worker));
                }
                break;
            }
            for (const State& s : states) {
                acc ^= checksum(permute(s, params));
            }
            break;
        case MeasureTarget::full_hash:
            for (const State& s : states) {
                acc ^= checksum(sponge_hash(params, s, 1));
            }
            break;
        case MeasureTarget::merkle_build: {
            // One tree per slice; a compression is the unit of work.
            std::vector<FieldElement> leaves;
            leaves.reserve(states.size());
            for (const State& s : states) leaves.push_back(s[0]);
            MerkleTree tree = MerkleTree::build(leaves, params);
            acc ^= checksum({tree.root()});
            break;
        }
    }
    return acc;
}

uint64_t ops_in_slice(const BenchConfig& config, size_t items) {
    if (config.target == MeasureTarget::merkle_build) {
        return std::bit_ceil(items) - 1;  // compressions per build
    }
    return items;
}

} // namespace

const char* to_string(MeasureTarget target) {
    switch (target) {
        case MeasureTarget::permutation: return "permutation";
        case MeasureTarget::full_hash: return "full_hash";
        case MeasureTarget::merkle_build: return "merkle_build";
    }
    return "?";
}

MeasureTarget measure_target_from_string(const std::string& name) {
    if (name == "permutation") return MeasureTarget::permutation;
    if (name == "full_hash") return MeasureTarget::full_hash;
    if (name == "merkle_build") return MeasureTarget::merkle_build;
    throw Error(ErrorCode::parse_error, "unknown measure target '" + name + "'");
}

BenchReport run(const BenchConfig& config, const HashParams& params) {
    if (config.batch_size < 1 || config.worker_count < 1
        || config.warmup_batches >= std::max(config.num_batches, 1u)) {
        throw Error(ErrorCode::validation_error,
                    "bench config: batch_size >= 1, workers >= 1, warmup < num_batches");
    }

    std::mt19937_64 rng(config.seed);
    auto make_states = [&](size_t count) {
        std::vector<State> states(count);
        for (State& s : states) {
            s.reserve(params.m);
            for (uint32_t i = 0; i < params.m; ++i) {
                s.push_back(params.field.random_element(rng));
            }
        }
        return states;
    };

    size_t per_batch = static_cast<size_t>(config.batch_size) * config.worker_count;

    // Warmup, then calibrate: stretch the batch count until the projected
    // timed segment covers at least 10 ms.
    std::vector<State> warmup = make_states(per_batch * std::max(config.warmup_batches, 1u));
    auto t0 = Clock::now();
    volatile uint64_t sink = run_slice(config, params, warmup);
    (void)sink;
    double warmup_s = std::chrono::duration<double>(Clock::now() - t0).count();
    double per_item_s = warmup_s / static_cast<double>(warmup.size());

    uint64_t num_batches = config.num_batches;
    double projected = per_item_s * static_cast<double>(per_batch) * static_cast<double>(num_batches);
    while (projected < 0.010 && num_batches < (1ULL << 24)) {
        num_batches *= 2;
        projected *= 2;
    }

    size_t total_items = per_batch * num_batches;
    std::vector<State> items = make_states(total_items);

    // Static partition: each worker owns a contiguous slice.
    std::vector<uint64_t> worker_checksums(config.worker_count, 0);
    size_t per_worker = total_items / config.worker_count;

    auto start = Clock::now();
    if (config.worker_count == 1) {
        worker_checksums[0] = run_slice(config, params, items);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(config.worker_count);
        for (uint32_t w = 0; w < config.worker_count; ++w) {
            size_t begin = w * per_worker;
            size_t end = w + 1 == config.worker_count ? total_items : begin + per_worker;
            threads.emplace_back([&, w, begin, end] {
                worker_checksums[w] = run_slice(
                    config, params, std::span<const State>(items).subspan(begin, end - begin));
            });
        }
        for (auto& t : threads) t.join();
    }
    double wall_s = std::chrono::duration<double>(Clock::now() - start).count();

    uint64_t ops = 0;
    if (config.target == MeasureTarget::merkle_build) {
        for (uint32_t w = 0; w < config.worker_count; ++w) {
            size_t begin = w * per_worker;
            size_t end = w + 1 == config.worker_count ? total_items : begin + per_worker;
            ops += ops_in_slice(config, end - begin);
        }
    } else {
        ops = total_items;
    }

    BenchReport report;
    report.hash_name = to_string(params.kind);
    report.target = config.target;
    report.batch_size = config.batch_size;
    report.worker_count = config.worker_count;
    report.seed = config.seed;
    report.ops_measured = ops;
    report.total_wall_time_s = wall_s;
    report.amortized_latency_us = wall_s * 1e6 / static_cast<double>(ops);
    report.throughput_kops = 1000.0 / report.amortized_latency_us;
    report.rounds_executed = params.rounds;
    report.cpu_model = cpu_model();
    for (uint64_t c : worker_checksums) report.output_checksum ^= c;
    return report;
}

std::vector<ComparisonRow> compare(const std::vector<BenchReport>& reports) {
    if (reports.size() < 2) {
        throw Error(ErrorCode::validation_error, "compare needs at least two reports");
    }
    for (const BenchReport& r : reports) {
        if (r.target != reports.front().target) {
            throw Error(ErrorCode::mismatched_targets,
                        "reports measure different targets");
        }
    }
    std::vector<ComparisonRow> rows;
    rows.reserve(reports.size());
    for (const BenchReport& r : reports) {
        rows.push_back({r.hash_name, r.amortized_latency_us,
                        reports.front().amortized_latency_us / r.amortized_latency_us});
    }
    return rows;
}

std::string to_csv(const std::vector<BenchReport>& reports) {
    std::ostringstream out;
    out << "hash,batch,workers,amortized_latency_us,throughput_kops,rounds\n";
    for (const BenchReport& r : reports) {
        out << r.hash_name << ',' << r.batch_size << ',' << r.worker_count << ','
            << r.amortized_latency_us << ',' << r.throughput_kops << ','
            << r.rounds_executed << "\n";
    }
    return out.str();
}

std::string to_json(const std::vector<BenchReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const BenchReport& r : reports) {
        arr.push_back({{"hash", r.hash_name},
                       {"target", to_string(r.target)},
                       {"batch", r.batch_size},
                       {"workers", r.worker_count},
                       {"seed", r.seed},
                       {"ops", r.ops_measured},
                       {"amortized_latency_us", r.amortized_latency_us},
                       {"throughput_kops", r.throughput_kops},
                       {"total_wall_time_s", r.total_wall_time_s},
                       {"rounds", r.rounds_executed},
                       {"cpu_model", r.cpu_model}});
    }
    return arr.dump(1);
}

} // namespace zkhash::bench
