#pragma once

#include <atomic>
#include <cstdint>

namespace zkhash::counters {

/// Cheap thread-safe instrumentation used by tests: permutation invocations
/// (through the kind dispatcher), Merkle node compressions, and bars-layer
/// executions inside the RC permutation.
std::atomic<uint64_t>& permutations();
std::atomic<uint64_t>& compressions();
std::atomic<uint64_t>& bars_executions();

void reset_all();

} // namespace zkhash::counters
