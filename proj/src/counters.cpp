#include "zkhash/counters.hpp"

namespace zkhash::counters {

std::atomic<uint64_t>& permutations() {
    static std::atomic<uint64_t> c{0};
    return c;
}

std::atomic<uint64_t>& compressions() {
    static std::atomic<uint64_t> c{0};
    return c;
}

std::atomic<uint64_t>& bars_executions() {
    static std::atomic<uint64_t> c{0};
    return c;
}

void reset_all() {
    permutations().store(0);
    compressions().store(0);
    bars_executions().store(0);
}

} // namespace zkhash::counters
