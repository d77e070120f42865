#include "zkhash/permutation.hpp"

#include "zkhash/counters.hpp"
#include "zkhash/griffin.hpp"
#include "zkhash/rc.hpp"
#include "zkhash/rescue.hpp"

namespace zkhash {

State permute(const State& s, const HashParams& params) {
    counters::permutations().fetch_add(1, std::memory_order_relaxed);
    switch (params.kind) {
        case HashKind::rescue_prime: return rescue::permute(s, params);
        case HashKind::griffin: return griffin::permute(s, params);
        case HashKind::reinforced_concrete: return rc::permute(s, params);
    }
    throw Error(ErrorCode::kind_mismatch, "unknown hash kind");
}

} // namespace zkhash
