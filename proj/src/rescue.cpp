#include "zkhash/rescue.hpp"

namespace zkhash::rescue {

State sbox_layer(const State& s, const HashParams& params) {
    State out(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        out[i] = params.field.pow(s[i], params.d);
    }
    return out;
}

State inv_sbox_layer(const State& s, const HashParams& params) {
    State out(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        out[i] = params.field.pow(s[i], params.d_inv);
    }
    return out;
}

State linear_layer(const State& s, uint32_t step_index, const HashParams& params) {
    const auto& slice = params.round_constants.at(step_index / 2);
    uint32_t offset = (step_index % 2) * params.m;
    State out = mds_apply(params.field, params.mds, s);
    for (uint32_t i = 0; i < params.m; ++i) {
        out[i] = params.field.add(out[i], slice[offset + i]);
    }
    return out;
}

State permute(const State& s, const HashParams& params) {
    require_kind(params, HashKind::rescue_prime);
    require_state_size(s, params);
    State cur = s;
    for (uint32_t round = 0; round < params.rounds; ++round) {
        cur = sbox_layer(cur, params);
        cur = linear_layer(cur, 2 * round, params);
        cur = inv_sbox_layer(cur, params);
        cur = linear_layer(cur, 2 * round + 1, params);
    }
    return cur;
}

} // namespace zkhash::rescue
