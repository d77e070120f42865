#include "zkhash/griffin.hpp"

#include <cassert>
#include <future>

namespace zkhash::griffin {

FieldElement g_eval(const FieldElement& z, const FieldElement& y0, const FieldElement& y1,
                    const HashParams& params) {
    const FieldSpec& f = params.field;
    const GriffinParams& g = *params.griffin;
    FieldElement ell = f.add(f.mul(g.y0_coeff, y0), y1);
    FieldElement quad = f.add(f.add(f.mul(ell, ell), f.mul(g.alpha, ell)), g.beta);
    return f.mul(z, quad);
}

State nonlinear_layer(const State& s, const HashParams& params, LaneMode mode) {
    if (params.m != 3 || s.size() != 3) {
        throw Error(ErrorCode::state_size_unsupported,
                    "griffin nonlinear layer supports state size 3 only");
    }
    const FieldSpec& f = params.field;

    FieldElement y0;
    FieldElement y1;
    if (mode == LaneMode::dual_worker) {
        auto inverse_lane = std::async(std::launch::async,
                                       [&] { return f.pow(s[0], params.d_inv); });
        y1 = f.pow(s[1], params.d);
        y0 = inverse_lane.get();
    } else {
        y0 = f.pow(s[0], params.d_inv);
        y1 = f.pow(s[1], params.d);
    }
    assert(f.pow(y0, params.d) == s[0]);  // inverse-lane identity
    return State{y0, y1, g_eval(s[2], y0, y1, params)};
}

State permute(const State& s, const HashParams& params, LaneMode mode) {
    require_kind(params, HashKind::griffin);
    require_state_size(s, params);
    State cur = mds_apply(params.field, params.mds, s);
    for (uint32_t round = 0; round < params.rounds; ++round) {
        cur = nonlinear_layer(cur, params, mode);
        cur = mds_apply(params.field, params.mds, cur);
        cur = add_constants(params.field, cur, params.round_constants[round]);
    }
    return cur;
}

} // namespace zkhash::griffin
