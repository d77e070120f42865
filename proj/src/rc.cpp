#include "zkhash/rc.hpp"

#include <cassert>

#include "zkhash/counters.hpp"

namespace zkhash::rc {

State concrete(const State& s, uint32_t round_index, const HashParams& params) {
    State out = mds_apply(params.field, params.mds, s);
    return add_constants(params.field, out, params.round_constants.at(round_index));
}

State bricks(const State& s, const HashParams& params) {
    const FieldSpec& f = params.field;
    const RcParams& rc = *params.rc;
    FieldElement q1 = f.add(f.add(f.mul(s[0], s[0]), f.mul(rc.alpha1, s[0])), rc.beta1);
    FieldElement q2 = f.add(f.add(f.mul(s[1], s[1]), f.mul(rc.alpha2, s[1])), rc.beta2);
    return State{f.pow(s[0], params.d), f.mul(s[1], q1), f.mul(s[2], q2)};
}

DigitVector decomp(const FieldElement& x, const HashParams& params) {
    const RcBarParams& bar = params.rc->bar;
    size_t n = bar.radices.size();
    DigitVector dv;
    dv.digits.resize(n);

    U256 rem = params.field.to_canonical(x);
    for (size_t i = n; i-- > 1;) {
        fastdiv::DivRem qr = fastdiv::divrem(rem, bar.reciprocals.entries[i]);
        dv.digits[i] = static_cast<uint32_t>(qr.remainder);
        rem = qr.quotient;
    }
    // The leading digit is the final quotient; the radix product exceeds p,
    // so it is in range.
    assert(rem.limbs[1] == 0 && rem.limbs[2] == 0 && rem.limbs[3] == 0);
    dv.digits[0] = static_cast<uint32_t>(rem.limbs[0]);

#ifndef NDEBUG
    for (size_t i = 0; i < n; ++i) {
        assert(dv.digits[i] < bar.radices[i]);
    }
#endif
    return dv;
}

DigitVector sbox_digits(const DigitVector& dv, const HashParams& params) {
    const RcBarParams& bar = params.rc->bar;
    DigitVector out;
    out.digits.resize(dv.digits.size());
    for (size_t i = 0; i < dv.digits.size(); ++i) {
        out.digits[i] = bar.sbox_tables[i][dv.digits[i]];
    }
    return out;
}

FieldElement comp(const DigitVector& dv, const HashParams& params) {
    const RcBarParams& bar = params.rc->bar;
    // acc = acc * s_i + digit_i; the value never exceeds the radix product,
    // which load-time validation keeps below 2^256, so no per-step
    // reduction is needed.
    U256 acc(dv.digits[0]);
    for (size_t i = 1; i < dv.digits.size(); ++i) {
        uint64_t s = bar.radices[i];
        uint64_t carry = dv.digits[i];
        for (int limb = 0; limb < 4; ++limb) {
            uint128_t v = static_cast<uint128_t>(acc.limbs[limb]) * s + carry;
            acc.limbs[limb] = static_cast<uint64_t>(v);
            carry = static_cast<uint64_t>(v >> 64);
        }
        assert(carry == 0);
    }
    return params.field.reduce_wide(acc);
}

FieldElement bar(const FieldElement& x, const HashParams& params) {
    return comp(sbox_digits(decomp(x, params), params), params);
}

State bars(const State& s, const HashParams& params) {
    counters::bars_executions().fetch_add(1, std::memory_order_relaxed);
    State out(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        out[i] = bar(s[i], params);
    }
    return out;
}

State permute(const State& s, const HashParams& params) {
    require_kind(params, HashKind::reinforced_concrete);
    if (params.m != 3) {
        throw Error(ErrorCode::state_size_unsupported, "rc supports state size 3 only");
    }
    require_state_size(s, params);

    State cur = s;
    uint32_t concrete_index = 0;
    for (RcComponent step : params.rc->schedule) {
        switch (step) {
            case RcComponent::concrete:
                cur = concrete(cur, concrete_index++, params);
                break;
            case RcComponent::bricks:
                cur = bricks(cur, params);
                break;
            case RcComponent::bars:
                cur = bars(cur, params);
                break;
        }
    }
    return cur;
}

} // namespace zkhash::rc
