#include "zkhash/state.hpp"

namespace zkhash {

State mds_apply(const FieldSpec& f, const std::vector<std::vector<FieldElement>>& m,
                const State& s) {
    State out(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        FieldElement acc = f.mul(m[i][0], s[0]);
        for (size_t j = 1; j < s.size(); ++j) {
            acc = f.add(acc, f.mul(m[i][j], s[j]));
        }
        out[i] = acc;
    }
    return out;
}

State add_constants(const FieldSpec& f, const State& s, const std::vector<FieldElement>& c) {
    State out(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        out[i] = f.add(s[i], c[i]);
    }
    return out;
}

void require_state_size(const State& s, const HashParams& params) {
    if (s.size() != params.m) {
        throw Error(ErrorCode::state_size_unsupported,
                    "state has " + std::to_string(s.size()) + " elements, parameters expect "
                        + std::to_string(params.m));
    }
}

void require_kind(const HashParams& params, HashKind expected) {
    if (params.kind != expected) {
        throw Error(ErrorCode::kind_mismatch,
                    std::string("parameters are for ") + to_string(params.kind)
                        + ", expected " + to_string(expected));
    }
}

} // namespace zkhash
