#pragma once

#include <vector>

#include "zkhash/params.hpp"

namespace zkhash {

/// The permutation state: exactly params.m field elements.
using State = std::vector<FieldElement>;

/// M * s over the parameter field; rows of m are params.m wide.
State mds_apply(const FieldSpec& f, const std::vector<std::vector<FieldElement>>& m,
                const State& s);

/// Element-wise state + constants.
State add_constants(const FieldSpec& f, const State& s, const std::vector<FieldElement>& c);

void require_state_size(const State& s, const HashParams& params);
void require_kind(const HashParams& params, HashKind expected);

} // namespace zkhash
