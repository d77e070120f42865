#pragma once

#include "zkhash/state.hpp"

namespace zkhash::griffin {

/// Lane execution for the nonlinear layer. dual_worker evaluates the
/// expensive inverse power map on a helper thread while the calling thread
/// handles the cheap lanes; meant for single-input (batch size 1) callers,
/// since batched hashing already saturates the cores.
enum class LaneMode { sequential, dual_worker };

/// z * (L^2 + alpha*L + beta) with L = y0_coeff*y0 + y1.
FieldElement g_eval(const FieldElement& z, const FieldElement& y0, const FieldElement& y1,
                    const HashParams& params);

/// (x0^{1/d}, x1^d, g_eval(x2, y0, y1)). Requires m = 3.
State nonlinear_layer(const State& s, const HashParams& params,
                      LaneMode mode = LaneMode::sequential);

/// Initial MDS multiplication, then r rounds of nonlinear layer followed by
/// MDS plus round constants. Throws KindMismatch unless params.kind is
/// griffin.
State permute(const State& s, const HashParams& params,
              LaneMode mode = LaneMode::sequential);

} // namespace zkhash::griffin
