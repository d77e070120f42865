#pragma once

#include <stdexcept>
#include <string>

namespace zkhash {

enum class ErrorCode {
    zero_inverse,
    non_canonical_encoding,
    parse_error,
    validation_error,
    kind_mismatch,
    state_size_unsupported,
    phase_error,
    config_mismatch,
    empty_leaves,
    index_out_of_range,
    divisor_too_small,
    scale_too_small,
    dividend_too_large,
    mismatched_targets,
};

/// Domain error carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace zkhash
