#include "zkhash/sponge.hpp"

#include "zkhash/counters.hpp"
#include "zkhash/permutation.hpp"

namespace zkhash {

FieldElement sponge_domain_tag(const HashParams& params, uint32_t rate, uint32_t out_len) {
    uint64_t tag = kind_code(params.kind) | (static_cast<uint64_t>(rate) << 8)
                   | (static_cast<uint64_t>(out_len) << 16);
    return params.field.from_u64(tag);
}

FieldElement node_domain_tag(const HashParams& params) {
    return params.field.from_u64(kind_code(params.kind) | (1ULL << 48));
}

SpongeConfig default_config(const HashParams& params, uint32_t out_len) {
    uint32_t rate = params.m - 1;
    return SpongeConfig{rate, 1, sponge_domain_tag(params, rate, out_len)};
}

Sponge::Sponge(const HashParams& params, SpongeConfig config)
    : params_(&params), config_(config) {
    if (config.rate < 1 || config.capacity < 1
        || config.rate + config.capacity != params.m) {
        throw Error(ErrorCode::config_mismatch,
                    "rate + capacity must equal the state size, both at least 1");
    }
    state_.assign(params.m, params.field.zero());
    state_[params.m - 1] = params.field.add(state_[params.m - 1], config.domain_tag);
}

void Sponge::absorb(std::span<const FieldElement> inputs) {
    if (phase_ != SpongePhase::absorbing) {
        throw Error(ErrorCode::phase_error, "absorb after squeeze has started");
    }
    for (const FieldElement& v : inputs) {
        state_[absorbed_in_block_] = params_->field.add(state_[absorbed_in_block_], v);
        if (++absorbed_in_block_ == config_.rate) {
            state_ = permute(state_, *params_);
            absorbed_in_block_ = 0;
        }
    }
}

std::vector<FieldElement> Sponge::squeeze(uint32_t count) {
    if (phase_ == SpongePhase::absorbing) {
        // Padding: a single 1, zeros to the block boundary, one permutation.
        state_[absorbed_in_block_] = params_->field.add(state_[absorbed_in_block_],
                                                        params_->field.one());
        state_ = permute(state_, *params_);
        absorbed_in_block_ = 0;
        squeezed_in_block_ = 0;
        phase_ = SpongePhase::squeezing;
    }
    std::vector<FieldElement> out;
    out.reserve(count);
    while (out.size() < count) {
        if (squeezed_in_block_ == config_.rate) {
            state_ = permute(state_, *params_);
            squeezed_in_block_ = 0;
        }
        out.push_back(state_[squeezed_in_block_++]);
    }
    return out;
}

std::vector<FieldElement> sponge_hash(const HashParams& params,
                                      std::span<const FieldElement> inputs,
                                      uint32_t out_len) {
    return sponge_hash(params, default_config(params, out_len), inputs, out_len);
}

std::vector<FieldElement> sponge_hash(const HashParams& params, const SpongeConfig& config,
                                      std::span<const FieldElement> inputs, uint32_t out_len) {
    Sponge sponge(params, config);
    sponge.absorb(inputs);
    return sponge.squeeze(out_len);
}

FieldElement compress2to1(const HashParams& params, const FieldElement& a,
                          const FieldElement& b) {
    if (params.m != 3) {
        throw Error(ErrorCode::state_size_unsupported,
                    "2-to-1 compression requires state size 3");
    }
    counters::compressions().fetch_add(1, std::memory_order_relaxed);
    return permute(State{a, b, node_domain_tag(params)}, params)[0];
}

std::vector<FieldElement> pack_bytes(const FieldSpec& field, std::span<const uint8_t> bytes) {
    std::vector<FieldElement> out;
    out.reserve(bytes.size() / 31 + 2);
    for (size_t offset = 0; offset < bytes.size(); offset += 31) {
        std::array<uint8_t, 32> chunk{};
        size_t len = std::min<size_t>(31, bytes.size() - offset);
        std::copy_n(bytes.data() + offset, len, chunk.begin());
        out.push_back(field.from_bytes(chunk));  // < 2^248, always canonical
    }
    out.push_back(field.from_u64(bytes.size()));
    return out;
}

} // namespace zkhash
