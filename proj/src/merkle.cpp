#include "zkhash/merkle.hpp"

#include <bit>
#include <fstream>
#include <thread>

namespace zkhash {

namespace {

/// Hash all sibling pairs of `below` into `above`, splitting across threads
/// when the level is wide enough to pay for them.
void fill_level(const HashParams& params, const std::vector<FieldElement>& below,
                std::vector<FieldElement>& above) {
    auto work = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            above[i] = compress2to1(params, below[2 * i], below[2 * i + 1]);
        }
    };
    size_t n = above.size();
    unsigned hw = std::thread::hardware_concurrency();
    if (n < 2048 || hw < 2) {
        work(0, n);
        return;
    }
    size_t chunks = std::min<size_t>(hw, 8);
    std::vector<std::thread> threads;
    size_t per = (n + chunks - 1) / chunks;
    for (size_t c = 0; c < chunks; ++c) {
        size_t begin = c * per;
        if (begin >= n) break;
        threads.emplace_back(work, begin, std::min(n, begin + per));
    }
    for (auto& t : threads) t.join();
}

} // namespace

MerkleTree MerkleTree::build(std::span<const FieldElement> leaves, const HashParams& params) {
    if (leaves.empty()) {
        throw Error(ErrorCode::empty_leaves, "a tree needs at least one leaf");
    }
    uint64_t padded = std::bit_ceil(leaves.size());
    if (padded < 2) padded = 2;

    std::vector<std::vector<FieldElement>> levels;
    levels.emplace_back(leaves.begin(), leaves.end());
    levels.front().resize(padded, params.field.zero());

    while (levels.back().size() > 1) {
        std::vector<FieldElement> above(levels.back().size() / 2);
        fill_level(params, levels.back(), above);
        levels.push_back(std::move(above));
    }
    return MerkleTree(params, leaves.size(), std::move(levels));
}

MerkleProof MerkleTree::prove(uint64_t index) const {
    if (index >= leaf_count_) {
        throw Error(ErrorCode::index_out_of_range,
                    "leaf index " + std::to_string(index) + " not below "
                        + std::to_string(leaf_count_));
    }
    MerkleProof proof;
    proof.leaf_index = index;
    proof.siblings.reserve(depth());
    uint64_t pos = index;
    for (uint32_t level = 0; level < depth(); ++level) {
        proof.siblings.push_back(levels_[level][pos ^ 1]);
        pos >>= 1;
    }
    return proof;
}

std::vector<MerkleProof> MerkleTree::batch_prove(std::span<const uint64_t> indices) const {
    std::vector<MerkleProof> proofs;
    proofs.reserve(indices.size());
    for (uint64_t index : indices) {
        proofs.push_back(prove(index));
    }
    return proofs;
}

bool merkle_verify(const FieldElement& root, const FieldElement& leaf,
                   const MerkleProof& proof, const HashParams& params) {
    FieldElement cur = leaf;
    uint64_t pos = proof.leaf_index;
    for (const FieldElement& sibling : proof.siblings) {
        cur = (pos & 1) ? compress2to1(params, sibling, cur)
                        : compress2to1(params, cur, sibling);
        pos >>= 1;
    }
    return cur == root;
}

void MerkleTree::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::parse_error, "cannot write tree file '" + path + "'");
    }
    out << "zkhash-merkle-tree v1\n";
    out << "kind " << to_string(params_->kind) << "\n";
    out << "params_digest " << params_->digest << "\n";
    out << "depth " << depth() << "\n";
    out << "leaf_count " << leaf_count_ << "\n";
    for (const FieldElement& leaf : levels_.front()) {
        out << params_->field.to_hex(leaf) << "\n";
    }
}

MerkleTree MerkleTree::load(const std::string& path, const HashParams& params) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::parse_error, "cannot open tree file '" + path + "'");
    }
    std::string line;
    auto expect_field = [&](const std::string& key) {
        if (!std::getline(in, line) || line.rfind(key + " ", 0) != 0) {
            throw Error(ErrorCode::parse_error, "tree file missing '" + key + "'");
        }
        return line.substr(key.size() + 1);
    };

    if (!std::getline(in, line) || line != "zkhash-merkle-tree v1") {
        throw Error(ErrorCode::parse_error, "not a tree file: '" + path + "'");
    }
    std::string kind = expect_field("kind");
    std::string digest = expect_field("params_digest");
    uint32_t depth = static_cast<uint32_t>(std::stoul(expect_field("depth")));
    uint64_t leaf_count = std::stoull(expect_field("leaf_count"));

    if (hash_kind_from_string(kind) != params.kind || digest != params.digest) {
        throw Error(ErrorCode::validation_error,
                    "tree file was built with different parameters");
    }
    uint64_t padded = 1ULL << depth;
    if (leaf_count == 0 || leaf_count > padded) {
        throw Error(ErrorCode::parse_error, "tree file has inconsistent leaf counts");
    }

    std::vector<FieldElement> level0;
    level0.reserve(padded);
    for (uint64_t i = 0; i < padded; ++i) {
        if (!std::getline(in, line)) {
            throw Error(ErrorCode::parse_error, "tree file truncated");
        }
        level0.push_back(params.field.from_hex(line));
    }

    MerkleTree tree = build(level0, params);
    tree.leaf_count_ = leaf_count;
    return tree;
}

void save_proof(const MerkleProof& proof, const FieldSpec& field, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::parse_error, "cannot write proof file '" + path + "'");
    }
    out << proof.leaf_index << "\n";
    for (const FieldElement& sibling : proof.siblings) {
        out << field.to_hex(sibling) << "\n";
    }
}

MerkleProof load_proof(const std::string& path, const FieldSpec& field) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::parse_error, "cannot open proof file '" + path + "'");
    }
    MerkleProof proof;
    std::string line;
    if (!std::getline(in, line)) {
        throw Error(ErrorCode::parse_error, "proof file is empty");
    }
    proof.leaf_index = std::stoull(line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        proof.siblings.push_back(field.from_hex(line));
    }
    return proof;
}

} // namespace zkhash
