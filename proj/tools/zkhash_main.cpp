// Command-line front end: hashing, permutation probing, Merkle workflows,
// parameter validation and the benchmark harness.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zkhash/bench.hpp"
#include "zkhash/merkle.hpp"
#include "zkhash/params.hpp"
#include "zkhash/permutation.hpp"
#include "zkhash/sponge.hpp"

namespace {

using namespace zkhash;

/// Inline comma-separated hex, or a file of newline-separated hex.
std::vector<FieldElement> parse_inputs(const FieldSpec& field, const std::string& value) {
    std::vector<FieldElement> out;
    if (value.empty()) return out;
    if (value.rfind("0x", 0) == 0 || value.find(',') != std::string::npos) {
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) {
            out.push_back(field.from_hex(item));
        }
        return out;
    }
    std::ifstream in(value);
    if (!in) {
        throw Error(ErrorCode::parse_error, "cannot open input file '" + value + "'");
    }
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) out.push_back(field.from_hex(line));
    }
    return out;
}

HashParams load_checked(const std::string& path, const std::string& expected_kind) {
    HashParams params = load_params(path);
    if (!expected_kind.empty() && params.kind != hash_kind_from_string(expected_kind)) {
        throw Error(ErrorCode::kind_mismatch,
                    "parameter file is for " + std::string(to_string(params.kind))
                        + ", --hash requested " + expected_kind);
    }
    return params;
}

int cmd_hash(const std::string& params_path, const std::string& kind,
             const std::string& input, uint32_t out_len) {
    HashParams params = load_checked(params_path, kind);
    std::vector<FieldElement> inputs = parse_inputs(params.field, input);
    for (const FieldElement& v : sponge_hash(params, inputs, out_len)) {
        std::cout << params.field.to_hex(v) << "\n";
    }
    return 0;
}

int cmd_permute(const std::string& params_path, const std::string& kind,
                const std::string& state_csv) {
    HashParams params = load_checked(params_path, kind);
    State state = parse_inputs(params.field, state_csv);
    for (const FieldElement& v : permute(state, params)) {
        std::cout << params.field.to_hex(v) << "\n";
    }
    return 0;
}

int cmd_merkle_build(const std::string& params_path, const std::string& kind,
                     const std::string& leaves_path, const std::string& tree_path) {
    HashParams params = load_checked(params_path, kind);
    std::vector<FieldElement> leaves = parse_inputs(params.field, leaves_path);
    MerkleTree tree = MerkleTree::build(leaves, params);
    if (!tree_path.empty()) tree.save(tree_path);
    std::cout << params.field.to_hex(tree.root()) << "\n";
    return 0;
}

int cmd_merkle_prove(const std::string& params_path, const std::string& kind,
                     const std::string& tree_path, uint64_t index,
                     const std::string& proof_path) {
    HashParams params = load_checked(params_path, kind);
    MerkleTree tree = MerkleTree::load(tree_path, params);
    MerkleProof proof = tree.prove(index);
    if (!proof_path.empty()) {
        save_proof(proof, params.field, proof_path);
    } else {
        std::cout << proof.leaf_index << "\n";
        for (const FieldElement& s : proof.siblings) {
            std::cout << params.field.to_hex(s) << "\n";
        }
    }
    return 0;
}

int cmd_merkle_verify(const std::string& params_path, const std::string& kind,
                      const std::string& root_hex, const std::string& leaf_hex,
                      const std::string& proof_path) {
    HashParams params = load_checked(params_path, kind);
    MerkleProof proof = load_proof(proof_path, params.field);
    bool ok = merkle_verify(params.field.from_hex(root_hex),
                            params.field.from_hex(leaf_hex), proof, params);
    if (!ok) {
        std::cerr << "verification failed\n";
        return 1;
    }
    std::cout << "ok\n";
    return 0;
}

int cmd_params_validate(const std::string& params_path) {
    std::ifstream in(params_path);
    if (!in) {
        throw Error(ErrorCode::parse_error, "cannot open parameter file '" + params_path + "'");
    }
    nlohmann::json doc = nlohmann::json::parse(in);

    std::vector<std::string> violations;
    if (!doc.contains("digest")
        || params_body_digest(doc) != doc.at("digest").get<std::string>()) {
        violations.push_back("digest");
    }
    HashParams params = params_from_json(doc);
    for (const std::string& v : validate(params)) {
        violations.push_back(v);
    }
    for (const std::string& v : violations) {
        std::cout << v << "\n";
    }
    return violations.empty() ? 0 : 1;
}

int cmd_params_show(const std::string& params_path) {
    std::cout << serialize_params(load_params(params_path)).dump(1) << "\n";
    return 0;
}

int cmd_bench(const std::vector<std::string>& params_paths, const std::string& kind,
              uint32_t batch, uint32_t workers, uint32_t iters, uint64_t seed,
              const std::string& target, const std::string& format, bool with_compare) {
    bench::BenchConfig config;
    config.batch_size = batch;
    config.worker_count = workers;
    config.num_batches = iters;
    config.warmup_batches = std::min<uint32_t>(2, iters > 1 ? iters - 1 : 0);
    config.seed = seed;
    config.target = bench::measure_target_from_string(target);

    std::vector<bench::BenchReport> reports;
    for (const std::string& path : params_paths) {
        reports.push_back(bench::run(config, load_checked(path, kind)));
    }
    if (format == "json") {
        std::cout << bench::to_json(reports) << "\n";
    } else {
        std::cout << bench::to_csv(reports);
    }
    if (with_compare && reports.size() >= 2) {
        std::cout << "hash,amortized_latency_us,speedup_vs_first\n";
        for (const auto& row : bench::compare(reports)) {
            std::cout << row.hash_name << ',' << row.amortized_latency_us << ','
                      << row.speedup_vs_first << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ZK-friendly hashing over BN254: Rescue-Prime, Griffin, Reinforced Concrete"};
    app.require_subcommand(1);

    std::string params_path, hash_kind, input, state_csv, leaves, tree, proof, root, leaf;
    std::string format = "csv", target = "permutation";
    uint32_t out_len = 1, batch = 13, workers = 1, iters = 8;
    uint64_t index = 0, seed = 1;
    bool with_compare = false;
    std::vector<std::string> bench_params;

    auto* hash_cmd = app.add_subcommand("hash", "Sponge-hash field elements");
    hash_cmd->add_option("--params", params_path)->required();
    hash_cmd->add_option("--hash", hash_kind);
    hash_cmd->add_option("--input", input);
    hash_cmd->add_option("--out-len", out_len);

    auto* permute_cmd = app.add_subcommand("permute", "Apply the raw permutation to a state");
    permute_cmd->add_option("--params", params_path)->required();
    permute_cmd->add_option("--hash", hash_kind);
    permute_cmd->add_option("--state", state_csv)->required();

    auto* merkle_cmd = app.add_subcommand("merkle", "Merkle tree workflows");
    auto* build_cmd = merkle_cmd->add_subcommand("build", "Build a tree from a leaves file");
    build_cmd->add_option("--params", params_path)->required();
    build_cmd->add_option("--hash", hash_kind);
    build_cmd->add_option("--leaves", leaves)->required();
    build_cmd->add_option("--tree", tree);
    auto* prove_cmd = merkle_cmd->add_subcommand("prove", "Produce a membership proof");
    prove_cmd->add_option("--params", params_path)->required();
    prove_cmd->add_option("--hash", hash_kind);
    prove_cmd->add_option("--tree", tree)->required();
    prove_cmd->add_option("--index", index)->required();
    prove_cmd->add_option("--proof", proof);
    auto* verify_cmd = merkle_cmd->add_subcommand("verify", "Check a membership proof");
    verify_cmd->add_option("--params", params_path)->required();
    verify_cmd->add_option("--hash", hash_kind);
    verify_cmd->add_option("--root", root)->required();
    verify_cmd->add_option("--leaf", leaf)->required();
    verify_cmd->add_option("--proof", proof)->required();
    merkle_cmd->require_subcommand(1);

    auto* params_cmd = app.add_subcommand("params", "Parameter file utilities");
    auto* validate_cmd = params_cmd->add_subcommand("validate", "List violated invariants");
    validate_cmd->add_option("--params", params_path)->required();
    auto* show_cmd = params_cmd->add_subcommand("show", "Print the canonical parameter document");
    show_cmd->add_option("--params", params_path)->required();
    params_cmd->require_subcommand(1);

    auto* bench_cmd = app.add_subcommand("bench", "Amortized latency / throughput measurements");
    bench_cmd->add_option("--params", bench_params)->required();
    bench_cmd->add_option("--hash", hash_kind);
    bench_cmd->add_option("--batch", batch);
    bench_cmd->add_option("--workers", workers);
    bench_cmd->add_option("--iters", iters);
    bench_cmd->add_option("--seed", seed);
    bench_cmd->add_option("--target", target);
    bench_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    bench_cmd->add_flag("--compare", with_compare);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*hash_cmd) return cmd_hash(params_path, hash_kind, input, out_len);
        if (*permute_cmd) return cmd_permute(params_path, hash_kind, state_csv);
        if (*build_cmd) return cmd_merkle_build(params_path, hash_kind, leaves, tree);
        if (*prove_cmd) return cmd_merkle_prove(params_path, hash_kind, tree, index, proof);
        if (*verify_cmd) return cmd_merkle_verify(params_path, hash_kind, root, leaf, proof);
        if (*validate_cmd) return cmd_params_validate(params_path);
        if (*show_cmd) return cmd_params_show(params_path);
        if (*bench_cmd) {
            return cmd_bench(bench_params, hash_kind, batch, workers, iters, seed, target,
                             format, with_compare);
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
