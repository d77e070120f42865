// Acceptance suite: every criterion below runs at its pinned tolerance and
// prints exactly one [PASS]/[FAIL]/[SKIP] line. The process exits nonzero
// when any criterion fails. Run it via ctest (test name "acceptance") or
// directly from the build tree.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "zkhash/bench.hpp"
#include "zkhash/counters.hpp"
#include "zkhash/merkle.hpp"
#include "zkhash/params.hpp"
#include "zkhash/permutation.hpp"
#include "zkhash/rc.hpp"
#include "zkhash/rescue.hpp"
#include "zkhash/griffin.hpp"
#include "zkhash/sponge.hpp"

#ifndef ZKHASH_SOURCE_DIR
#error "ZKHASH_SOURCE_DIR must point at the repository root"
#endif

namespace {

using namespace zkhash;
namespace mp = boost::multiprecision;
using Clock = std::chrono::steady_clock;

std::string source_path(const std::string& rel) {
    return std::string(ZKHASH_SOURCE_DIR) + "/" + rel;
}

mp::cpp_int to_int(const U256& v) {
    mp::cpp_int out = 0;
    for (int i = 3; i >= 0; --i) {
        out <<= 64;
        out += v.limbs[i];
    }
    return out;
}

mp::cpp_int to_int(const FieldSpec& f, const FieldElement& x) {
    return to_int(f.to_canonical(x));
}

enum class Outcome { pass, fail, skip };

struct CheckResult {
    Outcome outcome = Outcome::fail;
    std::string details;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// --- 1. field oracle equivalence ------------------------------------------

CheckResult field_oracle_equivalence() {
    auto start = Clock::now();
    const FieldSpec& f = FieldSpec::bn254_scalar();
    mp::cpp_int p = to_int(f.modulus());

    std::mt19937_64 rng(0x5eed0001);
    for (int i = 0; i < 1000000; ++i) {
        FieldElement a = f.random_element(rng);
        FieldElement b = f.random_element(rng);
        mp::cpp_int ai = to_int(f, a);
        mp::cpp_int bi = to_int(f, b);
        if (to_int(f, f.mul(a, b)) != ai * bi % p) return {Outcome::fail, "mul mismatch"};
        if (to_int(f, f.add(a, b)) != (ai + bi) % p) return {Outcome::fail, "add mismatch"};
        if (to_int(f, f.sub(a, b)) != ((ai - bi) % p + p) % p) {
            return {Outcome::fail, "sub mismatch"};
        }
    }
    double random_s = seconds_since(start);
    for (int i = 0; i < 10000; ++i) {
        FieldElement x = f.random_element(rng);
        U256 e;
        for (auto& limb : e.limbs) limb = rng();
        e.limbs[3] >>= 8;  // keep the exponent below 2^248 < 2^254
        if (to_int(f, f.pow(x, e)) != mp::powm(to_int(f, x), to_int(e), p)) {
            return {Outcome::fail, "pow mismatch"};
        }
    }
    double pow_s = seconds_since(start) - random_s;

    // Exhaustive sweep over the 16-bit prime 32771: all ordered pairs for
    // mul/add/sub in one pass (expected indices tracked incrementally, so
    // the oracle side costs no divisions), then all bases with exponents
    // 0..16 for pow.
    const uint32_t p16 = 32771;
    FieldSpec f16 = FieldSpec::from_modulus_decimal("32771");
    std::vector<FieldElement> table(p16);
    for (uint32_t i = 0; i < p16; ++i) table[i] = f16.from_u64(i);

    auto diff_mask = [](const FieldElement& x, const FieldElement& y) {
        return (x.limbs[0] ^ y.limbs[0]) | (x.limbs[1] ^ y.limbs[1])
               | (x.limbs[2] ^ y.limbs[2]) | (x.limbs[3] ^ y.limbs[3]);
    };
    for (uint32_t a = 0; a < p16; ++a) {
        const FieldElement fa = table[a];
        uint32_t exp_mul = 0, exp_add = a, exp_sub = a;
        uint64_t row_bad = 0;
        for (uint32_t b = 0; b < p16; ++b) {
            const FieldElement& fb = table[b];
            row_bad |= diff_mask(f16.mul(fa, fb), table[exp_mul]);
            row_bad |= diff_mask(f16.add(fa, fb), table[exp_add]);
            row_bad |= diff_mask(f16.sub(fa, fb), table[exp_sub]);
            exp_mul += a;
            if (exp_mul >= p16) exp_mul -= p16;
            if (++exp_add >= p16) exp_add -= p16;
            exp_sub = exp_sub == 0 ? p16 - 1 : exp_sub - 1;
        }
        if (row_bad != 0) {
            return {Outcome::fail, "toy mul/add/sub mismatch in row " + std::to_string(a)};
        }
    }
    for (uint32_t a = 0; a < p16; ++a) {
        uint64_t expected = 1;
        for (uint64_t e = 0; e <= 16; ++e) {
            if (f16.pow(table[a], e) != table[expected]) {
                return {Outcome::fail, "toy pow mismatch"};
            }
            expected = expected * a % p16;
        }
    }

    double elapsed = seconds_since(start);
    std::ostringstream details;
    details << "10^6 random triples + 10^4 pows on BN254, exhaustive pairs over p=32771, "
            << std::fixed;
    details.precision(1);
    details << elapsed << "s (random " << random_s << "s, pow " << pow_s << "s, sweep "
            << elapsed - random_s - pow_s << "s)";
    if (elapsed >= 60.0) return {Outcome::fail, details.str() + " (budget 60s exceeded)"};
    return {Outcome::pass, details.str()};
}

// --- 2. power-map inverse identity ----------------------------------------

CheckResult power_map_inverse() {
    HashParams params = load_params(source_path("params/rescue_bn254.json"));
    const FieldSpec& f = params.field;
    std::mt19937_64 rng(0x5eed0002);
    for (int i = 0; i < 10000; ++i) {
        FieldElement x = f.random_element(rng);
        if (f.pow(f.pow(x, 5), params.d_inv) != x) {
            return {Outcome::fail, "pow(pow(x,5), d_inv) != x"};
        }
    }
    return {Outcome::pass, "10^4 random x, exact"};
}

// --- 3. permutation bijectivity at toy scale -------------------------------

CheckResult toy_bijectivity() {
    auto start = Clock::now();

    {
        HashParams p = tiny_params(HashKind::rescue_prime);
        uint64_t mod = p.field.modulus().limbs[0];
        std::set<std::pair<uint64_t, uint64_t>> images;
        for (uint64_t a = 0; a < mod; ++a) {
            for (uint64_t b = 0; b < mod; ++b) {
                State out = rescue::permute({p.field.from_u64(a), p.field.from_u64(b)}, p);
                images.emplace(p.field.to_canonical(out[0]).limbs[0],
                               p.field.to_canonical(out[1]).limbs[0]);
            }
        }
        if (images.size() != mod * mod) return {Outcome::fail, "rescue collision"};
    }

    for (HashKind kind : {HashKind::griffin, HashKind::reinforced_concrete}) {
        HashParams p = tiny_params(kind);
        uint64_t mod = p.field.modulus().limbs[0];
        std::set<std::array<uint64_t, 3>> images;
        for (uint64_t a = 0; a < mod; ++a) {
            for (uint64_t b = 0; b < mod; ++b) {
                for (uint64_t c = 0; c < mod; ++c) {
                    State out = permute(
                        {p.field.from_u64(a), p.field.from_u64(b), p.field.from_u64(c)}, p);
                    images.insert({p.field.to_canonical(out[0]).limbs[0],
                                   p.field.to_canonical(out[1]).limbs[0],
                                   p.field.to_canonical(out[2]).limbs[0]});
                }
            }
        }
        if (images.size() != mod * mod * mod) {
            return {Outcome::fail, std::string(to_string(kind)) + " collision"};
        }
    }

    {
        HashParams toy = toy_params(HashKind::reinforced_concrete);
        std::set<uint64_t> images;
        for (uint64_t v = 0; v < 1013; ++v) {
            images.insert(
                toy.field.to_canonical(rc::bar(toy.field.from_u64(v), toy)).limbs[0]);
        }
        if (images.size() != 1013) return {Outcome::fail, "bar collision"};
    }

    double elapsed = seconds_since(start);
    std::ostringstream details;
    details << "rescue 23^2, griffin/rc 23^3, bar 1013: zero collisions, " << std::fixed;
    details.precision(1);
    details << elapsed << "s";
    if (elapsed >= 120.0) return {Outcome::fail, details.str() + " (budget 120s exceeded)"};
    return {Outcome::pass, details.str()};
}

// --- 4. decomp/comp roundtrip ----------------------------------------------

CheckResult decomp_comp_roundtrip() {
    HashParams p = load_params(source_path("params/rc_bn254.json"));
    std::mt19937_64 rng(0x5eed0004);
    for (int i = 0; i < 1000000; ++i) {
        FieldElement x = p.field.random_element(rng);
        if (rc::comp(rc::decomp(x, p), p) != x) {
            return {Outcome::fail, "roundtrip mismatch at BN254 scale"};
        }
    }
    HashParams toy = toy_params(HashKind::reinforced_concrete);
    for (uint64_t v = 0; v < 1013; ++v) {
        FieldElement x = toy.field.from_u64(v);
        if (rc::comp(rc::decomp(x, toy), toy) != x) {
            return {Outcome::fail, "roundtrip mismatch at toy scale"};
        }
    }
    return {Outcome::pass, "10^6 random BN254 elements + exhaustive toy field, exact"};
}

// --- 5. known-answer vectors -----------------------------------------------

CheckResult known_answer_vectors() {
    size_t total = 0;
    for (const char* name : {"rescue_bn254", "griffin_bn254", "rc_bn254"}) {
        std::ifstream in(source_path("tests/vectors/" + std::string(name) + "_kat.json"));
        if (!in) return {Outcome::fail, std::string("missing vector file for ") + name};
        nlohmann::json kat;
        in >> kat;
        HashParams p = load_params(
            source_path("params/" + kat.at("params_file").get<std::string>()));
        if (p.digest != kat.at("params_digest").get<std::string>()) {
            return {Outcome::fail, std::string(name) + ": parameter digest drift"};
        }

        size_t digests = 0;
        for (const auto& vec : kat.at("sponge")) {
            std::vector<FieldElement> inputs;
            for (const auto& h : vec.at("inputs")) inputs.push_back(p.field.from_hex(h));
            auto out = sponge_hash(p, inputs, vec.at("out_len").get<uint32_t>());
            const auto& expected = vec.at("digest");
            if (out.size() != expected.size()) {
                return {Outcome::fail, std::string(name) + ": digest length mismatch"};
            }
            for (size_t i = 0; i < out.size(); ++i) {
                if (p.field.to_hex(out[i]) != expected[i].get<std::string>()) {
                    return {Outcome::fail, std::string(name) + ": digest mismatch"};
                }
            }
            ++digests;
        }
        if (digests < 100) {
            return {Outcome::fail, std::string(name) + ": fewer than 100 digests"};
        }

        for (const auto& vec : kat.at("permutation")) {
            State in;
            for (const auto& h : vec.at("in")) in.push_back(p.field.from_hex(h));
            State out = permute(in, p);
            const auto& expected = vec.at("out");
            for (size_t i = 0; i < out.size(); ++i) {
                if (p.field.to_hex(out[i]) != expected[i].get<std::string>()) {
                    return {Outcome::fail, std::string(name) + ": permutation mismatch"};
                }
            }
        }
        total += digests;
    }
    return {Outcome::pass, std::to_string(total) + " digests byte-exact across three hashes"};
}

// --- 6. merkle correctness ---------------------------------------------------

CheckResult merkle_correctness() {
    auto start = Clock::now();
    HashParams p = load_params(source_path("params/rc_bn254.json"));
    std::mt19937_64 rng(0x5eed0006);

    const size_t n = 1ULL << 16;
    std::vector<FieldElement> leaves;
    leaves.reserve(n);
    for (size_t i = 0; i < n; ++i) leaves.push_back(p.field.random_element(rng));

    counters::reset_all();
    MerkleTree tree = MerkleTree::build(leaves, p);
    uint64_t compressions = counters::compressions().load();
    if (compressions != n - 1) {
        return {Outcome::fail,
                "build used " + std::to_string(compressions) + " compressions, expected "
                    + std::to_string(n - 1)};
    }

    for (int i = 0; i < 1000; ++i) {
        uint64_t index = rng() % n;
        MerkleProof proof = tree.prove(index);
        if (!merkle_verify(tree.root(), leaves[index], proof, p)) {
            return {Outcome::fail, "honest proof rejected"};
        }
    }

    for (int i = 0; i < 10000; ++i) {
        uint64_t index = rng() % n;
        MerkleProof proof = tree.prove(index);
        FieldElement leaf = leaves[index];
        FieldElement root = tree.root();
        FieldElement delta = p.field.from_u64(1 + rng() % 0xffff);
        switch (rng() % 3) {
            case 0: leaf = p.field.add(leaf, delta); break;
            case 1: {
                size_t pos = rng() % proof.siblings.size();
                proof.siblings[pos] = p.field.add(proof.siblings[pos], delta);
                break;
            }
            default: root = p.field.add(root, delta);
        }
        if (merkle_verify(root, leaf, proof, p)) {
            return {Outcome::fail, "tampered proof accepted"};
        }
    }

    double elapsed = seconds_since(start);
    std::ostringstream details;
    details << "2^16 leaves, 10^3 honest proofs true, 10^4 tamperings false, "
            << (n - 1) << " compressions, " << std::fixed;
    details.precision(1);
    details << elapsed << "s";
    if (elapsed >= 300.0) return {Outcome::fail, details.str() + " (budget 5min exceeded)"};
    return {Outcome::pass, details.str()};
}

// --- 7. performance ordering -------------------------------------------------

CheckResult performance_ordering() {
    auto start = Clock::now();
    bench::BenchConfig config;
    config.batch_size = 13;
    config.num_batches = 4;
    config.warmup_batches = 1;
    config.worker_count = 1;
    config.seed = 0x5eed0007;
    config.target = bench::MeasureTarget::permutation;

    std::vector<bench::BenchReport> reports;
    for (const char* name : {"rc_bn254.json", "griffin_bn254.json", "rescue_bn254.json"}) {
        reports.push_back(bench::run(config, load_params(source_path("params/" + std::string(name)))));
    }
    double rc_us = reports[0].amortized_latency_us;
    double griffin_us = reports[1].amortized_latency_us;
    double rescue_us = reports[2].amortized_latency_us;

    std::ostringstream details;
    details << std::fixed;
    details.precision(2);
    details << "rc " << rc_us << "us < griffin " << griffin_us << "us < rescue "
            << rescue_us << "us, rescue/rc " << rescue_us / rc_us << "x";

    if (!(rc_us < griffin_us && griffin_us < rescue_us)) {
        return {Outcome::fail, details.str() + " (ordering violated)"};
    }
    if (rescue_us / rc_us < 10.0) {
        return {Outcome::fail, details.str() + " (rc not 10x faster than rescue)"};
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 300.0) return {Outcome::fail, details.str() + " (budget 5min exceeded)"};
    return {Outcome::pass, details.str()};
}

// --- 8. sponge consistency ---------------------------------------------------

CheckResult sponge_consistency() {
    HashParams p = load_params(source_path("params/rc_bn254.json"));
    std::mt19937_64 rng(0x5eed0008);
    const uint32_t rate = 2;

    for (int trial = 0; trial < 10000; ++trial) {
        size_t len = rng() % 9;
        std::vector<FieldElement> inputs;
        inputs.reserve(len);
        for (size_t i = 0; i < len; ++i) inputs.push_back(p.field.random_element(rng));
        size_t split = len == 0 ? 0 : rng() % (len + 1);

        counters::reset_all();
        Sponge whole(p, default_config(p, 2));
        whole.absorb(inputs);
        auto direct = whole.squeeze(2);
        uint64_t permutes = counters::permutations().load();
        uint64_t expected = (len + 1 + rate - 1) / rate;
        if (permutes != expected) {
            return {Outcome::fail,
                    "absorb+pad ran " + std::to_string(permutes) + " permutations, expected "
                        + std::to_string(expected)};
        }

        Sponge split_sponge(p, default_config(p, 2));
        split_sponge.absorb(std::span(inputs).first(split));
        split_sponge.absorb(std::span(inputs).subspan(split));
        auto left = split_sponge.squeeze(1);
        auto right = split_sponge.squeeze(1);
        if (direct[0] != left[0] || direct[1] != right[0]) {
            return {Outcome::fail, "split-invariance violated"};
        }
    }
    return {Outcome::pass, "10^4 random splits, permutation count exact"};
}

// --- 9. parallel scaling -----------------------------------------------------

CheckResult parallel_scaling() {
    unsigned cores = std::thread::hardware_concurrency();

    bench::BenchConfig config;
    config.batch_size = 13;
    config.num_batches = 4;
    config.warmup_batches = 1;
    config.seed = 0x5eed0009;
    config.target = bench::MeasureTarget::full_hash;

    HashParams p = load_params(source_path("params/rc_bn254.json"));
    config.worker_count = 1;
    bench::BenchReport one = bench::run(config, p);
    config.worker_count = 4;
    bench::BenchReport four = bench::run(config, p);
    double ratio = four.throughput_kops / one.throughput_kops;

    std::ostringstream details;
    details << std::fixed;
    details.precision(2);
    details << "4-worker/1-worker throughput " << ratio << "x on " << cores << " cores";

    if (cores < 4) {
        return {Outcome::skip,
                details.str() + " (criterion preconditions a >= 4-core machine)"};
    }
    if (ratio < 2.5) return {Outcome::fail, details.str() + " (< 2.5x)"};
    return {Outcome::pass, details.str()};
}

struct Criterion {
    int id;
    const char* name;
    std::function<CheckResult()> run;
};

} // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria = {
        {1, "field oracle equivalence", field_oracle_equivalence},
        {2, "power-map inverse identity", power_map_inverse},
        {3, "permutation bijectivity at toy scale", toy_bijectivity},
        {4, "decomp/comp roundtrip", decomp_comp_roundtrip},
        {5, "known-answer vectors", known_answer_vectors},
        {6, "merkle correctness", merkle_correctness},
        {7, "performance ordering", performance_ordering},
        {8, "sponge consistency", sponge_consistency},
        {9, "parallel scaling", parallel_scaling},
    };

    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failures = 0;
    for (const Criterion& criterion : criteria) {
        if (only != 0 && criterion.id != only) continue;
        CheckResult result;
        try {
            result = criterion.run();
        } catch (const std::exception& e) {
            result = {Outcome::fail, std::string("exception: ") + e.what()};
        }
        const char* label = result.outcome == Outcome::pass ? "PASS"
                            : result.outcome == Outcome::skip ? "SKIP"
                                                              : "FAIL";
        std::printf("[%s] %d. %s — %s\n", label, criterion.id, criterion.name,
                    result.details.c_str());
        std::fflush(stdout);
        if (result.outcome == Outcome::fail) ++failures;
    }
    return failures;
}
