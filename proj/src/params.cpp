#include "zkhash/params.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>
#include <openssl/evp.h>

#include "boost_convert.hpp"

namespace zkhash {

namespace {

namespace mp = boost::multiprecision;
using nlohmann::json;

std::string sha256_hex(const std::string& data) {
    unsigned char md[32];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(64);
    for (unsigned i = 0; i < len; ++i) {
        out.push_back(digits[md[i] >> 4]);
        out.push_back(digits[md[i] & 0xf]);
    }
    return out;
}

const char* to_string(RcComponent c) {
    switch (c) {
        case RcComponent::concrete: return "concrete";
        case RcComponent::bricks: return "bricks";
        case RcComponent::bars: return "bars";
    }
    return "?";
}

RcComponent rc_component_from_string(const std::string& s) {
    if (s == "concrete") return RcComponent::concrete;
    if (s == "bricks") return RcComponent::bricks;
    if (s == "bars") return RcComponent::bars;
    throw Error(ErrorCode::parse_error, "unknown schedule component '" + s + "'");
}

/// Is x a quadratic non-residue? (Euler's criterion; zero is neither.)
bool is_nonresidue(const FieldSpec& f, const FieldElement& x) {
    if (f.is_zero(x)) return false;
    U256 e = f.modulus();
    for (int i = 0; i < 4; ++i) {
        uint64_t hi = i < 3 ? e.limbs[i + 1] : 0;
        e.limbs[i] = (e.limbs[i] >> 1) | (hi << 63);  // (p-1)/2 for odd p
    }
    return f.pow(x, e) == f.neg(f.one());
}

bool quadratic_nondegenerate(const FieldSpec& f, const FieldElement& alpha,
                             const FieldElement& beta) {
    FieldElement disc = f.sub(f.mul(alpha, alpha),
                              f.mul(f.from_u64(4), beta));
    return is_nonresidue(f, disc);
}

uint32_t expected_constants_per_round(const HashParams& p) {
    return p.kind == HashKind::rescue_prime ? 2 * p.m : p.m;
}

void check_mds(const HashParams& p, std::vector<std::string>& out) {
    const auto& f = p.field;
    uint32_t n = p.m;
    if (p.mds.size() != n) {
        out.push_back("mds_shape");
        return;
    }
    for (const auto& row : p.mds) {
        if (row.size() != n) {
            out.push_back("mds_shape");
            return;
        }
    }

    bool entry_zero = false;
    for (const auto& row : p.mds) {
        for (const auto& v : row) {
            entry_zero = entry_zero || f.is_zero(v);
        }
    }
    if (entry_zero) out.push_back("mds_entry");

    bool minor_zero = false;
    for (uint32_t r0 = 0; r0 < n; ++r0) {
        for (uint32_t r1 = r0 + 1; r1 < n; ++r1) {
            for (uint32_t c0 = 0; c0 < n; ++c0) {
                for (uint32_t c1 = c0 + 1; c1 < n; ++c1) {
                    FieldElement minor = f.sub(f.mul(p.mds[r0][c0], p.mds[r1][c1]),
                                               f.mul(p.mds[r0][c1], p.mds[r1][c0]));
                    minor_zero = minor_zero || f.is_zero(minor);
                }
            }
        }
    }
    if (minor_zero) out.push_back("mds_minor");

    if (n == 3) {
        const auto& m = p.mds;
        FieldElement det = f.sub(
            f.add(f.mul(m[0][0], f.sub(f.mul(m[1][1], m[2][2]), f.mul(m[1][2], m[2][1]))),
                  f.mul(m[0][2], f.sub(f.mul(m[1][0], m[2][1]), f.mul(m[1][1], m[2][0])))),
            f.mul(m[0][1], f.sub(f.mul(m[1][0], m[2][2]), f.mul(m[1][2], m[2][0]))));
        if (f.is_zero(det)) out.push_back("mds_invertible");
    }
    // n == 2: the single 2x2 minor above is the determinant.
}

} // namespace

const char* to_string(HashKind kind) {
    switch (kind) {
        case HashKind::rescue_prime: return "rescue_prime";
        case HashKind::griffin: return "griffin";
        case HashKind::reinforced_concrete: return "reinforced_concrete";
    }
    return "?";
}

HashKind hash_kind_from_string(const std::string& name) {
    if (name == "rescue_prime") return HashKind::rescue_prime;
    if (name == "griffin") return HashKind::griffin;
    if (name == "reinforced_concrete") return HashKind::reinforced_concrete;
    throw Error(ErrorCode::parse_error, "unknown hash kind '" + name + "'");
}

std::string params_body_digest(json body) {
    body.erase("digest");
    return sha256_hex(body.dump());
}

std::vector<std::string> validate(const HashParams& p) {
    std::vector<std::string> out;
    const auto& f = p.field;

    bool needs_griffin = p.kind == HashKind::griffin;
    bool needs_rc = p.kind == HashKind::reinforced_concrete;
    if (p.griffin.has_value() != needs_griffin || p.rc.has_value() != needs_rc) {
        out.push_back("kind_extension");
    }
    if (p.m < 2 || (p.kind != HashKind::rescue_prime && p.m != 3)) {
        out.push_back("state_size");
    }

    mp::cpp_int pm1 = detail::to_cpp_int(f.modulus()) - 1;
    if (mp::gcd(mp::cpp_int(p.d), pm1) != 1) {
        out.push_back("gcd");
    } else if (mp::cpp_int(p.d) * detail::to_cpp_int(p.d_inv) % pm1 != 1) {
        out.push_back("d_inv");
    }

    check_mds(p, out);

    if (p.rounds < 1) out.push_back("rounds");
    bool constants_ok = p.round_constants.size() == p.rounds;
    for (const auto& slice : p.round_constants) {
        constants_ok = constants_ok && slice.size() == expected_constants_per_round(p);
    }
    if (!constants_ok) out.push_back("round_constants");

    if (p.griffin && !quadratic_nondegenerate(f, p.griffin->alpha, p.griffin->beta)) {
        out.push_back("griffin_quadratic");
    }

    if (p.rc) {
        const RcParams& rc = *p.rc;
        size_t bars_count = 0;
        size_t concrete_count = 0;
        for (RcComponent c : rc.schedule) {
            bars_count += c == RcComponent::bars;
            concrete_count += c == RcComponent::concrete;
        }
        if (bars_count != 1) out.push_back("schedule_bars");
        if (concrete_count != p.rounds) out.push_back("rounds");

        if (!quadratic_nondegenerate(f, rc.alpha1, rc.beta1)
            || !quadratic_nondegenerate(f, rc.alpha2, rc.beta2)) {
            out.push_back("bricks_quadratic");
        }

        const RcBarParams& bar = rc.bar;
        bool radix_values_ok = !bar.radices.empty();
        mp::cpp_int product = 1;
        for (uint32_t s : bar.radices) {
            if (s < 2) radix_values_ok = false;
            product *= s;
        }
        if (!radix_values_ok) out.push_back("radix_value");
        if (product <= detail::to_cpp_int(f.modulus())) out.push_back("radix_coverage");
        if (product >= (mp::cpp_int(1) << 256)) out.push_back("radix_width");

        if (bar.sbox_tables.size() != bar.radices.size()) {
            out.push_back("sbox_shape");
        } else {
            bool bijective = true;
            for (size_t i = 0; i < bar.radices.size(); ++i) {
                const auto& table = bar.sbox_tables[i];
                uint32_t s = bar.radices[i];
                if (table.size() != s) {
                    bijective = false;
                    break;
                }
                std::vector<bool> seen(s, false);
                for (uint32_t v : table) {
                    if (v >= s || seen[v]) {
                        bijective = false;
                        break;
                    }
                    seen[v] = true;
                }
            }
            if (!bijective) out.push_back("sbox_bijection");
            // Tables are positional; equal radix values must agree.
            for (size_t i = 0; i < bar.radices.size() && bijective; ++i) {
                for (size_t j = i + 1; j < bar.radices.size(); ++j) {
                    if (bar.radices[i] == bar.radices[j]
                        && bar.sbox_tables[i] != bar.sbox_tables[j]) {
                        out.push_back("sbox_consistency");
                        i = bar.radices.size();
                        break;
                    }
                }
            }
        }

        bool recip_ok = bar.reciprocals.entries.size() == bar.radices.size();
        for (size_t i = 0; recip_ok && i < bar.radices.size(); ++i) {
            recip_ok = bar.reciprocals.entries[i].divisor == bar.radices[i];
        }
        if (!recip_ok) out.push_back("reciprocals");
    }

    return out;
}

HashParams params_from_json(const json& doc) {
    try {
        HashParams p;
        p.kind = hash_kind_from_string(doc.at("kind").get<std::string>());
        p.field = FieldSpec::from_modulus_decimal(
            doc.at("field").at("modulus").get<std::string>());
        p.m = doc.at("m").get<uint32_t>();
        p.d = doc.at("d").get<uint32_t>();
        p.d_inv = u256_from_decimal(doc.at("d_inv").get<std::string>());
        p.rounds = doc.at("rounds").get<uint32_t>();

        auto parse_matrix = [&](const json& rows) {
            std::vector<std::vector<FieldElement>> out;
            for (const auto& row : rows) {
                std::vector<FieldElement> r;
                for (const auto& v : row) {
                    r.push_back(p.field.from_hex(v.get<std::string>()));
                }
                out.push_back(std::move(r));
            }
            return out;
        };
        p.mds = parse_matrix(doc.at("mds"));
        p.round_constants = parse_matrix(doc.at("round_constants"));

        if (doc.contains("griffin")) {
            const json& g = doc.at("griffin");
            GriffinParams gp;
            gp.alpha = p.field.from_hex(g.at("alpha").get<std::string>());
            gp.beta = p.field.from_hex(g.at("beta").get<std::string>());
            gp.y0_coeff = g.contains("y0_coeff")
                              ? p.field.from_hex(g.at("y0_coeff").get<std::string>())
                              : p.field.one();
            p.griffin = gp;
        }

        if (doc.contains("rc")) {
            const json& r = doc.at("rc");
            RcParams rp;
            rp.alpha1 = p.field.from_hex(r.at("alpha1").get<std::string>());
            rp.beta1 = p.field.from_hex(r.at("beta1").get<std::string>());
            rp.alpha2 = p.field.from_hex(r.at("alpha2").get<std::string>());
            rp.beta2 = p.field.from_hex(r.at("beta2").get<std::string>());
            for (const auto& c : r.at("schedule")) {
                rp.schedule.push_back(rc_component_from_string(c.get<std::string>()));
            }
            const json& bar = r.at("bar");
            rp.bar.radices = bar.at("radices").get<std::vector<uint32_t>>();
            rp.bar.sbox_tables = bar.at("sboxes").get<std::vector<std::vector<uint32_t>>>();
            rp.bar.reciprocals = fastdiv::ReciprocalTable::for_radices(
                rp.bar.radices, 2 * p.field.bit_length());
            p.rc = std::move(rp);
        }

        if (doc.contains("digest")) {
            p.digest = doc.at("digest").get<std::string>();
        }
        return p;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("malformed parameter file: ") + e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::non_canonical_encoding) {
            throw Error(ErrorCode::parse_error,
                        std::string("field element out of range: ") + e.what());
        }
        throw;
    }
}

HashParams load_params(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::parse_error, "cannot open parameter file '" + path + "'");
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
    }

    if (!doc.contains("digest")) {
        throw Error(ErrorCode::validation_error, "digest: parameter file carries no digest");
    }
    if (params_body_digest(doc) != doc.at("digest").get<std::string>()) {
        throw Error(ErrorCode::validation_error,
                    "digest: content digest mismatch in '" + path + "'");
    }

    HashParams p = params_from_json(doc);
    auto violations = validate(p);
    if (!violations.empty()) {
        throw Error(ErrorCode::validation_error, violations.front());
    }
    return p;
}

json serialize_params(const HashParams& p) {
    json doc;
    doc["kind"] = to_string(p.kind);
    doc["field"] = {{"modulus", u256_to_decimal(p.field.modulus())}};
    doc["m"] = p.m;
    doc["d"] = p.d;
    doc["d_inv"] = u256_to_decimal(p.d_inv);
    doc["rounds"] = p.rounds;

    auto dump_matrix = [&](const std::vector<std::vector<FieldElement>>& rows) {
        json out = json::array();
        for (const auto& row : rows) {
            json r = json::array();
            for (const auto& v : row) r.push_back(p.field.to_hex(v));
            out.push_back(std::move(r));
        }
        return out;
    };
    doc["mds"] = dump_matrix(p.mds);
    doc["round_constants"] = dump_matrix(p.round_constants);

    if (p.griffin) {
        doc["griffin"] = {{"alpha", p.field.to_hex(p.griffin->alpha)},
                          {"beta", p.field.to_hex(p.griffin->beta)},
                          {"y0_coeff", p.field.to_hex(p.griffin->y0_coeff)}};
    }
    if (p.rc) {
        json schedule = json::array();
        for (RcComponent c : p.rc->schedule) schedule.push_back(to_string(c));
        doc["rc"] = {{"schedule", std::move(schedule)},
                     {"alpha1", p.field.to_hex(p.rc->alpha1)},
                     {"beta1", p.field.to_hex(p.rc->beta1)},
                     {"alpha2", p.field.to_hex(p.rc->alpha2)},
                     {"beta2", p.field.to_hex(p.rc->beta2)},
                     {"bar", {{"radices", p.rc->bar.radices},
                              {"sboxes", p.rc->bar.sbox_tables}}}};
    }
    doc["digest"] = params_body_digest(doc);
    return doc;
}

void save_params(const HashParams& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::parse_error, "cannot write parameter file '" + path + "'");
    }
    out << serialize_params(p).dump(1) << "\n";
}

namespace {

uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<std::vector<FieldElement>> small_constants(const FieldSpec& f, uint32_t rounds,
                                                       uint32_t per_round, uint64_t seed) {
    std::vector<std::vector<FieldElement>> out(rounds);
    for (auto& slice : out) {
        for (uint32_t j = 0; j < per_round; ++j) {
            slice.push_back(f.from_u64(splitmix64(seed)));
        }
    }
    return out;
}

std::vector<std::vector<FieldElement>> circulant211(const FieldSpec& f) {
    auto c = [&](uint64_t v) { return f.from_u64(v); };
    return {{c(2), c(1), c(1)}, {c(1), c(2), c(1)}, {c(1), c(1), c(2)}};
}

std::pair<FieldElement, FieldElement> first_nondegenerate_pair(const FieldSpec& f) {
    for (uint64_t a = 1;; ++a) {
        for (uint64_t b = 1; b <= a + 4; ++b) {
            FieldElement alpha = f.from_u64(a);
            FieldElement beta = f.from_u64(b);
            if (quadratic_nondegenerate(f, alpha, beta)) return {alpha, beta};
        }
    }
}

/// Mixed-radix digits of the modulus: the per-position sbox thresholds.
std::vector<uint32_t> modulus_digits(const FieldSpec& f, const std::vector<uint32_t>& radices) {
    uint64_t x = f.modulus().limbs[0];  // small-prime helper only
    std::vector<uint32_t> digits(radices.size());
    for (size_t i = radices.size(); i-- > 1;) {
        digits[i] = static_cast<uint32_t>(x % radices[i]);
        x /= radices[i];
    }
    digits[0] = static_cast<uint32_t>(x);
    return digits;
}

/// Bijection of [0, s): reversal below the threshold, identity above. The
/// threshold equals the modulus digit at this position, which keeps Bar
/// inside [0, p).
std::vector<uint32_t> threshold_reversal_table(uint32_t s, uint32_t threshold) {
    std::vector<uint32_t> table(s);
    for (uint32_t i = 0; i < s; ++i) table[i] = i;
    for (uint32_t i = 0; i < threshold; ++i) table[i] = threshold - 1 - i;
    return table;
}

RcParams small_rc_params(const FieldSpec& f, const std::vector<uint32_t>& radices) {
    RcParams rp;
    auto [a1, b1] = first_nondegenerate_pair(f);
    rp.alpha1 = a1;
    rp.beta1 = b1;
    // A second, distinct pair: continue the search past the first hit.
    for (uint64_t a = 1;; ++a) {
        bool done = false;
        for (uint64_t b = 1; b <= a + 4; ++b) {
            FieldElement alpha = f.from_u64(a);
            FieldElement beta = f.from_u64(b);
            if (quadratic_nondegenerate(f, alpha, beta)
                && !(alpha == rp.alpha1 && beta == rp.beta1)) {
                rp.alpha2 = alpha;
                rp.beta2 = beta;
                done = true;
                break;
            }
        }
        if (done) break;
    }
    rp.schedule = {RcComponent::concrete, RcComponent::bricks, RcComponent::concrete,
                   RcComponent::bricks, RcComponent::concrete, RcComponent::bars,
                   RcComponent::concrete, RcComponent::bricks, RcComponent::concrete,
                   RcComponent::bricks, RcComponent::concrete};
    rp.bar.radices = radices;
    auto thresholds = modulus_digits(f, radices);
    for (size_t i = 0; i < radices.size(); ++i) {
        rp.bar.sbox_tables.push_back(threshold_reversal_table(radices[i], thresholds[i]));
    }
    rp.bar.reciprocals = fastdiv::ReciprocalTable::for_radices(radices, 2 * f.bit_length());
    return rp;
}

HashParams small_params(HashKind kind, const std::string& modulus_decimal, uint32_t rescue_m,
                        const std::vector<uint32_t>& rc_radices, uint64_t seed) {
    HashParams p;
    p.kind = kind;
    p.field = FieldSpec::from_modulus_decimal(modulus_decimal);
    p.m = kind == HashKind::rescue_prime ? rescue_m : 3;
    p.d = 5;

    // d^{-1} mod (p-1) by the extended Euclidean algorithm.
    mp::cpp_int pm1 = detail::to_cpp_int(p.field.modulus()) - 1;
    mp::cpp_int t0 = 0, t1 = 1, r0 = pm1, r1 = p.d;
    while (r1 != 0) {
        mp::cpp_int q = r0 / r1;
        mp::cpp_int t2 = t0 - q * t1;
        mp::cpp_int r2 = r0 - q * r1;
        t0 = t1;
        t1 = t2;
        r0 = r1;
        r1 = r2;
    }
    if (t0 < 0) t0 += pm1;
    p.d_inv = detail::from_cpp_int(t0);

    if (p.m == 2) {
        auto c = [&](uint64_t v) { return p.field.from_u64(v); };
        p.mds = {{c(2), c(1)}, {c(1), c(2)}};
    } else {
        p.mds = circulant211(p.field);
    }

    switch (kind) {
        case HashKind::rescue_prime:
            p.rounds = 7;
            p.round_constants = small_constants(p.field, p.rounds, 2 * p.m, seed);
            break;
        case HashKind::griffin: {
            p.rounds = 12;
            p.round_constants = small_constants(p.field, p.rounds, p.m, seed);
            auto [alpha, beta] = first_nondegenerate_pair(p.field);
            p.griffin = GriffinParams{alpha, beta, p.field.one()};
            break;
        }
        case HashKind::reinforced_concrete:
            p.rounds = 6;
            p.round_constants = small_constants(p.field, p.rounds, p.m, seed);
            p.rc = small_rc_params(p.field, rc_radices);
            break;
    }
    p.digest = params_body_digest(serialize_params(p));
    return p;
}

} // namespace

HashParams toy_params(HashKind kind) {
    return small_params(kind, "1013", 3, {11, 13, 8}, 0x746f79);
}

HashParams tiny_params(HashKind kind) {
    return small_params(kind, "23", 2, {5, 6}, 0x74696e79);
}

} // namespace zkhash
