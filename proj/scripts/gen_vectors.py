#!/usr/bin/env python3
"""Generate known-answer vector files under tests/vectors/.

This is a self-contained big-integer implementation of the three
permutations, the sponge, and the Merkle node compression, driven by the
parameter files under params/. It shares no code with the C++ library
(plain Python ints and divmod, no Montgomery form, no reciprocal division),
so the emitted vectors act as an independent oracle for it.

Run from the repository root:  python3 scripts/gen_vectors.py
"""

import hashlib
import json
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
PARAMS_DIR = ROOT / "params"
OUT_DIR = ROOT / "tests" / "vectors"

KIND_CODE = {"rescue_prime": 1, "griffin": 2, "reinforced_concrete": 3}


def fe_hex(x: int) -> str:
    return f"0x{x:064x}"


def parse_fe(s: str) -> int:
    assert s.startswith("0x") and len(s) == 66
    return int(s, 16)


class Params:
    def __init__(self, path: Path):
        doc = json.loads(path.read_text())
        self.kind = doc["kind"]
        self.p = int(doc["field"]["modulus"])
        self.m = doc["m"]
        self.d = doc["d"]
        self.d_inv = int(doc["d_inv"])
        self.rounds = doc["rounds"]
        self.mds = [[parse_fe(v) for v in row] for row in doc["mds"]]
        self.rc = [[parse_fe(v) for v in row] for row in doc["round_constants"]]
        self.digest = doc["digest"]
        if self.kind == "griffin":
            g = doc["griffin"]
            self.alpha = parse_fe(g["alpha"])
            self.beta = parse_fe(g["beta"])
            self.y0_coeff = parse_fe(g.get("y0_coeff", fe_hex(1)))
        if self.kind == "reinforced_concrete":
            r = doc["rc"]
            self.schedule = r["schedule"]
            self.a1, self.b1 = parse_fe(r["alpha1"]), parse_fe(r["beta1"])
            self.a2, self.b2 = parse_fe(r["alpha2"]), parse_fe(r["beta2"])
            self.radices = r["bar"]["radices"]
            self.sboxes = r["bar"]["sboxes"]


def matvec(params: Params, state: list[int]) -> list[int]:
    p = params.p
    return [sum(params.mds[i][j] * state[j] for j in range(params.m)) % p
            for i in range(params.m)]


def permute_rescue(params: Params, state: list[int]) -> list[int]:
    p, m = params.p, params.m
    s = list(state)
    for rnd in range(params.rounds):
        c = params.rc[rnd]
        s = [pow(x, params.d, p) for x in s]
        s = [(v + c[j]) % p for j, v in enumerate(matvec(params, s))]
        s = [pow(x, params.d_inv, p) for x in s]
        s = [(v + c[m + j]) % p for j, v in enumerate(matvec(params, s))]
    return s


def permute_griffin(params: Params, state: list[int]) -> list[int]:
    p = params.p
    s = matvec(params, list(state))
    for rnd in range(params.rounds):
        y0 = pow(s[0], params.d_inv, p)
        y1 = pow(s[1], params.d, p)
        ell = (params.y0_coeff * y0 + y1) % p
        y2 = s[2] * (ell * ell + params.alpha * ell + params.beta) % p
        s = matvec(params, [y0, y1, y2])
        s = [(v + params.rc[rnd][j]) % p for j, v in enumerate(s)]
    return s


def bar(params: Params, x: int) -> int:
    radices = params.radices
    n = len(radices)
    digits = [0] * n
    for i in range(n - 1, 0, -1):
        x, digits[i] = divmod(x, radices[i])
    digits[0] = x
    digits = [params.sboxes[i][digits[i]] for i in range(n)]
    acc = digits[0]
    for i in range(1, n):
        acc = acc * radices[i] + digits[i]
    return acc % params.p


def permute_rc(params: Params, state: list[int]) -> list[int]:
    p = params.p
    s = list(state)
    concrete_idx = 0
    for step in params.schedule:
        if step == "concrete":
            c = params.rc[concrete_idx]
            concrete_idx += 1
            s = [(v + c[j]) % p for j, v in enumerate(matvec(params, s))]
        elif step == "bricks":
            x0, x1, x2 = s
            s = [pow(x0, params.d, p),
                 x1 * (x0 * x0 + params.a1 * x0 + params.b1) % p,
                 x2 * (x1 * x1 + params.a2 * x1 + params.b2) % p]
        elif step == "bars":
            s = [bar(params, x) for x in s]
        else:
            raise ValueError(step)
    return s


def permute(params: Params, state: list[int]) -> list[int]:
    return {"rescue_prime": permute_rescue,
            "griffin": permute_griffin,
            "reinforced_concrete": permute_rc}[params.kind](params, state)


def sponge_tag(params: Params, rate: int, out_len: int) -> int:
    return KIND_CODE[params.kind] | (rate << 8) | (out_len << 16)


def node_tag(params: Params) -> int:
    return KIND_CODE[params.kind] | (1 << 48)


def sponge_hash(params: Params, inputs: list[int], rate: int, out_len: int) -> list[int]:
    p, m = params.p, params.m
    state = [0] * m
    state[m - 1] = sponge_tag(params, rate, out_len) % p
    pos = 0
    for v in inputs:
        state[pos] = (state[pos] + v) % p
        pos += 1
        if pos == rate:
            state = permute(params, state)
            pos = 0
    state[pos] = (state[pos] + 1) % p
    state = permute(params, state)
    out = []
    pos = 0
    while len(out) < out_len:
        if pos == rate:
            state = permute(params, state)
            pos = 0
        out.append(state[pos])
        pos += 1
    return out


def compress2to1(params: Params, a: int, b: int) -> int:
    return permute(params, [a, b, node_tag(params) % params.p])[0]


def merkle_root(params: Params, leaves: list[int]) -> int:
    level = list(leaves)
    while len(level) > 1:
        level = [compress2to1(params, level[i], level[i + 1])
                 for i in range(0, len(level), 2)]
    return level[0]


class ShakeStream:
    def __init__(self, context: str):
        self._shake = hashlib.shake_128(context.encode("utf-8"))
        self._buf = b""
        self._off = 0
        self._len = 0

    def _take(self, n: int) -> bytes:
        while self._off + n > self._len:
            self._len += 65536
            self._buf = self._shake.digest(self._len)
        out = self._buf[self._off:self._off + n]
        self._off += n
        return out

    def element(self, p: int) -> int:
        nbytes = (p.bit_length() + 7) // 8
        mask = (1 << p.bit_length()) - 1
        while True:
            v = int.from_bytes(self._take(nbytes), "big") & mask
            if v < p:
                return v


def vectors_for(params_file: str) -> dict:
    params = Params(PARAMS_DIR / params_file)
    stream = ShakeStream(f"zkhash/vectors/{params_file}/v1")
    p, m = params.p, params.m

    perm_vectors = []
    for _ in range(32):
        state = [stream.element(p) for _ in range(m)]
        perm_vectors.append({"in": [fe_hex(v) for v in state],
                             "out": [fe_hex(v) for v in permute(params, state)]})

    rate = 2
    sponge_vectors = []
    for length in range(14):
        for _ in range(4):
            for out_len in (1, 2):
                inputs = [stream.element(p) for _ in range(length)]
                digest = sponge_hash(params, inputs, rate, out_len)
                sponge_vectors.append({
                    "inputs": [fe_hex(v) for v in inputs],
                    "rate": rate,
                    "out_len": out_len,
                    "digest": [fe_hex(v) for v in digest],
                })

    compress_vectors = []
    for _ in range(8):
        a, b = stream.element(p), stream.element(p)
        compress_vectors.append({"a": fe_hex(a), "b": fe_hex(b),
                                 "out": fe_hex(compress2to1(params, a, b))})

    leaves = [stream.element(p) for _ in range(8)]
    root = merkle_root(params, leaves)

    return {
        "params_file": params_file,
        "params_digest": params.digest,
        "permutation": perm_vectors,
        "sponge": sponge_vectors,
        "compress2to1": compress_vectors,
        "merkle_root8": {"leaves": [fe_hex(v) for v in leaves], "root": fe_hex(root)},
    }


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    for params_file in ["rescue_bn254.json", "griffin_bn254.json", "rc_bn254.json",
                        "rescue_toy.json", "griffin_toy.json", "rc_toy.json"]:
        doc = vectors_for(params_file)
        out = OUT_DIR / params_file.replace(".json", "_kat.json")
        out.write_text(json.dumps(doc, indent=1) + "\n")
        n = len(doc["sponge"])
        print(f"wrote {out} ({n} sponge digests, {len(doc['permutation'])} permutation vectors)")


if __name__ == "__main__":
    main()
