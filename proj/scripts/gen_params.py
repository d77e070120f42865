#!/usr/bin/env python3
"""Generate the parameter files shipped under params/.

All data is derived deterministically: field elements come from a SHAKE-128
stream seeded with a per-file context string (rejection-sampled below the
modulus), sbox tables from seeded Fisher-Yates shuffles. Matrices and
quadratic coefficients are re-sampled until they pass the same checks the
library enforces at load time, so every emitted file validates cleanly.

Run from the repository root:  python3 scripts/gen_params.py
"""

import hashlib
import json
import math
import random
from pathlib import Path

BN254_SCALAR = 21888242871839275222246405745257275088548364400416034343698204186575808495617
TOY_PRIME = 1013

OUT_DIR = Path(__file__).resolve().parent.parent / "params"


def fe_hex(x: int) -> str:
    return f"0x{x:064x}"


class ShakeStream:
    """Deterministic byte stream with rejection sampling into [0, p)."""

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


def is_nonresidue(x: int, p: int) -> bool:
    x %= p
    return x != 0 and pow(x, (p - 1) // 2, p) == p - 1


def mds_ok(m: list[list[int]], p: int) -> bool:
    """All entries, all 2x2 minors and the determinant nonzero (m in {2,3})."""
    n = len(m)
    for row in m:
        if any(v % p == 0 for v in row):
            return False
    for r0 in range(n):
        for r1 in range(r0 + 1, n):
            for c0 in range(n):
                for c1 in range(c0 + 1, n):
                    if (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) % p == 0:
                        return False
    if n == 3:
        det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
               - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
               + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])) % p
        if det == 0:
            return False
    return True


def sample_mds(stream: ShakeStream, p: int, n: int) -> list[list[int]]:
    while True:
        m = [[stream.element(p) for _ in range(n)] for _ in range(n)]
        if mds_ok(m, p):
            return m


def circulant211(p: int) -> list[list[int]]:
    m = [[2, 1, 1], [1, 2, 1], [1, 1, 2]]
    assert mds_ok(m, p)
    return m


def round_constants(stream: ShakeStream, p: int, rounds: int, per_round: int,
                    zero: bool = False) -> list[list[str]]:
    if zero:
        return [[fe_hex(0)] * per_round for _ in range(rounds)]
    return [[fe_hex(stream.element(p)) for _ in range(per_round)] for _ in range(rounds)]


def quadratic_pair(stream: ShakeStream, p: int) -> tuple[int, int]:
    """(alpha, beta) with alpha^2 - 4 beta a quadratic non-residue."""
    while True:
        alpha = stream.element(p)
        beta = stream.element(p)
        if is_nonresidue(alpha * alpha - 4 * beta, p):
            return alpha, beta


def mixed_radix_digits(x: int, radices: list[int]) -> list[int]:
    digits = [0] * len(radices)
    for i in range(len(radices) - 1, 0, -1):
        x, digits[i] = divmod(x, radices[i])
    digits[0] = x
    assert digits[0] < radices[0]
    return digits


def rc_bar(p: int, radices: list[int], seed: str) -> dict:
    assert len(set(radices)) == len(radices), "radices must be pairwise distinct"
    prod = math.prod(radices)
    assert prod > p, "radix product must cover the field"
    assert prod < (1 << 256), "radix product must fit the composition accumulator"
    p_digits = mixed_radix_digits(p, radices)
    sboxes = []
    for i, (s, v) in enumerate(zip(radices, p_digits)):
        table = list(range(s))
        if v >= 2:
            head = table[:v]
            random.Random(f"{seed}/sbox/{i}").shuffle(head)
            table[:v] = head
        sboxes.append(table)
    return {"radices": radices, "sboxes": sboxes}


def body_digest(body: dict) -> str:
    canon = json.dumps(body, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canon.encode("utf-8")).hexdigest()


def emit(name: str, body: dict) -> None:
    body = dict(body)
    body["digest"] = body_digest({k: v for k, v in body.items() if k != "digest"})
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    path = OUT_DIR / name
    path.write_text(json.dumps(body, sort_keys=True, indent=1) + "\n")
    print(f"wrote {path}")


def rescue_file(p: int, rounds: int, tag: str, zero_constants: bool = False) -> dict:
    m, d = 3, 5
    stream = ShakeStream(f"zkhash/{tag}/rescue_prime/v1")
    return {
        "kind": "rescue_prime",
        "field": {"modulus": str(p)},
        "m": m,
        "d": d,
        "d_inv": str(pow(d, -1, p - 1)),
        "rounds": rounds,
        "mds": [[fe_hex(v) for v in row] for row in sample_mds(stream, p, m)],
        "round_constants": round_constants(stream, p, rounds, 2 * m, zero=zero_constants),
    }


def griffin_file(p: int, rounds: int, tag: str) -> dict:
    m, d = 3, 5
    stream = ShakeStream(f"zkhash/{tag}/griffin/v1")
    alpha, beta = quadratic_pair(stream, p)
    return {
        "kind": "griffin",
        "field": {"modulus": str(p)},
        "m": m,
        "d": d,
        "d_inv": str(pow(d, -1, p - 1)),
        "rounds": rounds,
        "mds": [[fe_hex(v) for v in row] for row in circulant211(p)],
        "round_constants": round_constants(stream, p, rounds, m),
        "griffin": {"alpha": fe_hex(alpha), "beta": fe_hex(beta), "y0_coeff": fe_hex(1)},
    }


def rc_file(p: int, radices: list[int], tag: str) -> dict:
    m, d = 3, 5
    schedule = ["concrete", "bricks", "concrete", "bricks", "concrete", "bars",
                "concrete", "bricks", "concrete", "bricks", "concrete"]
    n_concrete = schedule.count("concrete")
    stream = ShakeStream(f"zkhash/{tag}/reinforced_concrete/v1")
    a1, b1 = quadratic_pair(stream, p)
    a2, b2 = quadratic_pair(stream, p)
    return {
        "kind": "reinforced_concrete",
        "field": {"modulus": str(p)},
        "m": m,
        "d": d,
        "d_inv": str(pow(d, -1, p - 1)),
        "rounds": n_concrete,
        "mds": [[fe_hex(v) for v in row] for row in circulant211(p)],
        "round_constants": round_constants(stream, p, n_concrete, m),
        "rc": {
            "schedule": schedule,
            "alpha1": fe_hex(a1), "beta1": fe_hex(b1),
            "alpha2": fe_hex(a2), "beta2": fe_hex(b2),
            "bar": rc_bar(p, radices, f"zkhash/{tag}/reinforced_concrete/v1"),
        },
    }


def bn254_radices() -> list[int]:
    # 27 distinct ~10-bit radices whose product exceeds the BN254 scalar
    # modulus while staying below 2^256.
    radices = list(range(680, 707))
    prod = math.prod(radices)
    assert prod > BN254_SCALAR and prod < (1 << 256)
    return radices


def main() -> None:
    assert math.gcd(5, BN254_SCALAR - 1) == 1
    assert math.gcd(5, TOY_PRIME - 1) == 1

    emit("rescue_bn254.json", rescue_file(BN254_SCALAR, rounds=7, tag="bn254"))
    emit("griffin_bn254.json", griffin_file(BN254_SCALAR, rounds=12, tag="bn254"))
    emit("rc_bn254.json", rc_file(BN254_SCALAR, bn254_radices(), tag="bn254"))

    emit("rescue_toy.json", rescue_file(TOY_PRIME, rounds=7, tag="toy"))
    emit("griffin_toy.json", griffin_file(TOY_PRIME, rounds=12, tag="toy"))
    emit("rc_toy.json", rc_file(TOY_PRIME, [11, 13, 8], tag="toy"))

    emit("rescue_toy_zero.json", rescue_file(TOY_PRIME, rounds=7, tag="toy-zero",
                                             zero_constants=True))


if __name__ == "__main__":
    main()
