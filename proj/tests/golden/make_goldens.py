#!/usr/bin/env python3
"""Independent reference used to produce the golden files in this directory.

Ranks are computed by brute-force enumeration of distinct arrangements
(itertools.permutations), not by the counting method the library uses, so
the goldens cross-check the C++ implementation end to end.

Run from this directory:  python3 make_goldens.py
"""

import itertools
import struct
import sys

MASK = (1 << 64) - 1
REVERSE_LEX, LEX = 0, 1


def fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & MASK
    return h


class SplitMix:
    def __init__(self, seed):
        self.state = seed & MASK

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z ^= z >> 30
        z = (z * 0xBF58476D1CE4E5B9) & MASK
        z ^= z >> 27
        z = (z * 0x94D049BB133111EB) & MASK
        z ^= z >> 31
        return z


def shuffle(seq, rng):
    for i in range(len(seq) - 1, 0, -1):
        j = rng.next() % (i + 1)
        seq[i], seq[j] = seq[j], seq[i]


def fisher_yates(n, seed):
    p = list(range(n))
    shuffle(p, SplitMix(seed))
    return p


def arrangements(values, ordering):
    distinct = sorted(set(itertools.permutations(values)))
    if ordering == REVERSE_LEX:
        distinct.reverse()
    return distinct


def brute_rank(chunk, ordering):
    return arrangements(chunk, ordering).index(tuple(chunk)) + 1


def bits_needed(v):
    return max(1, v.bit_length())


def geometry(m, n, x, w):
    assert (m * n) % x == 0
    o = m * n // x
    fact = 1
    for i in range(2, x + 1):
        fact *= i
    c = -(-bits_needed(fact - 1) // w)
    mx = -(-(o * c) // n)
    return dict(o=o, c=c, mx=mx, s=mx * n)


def derive_key(secret, x, w, ordering, filler):
    raw = secret.encode()
    return dict(x=x, w=w, ordering=ordering, filler=filler,
                placement=fnv1a64(raw + b"\x01"),
                shuffle=fnv1a64(raw + b"\x02"))


def key_bytes(k):
    return (b"PDXK" + bytes([1, k["ordering"], k["x"], k["w"]])
            + struct.pack("<I", k["filler"])
            + struct.pack("<Q", k["placement"])
            + struct.pack("<Q", k["shuffle"]))


def encode(rows, k):
    m, n = len(rows), len(rows[0])
    x, w = k["x"], k["w"]
    g = geometry(m, n, x, w)
    flat = [v for r in rows for v in r]
    rng = SplitMix(k["shuffle"])
    cells = []
    for j in range(g["o"]):
        chunk = flat[j * x:(j + 1) * x]
        r = brute_rank(chunk, k["ordering"]) - 1
        digits = []
        for _ in range(g["c"]):
            digits.append(r & ((1 << w) - 1))
            r >>= w
        cells.extend(reversed(digits))
        shuffle(chunk, rng)
        flat[j * x:(j + 1) * x] = chunk
    sigma = fisher_yates(g["s"], k["placement"])
    region = [k["filler"]] * g["s"]
    for i, cell in enumerate(cells):
        region[sigma[i]] = cell
    out = flat + region
    return [out[i * n:(i + 1) * n] for i in range(m + g["mx"])]


def csv_text(rows):
    return "".join(",".join(str(v) for v in r) + "\n" for r in rows)


def pgm_bytes(rows, w):
    maxval = (1 << w) - 1
    head = f"P5\n{len(rows[0])} {len(rows)}\n{maxval}\n".encode()
    if w == 8:
        body = bytes(v for r in rows for v in r)
    else:
        body = b"".join(struct.pack(">H", v) for r in rows for v in r)
    return head + body


def pdxm_bytes(rows, w):
    fmt = {8: "<B", 16: "<H", 32: "<I"}[w]
    head = b"PDXM" + bytes([1, w, 0, 0]) + struct.pack("<II", len(rows), len(rows[0]))
    return head + b"".join(struct.pack(fmt, v) for r in rows for v in r)


TABLE1 = [[17, 24, 1, 8, 15],
          [23, 5, 7, 14, 16],
          [4, 6, 13, 20, 22],
          [10, 12, 19, 21, 3],
          [11, 18, 25, 2, 9]]
MATRIX_B = [[1, 3], [4, 2]]
GRADIENT = [[(r * 37 + c * 11) % 256 for c in range(6)] for r in range(4)]
WIDE16 = [[(r * 4099 + c * 977) % 65536 for c in range(9)] for r in range(3)]


def write(name, data):
    mode = "w" if isinstance(data, str) else "wb"
    with open(name, mode) as f:
        f.write(data)


def main():
    assert fnv1a64(b"a") == 0xAF63DC4C8601EC8C
    assert SplitMix(0).next() == 0xE220A8397B1DCDAF

    write("table1.csv", csv_text(TABLE1))
    write("matrix_b.csv", csv_text(MATRIX_B))
    write("table1.pdxm", pdxm_bytes(TABLE1, 8))
    write("wide16.pdxm", pdxm_bytes(WIDE16, 16))
    write("gradient.pgm", pgm_bytes(GRADIENT, 8))
    write("wide16.pgm", pgm_bytes(WIDE16, 16))

    k1 = derive_key("table-one", 5, 8, REVERSE_LEX, 0)
    write("table1.pdxk", key_bytes(k1))
    write("table1.encoded.csv", csv_text(encode(TABLE1, k1)))
    write("table1.encoded.pdxm", pdxm_bytes(encode(TABLE1, k1), 8))

    kb = derive_key("matrix-b", 2, 8, LEX, 7)
    write("matrix_b.pdxk", key_bytes(kb))
    write("matrix_b.encoded.csv", csv_text(encode(MATRIX_B, kb)))

    kg = derive_key("gradient", 3, 8, REVERSE_LEX, 255)
    write("gradient.pdxk", key_bytes(kg))
    write("gradient.encoded.pgm", pgm_bytes(encode(GRADIENT, kg), 8))

    kw = derive_key("wide", 9, 16, LEX, 12345)
    write("wide16.pdxk", key_bytes(kw))
    write("wide16.encoded.pdxm", pdxm_bytes(encode(WIDE16, kw), 16))

    # Values frozen into the unit tests.
    out = sys.stdout
    out.write(f"fnv1a64('b') = {fnv1a64(b'b'):#018x}\n")
    out.write(f"fnv1a64('ab') = {fnv1a64(b'ab'):#018x}\n")
    rng = SplitMix(0)
    out.write(f"splitmix(0) stream = {[hex(rng.next()) for _ in range(3)]}\n")
    out.write(f"fisher_yates(5, 42) = {fisher_yates(5, 42)}\n")
    out.write(f"fisher_yates(8, 7) = {fisher_yates(8, 7)}\n")
    out.write(f"table1 ranks reverse-lex = {[brute_rank(r, REVERSE_LEX) for r in TABLE1]}\n")
    out.write(f"table1 ranks lex = {[brute_rank(r, LEX) for r in TABLE1]}\n")
    for name, key in [("table-one", k1), ("matrix-b", kb)]:
        out.write(f"{name}: placement={key['placement']:#018x} shuffle={key['shuffle']:#018x}\n")
    pa, pb = fnv1a64(b"a\x01"), fnv1a64(b"b\x01")
    out.write(f"derive('a') placement={pa:#018x} derive('b') placement={pb:#018x}\n")
    out.write(f"matrix_b encoded = {encode(MATRIX_B, kb)}\n")
    out.write(f"table1 encoded = {encode(TABLE1, k1)}\n")


if __name__ == "__main__":
    main()
