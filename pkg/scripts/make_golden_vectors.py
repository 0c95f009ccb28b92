"""Generate the committed SW-encoding golden vectors from the
unoptimized transliteration oracle (tests/oracles.py).

The library is intentionally NOT imported: the vectors pin the oracle's
output, and the optimized library paths are tested against them.

Usage: python scripts/make_golden_vectors.py
"""

import json
import os
import random
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.join(HERE, "..", "tests"))

from oracles import GF2m, compress_oracle, sw_char2_oracle  # noqa: E402


def main():
    reg_path = os.path.join(HERE, "..", "src", "ecmh", "params", "registry.json")
    with open(reg_path, encoding="utf-8") as fh:
        reg = json.load(fh)
    out_dir = os.path.join(HERE, "..", "tests", "data")
    os.makedirs(out_dir, exist_ok=True)
    rng = random.Random(0x5117)
    for name, cspec in sorted(reg["curves"].items()):
        fspec = reg["fields"][cspec["field"]]
        m = fspec["m"]
        field = GF2m(m, int(fspec["poly"], 16))
        a = int(cspec["a"], 16)
        b = int(cspec["b"], 16)
        ws = [0, 1, 2, 3]  # includes the c = 0 inputs when trace(a) = 0
        while len(ws) < 16:
            w = rng.getrandbits(m)
            if w not in ws:
                ws.append(w)
        width = 2 * ((m + 7) // 8)
        lines = [
            "# SW-encoding golden vectors for %s: <w hex> <compressed point hex>" % name,
            "# w: fixed-width big-endian hex; point: (m+1)-bit little-endian packing, hex",
        ]
        for w in ws:
            kind, x, lam = sw_char2_oracle(field, a, b, w)
            comp = compress_oracle(field, kind, x, lam)
            lines.append("%0*x %s" % (width, w, comp.hex()))
        path = os.path.join(out_dir, "sw_golden_%s.txt" % name)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
        print("wrote", path)


if __name__ == "__main__":
    main()
