"""Generate the compiled per-curve kernel modules (src/ecmh/_kernels_*.py).

The generated modules are committed: they are plain numba source, fully
specialized to one curve (word count, reduction taps, curve and encoder
constants are baked in as literals), so `cache=True` compilation caching
works and the package has no build step.

Usage: python scripts/gen_kernels.py
"""

import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
SRC = os.path.join(HERE, "..", "src")
sys.path.insert(0, SRC)

from ecmh import registry  # noqa: E402
from ecmh.encoding import EncoderParams  # noqa: E402

MASK64 = (1 << 64) - 1


def words(x, W):
    return tuple((x >> (64 * i)) & MASK64 for i in range(W))


def wtup(x, W):
    return "(" + ", ".join("uint64(%#x)" % w for w in words(x, W)) + ")"


def gen_module(curve_name):
    curve = registry.get_curve(curve_name)
    f = curve.field
    enc = EncoderParams(f)  # the default encoder (t = z) is what gets baked in
    m = f.m
    W = (m + 63) // 64
    taps = [i for i in range(m) if (f.poly >> i) & 1]  # poly = z^m + sum z^tap
    taps = sorted(taps, reverse=True)
    mb = m & 63
    nbytes = (m + 7) // 8
    trace_mask = 0
    for i in range(m):
        if f.trace_i(1 << i):
            trace_mask |= 1 << i
    # canonical half-trace of z^i: H(u) = sum u^(4^k), bit 0 cleared.  The
    # per-bit canonical roots XOR to the canonical root of any trace-0 sum,
    # because the two roots of r^2 + r = u differ exactly in bit 0.
    ht_bits = []
    for i in range(m):
        u = 1 << i
        acc, t = 0, u
        for _ in range((m + 1) // 2):
            acc ^= t
            t = f.sqr_i(f.sqr_i(t))
        ht_bits.append(acc & ~1)
    chain = f.inversion_chain

    L = []
    emit = L.append
    emit('"""Compiled kernels for %s over GF(2^%d).' % (curve_name, m))
    emit("")
    emit("Generated by scripts/gen_kernels.py -- do not edit by hand.")
    emit('"""')
    emit("")
    emit("import numpy as np")
    emit("")
    emit("try:")
    emit("    from numba import njit, uint64")
    emit("    HAVE_NUMBA = True")
    emit("except ImportError:  # pragma: no cover")
    emit("    HAVE_NUMBA = False")
    emit("")
    emit("    def njit(*a, **k):  # pragma: no cover")
    emit("        def deco(fn):")
    emit("            return fn")
    emit("        return deco")
    emit("")
    emit("    uint64 = int  # pragma: no cover")
    emit("")
    emit("W = %d" % W)
    emit("M = %d" % m)
    emit("NBYTES = %d" % nbytes)
    emit('CURVE = "%s"' % curve_name)
    emit("")
    emit("# half-trace of z^i (canonical root, coefficient 0 clear), i = 0..M-1")
    emit("_HT_BITS = (")
    for i in range(0, m, 4):
        emit("    " + " ".join("%#x," % v for v in ht_bits[i:i + 4]))
    emit(")")
    emit("")
    emit("")
    emit("def build_tables():")
    emit('    """Lookup tables passed into the kernels (never globals, so the')
    emit('    compilation cache stays valid)."""')
    emit("    spread = np.zeros(256, np.uint64)")
    emit("    for i in range(256):")
    emit("        v = 0")
    emit("        for j in range(8):")
    emit("            v |= ((i >> j) & 1) << (2 * j)")
    emit("        spread[i] = v")
    emit("    ht = np.zeros((NBYTES, 256, W), np.uint64)")
    emit("    for bidx in range(NBYTES):")
    emit("        for bval in range(256):")
    emit("            acc = 0")
    emit("            for j in range(8):")
    emit("                pos = 8 * bidx + j")
    emit("                if (bval >> j) & 1 and pos < M:")
    emit("                    acc ^= _HT_BITS[pos]")
    emit("            for wd in range(W):")
    emit("                ht[bidx, bval, wd] = (acc >> (64 * wd)) & 0xFFFFFFFFFFFFFFFF")
    emit("    tab = np.zeros((16, W + 1), np.uint64)")
    emit("    return tab, spread, ht")
    emit("")

    ts = ["t%d" % i for i in range(2 * W)]
    rs = ["r%d" % i for i in range(W)]

    # -- _reduce -------------------------------------------------------------
    emit("")
    emit("@njit(cache=True)")
    emit("def _reduce(%s):" % ", ".join(ts))
    emit("    # fold words %d..%d, then the bits >= %d of word %d" % (2 * W - 1, W, m, W - 1))
    for j in range(2 * W - 1, W - 1, -1):
        emit("    v = t%d" % j)
        emit("    t%d = uint64(0)" % j)
        for tap in taps:
            pos = 64 * j - m + tap
            wq, bq = pos >> 6, pos & 63
            if bq == 0:
                emit("    t%d ^= v" % wq)
            else:
                emit("    t%d ^= v << uint64(%d)" % (wq, bq))
                emit("    t%d ^= v >> uint64(%d)" % (wq + 1, 64 - bq))
    emit("    ex = t%d >> uint64(%d)" % (W - 1, mb))
    emit("    t%d &= uint64(%#x)" % (W - 1, (1 << mb) - 1))
    for tap in taps:
        wq, bq = tap >> 6, tap & 63
        if bq == 0:
            emit("    t%d ^= ex" % wq)
        else:
            emit("    t%d ^= ex << uint64(%d)" % (wq, bq))
            if wq + 1 < W:
                emit("    t%d ^= ex >> uint64(%d)" % (wq + 1, 64 - bq))
    emit("    return (%s)" % ", ".join(ts[:W]))
    emit("")

    # -- _mul ----------------------------------------------------------------
    emit("")
    emit("@njit(cache=True)")
    emit("def _mul(a, b, tab):")
    emit("    # 4-bit windowed comb multiplication; tab is (16, W+1) scratch")
    emit("    for j in range(W + 1):")
    emit("        tab[0, j] = uint64(0)")
    emit("    for j in range(W):")
    emit("        tab[1, j] = b[j]")
    emit("    tab[1, W] = uint64(0)")
    emit("    for i in range(2, 16, 2):")
    emit("        h = i >> 1")
    emit("        c = uint64(0)")
    emit("        for j in range(W + 1):")
    emit("            v = tab[h, j]")
    emit("            tab[i, j] = (v << uint64(1)) | c")
    emit("            c = v >> uint64(63)")
    emit("        for j in range(W):")
    emit("            tab[i + 1, j] = tab[i, j] ^ b[j]")
    emit("        tab[i + 1, W] = tab[i, W]")
    for t in ts:
        emit("    %s = uint64(0)" % t)
    emit("    for k in range(15, -1, -1):")
    emit("        if k != 15:")
    for i in range(2 * W - 1, 0, -1):
        emit("            t%d = (t%d << uint64(4)) | (t%d >> uint64(60))" % (i, i, i - 1))
    emit("            t0 = t0 << uint64(4)")
    emit("        sh = uint64(4 * k)")
    for wi in range(W):
        emit("        nib = (a[%d] >> sh) & uint64(0xF)" % wi)
        for j in range(W + 1):
            emit("        t%d ^= tab[nib, %d]" % (wi + j, j))
    emit("    return _reduce(%s)" % ", ".join(ts))
    emit("")

    # -- _sqr ----------------------------------------------------------------
    emit("")
    emit("@njit(cache=True)")
    emit("def _sqr(a, spread):")
    emit("    # bit-spreading squaring via the 256-entry spread table")
    for wi in range(W):
        emit("    v = a[%d]" % wi)
        lo = " | ".join("(spread[(v >> uint64(%d)) & uint64(0xFF)] << uint64(%d))"
                        % (8 * j, 16 * j) for j in range(4))
        hi = " | ".join("(spread[(v >> uint64(%d)) & uint64(0xFF)] << uint64(%d))"
                        % (8 * (j + 4), 16 * j) for j in range(4))
        emit("    t%d = %s" % (2 * wi, lo))
        emit("    t%d = %s" % (2 * wi + 1, hi))
    emit("    return _reduce(%s)" % ", ".join(ts))
    emit("")

    # -- small helpers ---------------------------------------------------------
    emit("")
    emit("@njit(cache=True)")
    emit("def _xor(a, b):")
    emit("    return (%s)" % ", ".join("a[%d] ^ b[%d]" % (i, i) for i in range(W)))
    emit("")
    emit("")
    emit("@njit(cache=True)")
    emit("def _is_zero(a):")
    emit("    return (%s) == uint64(0)" % " | ".join("a[%d]" % i for i in range(W)))
    emit("")
    emit("")
    emit("@njit(cache=True)")
    emit("def _trace(a):")
    emit("    v = %s" % " ^ ".join("(a[%d] & uint64(%#x))" % (i, w)
                                   for i, w in enumerate(words(trace_mask, W)) if w))
    emit("    v ^= v >> uint64(32)")
    emit("    v ^= v >> uint64(16)")
    emit("    v ^= v >> uint64(8)")
    emit("    v ^= v >> uint64(4)")
    emit("    v ^= v >> uint64(2)")
    emit("    v ^= v >> uint64(1)")
    emit("    return v & uint64(1)")
    emit("")
    emit("")
    emit("@njit(cache=True)")
    emit("def _halftrace(a, ht):")
    emit("    # byte-sliced table lookup of the linear half-trace map")
    for i in range(W):
        emit("    r%d = uint64(0)" % i)
    emit("    for bidx in range(NBYTES):")
    emit("        bval = (a[bidx >> 3] >> uint64(8 * (bidx & 7))) & uint64(0xFF)")
    for i in range(W):
        emit("        r%d ^= ht[bidx, bval, %d]" % (i, i))
    emit("    return (%s)" % ", ".join(rs))
    emit("")

    # -- _inv (Itoh-Tsujii) ------------------------------------------------------
    emit("")
    emit("@njit(cache=True)")
    emit("def _inv(a, tab, spread):")
    emit("    # Itoh-Tsujii chain %s" % chain)
    emit("    x1 = a")
    emit("    cur = a")
    for prev, e in zip(chain, chain[1:]):
        if e == 2 * prev:
            emit("    t = cur")
            emit("    for _ in range(%d):" % prev)
            emit("        t = _sqr(t, spread)")
            emit("    cur = _mul(t, cur, tab)")
        elif e == prev + 1:
            emit("    cur = _mul(_sqr(cur, spread), x1, tab)")
        else:
            raise AssertionError("chain step %d -> %d unsupported" % (prev, e))
    emit("    return _sqr(cur, spread)")
    emit("")

    # -- encode_batch --------------------------------------------------------
    a_lit = wtup(curve.a, W)
    b_lit = wtup(curve.b, W)
    one = wtup(1, W)
    ld = lambda arr, idx: "(" + ", ".join("%s[%s, %d]" % (arr, idx, j) for j in range(W)) + ")"

    def store(arr, idx, tup):
        for j in range(W):
            emit("        %s[%s, %d] = %s[%d]" % (arr, idx, j, tup, j))

    emit("")
    emit("@njit(cache=True)")
    emit("def encode_batch(ws, xs, ls, kinds, cs, pref, tab, spread, ht):")
    emit('    """Encode field elements ws (n, W) onto the curve.')
    emit("")
    emit("    One inversion for the whole batch (Montgomery's trick runs")
    emit("    inside the kernel).  kinds[i]: 0 ordinary, 1 the x-zero point.")
    emit('    """')
    emit("    n = ws.shape[0]")
    emit("    a_c = %s" % a_lit)
    emit("    b_c = %s" % b_lit)
    emit("    run = %s" % one)
    emit("    for i in range(n):")
    emit("        w = %s" % ld("ws", "i"))
    emit("        c = _xor(_xor(_sqr(w, spread), w), a_c)")
    emit("        if _is_zero(c):")
    emit("            kinds[i] = 1")
    emit("        else:")
    emit("            kinds[i] = 0")
    emit("            run = _mul(run, c, tab)")
    store("cs", "i", "c")
    store("pref", "i", "run")
    emit("    inv_run = _inv(run, tab, spread)")
    emit("    for i in range(n - 1, -1, -1):")
    emit("        if kinds[i] == 1:")
    emit("            continue")
    emit("        c = %s" % ld("cs", "i"))
    emit("        prev = %s" % one)
    emit("        for j in range(i - 1, -1, -1):")
    emit("            if kinds[j] == 0:")
    emit("                prev = %s" % ld("pref", "j"))
    emit("                break")
    emit("        c_inv = _mul(inv_run, prev, tab)")
    emit("        inv_run = _mul(inv_run, c, tab)")
    emit("        w = %s" % ld("ws", "i"))
    emit("        done = False")
    for tj, tj_inv in zip(enc.tjs, enc.tj_invs):
        emit("        if not done:")
        emit("            x = _mul(%s, c, tab)" % wtup(tj, W))
        emit("            x_inv = _mul(%s, c_inv, tab)" % wtup(tj_inv, W))
        emit("            h = _xor(_xor(_mul(_sqr(x_inv, spread), b_c, tab), x), a_c)")
        emit("            if _trace(h) == uint64(0):")
        emit("                lam = _xor(_halftrace(h, ht), x)")
        emit("                lam0 = (lam[0] ^ (w[0] & uint64(1)),%s)"
             % "".join(" lam[%d]," % j for j in range(1, W)))
        for j in range(W):
            emit("                xs[i, %d] = x[%d]" % (j, j))
            emit("                ls[i, %d] = lam0[%d]" % (j, j))
        emit("                done = True")
    emit("        if not done:")
    emit("            kinds[i] = 2  # unreachable for valid parameters")
    emit("")

    # -- accumulate ------------------------------------------------------------
    emit("")
    emit("@njit(cache=True)")
    emit("def accumulate(state, xs, ls, kinds, start, neg, tab, spread):")
    emit('    """Mixed-add points [start:] into the ordinary accumulator.')
    emit("")
    emit("    state holds (X, L, Z) as 3*W words.  Stops and returns i when")
    emit("    element i needs the general path (special point kind, equal or")
    emit("    opposite operands); returns n when the whole range is done.")
    emit('    """')
    emit("    n = xs.shape[0]")
    sl = lambda base: "(" + ", ".join("state[%d]" % (base + j) for j in range(W)) + ")"
    emit("    X = %s" % sl(0))
    emit("    L = %s" % sl(W))
    emit("    Z = %s" % sl(2 * W))
    emit("    i = start")
    emit("    while i < n:")
    emit("        if kinds[i] != 0:")
    emit("            break")
    emit("        x2 = %s" % ld("xs", "i"))
    emit("        l2 = %s" % ld("ls", "i"))
    emit("        if neg:")
    emit("            l2 = (l2[0] ^ uint64(1),%s)" % "".join(" l2[%d]," % j for j in range(1, W)))
    emit("        U2 = _mul(x2, Z, tab)")
    emit("        V2 = _mul(l2, Z, tab)")
    emit("        B = _xor(X, U2)")
    emit("        if _is_zero(B):")
    emit("            break")
    emit("        A = _xor(L, V2)")
    emit("        ZB = _mul(Z, B, tab)")
    emit("        Bsq = _sqr(B, spread)")
    emit("        S = _xor(_xor(_mul(X, A, tab), _mul(V2, B, tab)), Bsq)")
    emit("        D = _sqr(ZB, spread)")
    emit("        SZB = _mul(S, ZB, tab)")
    emit("        X3n = _xor(_xor(_sqr(S, spread), SZB), _mul(Bsq, ZB, tab))")
    if curve.a == 1:
        emit("        X3n = _xor(X3n, D)")
    elif curve.a != 0:
        emit("        X3n = _xor(X3n, _mul(%s, D, tab))" % wtup(curve.a, W))
    emit("        if _is_zero(X3n):")
    emit("            break")
    emit("        X3 = _sqr(X3n, spread)")
    emit("        Z3 = _mul(D, X3n, tab)")
    emit("        L3 = _xor(_xor(X3, _mul(_xor(D, SZB), X3n, tab)),")
    emit("                  _mul(_mul(_mul(X, U2, tab), _xor(A, B), tab), _mul(B, D, tab), tab))")
    emit("        X = X3")
    emit("        L = L3")
    emit("        Z = Z3")
    emit("        i += 1")
    for j in range(W):
        emit("    state[%d] = X[%d]" % (j, j))
    for j in range(W):
        emit("    state[%d] = L[%d]" % (W + j, j))
    for j in range(W):
        emit("    state[%d] = Z[%d]" % (2 * W + j, j))
    emit("    return i")
    emit("")
    return "\n".join(L)


def main():
    for name in ("sect163k1", "sect233k1"):
        path = os.path.join(SRC, "ecmh", "_kernels_%s.py" % name)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(gen_module(name))
        print("wrote", path)


if __name__ == "__main__":
    main()
