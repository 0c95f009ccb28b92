"""Shallue-van de Woestijne encoding into binary curves, optimized to a
single field inversion per input.

``sw_encode`` maps any field element onto the curve; it never fails.
``sw_encode_batch`` shares the inversion across a whole batch with
Montgomery's trick and ``sw_encode_blinded`` computes all three
candidate branches and selects by masking, so that neither control flow
nor table indices depend on the input.  All three produce bit-identical
points.
"""

from __future__ import annotations

from .curve import BinaryCurve, LambdaAffinePoint, IDENTITY, ORDINARY, XZERO
from .errors import UnsupportedAtScaleError
from .field import BinaryField


class EncoderParams:
    """Precomputed constants t_j = {t, 1+t, t(1+t)} / (t^2+t+1) and their
    inverses, for a parameter t with t^4 + t != 0 (default t = z)."""

    def __init__(self, field: BinaryField, t: int = 2):
        f = field
        t4t = f.sqr_i(f.sqr_i(t)) ^ t
        if t4t == 0:
            raise ValueError("t^4 + t must be nonzero")
        self.field = field
        self.t = t
        d = f.inv_i(f.sqr_i(t) ^ t ^ 1)
        self.t1 = f.mul_i(t, d)
        self.t2 = f.mul_i(t ^ 1, d)
        self.t3 = f.mul_i(f.mul_i(t, t ^ 1), d)
        self.t1_inv = f.inv_i(self.t1)
        self.t2_inv = f.inv_i(self.t2)
        self.t3_inv = f.inv_i(self.t3)
        self.tjs = (self.t1, self.t2, self.t3)
        self.tj_invs = (self.t1_inv, self.t2_inv, self.t3_inv)


def _encode_from_inverse(curve: BinaryCurve, enc: EncoderParams, w: int,
                         c: int, c_inv: int) -> LambdaAffinePoint:
    """Branching tail of the encoding, once 1/c is known."""
    f = curve.field
    a, b = curve.a, curve.b
    for tj, tj_inv in zip(enc.tjs, enc.tj_invs):
        x = f.mul_i(tj, c)
        x_inv = f.mul_i(tj_inv, c_inv)
        h = f.mul_i(f.sqr_i(x_inv), b) ^ x ^ a
        if f.trace_i(h) == 0:
            lam = f.qs_i(h) ^ x ^ (w & 1)
            return LambdaAffinePoint(curve, ORDINARY, x, lam)
    raise AssertionError("no admissible branch: curve/encoder parameters are inconsistent")


def sw_encode(w, curve: BinaryCurve, enc: EncoderParams) -> LambdaAffinePoint:
    f = curve.field
    wv = f._coerce(w)
    c = f.sqr_i(wv) ^ wv ^ curve.a
    if c == 0:
        return curve.x_zero_point()
    return _encode_from_inverse(curve, enc, wv, c, f.inv_i(c))


def sw_encode_batch(ws, curve: BinaryCurve, enc: EncoderParams) -> list[LambdaAffinePoint]:
    """Elementwise identical to sw_encode, with one inversion per batch."""
    f = curve.field
    wvs = [f._coerce(w) for w in ws]
    cs = [f.sqr_i(w) ^ w ^ curve.a for w in wvs]
    live = [i for i, c in enumerate(cs) if c != 0]
    inverses = f.batch_invert([f.element(cs[i]) for i in live])
    out: list[LambdaAffinePoint] = [None] * len(wvs)  # type: ignore[list-item]
    for i, c in enumerate(cs):
        if c == 0:
            out[i] = curve.x_zero_point()
    for i, cinv in zip(live, inverses):
        out[i] = _encode_from_inverse(curve, enc, wvs[i], cs[i], cinv.value)
    return out


def sw_encode_blinded(w, curve: BinaryCurve, enc: EncoderParams, rng) -> LambdaAffinePoint:
    """Branch-free variant: all three branches are evaluated, the first
    trace-0 branch is selected with masks, and the inversion and the
    quadratic solve are blinded."""
    f = curve.field
    a, b = curve.a, curve.b
    wv = f._coerce(w)
    c = f.sqr_i(wv) ^ wv ^ a
    if c == 0:
        # public parameter condition (possible only when trace(a) = 0)
        return curve.x_zero_point()
    c_inv = f.blinded_invert(f.element(c), rng).value
    xs = []
    hs = []
    traces = []
    for tj, tj_inv in zip(enc.tjs, enc.tj_invs):
        x = f.mul_i(tj, c)
        x_inv = f.mul_i(tj_inv, c_inv)
        h = f.mul_i(f.sqr_i(x_inv), b) ^ x ^ a
        xs.append(x)
        hs.append(h)
        traces.append(f.trace_i(h))
    # mask_j = 1 for the first j with trace 0, arithmetically
    m1 = 1 - traces[0]
    m2 = traces[0] * (1 - traces[1])
    m3 = traces[0] * traces[1] * (1 - traces[2])
    sel_x = (-m1 & xs[0]) ^ (-m2 & xs[1]) ^ (-m3 & xs[2])
    sel_h = (-m1 & hs[0]) ^ (-m2 & hs[1]) ^ (-m3 & hs[2])
    lam = f.blinded_qs(f.element(sel_h), rng).value ^ sel_x ^ (wv & 1)
    return LambdaAffinePoint(curve, ORDINARY, sel_x, lam)


def preimages(p: LambdaAffinePoint, curve: BinaryCurve, enc: EncoderParams) -> set:
    """All w with sw_encode(w) = p; at most three."""
    curve._check(p)
    f = curve.field
    a = curve.a
    found = set()
    if p.kind == IDENTITY:
        return found
    if p.kind == XZERO:
        # w^2 + w + a = 0, solvable only when trace(a) = 0
        if f.trace_i(a) == 0:
            w0 = f.qs_i(a)
            for w in (w0, w0 ^ 1):
                if sw_encode(f.element(w), curve, enc) == p:
                    found.add(f.element(w))
        return found
    x, lam = p.xv, p.lv
    x_inv = f.inv_i(x)
    h = f.mul_i(f.sqr_i(x_inv), curve.b) ^ x ^ a
    if f.trace_i(h):
        return found
    qs_h = f.qs_i(h)
    for tj_inv in enc.tj_invs:
        c = f.mul_i(tj_inv, x)
        u = c ^ a  # w^2 + w = c - a
        if f.trace_i(u):
            continue
        bit_elem = lam ^ x ^ qs_h  # must equal coeff_0(w) as a field element
        if bit_elem >> 1:
            continue
        w = f.qs_i(u) ^ bit_elem
        cand = f.element(w)
        if sw_encode(cand, curve, enc) == p:
            found.add(cand)
    return found


def preimage_histogram(curve: BinaryCurve, enc: EncoderParams):
    """Exhaustive preimage-count statistics over a small curve.

    Returns (proportions, counts): fraction and number of non-identity
    curve points with k = 0..3 preimages.
    """
    f = curve.field
    if f.m > 20:
        raise UnsupportedAtScaleError("exhaustive enumeration requires a small field")
    hits: dict = {}
    for wv in range(1 << f.m):
        pt = sw_encode(f.element(wv), curve, enc)
        key = (pt.kind, pt.xv, pt.lv)
        hits[key] = hits.get(key, 0) + 1
    total_points = curve.order - 1  # identity is never hit
    counts = [0, 0, 0, 0]
    for n in hits.values():
        counts[n] += 1
    counts[0] = total_points - len(hits)
    proportions = tuple(c / total_points for c in counts)
    return proportions, tuple(counts)
