"""Binary elliptic curve group E_{a,b}: y^2 + x*y = x^3 + a*x^2 + b.

Points are held in lambda coordinates (x, lambda = x + y/x).  The
lambda-projective triple (X, L, Z) with x = X/Z, lambda = L/Z supports
addition and doubling without field inversions; inversions happen only
at normalization/serialization boundaries.

Two group elements cannot be expressed in lambda coordinates and carry a
kind flag instead: the identity, and the single point with x = 0
(namely (0, sqrt(b)), which has order 2).
"""

from __future__ import annotations

from .errors import DecodeError, ParameterMismatchError
from .field import BinaryField, FieldElement

ORDINARY = 0
XZERO = 1
IDENTITY = 2

_KIND_NAMES = {ORDINARY: "ordinary", XZERO: "x-zero", IDENTITY: "identity"}


class LambdaAffinePoint:
    __slots__ = ("curve", "kind", "xv", "lv")

    def __init__(self, curve: "BinaryCurve", kind: int, xv: int = 0, lv: int = 0):
        self.curve = curve
        self.kind = kind
        self.xv = xv
        self.lv = lv

    @property
    def x(self) -> FieldElement:
        return self.curve.field.element(self.xv)

    @property
    def lam(self) -> FieldElement:
        return self.curve.field.element(self.lv)

    def __eq__(self, other):
        return (isinstance(other, LambdaAffinePoint) and other.curve is self.curve
                and other.kind == self.kind
                and (self.kind != ORDINARY
                     or (other.xv == self.xv and other.lv == self.lv)))

    def __hash__(self):
        return hash((id(self.curve), self.kind, self.xv, self.lv))

    def __repr__(self):
        if self.kind != ORDINARY:
            return f"<{self.curve.name}:{_KIND_NAMES[self.kind]}>"
        f = self.curve.field
        return f"<{self.curve.name}:x={f.to_hex(self.x)},lam={f.to_hex(self.lam)}>"


class LambdaProjectivePoint:
    __slots__ = ("curve", "kind", "Xv", "Lv", "Zv")

    def __init__(self, curve: "BinaryCurve", kind: int, Xv: int = 0, Lv: int = 0, Zv: int = 0):
        self.curve = curve
        self.kind = kind
        self.Xv = Xv
        self.Lv = Lv
        self.Zv = Zv

    def __repr__(self):
        if self.kind != ORDINARY:
            return f"<{self.curve.name}:{_KIND_NAMES[self.kind]} (proj)>"
        return f"<{self.curve.name}: proj X={self.Xv:#x} L={self.Lv:#x} Z={self.Zv:#x}>"


class BinaryCurve:
    """Curve parameters plus the group law."""

    def __init__(self, field: BinaryField, a: int, b: int, *,
                 cofactor: int, subgroup_order: int, name: str | None = None):
        if b == 0:
            raise ValueError("b must be nonzero (singular curve)")
        self.field = field
        self.a = a
        self.b = b
        self.cofactor = cofactor
        self.subgroup_order = subgroup_order
        self.order = cofactor * subgroup_order
        self.name = name or f"curve_{field.name}"
        self.sqrt_b = field.sqrt_i(b)
        # compressed encoding: bits 0..m-1 hold x, bit m disambiguates
        self.compressed_len = (field.m + 1 + 7) // 8

    # -- constructors ----------------------------------------------------------

    def identity(self) -> LambdaProjectivePoint:
        return LambdaProjectivePoint(self, IDENTITY)

    def identity_affine(self) -> LambdaAffinePoint:
        return LambdaAffinePoint(self, IDENTITY)

    def x_zero_point(self) -> LambdaAffinePoint:
        return LambdaAffinePoint(self, XZERO)

    def affine(self, x, lam) -> LambdaAffinePoint:
        f = self.field
        return LambdaAffinePoint(self, ORDINARY, f._coerce(x), f._coerce(lam))

    def affine_from_xy(self, x: int, y: int) -> LambdaAffinePoint:
        """Lift an (x, y) pair; x = 0 maps to the special x-zero point."""
        if x == 0:
            if y != self.sqrt_b:
                raise ValueError("no such point with x = 0")
            return self.x_zero_point()
        f = self.field
        return LambdaAffinePoint(self, ORDINARY, x, x ^ f.mul_i(y, f.inv_i(x)))

    def lift(self, p: LambdaAffinePoint) -> LambdaProjectivePoint:
        self._check(p)
        if p.kind != ORDINARY:
            return LambdaProjectivePoint(self, p.kind)
        return LambdaProjectivePoint(self, ORDINARY, p.xv, p.lv, 1)

    def _check(self, p):
        if p.curve is not self:
            raise ParameterMismatchError(f"point of {p.curve.name} used with {self.name}")

    # -- predicates ------------------------------------------------------------

    def is_on_curve(self, p: LambdaAffinePoint) -> bool:
        self._check(p)
        if p.kind != ORDINARY:
            return True
        if p.xv == 0:
            return False
        f = self.field
        x2 = f.sqr_i(p.xv)
        lhs = f.mul_i(f.sqr_i(p.lv) ^ p.lv ^ self.a, x2)
        return lhs == f.sqr_i(x2) ^ self.b

    def eq(self, p: LambdaProjectivePoint, q: LambdaProjectivePoint) -> bool:
        """Projective equality via cross-multiplication (no inversion)."""
        self._check(p)
        self._check(q)
        if p.kind != q.kind:
            return False
        if p.kind != ORDINARY:
            return True
        f = self.field
        return (f.mul_i(p.Xv, q.Zv) == f.mul_i(q.Xv, p.Zv)
                and f.mul_i(p.Lv, q.Zv) == f.mul_i(q.Lv, p.Zv))

    # -- group law -------------------------------------------------------------

    def negate(self, p):
        """-(x, y) = (x, x + y); in lambda coordinates lambda' = lambda + 1."""
        self._check(p)
        if isinstance(p, LambdaAffinePoint):
            if p.kind != ORDINARY:
                return p  # identity and the order-2 point are self-inverse
            return LambdaAffinePoint(self, ORDINARY, p.xv, p.lv ^ 1)
        if p.kind != ORDINARY:
            return p
        return LambdaProjectivePoint(self, ORDINARY, p.Xv, p.Lv ^ p.Zv, p.Zv)

    def double(self, p: LambdaProjectivePoint) -> LambdaProjectivePoint:
        self._check(p)
        if p.kind != ORDINARY:
            return self.identity()  # both special points have order <= 2
        f = self.field
        X1, L1, Z1 = p.Xv, p.Lv, p.Zv
        Z1sq = f.sqr_i(Z1)
        T = f.sqr_i(L1) ^ f.mul_i(L1, Z1)
        if self.a:
            T ^= f.mul_i(self.a, Z1sq)
        if T == 0:
            # doubled point has x = 0: lambda^2 + lambda + a = 0
            return LambdaProjectivePoint(self, XZERO)
        X3 = f.sqr_i(T)
        L3 = f.sqr_i(f.mul_i(X1, Z1)) ^ f.mul_i(T, f.sqr_i(L1) ^ f.mul_i(self.a ^ 1, Z1sq))
        Z3 = f.mul_i(T, Z1sq)
        return LambdaProjectivePoint(self, ORDINARY, X3, L3, Z3)

    def _add_core(self, X1, L1, Z1, U2, V2, Zq):
        """Chord addition of (X1:L1:Z1) and (U2/Z : V2/Z) with Z = Z1*Zq,
        both ordinary.  Returns projective ints, or the sentinels "double"
        (operands equal), "identity" (operands opposite) or XZERO."""
        f = self.field
        Z = f.mul_i(Z1, Zq) if Zq != 1 else Z1
        U1 = f.mul_i(X1, Zq) if Zq != 1 else X1
        W1 = f.mul_i(L1, Zq) if Zq != 1 else L1
        B = U1 ^ U2
        if B == 0:
            return "double" if W1 == V2 else "identity"
        A = W1 ^ V2
        ZB = f.mul_i(Z, B)
        Bsq = f.sqr_i(B)
        S = f.mul_i(U1, A) ^ f.mul_i(V2, B) ^ Bsq
        D = f.sqr_i(ZB)
        X3n = f.sqr_i(S) ^ f.mul_i(S, ZB) ^ f.mul_i(Bsq, ZB)
        if self.a:
            X3n ^= f.mul_i(self.a, D)
        if X3n == 0:
            return XZERO
        X3 = f.sqr_i(X3n)
        Z3 = f.mul_i(D, X3n)
        L3 = X3 ^ f.mul_i(D ^ f.mul_i(S, ZB), X3n) \
            ^ f.mul_i(f.mul_i(f.mul_i(U1, U2), A ^ B), f.mul_i(B, D))
        return (X3, L3, Z3)

    def _add_xzero(self, x2, lam2):
        """x-zero point plus ordinary affine (x2, lambda2)."""
        f = self.field
        # slope s = (sqrt(b) + y2) / x2, cleared of denominators
        Sn = self.sqrt_b ^ f.mul_i(lam2 ^ x2, x2)
        x2sq = f.sqr_i(x2)
        X3n = f.sqr_i(Sn) ^ f.mul_i(Sn, x2) ^ f.mul_i(x2, x2sq)
        if self.a:
            X3n ^= f.mul_i(self.a, x2sq)
        # result is always ordinary: T0 + Q = identity or x-zero is impossible
        X3 = f.sqr_i(X3n)
        Z3 = f.mul_i(x2sq, X3n)
        L3 = X3 ^ f.mul_i(f.mul_i(Sn ^ x2, x2), X3n) ^ f.mul_i(self.sqrt_b, f.sqr_i(x2sq))
        return LambdaProjectivePoint(self, ORDINARY, X3, L3, Z3)

    def add_mixed(self, p: LambdaProjectivePoint, q: LambdaAffinePoint) -> LambdaProjectivePoint:
        self._check(p)
        self._check(q)
        if q.kind == IDENTITY:
            return LambdaProjectivePoint(self, p.kind, p.Xv, p.Lv, p.Zv)
        if p.kind == IDENTITY:
            return self.lift(q)
        if p.kind == XZERO and q.kind == XZERO:
            return self.identity()
        if p.kind == XZERO:
            return self._add_xzero(q.xv, q.lv)
        if q.kind == XZERO:
            pa = self.normalize(p)
            return self._add_xzero(pa.xv, pa.lv)
        f = self.field
        U2 = f.mul_i(q.xv, p.Zv)
        V2 = f.mul_i(q.lv, p.Zv)
        return self._finish_add(self._add_core(p.Xv, p.Lv, p.Zv, U2, V2, 1), p)

    def add_full(self, p: LambdaProjectivePoint, q: LambdaProjectivePoint) -> LambdaProjectivePoint:
        self._check(p)
        self._check(q)
        if q.kind == IDENTITY:
            return LambdaProjectivePoint(self, p.kind, p.Xv, p.Lv, p.Zv)
        if p.kind == IDENTITY:
            return LambdaProjectivePoint(self, q.kind, q.Xv, q.Lv, q.Zv)
        if p.kind == XZERO and q.kind == XZERO:
            return self.identity()
        if p.kind == XZERO:
            qa = self.normalize(q)
            return self._add_xzero(qa.xv, qa.lv)
        if q.kind == XZERO:
            pa = self.normalize(p)
            return self._add_xzero(pa.xv, pa.lv)
        f = self.field
        U2 = f.mul_i(q.Xv, p.Zv)
        V2 = f.mul_i(q.Lv, p.Zv)
        return self._finish_add(self._add_core(p.Xv, p.Lv, p.Zv, U2, V2, q.Zv), p)

    def _finish_add(self, res, p):
        if res == "double":
            return self.double(p)
        if res == "identity":
            return self.identity()
        if res == XZERO:
            return LambdaProjectivePoint(self, XZERO)
        return LambdaProjectivePoint(self, ORDINARY, *res)

    def scalar_mul(self, p, k: int) -> LambdaProjectivePoint:
        self._check(p)
        if isinstance(p, LambdaAffinePoint):
            p = self.lift(p)
        if k < 0:
            p, k = self.negate(p), -k
        acc = self.identity()
        if k == 0 or p.kind == IDENTITY:
            return acc
        for bit in bin(k)[2:]:
            acc = self.double(acc)
            if bit == "1":
                acc = self.add_full(acc, p)
        return acc

    # -- normalization and compression ------------------------------------------

    def normalize(self, p: LambdaProjectivePoint) -> LambdaAffinePoint:
        self._check(p)
        if isinstance(p, LambdaAffinePoint):
            return p
        if p.kind != ORDINARY:
            return LambdaAffinePoint(self, p.kind)
        f = self.field
        zi = f.inv_i(p.Zv)
        return LambdaAffinePoint(self, ORDINARY, f.mul_i(p.Xv, zi), f.mul_i(p.Lv, zi))

    def compress(self, p: LambdaAffinePoint) -> bytes:
        self._check(p)
        m = self.field.m
        if p.kind == IDENTITY:
            v = 1 << m
        elif p.kind == XZERO:
            v = 0
        else:
            v = p.xv | ((p.lv & 1) << m)
        return v.to_bytes(self.compressed_len, "little")

    def decompress(self, data: bytes) -> LambdaAffinePoint:
        if len(data) != self.compressed_len:
            raise DecodeError(f"expected {self.compressed_len} bytes")
        f = self.field
        m = f.m
        v = int.from_bytes(data, "little")
        if v >> (m + 1):
            raise DecodeError("nonzero padding bits")
        x = v & f.mask
        bit = v >> m & 1
        if x == 0:
            return self.identity_affine() if bit else self.x_zero_point()
        # lambda^2 + lambda = x^2 + a + b * x^-2
        rhs = f.sqr_i(x) ^ self.a ^ f.mul_i(self.b, f.sqr_i(f.inv_i(x)))
        if f.trace_i(rhs):
            raise DecodeError("x does not correspond to a curve point")
        lam = f.qs_i(rhs)
        if bit:
            lam ^= 1
        return LambdaAffinePoint(self, ORDINARY, x, lam)

    def __repr__(self):
        return f"BinaryCurve({self.name})"
