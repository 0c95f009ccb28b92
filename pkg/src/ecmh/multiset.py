"""The elliptic curve multiset hash (ECMH).

A multiset digest is a point of the curve group: each element is hashed
into the field, encoded onto the curve, and accumulated by group
addition, so digests are homomorphic (hash of a multiset union is the
group sum of the hashes) and updates commute.  Negative multiplicities
use point negation; removal is exact, not approximate.

``hash_multiset`` is the batch entry point: it shares one field
inversion across each encode batch, and on the larger curves dispatches
to compiled kernels when available.  All paths produce digests that
compare and serialize identically.

The module also provides the generic Grothendieck wrapper turning any
cancellative commutative monoid hash into a group-like hash of formal
differences.
"""

from __future__ import annotations

from .curve import BinaryCurve, IDENTITY, LambdaAffinePoint, LambdaProjectivePoint, ORDINARY
from .encoding import EncoderParams, sw_encode, sw_encode_batch, sw_encode_blinded
from .errors import InvalidUpdateError, ParameterMismatchError
from .field import FieldElement
from .hashing import blake2_xof, max_key_len

DEFAULT_BATCH = 256


class ECMHParams:
    """Curve + encoder + keyed intermediate hash.

    A keyed hash is recommended: a single collision of a homomorphic
    hash yields arbitrary second preimages, so the key should be secret
    whenever the input is attacker-controlled.  An empty key selects the
    unkeyed mode used for interoperability test vectors.
    """

    def __init__(self, curve: BinaryCurve, key: bytes = b"",
                 encoder: EncoderParams | None = None, xof=blake2_xof):
        if len(key) > max_key_len(curve.field.nbytes):
            raise ValueError("key too long for the intermediate hash")
        self.curve = curve
        self.key = key
        self.encoder = encoder or EncoderParams(curve.field)
        self.xof = xof

    def element_hash(self, element: bytes) -> FieldElement:
        """Hash a byte string to a field element (truncation to m bits)."""
        f = self.curve.field
        digest = self.xof(element, f.nbytes, self.key)
        return f.element(int.from_bytes(digest, "little") & f.mask)

    def compatible(self, other: "ECMHParams") -> bool:
        return (self.curve is other.curve and self.key == other.key
                and self.encoder is other.encoder and self.xof is other.xof)

    def __repr__(self):
        return f"ECMHParams({self.curve.name}, keyed={bool(self.key)})"


class UpdateOp:
    """A single multiplicity change: (element bytes, signed delta)."""

    __slots__ = ("element", "delta")

    def __init__(self, element: bytes, delta: int):
        if delta == 0:
            raise InvalidUpdateError("multiplicity delta must be nonzero")
        self.element = element
        self.delta = delta

    def __repr__(self):
        return f"UpdateOp({self.element!r}, {self.delta:+d})"


class MultisetDigest:
    """An ECMH digest: an accumulator point plus its parameters."""

    __slots__ = ("params", "point")

    def __init__(self, params: ECMHParams, point: LambdaProjectivePoint):
        self.params = params
        self.point = point

    def __repr__(self):
        return f"<MultisetDigest {digest_serialize(self).hex()}>"


def _check_params(d1: MultisetDigest, d2: MultisetDigest):
    if not d1.params.compatible(d2.params):
        raise ParameterMismatchError("digests use different ECMH parameters")


def digest_new(params: ECMHParams) -> MultisetDigest:
    return MultisetDigest(params, params.curve.identity())


def digest_update(d: MultisetDigest, op: UpdateOp) -> MultisetDigest:
    """Add delta copies of an element; |delta| = 1 is one mixed addition."""
    params = d.params
    curve = params.curve
    p = sw_encode(params.element_hash(op.element), curve, params.encoder)
    if op.delta == 1:
        pt = curve.add_mixed(d.point, p)
    elif op.delta == -1:
        pt = curve.add_mixed(d.point, curve.negate(p))
    else:
        pt = curve.add_full(d.point, curve.scalar_mul(p, op.delta))
    return MultisetDigest(params, pt)


def digest_union(d1: MultisetDigest, d2: MultisetDigest) -> MultisetDigest:
    _check_params(d1, d2)
    return MultisetDigest(d1.params, d1.params.curve.add_full(d1.point, d2.point))


def digest_eq(d1: MultisetDigest, d2: MultisetDigest) -> bool:
    _check_params(d1, d2)
    return d1.params.curve.eq(d1.point, d2.point)


def digest_serialize(d: MultisetDigest) -> bytes:
    curve = d.params.curve
    return curve.compress(curve.normalize(d.point))


def digest_deserialize(params: ECMHParams, data: bytes) -> MultisetDigest:
    return MultisetDigest(params, params.curve.lift(params.curve.decompress(data)))


def _accumulate_points(curve: BinaryCurve, acc, points, negate=False):
    for p in points:
        if negate:
            p = curve.negate(p)
        acc = curve.add_mixed(acc, p)
    return acc


def hash_multiset(params: ECMHParams, items, batch_size: int = DEFAULT_BATCH,
                  blinded: bool = False, rng=None) -> MultisetDigest:
    """Hash a stream of (element, multiplicity) pairs from scratch.

    Equivalent to folding digest_update over a fresh digest, but encodes
    in batches of `batch_size` sharing one field inversion each.  With
    blinded=True every encoding goes through the branch-free blinded
    path instead (rng required); the resulting digest is identical.
    """
    curve = params.curve
    from . import fastpath  # deferred: optional compiled backend
    backend = None if blinded else fastpath.backend_for(curve, params.encoder)
    acc = curve.identity()
    pending: list[tuple[FieldElement, int]] = []

    def flush():
        nonlocal acc
        if not pending:
            return
        if backend is not None:
            plus = [w.value for w, d in pending if d == 1]
            minus = [w.value for w, d in pending if d == -1]
            rest = [(w, d) for w, d in pending if d not in (1, -1)]
            if plus:
                acc = backend.accumulate(acc, plus, negate=False)
            if minus:
                acc = backend.accumulate(acc, minus, negate=True)
            encoded = sw_encode_batch([w for w, _ in rest], curve, params.encoder)
        else:
            if blinded:
                encoded = [sw_encode_blinded(w, curve, params.encoder, rng)
                           for w, _ in pending]
            else:
                encoded = sw_encode_batch([w for w, _ in pending], curve, params.encoder)
            rest = pending
        for p, (_, delta) in zip(encoded, rest):
            if delta == 1:
                acc = curve.add_mixed(acc, p)
            elif delta == -1:
                acc = curve.add_mixed(acc, curve.negate(p))
            else:
                acc = curve.add_full(acc, curve.scalar_mul(p, delta))
        pending.clear()

    for element, delta in items:
        if delta == 0:
            raise InvalidUpdateError("multiplicity delta must be nonzero")
        pending.append((params.element_hash(element), delta))
        if len(pending) >= batch_size:
            flush()
    flush()
    return MultisetDigest(params, acc)


# -- Grothendieck construction -------------------------------------------------


class MonoidHash:
    """Interface for an add-only (monoid) multiset hash.

    `empty()` returns the digest of the empty multiset, `insert(d, e)`
    adds one element, `union(d1, d2)` combines digests, and `eq` decides
    digest equality.  The monoid must be commutative and cancellative
    for the Grothendieck wrapper to be sound.
    """

    def __init__(self, empty, insert, union, eq):
        self.empty = empty
        self.insert = insert
        self.union = union
        self.eq = eq


class GrothendieckDigest:
    """A formal difference pos - neg of two monoid digests."""

    __slots__ = ("pos", "neg")

    def __init__(self, pos, neg):
        self.pos = pos
        self.neg = neg


class GrothendieckHash:
    """Group-like hash of formal differences over a monoid hash.

    Every operation stores exactly two underlying digests and performs
    at most two underlying operations, so time and space overhead over
    the wrapped hash is a factor of two.
    """

    def __init__(self, monoid: MonoidHash):
        self.monoid = monoid

    def new(self) -> GrothendieckDigest:
        return GrothendieckDigest(self.monoid.empty(), self.monoid.empty())

    def insert(self, g: GrothendieckDigest, element) -> GrothendieckDigest:
        return GrothendieckDigest(self.monoid.insert(g.pos, element), g.neg)

    def remove(self, g: GrothendieckDigest, element) -> GrothendieckDigest:
        return GrothendieckDigest(g.pos, self.monoid.insert(g.neg, element))

    def union(self, g1: GrothendieckDigest, g2: GrothendieckDigest) -> GrothendieckDigest:
        return GrothendieckDigest(self.monoid.union(g1.pos, g2.pos),
                                  self.monoid.union(g1.neg, g2.neg))

    def eq(self, g1: GrothendieckDigest, g2: GrothendieckDigest) -> bool:
        # (a+, a-) == (b+, b-)  iff  a+ + b- == a- + b+
        return self.monoid.eq(self.monoid.union(g1.pos, g2.neg),
                              self.monoid.union(g1.neg, g2.pos))


def ecmh_add_only_monoid(params: ECMHParams) -> MonoidHash:
    """The insert-only restriction of ECMH, for wrapping."""
    return MonoidHash(
        empty=lambda: digest_new(params),
        insert=lambda d, e: digest_update(d, UpdateOp(e, 1)),
        union=digest_union,
        eq=digest_eq,
    )
