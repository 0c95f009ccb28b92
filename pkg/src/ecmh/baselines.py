"""Baseline multiset hashes: MuHash over Z_p^* and AdHash over Z_2^n.

MuHash keeps its state as a Montgomery-domain triplet (w, y, z)
denoting y / z * r^w mod p with r = 2^bits, so inserts and removals cost
one Redc-multiplication and no full modular reduction; a canonical
residue is computed only at finalization.  AdHash is plain modular
addition of element hashes.

The module also exposes the security-level sizing logic used by the
parameter registry: NFS complexity for the MuHash modulus and the
generalized-birthday 2*sqrt(n) bound for set-only AdHash.
"""

from __future__ import annotations

import math

from .errors import InvalidUpdateError, ParameterMismatchError
from .hashing import blake2_xof


class MuHashParams:
    """Modulus, Montgomery constant r = 2^bits, and hash key."""

    def __init__(self, p: int, key: bytes = b"", xof=blake2_xof, name: str | None = None):
        if p % 2 == 0 or p < 3:
            raise ValueError("modulus must be odd and > 2")
        self.p = p
        self.bits = p.bit_length()
        self.key = key
        self.xof = xof
        self.name = name or f"muhash{self.bits}"
        self.r = 1 << self.bits
        self._rmask = self.r - 1
        # p' = -p^-1 mod r, for the REDC low-half multiply
        self._pprime = pow(-p, -1, self.r)
        self.nbytes = (self.bits + 7) // 8

    def redc(self, t: int) -> int:
        """Redc(t) = t * r^-1 mod p for 0 <= t < p*r."""
        m = ((t & self._rmask) * self._pprime) & self._rmask
        u = (t + m * self.p) >> self.bits
        return u - self.p if u >= self.p else u

    def element(self, element: bytes) -> int:
        """Hash to a residue in [1, p-1].

        The digest is reduced by at most one subtraction; a zero result
        (probability 2^-|p|) maps to 1 so the residue is always a unit.
        """
        x = int.from_bytes(self.xof(element, self.nbytes, self.key), "big")
        x &= (1 << self.bits) - 1
        if x >= self.p:
            x -= self.p
        return x if x != 0 else 1

    def compatible(self, other: "MuHashParams") -> bool:
        return self.p == other.p and self.key == other.key and self.xof is other.xof


class MuHashState:
    """Triplet (w, y, z) denoting y / z * r^w mod p.

    w is kept as an unbounded signed counter and reduced mod p-1 only
    at finalization.
    """

    __slots__ = ("params", "w", "y", "z")

    def __init__(self, params: MuHashParams, w: int = 0, y: int = 1, z: int = 1):
        self.params = params
        self.w = w
        self.y = y
        self.z = z

    def __repr__(self):
        return f"<MuHashState w={self.w}>"


def muhash_new(params: MuHashParams) -> MuHashState:
    return MuHashState(params)


def muhash_insert(s: MuHashState, element: bytes) -> MuHashState:
    # (w, y, z) * (0, x, 1) = (w + 1, Redc(y*x), z)
    x = s.params.element(element)
    return MuHashState(s.params, s.w + 1, s.params.redc(s.y * x), s.z)


def muhash_remove(s: MuHashState, element: bytes) -> MuHashState:
    # (w, y, z) * (0, 1, x) = (w - 1, y, Redc(z*x))
    x = s.params.element(element)
    return MuHashState(s.params, s.w - 1, s.y, s.params.redc(s.z * x))


def muhash_union(s1: MuHashState, s2: MuHashState) -> MuHashState:
    if not s1.params.compatible(s2.params):
        raise ParameterMismatchError("MuHash states use different parameters")
    p = s1.params
    return MuHashState(p, s1.w + s2.w, p.redc(s1.y * s2.y), p.redc(s1.z * s2.z))


def muhash_finalize(s: MuHashState) -> int:
    """Canonical residue y * z^-1 * r^w mod p, in [1, p-1]."""
    p = s.params.p
    v = s.y * pow(s.z, -1, p) % p
    return v * pow(s.params.r % p, s.w % (p - 1), p) % p


def muhash_serialize(s: MuHashState) -> bytes:
    return muhash_finalize(s).to_bytes(s.params.nbytes, "big")


def muhash_eq(s1: MuHashState, s2: MuHashState) -> bool:
    if not s1.params.compatible(s2.params):
        raise ParameterMismatchError("MuHash states use different parameters")
    return muhash_finalize(s1) == muhash_finalize(s2)


class AdHashParams:
    """Additive hash over Z_2^n with a keyed element hash."""

    def __init__(self, n: int, key: bytes = b"", xof=blake2_xof, name: str | None = None):
        if n < 8:
            raise ValueError("n must be at least 8")
        self.n = n
        self.key = key
        self.xof = xof
        self.name = name or f"adhash{n}"
        self.mask = (1 << n) - 1
        self.nbytes = (n + 7) // 8

    def element(self, element: bytes) -> int:
        x = int.from_bytes(self.xof(element, self.nbytes, self.key), "big")
        return x & self.mask

    def compatible(self, other: "AdHashParams") -> bool:
        return self.n == other.n and self.key == other.key and self.xof is other.xof


def adhash_new(params: AdHashParams) -> int:
    return 0


def adhash_update(params: AdHashParams, acc: int, element: bytes, delta: int) -> int:
    if delta == 0:
        raise InvalidUpdateError("multiplicity delta must be nonzero")
    return (acc + delta * params.element(element)) & params.mask


def adhash_union(params: AdHashParams, acc1: int, acc2: int) -> int:
    return (acc1 + acc2) & params.mask


def adhash_serialize(params: AdHashParams, acc: int) -> bytes:
    return acc.to_bytes(params.nbytes, "big")


# -- security-level sizing -------------------------------------------------------


def nfs_security_bits(modulus_bits: int) -> float:
    """Conjectured security of a discrete log mod a b-bit prime.

    Uses the general number field sieve complexity
    L_p[1/3, (64/9)^(1/3)] = exp((64/9)^(1/3) * (ln p)^(1/3) * (ln ln p)^(2/3)),
    expressed in bits.
    """
    ln_p = modulus_bits * math.log(2)
    work = (64 / 9) ** (1 / 3) * ln_p ** (1 / 3) * math.log(ln_p) ** (2 / 3)
    return work / math.log(2)


def muhash_bits_for_security(security_bits: int, step: int = 1024) -> int:
    """Smallest multiple of `step` whose NFS cost reaches the target."""
    bits = step
    while nfs_security_bits(bits) < security_bits:
        bits += step
    return bits


def adhash_security_bits(n: int) -> float:
    """Set-only AdHash security: roughly 2*sqrt(n) bits (generalized
    birthday); the multiset variant is far weaker (see the attacks
    module)."""
    return 2 * math.sqrt(n)


def adhash_n_for_security(security_bits: int) -> int:
    """Invert 2*sqrt(n): n = (security/2)^2."""
    return (security_bits // 2) ** 2 if security_bits % 2 == 0 else \
        math.ceil((security_bits / 2) ** 2)


def ecmh_security_bits(m: int) -> float:
    """Generic-group collision bound for a curve over GF(2^m), cofactor <= 4."""
    return (m - 2) / 2
