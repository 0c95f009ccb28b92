"""Arithmetic in GF(2^m) with a polynomial basis.

Elements are represented as Python integers whose bit i is the
coefficient of z^i; they are kept fully reduced (degree < m).  A
:class:`BinaryField` owns the reduction polynomial and all precomputed
tables; :class:`FieldElement` is a thin immutable wrapper that carries a
reference to its field so mismatched operands are rejected.

Linear operations (multi-squaring, half-trace) are evaluated through
per-block lookup tables: the m coefficients are split into ceil(m/beta)
blocks of beta bits and one table of 2^beta entries is precomputed per
block position.  Inversion uses a fixed Itoh-Tsujii addition chain.
"""

from __future__ import annotations

import secrets

from .errors import FieldDivisionError, NoSolutionError, ParameterMismatchError

# spread table: byte -> 16-bit word with a zero bit interleaved after
# each input bit, so that squaring is table lookups plus reduction
_SPREAD2 = []
for _v in range(256):
    _s = 0
    for _i in range(8):
        if _v >> _i & 1:
            _s |= 1 << (2 * _i)
    _SPREAD2.append(_s)
del _v, _s, _i


def _clmul(a: int, b: int) -> int:
    """Carry-less product of two nonnegative integers (no reduction)."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _poly_mod(a: int, f: int, deg: int) -> int:
    while a.bit_length() > deg:
        a ^= f << (a.bit_length() - 1 - deg)
    return a


def is_irreducible(poly: int, m: int) -> bool:
    """Rabin test for a degree-m polynomial over GF(2)."""
    if poly.bit_length() - 1 != m or not poly & 1:
        return False

    def sqr_mod(x):
        return _poly_mod(_clmul(x, x), poly, m)

    # z^(2^m) == z (mod poly)
    x = 2
    for _ in range(m):
        x = sqr_mod(x)
    if x != 2:
        return False
    # gcd(z^(2^(m/q)) - z, poly) == 1 for every prime q | m
    q = 2
    n = m
    primes = []
    while q * q <= n:
        if n % q == 0:
            primes.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        primes.append(n)
    for q in primes:
        x = 2
        for _ in range(m // q):
            x = sqr_mod(x)
        g, h = poly, x ^ 2
        while h:
            if g.bit_length() < h.bit_length():
                g, h = h, g
            g ^= h << (g.bit_length() - h.bit_length())
        if g != 1:
            return False
    return True


def _default_chain(n: int) -> list[int]:
    """Left-to-right binary addition chain for n (used when the registry
    does not pin a chain)."""
    chain = [1]
    for bit in bin(n)[3:]:
        chain.append(2 * chain[-1])
        if bit == "1":
            chain.append(chain[-1] + 1)
    return chain


class BinaryField:
    """GF(2^m) with reduction polynomial ``poly`` (bit set over GF(2))."""

    def __init__(self, m: int, poly: int, *, block_bits: int = 8,
                 inversion_chain: list[int] | None = None, name: str | None = None):
        if not is_irreducible(poly, m):
            raise ValueError(f"polynomial {poly:#x} is not irreducible of degree {m}")
        if block_bits < 1 or block_bits > 16:
            raise ValueError("block_bits out of supported range")
        self.m = m
        self.poly = poly
        self.block_bits = block_bits
        self.num_blocks = -(-m // block_bits)
        self.name = name or f"gf2_{m}"
        self.mask = (1 << m) - 1
        self.nbytes = (m + 7) // 8
        # reduction tail exponents, excluding the leading z^m term
        self.tails = tuple(i for i in range(m) if poly >> i & 1)
        self.inversion_chain = list(inversion_chain) if inversion_chain else _default_chain(m - 1)
        self._check_chain()
        self.invert_calls = 0  # instrumentation for batch-inversion tests

        # small fields get full log/exp tables; large fields use windowed clmul
        self._log = self._exp = None
        if m <= 16:
            self._build_log_tables()

        self._trace_mask = self._build_trace_mask()
        self._halftrace_table = None   # built on first qs()
        self._msq_tables: dict[int, list[list[int]]] = {}
        self._msq_basis_cache: tuple[int, list[int]] | None = None

    # -- construction helpers -------------------------------------------------

    def _check_chain(self):
        chain = self.inversion_chain
        if chain[0] != 1 or chain[-1] != self.m - 1 or sorted(set(chain)) != chain:
            raise ValueError("inversion chain must be strictly increasing from 1 to m-1")
        seen = {1}
        for t in chain[1:]:
            if not any(t - j in seen for j in seen):
                raise ValueError(f"chain element {t} is not a sum of two previous elements")
            seen.add(t)

    def _build_log_tables(self):
        # find a multiplicative generator by trial
        order = (1 << self.m) - 1
        factors = []
        n, q = order, 2
        while q * q <= n:
            if n % q == 0:
                factors.append(q)
                while n % q == 0:
                    n //= q
            q += 1
        if n > 1:
            factors.append(n)
        g = 2
        while True:
            if all(self._pow_slow(g, order // f) != 1 for f in factors):
                break
            g += 1
        exp = [1] * (2 * order)
        log = [0] * (order + 1)
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self._reduce(_clmul(x, g))
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        self._exp, self._log, self._order = exp, log, order

    def _pow_slow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._reduce(_clmul(r, a))
            a = self._reduce(_clmul(a, a))
            e >>= 1
        return r

    def _build_trace_mask(self) -> int:
        mask = 0
        for i in range(self.m):
            x = 1 << i
            t = 0
            for _ in range(self.m):
                t ^= x
                x = self.sqr_i(x)
            if t == 1:
                mask |= 1 << i
        return mask

    def _halftrace_basis(self) -> list[int]:
        # half-trace H(c) = sum of c^(4^i); linear, and H(c)^2 + H(c) = c + Tr(c)
        # for odd m, so it solves the quadratic on the trace-0 subspace
        if self.m % 2 == 0:
            raise NotImplementedError("half-trace tables require odd m")
        basis = []
        for i in range(self.m):
            x = 1 << i
            h = 0
            for _ in range((self.m + 1) // 2):
                h ^= x
                x = self.sqr_i(self.sqr_i(x))
            basis.append(h)
        return basis

    def _linear_table(self, basis_images: list[int]) -> list[list[int]]:
        beta = self.block_bits
        tables = []
        for blk in range(self.num_blocks):
            tab = [0] * (1 << beta)
            for v in range(1, 1 << beta):
                low = v & -v
                tab[v] = tab[v ^ low] ^ basis_images[blk * beta + low.bit_length() - 1]
            tables.append(tab)
        return tables

    def _get_halftrace_table(self) -> list[list[int]]:
        if self._halftrace_table is None:
            basis = self._halftrace_basis()
            # pad basis to a whole number of blocks
            basis += [0] * (self.num_blocks * self.block_bits - self.m)
            self._halftrace_table = self._linear_table(basis)
        return self._halftrace_table

    def _get_msq_table(self, k: int) -> list[list[int]]:
        tab = self._msq_tables.get(k)
        if tab is None:
            # advance cached basis images of the Frobenius power to exponent k
            if self._msq_basis_cache is None or self._msq_basis_cache[0] > k:
                self._msq_basis_cache = (0, [1 << i for i in range(self.m)])
            at, basis = self._msq_basis_cache
            while at < k:
                basis = [self.sqr_i(x) for x in basis]
                at += 1
            self._msq_basis_cache = (at, list(basis))
            basis = basis + [0] * (self.num_blocks * self.block_bits - self.m)
            tab = self._linear_table(basis)
            self._msq_tables[k] = tab
        return tab

    def _apply_table(self, tables: list[list[int]], x: int) -> int:
        beta = self.block_bits
        bmask = (1 << beta) - 1
        r = 0
        for blk in range(self.num_blocks):
            r ^= tables[blk][x & bmask]
            x >>= beta
        return r

    # -- integer-level core operations ----------------------------------------

    def _reduce(self, v: int) -> int:
        m = self.m
        while v >> m:
            h = v >> m
            v &= self.mask
            for k in self.tails:
                v ^= h << k
        return v

    def mul_i(self, a: int, b: int) -> int:
        if self._log is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[self._log[a] + self._log[b]]
        # 4-bit windowed carry-less multiplication
        t0 = 0
        t1 = b
        t2 = b << 1
        t3 = t2 ^ b
        t4 = b << 2
        t5 = t4 ^ b
        t6 = t4 ^ t2
        t7 = t6 ^ b
        t8 = b << 3
        tab = (t0, t1, t2, t3, t4, t5, t6, t7,
               t8, t8 ^ t1, t8 ^ t2, t8 ^ t3, t8 ^ t4, t8 ^ t5, t8 ^ t6, t8 ^ t7)
        r = 0
        shift = 0
        while a:
            w = tab[a & 15]
            if w:
                r ^= w << shift
            a >>= 4
            shift += 4
        return self._reduce(r)

    def sqr_i(self, a: int) -> int:
        if self._log is not None:
            if a == 0:
                return 0
            return self._exp[2 * self._log[a] % self._order]
        r = 0
        shift = 0
        while a:
            r |= _SPREAD2[a & 0xFF] << shift
            a >>= 8
            shift += 16
        return self._reduce(r)

    def msq_i(self, a: int, k: int) -> int:
        """a^(2^k) via precomputed per-block tables."""
        if k == 0:
            return a
        if self._log is not None:
            if a == 0:
                return 0
            return self._exp[(self._log[a] << k) % self._order]
        return self._apply_table(self._get_msq_table(k), a)

    def sqrt_i(self, a: int) -> int:
        return self.msq_i(a, self.m - 1)

    def inv_i(self, a: int) -> int:
        if a == 0:
            raise FieldDivisionError("inversion of zero field element")
        self.invert_calls += 1
        # Itoh-Tsujii: beta_k = a^(2^k - 1); beta_{i+j} = beta_i^(2^j) * beta_j
        # (used on every field, including the small table-backed ones, so that
        # the inversion cost model matches the registered chain)
        chain = self.inversion_chain
        beta = {1: a}
        for t in chain[1:]:
            for j in reversed(chain):
                if j < t and t - j in beta and j in beta:
                    beta[t] = self.mul_i(self.msq_i(beta[t - j], j), beta[j])
                    break
        # a^-1 = (a^(2^(m-1) - 1))^2
        return self.sqr_i(beta[self.m - 1])

    def trace_i(self, a: int) -> int:
        return (a & self._trace_mask).bit_count() & 1

    def qs_i(self, a: int) -> int:
        """Canonical root r of r^2 + r = a (coeff_0(r) = 0); requires Tr(a) = 0."""
        if self.trace_i(a):
            raise NoSolutionError("trace(a) = 1: x^2 + x = a has no solution")
        r = self._apply_table(self._get_halftrace_table(), a)
        return r & ~1  # the two roots differ exactly in coefficient 0

    # -- element-level API -----------------------------------------------------

    def element(self, value: int) -> "FieldElement":
        if not 0 <= value <= self.mask:
            raise ValueError("value out of range for this field")
        return FieldElement(self, value)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def random(self, rng=None) -> "FieldElement":
        rng = rng or secrets.SystemRandom()
        return FieldElement(self, rng.getrandbits(self.m) & self.mask)

    def _coerce(self, x) -> int:
        if isinstance(x, FieldElement):
            if x.field is not self:
                raise ParameterMismatchError(
                    f"element of {x.field.name} used with {self.name}")
            return x.value
        raise TypeError(f"expected FieldElement, got {type(x).__name__}")

    def add(self, a, b) -> "FieldElement":
        return FieldElement(self, self._coerce(a) ^ self._coerce(b))

    def mul(self, a, b) -> "FieldElement":
        return FieldElement(self, self.mul_i(self._coerce(a), self._coerce(b)))

    def square(self, a) -> "FieldElement":
        return FieldElement(self, self.sqr_i(self._coerce(a)))

    def multi_square(self, a, k: int) -> "FieldElement":
        if k < 0:
            raise ValueError("k must be nonnegative")
        return FieldElement(self, self.msq_i(self._coerce(a), k % self.m if k >= self.m else k))

    def sqrt(self, a) -> "FieldElement":
        return FieldElement(self, self.sqrt_i(self._coerce(a)))

    def invert(self, a) -> "FieldElement":
        return FieldElement(self, self.inv_i(self._coerce(a)))

    def batch_invert(self, elems) -> list["FieldElement"]:
        """Montgomery's trick: one inversion plus 3(n-1) multiplications."""
        vals = [self._coerce(e) for e in elems]
        for i, v in enumerate(vals):
            if v == 0:
                raise FieldDivisionError(f"zero element at index {i} in batch inversion")
        if not vals:
            return []
        prefix = [vals[0]]
        for v in vals[1:]:
            prefix.append(self.mul_i(prefix[-1], v))
        acc = self.inv_i(prefix[-1])
        out = [0] * len(vals)
        for i in range(len(vals) - 1, 0, -1):
            out[i] = self.mul_i(acc, prefix[i - 1])
            acc = self.mul_i(acc, vals[i])
        out[0] = acc
        return [FieldElement(self, v) for v in out]

    def blinded_invert(self, a, rng) -> "FieldElement":
        """invert() with the table path randomized: invert r*a, then strip r."""
        v = self._coerce(a)
        if v == 0:
            raise FieldDivisionError("inversion of zero field element")
        r = 0
        while r == 0:
            r = rng.getrandbits(self.m) & self.mask
        return FieldElement(self, self.mul_i(self.inv_i(self.mul_i(r, v)), r))

    def trace(self, a) -> int:
        return self.trace_i(self._coerce(a))

    def qs(self, a) -> "FieldElement":
        return FieldElement(self, self.qs_i(self._coerce(a)))

    def blinded_qs(self, a, rng) -> "FieldElement":
        """qs() with the table input randomized by s^2 + s (always trace 0)."""
        v = self._coerce(a)
        if self.trace_i(v):
            raise NoSolutionError("trace(a) = 1: x^2 + x = a has no solution")
        s = rng.getrandbits(self.m) & self.mask
        blinder = self.sqr_i(s) ^ s
        r = self._apply_table(self._get_halftrace_table(), v ^ blinder) ^ s
        return FieldElement(self, r & ~1)

    def coeff0(self, a) -> int:
        return self._coerce(a) & 1

    # -- serialization ---------------------------------------------------------

    def to_bytes(self, a) -> bytes:
        return self._coerce(a).to_bytes(self.nbytes, "little")

    def from_bytes(self, data: bytes) -> "FieldElement":
        if len(data) != self.nbytes:
            raise ValueError(f"expected {self.nbytes} bytes")
        v = int.from_bytes(data, "little")
        if v > self.mask:
            raise ValueError("unused high bits must be zero")
        return FieldElement(self, v)

    def to_hex(self, a) -> str:
        return format(self._coerce(a), f"0{2 * self.nbytes}x")

    def from_hex(self, s: str) -> "FieldElement":
        if len(s) != 2 * self.nbytes:
            raise ValueError(f"expected {2 * self.nbytes} hex digits")
        v = int(s, 16)
        if v > self.mask:
            raise ValueError("unused high bits must be zero")
        return FieldElement(self, v)

    def __repr__(self):
        return f"BinaryField({self.name}, m={self.m})"


class FieldElement:
    """Immutable element of a :class:`BinaryField`."""

    __slots__ = ("field", "value")

    def __init__(self, field: BinaryField, value: int):
        self.field = field
        self.value = value

    def __add__(self, other):
        return self.field.add(self, other)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other):
        return self.field.mul(self, other)

    def __eq__(self, other):
        return (isinstance(other, FieldElement)
                and other.field is self.field and other.value == self.value)

    def __hash__(self):
        return hash((id(self.field), self.value))

    def __bool__(self):
        return self.value != 0

    def to_bytes(self) -> bytes:
        return self.field.to_bytes(self)

    def to_hex(self) -> str:
        return self.field.to_hex(self)

    def __repr__(self):
        return f"<{self.field.name}:{self.to_hex()}>"
