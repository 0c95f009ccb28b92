"""Executable security content.

Two attacks and one reduction:

* The lattice attack on multiset AdHash: short vectors orthogonal to
  the oracle outputs modulo M are multiset collisions; they are found
  with an in-repo exact-integer LLL (no floating-point Gram-Schmidt).

* The discrete-log reduction behind the collision-resistance theorem
  for weak-encoding-based hashes, run for real on the toy curve: the
  random oracle is simulated as f(r_i*Q + d_i*P + J_i) preimages, a
  brute-force collision adversary is run against it, and the discrete
  log is recovered as n = -r^-1 * d mod rho.

All attack outputs are verified before being returned.
"""

from __future__ import annotations

import math
import time

from .baselines import AdHashParams
from .curve import BinaryCurve, IDENTITY, LambdaAffinePoint
from .encoding import EncoderParams, preimages, sw_encode
from .errors import AdversaryContractError, NotInvertibleError

LLL_HERMITE_CONSTANT = 1.021  # empirical LLL Hermite factor constant


# -- orthogonal lattice and LLL --------------------------------------------------


class AttackInstance:
    """An AdHash attack instance: modulus M and oracle outputs h_i."""

    def __init__(self, M: int, h: list[int], elements: list[bytes] | None = None):
        if len(h) < 2:
            raise ValueError("need at least two oracle outputs")
        if any(v % M == 0 for v in h):
            raise ValueError("oracle outputs must be nonzero mod M (resample)")
        self.M = M
        self.q = len(h)
        self.h = list(h)
        self.elements = elements

    def is_collision(self, v: list[int]) -> bool:
        return any(v) and sum(a * b for a, b in zip(v, self.h)) % self.M == 0


def build_orthogonal_lattice(inst: AttackInstance) -> list[list[int]]:
    """Basis of { v in Z^q : sum v_i h_i = 0 mod M }.

    Rows: (M, 0, ..., 0) and, for i >= 2, (-h_i * h_1^-1 mod M, e_i).
    The basis is triangular with |det| = M, which is exactly the index
    of the orthogonal sublattice in Z^q when gcd(h_1, M) = 1 -- so the
    rows generate all of it.
    """
    if math.gcd(inst.h[0], inst.M) != 1:
        raise NotInvertibleError("h_1 is not invertible mod M; resample elements")
    h1_inv = pow(inst.h[0], -1, inst.M)
    q = inst.q
    rows = [[inst.M] + [0] * (q - 1)]
    for i in range(1, q):
        c = (-inst.h[i] * h1_inv) % inst.M
        if 2 * c > inst.M:
            c -= inst.M  # balanced representative keeps entries small
        row = [c] + [0] * (q - 1)
        row[i] = 1
        rows.append(row)
    for row in rows:
        assert sum(a * b for a, b in zip(row, inst.h)) % inst.M == 0
    return rows


def _dot(u: list[int], v: list[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def lll_reduce(basis: list[list[int]], delta=(99, 100)) -> list[list[int]]:
    """Lenstra-Lenstra-Lovasz reduction, all-integer variant.

    Gram-Schmidt data is kept as the integers d_i (Gram determinants)
    and lambda_{i,j} = d_{j+1} * mu_{i,j}, so the run is exact; delta is
    a rational (num, den) in (1/4, 1].
    """
    dnum, dden = delta
    if not 1 * dden < 4 * dnum <= 4 * dden:
        raise ValueError("delta must be in (1/4, 1]")
    b = [list(row) for row in basis]
    n = len(b)
    d = [0] * (n + 1)
    d[0] = 1
    lam = [[0] * n for _ in range(n)]

    def red(k, l):
        if 2 * abs(lam[k][l]) > d[l + 1]:
            q_ = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            for t in range(len(b[k])):
                b[k][t] -= q_ * b[l][t]
            lam[k][l] -= q_ * d[l + 1]
            for i in range(l):
                lam[k][i] -= q_ * lam[l][i]

    def swap(k, kmax):
        b[k], b[k - 1] = b[k - 1], b[k]
        for j in range(k - 1):
            lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
        lam_ = lam[k][k - 1]
        bnew = (d[k - 1] * d[k + 1] + lam_ * lam_) // d[k]
        for i in range(k + 1, kmax + 1):
            t = lam[i][k]
            lam[i][k] = (d[k + 1] * lam[i][k - 1] - lam_ * t) // d[k]
            lam[i][k - 1] = (bnew * t + lam_ * lam[i][k]) // d[k + 1]
        d[k] = bnew

    d[1] = _dot(b[0], b[0])
    kmax = 0
    k = 1
    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k + 1):
                u = _dot(b[k], b[j])
                for i in range(j):
                    u = (d[i + 1] * u - lam[k][i] * lam[j][i]) // d[i]
                if j < k:
                    lam[k][j] = u
                else:
                    if u == 0:
                        raise ValueError("input rows are linearly dependent")
                    d[k + 1] = u
        while True:
            red(k, k - 1)
            # Lovasz: d_{k+1} * d_{k-1} >= delta * d_k^2 - lambda^2
            if dden * (d[k + 1] * d[k - 1] + lam[k][k - 1] ** 2) < dnum * d[k] ** 2:
                swap(k, kmax)
                k = max(k - 1, 1)
            else:
                for l in range(k - 2, -1, -1):
                    red(k, l)
                k += 1
                break
    return b


def q_star(M: int, c: float = LLL_HERMITE_CONSTANT) -> int:
    """Dimension choice q = sqrt(log M / log c) for the lattice attack."""
    return round(math.sqrt(math.log2(M) / math.log2(c)))


# -- the AdHash multiset collision attack ----------------------------------------


class AttackReport:
    """Machine-readable record of one attack run."""

    def __init__(self, modulus_bits, q, norm, predicted_norm, max_multiplicity, seconds):
        self.modulus_bits = modulus_bits
        self.q = q
        self.norm = norm
        self.predicted_norm = predicted_norm
        self.max_multiplicity = max_multiplicity
        self.seconds = seconds

    def as_dict(self):
        return {
            "modulus_bits": self.modulus_bits, "q": self.q, "norm": self.norm,
            "predicted_norm": self.predicted_norm,
            "max_multiplicity": self.max_multiplicity, "seconds": self.seconds,
        }

    def __str__(self):
        return ("adhash attack: M=2^%d q=%d |v|=%.1f (predicted c^q M^(1/q)=%.1f) "
                "max|mult|=%d in %.2fs" % (self.modulus_bits, self.q, self.norm,
                                           self.predicted_norm, self.max_multiplicity,
                                           self.seconds))


def find_adhash_collision(params: AdHashParams, q: int, element_gen=None,
                          delta=(99, 100)):
    """A verified nonzero multiset hashing to 0 mod 2^n.

    Queries q elements, reduces the orthogonal lattice, and returns
    (multiset, report) where multiset is a list of (element, signed
    multiplicity) pairs taken from the shortest reduced row.
    """
    if element_gen is None:
        element_gen = lambda i: b"element-%d" % i
    t0 = time.perf_counter()
    M = 1 << params.n
    elements, h = [], []
    i = 0
    while len(h) < q:
        e = element_gen(i)
        i += 1
        v = params.element(e)
        if v == 0 or (len(h) == 0 and v % 2 == 0):
            continue  # h_1 must be invertible mod 2^n; zeros are resampled
        elements.append(e)
        h.append(v)
    inst = AttackInstance(M, h, elements)
    reduced = lll_reduce(build_orthogonal_lattice(inst), delta)
    best = min((row for row in reduced if any(row)), key=lambda r: _dot(r, r))
    if sum(a * b for a, b in zip(best, h)) % M != 0:
        raise AssertionError("reduced vector left the lattice (internal error)")
    multiset = [(e, a) for e, a in zip(elements, best) if a != 0]
    # re-verify through the public AdHash interface
    acc = 0
    for e, a in multiset:
        acc = (acc + a * params.element(e)) & params.mask
    if acc != 0 or not multiset:
        raise AssertionError("collision failed verification (internal error)")
    report = AttackReport(
        modulus_bits=params.n, q=q, norm=math.sqrt(_dot(best, best)),
        predicted_norm=LLL_HERMITE_CONSTANT ** q * M ** (1 / q),
        max_multiplicity=max(abs(a) for _, a in multiset),
        seconds=time.perf_counter() - t0)
    return multiset, report


# -- weak-encoding samplable interface -------------------------------------------


def sample_encoding_preimage(target: LambdaAffinePoint, curve: BinaryCurve,
                             enc: EncoderParams, rng, alpha: int = 3):
    """One attempt of the samplable-interface rejection step.

    Draws j uniform in [0, alpha); if j < |f^-1(target)| returns a
    uniform preimage, else None.  Over uniform targets the accepted
    outputs are exactly uniform field elements.
    """
    j = rng.randrange(alpha)
    pre = preimages(target, curve, enc)
    if j < len(pre):
        return sorted(pre, key=lambda e: e.value)[rng.randrange(len(pre))]
    return None


# -- the discrete-log reduction, simulated ---------------------------------------


class ReductionInstance:
    """A discrete-log challenge Q = n*P in the prime-order subgroup."""

    def __init__(self, curve: BinaryCurve, P: LambdaAffinePoint, Q: LambdaAffinePoint):
        self.curve = curve
        self.P = P
        self.Q = Q
        self.rho = curve.subgroup_order


def find_subgroup_generator(curve: BinaryCurve, enc: EncoderParams, rng) -> LambdaAffinePoint:
    """A point of exact order rho: cofactor-clear a random encoded point."""
    while True:
        w = curve.field.element(rng.getrandbits(curve.field.m) & curve.field.mask)
        p = curve.scalar_mul(sw_encode(w, curve, enc), curve.cofactor)
        if p.kind != IDENTITY:
            return curve.normalize(p)


def complement_subgroup(curve: BinaryCurve, enc: EncoderParams, rng,
                        max_attempts: int = 10000) -> list:
    """The complement of the prime-order subgroup: all h-torsion points.

    Found by clearing the rho-part of random points; for the registered
    curves the complement has order cofactor <= 4.
    """
    found = {curve.compress(curve.identity_affine()): curve.identity_affine()}
    for _ in range(max_attempts):
        if len(found) == curve.cofactor:
            break
        w = curve.field.element(rng.getrandbits(curve.field.m) & curve.field.mask)
        t = curve.normalize(curve.scalar_mul(sw_encode(w, curve, enc), curve.subgroup_order))
        found.setdefault(curve.compress(t), t)
    if len(found) != curve.cofactor:
        raise RuntimeError("could not enumerate the complement subgroup")
    return list(found.values())


class SimulatedOracle:
    """The Appendix-style simulated random oracle h.

    Each new query a is answered with a uniform preimage x of
    Q_i = r_i*Q + d_i*P + J_i, obtained by rejection sampling, and the
    coefficients (r_i, d_i) are recorded for the extraction step.
    """

    def __init__(self, inst: ReductionInstance, enc: EncoderParams, rng,
                 complement: list, alpha: int = 3):
        self.inst = inst
        self.enc = enc
        self.rng = rng
        self.complement = complement
        self.alpha = alpha
        self.records: dict[bytes, tuple] = {}
        self.attempts = 0

    def query(self, a: bytes):
        if a in self.records:
            return self.records[a][0]
        curve = self.inst.curve
        while True:
            self.attempts += 1
            r_i = self.rng.randrange(self.inst.rho)
            d_i = self.rng.randrange(2)
            J_i = self.complement[self.rng.randrange(len(self.complement))]
            Qi = curve.add_full(curve.scalar_mul(self.inst.Q, r_i),
                                curve.scalar_mul(self.inst.P, d_i))
            Qi = curve.normalize(curve.add_mixed(Qi, J_i))
            x = sample_encoding_preimage(Qi, curve, self.enc, self.rng, self.alpha)
            if x is not None:
                self.records[a] = (x, r_i, d_i)
                return x


def brute_force_adversary(oracle: SimulatedOracle, budget: int = 192):
    """Meet-in-the-middle collision finder against the oracle's hash.

    Queries `budget` elements, encodes their oracle outputs, and looks
    for two index pairs with equal point sums; the difference multiset
    is in the kernel of the hash.  Returns a dict element -> nonzero
    multiplicity, or None.
    """
    curve = oracle.inst.curve
    elems = [b"q%d" % i for i in range(budget)]
    pts = [sw_encode(oracle.query(e), curve, oracle.enc) for e in elems]
    proj = [curve.lift(p) for p in pts]
    seen = {}
    for i in range(budget):
        for j in range(i, budget):
            s = curve.compress(curve.normalize(curve.add_full(proj[i], proj[j])))
            if s in seen:
                k, l = seen[s]
                multi: dict[bytes, int] = {}
                for idx, delta in ((i, 1), (j, 1), (k, -1), (l, -1)):
                    multi[elems[idx]] = multi.get(elems[idx], 0) + delta
                multi = {e: m for e, m in multi.items() if m != 0}
                if multi:
                    return multi
            else:
                seen[s] = (i, j)
    return None


def simulate_dlog_reduction(inst: ReductionInstance, enc: EncoderParams, rng,
                            adversary=brute_force_adversary, complement=None):
    """Run the reduction once; returns (status, n).

    status is "success" (n verified: n*P = Q), "r_zero" (the extracted
    linear form vanished) or "adversary_failed".  An adversary output
    outside the kernel raises AdversaryContractError.
    """
    curve = inst.curve
    if complement is None:
        complement = complement_subgroup(curve, enc, rng)
    oracle = SimulatedOracle(inst, enc, rng, complement)
    multi = adversary(oracle)
    if not multi:
        return "adversary_failed", None
    # contract: nonzero multiset, multiplicities below rho, in ker H
    acc = curve.identity()
    for e, mult in multi.items():
        if mult == 0 or abs(mult) >= inst.rho:
            raise AdversaryContractError("bad multiplicity %d" % mult)
        if e not in oracle.records:
            raise AdversaryContractError("multiset uses an unqueried element")
        p = sw_encode(oracle.records[e][0], curve, enc)
        acc = curve.add_full(acc, curve.scalar_mul(p, mult))
    if curve.normalize(acc).kind != IDENTITY:
        raise AdversaryContractError("adversary output is not in the kernel")
    r = sum(oracle.records[e][1] * m for e, m in multi.items()) % inst.rho
    d = sum(oracle.records[e][2] * m for e, m in multi.items()) % inst.rho
    if r == 0:
        return "r_zero", None
    n = (-pow(r, -1, inst.rho) * d) % inst.rho
    got = curve.normalize(curve.scalar_mul(inst.P, n))
    want = curve.normalize(curve.lift(inst.Q)) if isinstance(inst.Q, LambdaAffinePoint) \
        else curve.normalize(inst.Q)
    if (got.kind, got.xv, got.lv) != (want.kind, want.xv, want.lv):
        return "r_zero", None  # extraction failed verification; count as failure
    return "success", n
