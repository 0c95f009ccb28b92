"""Lattice attack, LLL certificates, and the reduction simulation."""

import math
import os
import random

import pytest

from ecmh.baselines import AdHashParams
from ecmh.curve import IDENTITY
from ecmh.encoding import EncoderParams, preimages, sw_encode
from ecmh.errors import AdversaryContractError, NotInvertibleError
from ecmh.registry import get_curve
from ecmh.security import (AttackInstance, ReductionInstance, SimulatedOracle,
                           brute_force_adversary, build_orthogonal_lattice,
                           complement_subgroup, find_adhash_collision,
                           find_subgroup_generator, lll_reduce, q_star,
                           sample_encoding_preimage, simulate_dlog_reduction)

RUN_EXTENDED = os.environ.get("ECMH_EXTENDED_TESTS") == "1"


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def test_lattice_hand_example():
    # q = 2, M = 7, h = (1, 3): rows (7, 0) and (-3, 1)
    inst = AttackInstance(7, [1, 3])
    rows = build_orthogonal_lattice(inst)
    assert rows == [[7, 0], [-3, 1]]
    for v in rows:
        assert _dot(v, inst.h) % 7 == 0


def test_lattice_determinant_and_membership():
    rng = random.Random(0x77)
    for _ in range(20):
        M = rng.randrange(100, 10000)
        h = []
        while len(h) < 5:
            v = rng.randrange(1, M)
            if h or math.gcd(v, M) == 1:
                h.append(v)
        inst = AttackInstance(M, h)
        rows = build_orthogonal_lattice(inst)
        # triangular determinant is M
        det = 1
        for i, row in enumerate(rows):
            det *= row[i]
        assert abs(det) == M
        for v in rows:
            assert inst.is_collision(v) or not any(v)


def test_lattice_requires_invertible_h1():
    with pytest.raises(NotInvertibleError):
        build_orthogonal_lattice(AttackInstance(8, [2, 3]))


def test_lll_certificates():
    rng = random.Random(0x78)
    for _ in range(10):
        M = rng.getrandbits(60) | (1 << 59) | 1
        q = 6
        h = [rng.randrange(1, M) | 1 for _ in range(q)]
        if math.gcd(h[0], M) != 1:
            continue
        inst = AttackInstance(M, h)
        basis = build_orthogonal_lattice(inst)
        red = lll_reduce(basis)
        # membership certificate: every row is orthogonal to h mod M, and
        # that set IS the lattice (index M in Z^q, same as the input basis)
        for v in red:
            assert any(v)
            assert _dot(v, h) % M == 0
        # classical first-vector bound |b1| <= 2^((q-1)/2) * det^(1/q)
        norm1 = math.sqrt(_dot(red[0], red[0]))
        assert norm1 <= 2 ** ((q - 1) / 2) * M ** (1 / q) * (1 + 1e-9)


def test_lll_idempotent_up_to_sign():
    inst = AttackInstance(1009, [5, 17, 88])
    red = lll_reduce(build_orthogonal_lattice(inst))
    again = lll_reduce(red)
    assert [[abs(x) for x in row] for row in again] == \
           [[abs(x) for x in row] for row in red]


def test_q_star_guidance():
    assert q_star(1 << 512) == round(math.sqrt(512 / math.log2(1.021)))
    assert q_star(1 << 1600) == 231


def test_adhash_collision_small():
    params = AdHashParams(128, key=b"attack")
    multiset, report = find_adhash_collision(params, q=14)
    acc = 0
    for e, mult in multiset:
        assert mult != 0
        acc = (acc + mult * params.element(e)) & params.mask
    assert acc == 0
    assert report.q == 14 and report.modulus_bits == 128
    assert report.norm > 0 and report.seconds >= 0


def test_adhash_collision_n512_q40():
    # acceptance-scale instance; also checked in test_acceptance
    params = AdHashParams(512, key=b"attack-512")
    multiset, report = find_adhash_collision(params, q=40)
    assert report.max_multiplicity < 1 << 16
    assert report.seconds < 60


@pytest.mark.skipif(not RUN_EXTENDED, reason="slow extended attack; "
                    "set ECMH_EXTENDED_TESTS=1 to run (n=1600, q=230)")
def test_adhash_collision_extended():
    params = AdHashParams(1600, key=b"attack-1600")
    multiset, report = find_adhash_collision(params, q=230)
    weight = sum(abs(m) for _, m in multiset)
    assert weight < 1 << 14  # the "less than 14-bit long" collision


@pytest.fixture(scope="module")
def toy_reduction():
    curve = get_curve("toy13")
    enc = EncoderParams(curve.field)
    rng = random.Random(0xD106)
    P = find_subgroup_generator(curve, enc, rng)
    comp = complement_subgroup(curve, enc, rng)
    return curve, enc, P, comp, rng


def test_generator_and_complement(toy_reduction):
    curve, enc, P, comp, rng = toy_reduction
    assert curve.normalize(curve.scalar_mul(P, curve.subgroup_order)).kind == IDENTITY
    assert len(comp) == curve.cofactor
    for t in comp:
        got = curve.normalize(curve.scalar_mul(t, curve.cofactor))
        assert got.kind == IDENTITY


def test_reduction_known_dlog(toy_reduction):
    curve, enc, P, comp, rng = toy_reduction
    # Q = P: any success must return n = 1
    inst = ReductionInstance(curve, P, P)
    for _ in range(10):
        status, n = simulate_dlog_reduction(inst, enc, rng, complement=comp)
        if status == "success":
            assert n == 1
            return
    raise AssertionError("no success in 10 trials (expected rate ~1/2)")


def test_reduction_random_dlogs(toy_reduction):
    curve, enc, P, comp, rng = toy_reduction
    rho = curve.subgroup_order
    successes = trials = 0
    for _ in range(20):
        k = rng.randrange(1, rho)
        Q = curve.normalize(curve.scalar_mul(P, k))
        status, n = simulate_dlog_reduction(
            ReductionInstance(curve, P, Q), enc, rng, complement=comp)
        trials += 1
        if status == "success":
            assert n == k  # verified by construction, re-checked here
            successes += 1
        else:
            assert status in ("r_zero", "adversary_failed")
    assert successes >= 3  # rate ~1/2; the acceptance test runs 200 trials


def test_adversary_contract_enforced(toy_reduction):
    curve, enc, P, comp, rng = toy_reduction
    Q = curve.normalize(curve.scalar_mul(P, 5))
    inst = ReductionInstance(curve, P, Q)

    def lying_adversary(oracle):
        oracle.query(b"a")
        oracle.query(b"b")
        return {b"a": 1, b"b": 1}  # almost surely not in the kernel

    with pytest.raises(AdversaryContractError):
        simulate_dlog_reduction(inst, enc, rng, adversary=lying_adversary,
                                complement=comp)


def test_oracle_records_are_consistent(toy_reduction):
    curve, enc, P, comp, rng = toy_reduction
    Q = curve.normalize(curve.scalar_mul(P, 99))
    oracle = SimulatedOracle(ReductionInstance(curve, P, Q), enc, rng, comp)
    for i in range(30):
        x = oracle.query(b"c%d" % i)
        assert oracle.query(b"c%d" % i) == x  # repeated queries are stable
        x2, r_i, d_i = oracle.records[b"c%d" % i]
        # f(x) = r_i Q + d_i P + J_i for some J_i in the complement
        pt = sw_encode(x, curve, enc)
        base = curve.add_full(curve.scalar_mul(Q, r_i), curve.scalar_mul(P, d_i))
        diff = curve.normalize(curve.add_full(curve.lift(pt), curve.negate(base)))
        assert any((diff.kind, diff.xv, diff.lv) == (t.kind, t.xv, t.lv) for t in comp)


def test_preimage_sampler_uniform_on_fiber(toy_reduction):
    curve, enc, P, comp, rng = toy_reduction
    # pick a target with a full 3-element fiber, sample, compare frequencies
    f = curve.field
    target = None
    for v in range(2, 1 << f.m):
        p = sw_encode(f.element(v), curve, enc)
        pre = preimages(p, curve, enc)
        if len(pre) == 3:
            target, fiber = p, sorted(e.value for e in pre)
            break
    counts = dict.fromkeys(fiber, 0)
    accepted = 0
    for _ in range(3000):
        w = sample_encoding_preimage(target, curve, enc, rng)
        if w is not None:
            counts[w.value] += 1
            accepted += 1
    assert accepted == sum(counts.values())
    # |fiber| = alpha = 3, so acceptance is certain; each preimage ~1/3
    for c in counts.values():
        assert abs(c / accepted - 1 / 3) < 0.05


def test_brute_force_adversary_finds_kernel_vector(toy_reduction):
    curve, enc, P, comp, rng = toy_reduction
    Q = curve.normalize(curve.scalar_mul(P, 321))
    oracle = SimulatedOracle(ReductionInstance(curve, P, Q), enc, rng, comp)
    multi = brute_force_adversary(oracle, budget=128)
    assert multi
    acc = curve.identity()
    for e, mult in multi.items():
        assert mult != 0
        p = sw_encode(oracle.records[e][0], curve, enc)
        acc = curve.add_full(acc, curve.scalar_mul(p, mult))
    assert curve.normalize(acc).kind == IDENTITY
