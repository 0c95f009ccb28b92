"""MuHash triplet semantics against a naive modular oracle; AdHash; sizing."""

import math
import random

import pytest

from ecmh.baselines import (AdHashParams, MuHashParams, MuHashState,
                            adhash_n_for_security, adhash_new,
                            adhash_security_bits, adhash_serialize,
                            adhash_union, adhash_update, ecmh_security_bits,
                            muhash_bits_for_security, muhash_eq,
                            muhash_finalize, muhash_insert, muhash_new,
                            muhash_remove, muhash_serialize, muhash_union,
                            nfs_security_bits)
from ecmh.errors import InvalidUpdateError, ParameterMismatchError
from ecmh.registry import get_muhash_prime

SMALL_PRIME = 65521  # largest prime below 2^16, for oracle tests


def test_muhash_matches_naive_oracle():
    params = MuHashParams(SMALL_PRIME, key=b"k")
    rng = random.Random(0x30)
    s = muhash_new(params)
    num, den = 1, 1  # naive running product bookkeeping
    for step in range(10000):
        e = b"mu-%d" % rng.randrange(500)
        if rng.random() < 0.5:
            s = muhash_insert(s, e)
            num = num * params.element(e) % SMALL_PRIME
        else:
            s = muhash_remove(s, e)
            den = den * params.element(e) % SMALL_PRIME
        if step % 500 == 0:
            want = num * pow(den, -1, SMALL_PRIME) % SMALL_PRIME
            assert muhash_finalize(s) == want
    want = num * pow(den, -1, SMALL_PRIME) % SMALL_PRIME
    assert muhash_finalize(s) == want


def test_muhash_finalize_empty_is_one():
    params = MuHashParams(SMALL_PRIME)
    assert muhash_finalize(muhash_new(params)) == 1


def test_muhash_insert_remove_roundtrip_and_order():
    params = MuHashParams(SMALL_PRIME, key=b"o")
    rng = random.Random(0x31)
    base = muhash_new(params)
    for e in (b"x", b"y"):
        base = muhash_insert(base, e)
    s = muhash_remove(muhash_insert(base, b"z"), b"z")
    assert muhash_eq(s, base)
    elems = [b"e%d" % i for i in range(30)]
    s1 = muhash_new(params)
    for e in elems:
        s1 = muhash_insert(s1, e)
    rng.shuffle(elems)
    s2 = muhash_new(params)
    for e in elems:
        s2 = muhash_insert(s2, e)
    assert muhash_eq(s1, s2)
    assert muhash_serialize(s1) == muhash_serialize(s2)


def test_muhash_union_homomorphism():
    params = MuHashParams(SMALL_PRIME, key=b"u")
    a = muhash_insert(muhash_insert(muhash_new(params), b"1"), b"2")
    b = muhash_remove(muhash_insert(muhash_new(params), b"3"), b"4")
    u = muhash_union(a, b)
    direct = muhash_new(params)
    for e in (b"1", b"2", b"3"):
        direct = muhash_insert(direct, e)
    direct = muhash_remove(direct, b"4")
    assert muhash_eq(u, direct)
    with pytest.raises(ParameterMismatchError):
        muhash_union(a, muhash_new(MuHashParams(SMALL_PRIME, key=b"other")))


def test_muhash_element_in_range_and_deterministic():
    params = MuHashParams(SMALL_PRIME, key=b"r")
    rng = random.Random(0x32)
    for _ in range(2000):
        e = rng.getrandbits(64).to_bytes(8, "big")
        v = params.element(e)
        assert 1 <= v <= SMALL_PRIME - 1
        assert v == params.element(e)


def test_muhash_registered_primes():
    for name, bits in (("p1024", 1024), ("p2048", 2048), ("p3072", 3072)):
        p = get_muhash_prime(name)
        assert p.bit_length() == bits
        params = MuHashParams(p, name=name)
        s = muhash_insert(muhash_new(params), b"probe")
        assert muhash_eq(muhash_remove(s, b"probe"), muhash_new(params))


def test_muhash_redc_is_montgomery_product():
    params = MuHashParams(SMALL_PRIME)
    rng = random.Random(0x33)
    rinv = pow(params.r, -1, SMALL_PRIME)
    for _ in range(500):
        t = rng.randrange(SMALL_PRIME * params.r)
        assert params.redc(t) == t * rinv % SMALL_PRIME


def test_adhash_matches_sum_oracle():
    params = AdHashParams(64, key=b"a")
    rng = random.Random(0x34)
    acc = adhash_new(params)
    total = 0
    for _ in range(2000):
        e = b"ad-%d" % rng.randrange(300)
        delta = rng.choice([-2, -1, 1, 2])
        acc = adhash_update(params, acc, e, delta)
        total += delta * params.element(e)
        assert acc == total % (1 << 64)
    with pytest.raises(InvalidUpdateError):
        adhash_update(params, acc, b"x", 0)


def test_adhash_union_and_serialize():
    params = AdHashParams(64, key=b"s")
    a = adhash_update(params, adhash_new(params), b"p", 1)
    b = adhash_update(params, adhash_new(params), b"q", 1)
    u = adhash_union(params, a, b)
    direct = adhash_update(params, a, b"q", 1)
    assert u == direct
    assert adhash_serialize(params, u) == direct.to_bytes(8, "big")
    with pytest.raises(ValueError):
        AdHashParams(4)


def test_security_sizing_anchors():
    # NFS: 3072-bit modulus sits near the 128-bit level (within the usual
    # key-size table slack), 1024-bit near 80 bits
    assert 110 <= nfs_security_bits(3072) <= 140
    assert 70 <= nfs_security_bits(1024) <= 90
    assert muhash_bits_for_security(128) == 3072
    assert muhash_bits_for_security(80) == 1024
    # set-only AdHash: 2 sqrt(n)
    assert adhash_security_bits(1600) == 80
    assert adhash_n_for_security(80) == 1600
    assert adhash_n_for_security(128) == 4096
    # ECMH generic bound: roughly half the subgroup size
    assert math.isclose(ecmh_security_bits(233), 115.5)
    assert math.isclose(ecmh_security_bits(163), 80.5)


def test_muhash_rejects_even_modulus():
    with pytest.raises(ValueError):
        MuHashParams(1 << 16)
