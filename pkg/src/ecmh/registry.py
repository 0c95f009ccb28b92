"""Named parameter sets loaded from the in-repo registry file.

The registry directory can be overridden with the ECMH_PARAM_DIR
environment variable (it must contain a ``registry.json`` with the same
layout as the packaged one).
"""

from __future__ import annotations

import json
import os
from functools import lru_cache
from importlib import resources

from .curve import BinaryCurve
from .field import BinaryField


def _registry_path():
    override = os.environ.get("ECMH_PARAM_DIR")
    if override:
        return os.path.join(override, "registry.json")
    return resources.files("ecmh.params") / "registry.json"


@lru_cache(maxsize=None)
def _load():
    path = _registry_path()
    if isinstance(path, str):
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    return json.loads(path.read_text(encoding="utf-8"))


def field_names() -> list[str]:
    return sorted(_load()["fields"])


def curve_names() -> list[str]:
    return sorted(_load()["curves"])


def muhash_names() -> list[str]:
    return sorted(_load()["muhash"])


def adhash_names() -> list[str]:
    return sorted(_load()["adhash"])


@lru_cache(maxsize=None)
def get_field(name: str) -> BinaryField:
    try:
        spec = _load()["fields"][name]
    except KeyError:
        raise KeyError(f"unknown field parameter set: {name!r}") from None
    return BinaryField(
        spec["m"], int(spec["poly"], 16),
        block_bits=spec.get("table_block_bits", 8),
        inversion_chain=spec.get("inversion_chain"),
        name=name,
    )


@lru_cache(maxsize=None)
def get_curve(name: str) -> BinaryCurve:
    try:
        spec = _load()["curves"][name]
    except KeyError:
        raise KeyError(f"unknown curve parameter set: {name!r}") from None
    rho = int(spec["subgroup_order"], 16)
    if not _is_probable_prime(rho):
        raise ValueError(f"subgroup order of {name} is not prime")
    return BinaryCurve(
        get_field(spec["field"]),
        int(spec["a"], 16), int(spec["b"], 16),
        cofactor=spec["cofactor"], subgroup_order=rho, name=name,
    )


@lru_cache(maxsize=None)
def get_muhash_prime(name: str) -> int:
    try:
        spec = _load()["muhash"][name]
    except KeyError:
        raise KeyError(f"unknown MuHash parameter set: {name!r}") from None
    p = (3 << (spec["bits"] - 2)) + int(spec["prime_tail"], 16)
    if not _is_probable_prime(p):
        raise ValueError(f"registry modulus {name} failed the primality check")
    return p


def get_adhash_bits(name: str) -> int:
    try:
        return _load()["adhash"][name]["n"]
    except KeyError:
        raise KeyError(f"unknown AdHash parameter set: {name!r}") from None


def _is_probable_prime(n: int, rounds: int = 32) -> bool:
    """Miller-Rabin with fixed small bases plus deterministic witnesses."""
    if n < 2:
        return False
    small = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    import random
    rng = random.Random(0xEC)  # deterministic witnesses: registry is static
    for i in range(rounds):
        a = small[i] if i < len(small) else rng.randrange(2, n - 1)
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
