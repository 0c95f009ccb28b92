"""Elliptic curve multiset hash over binary curves, with baseline
constructions, executable security analyses, and a benchmark harness."""

from .curve import BinaryCurve, LambdaAffinePoint, LambdaProjectivePoint
from .encoding import (EncoderParams, preimage_histogram, preimages, sw_encode,
                       sw_encode_batch, sw_encode_blinded)
from .errors import EcmhError
from .field import BinaryField, FieldElement
from .multiset import (ECMHParams, GrothendieckHash, MonoidHash, MultisetDigest,
                       UpdateOp, digest_deserialize, digest_eq, digest_new,
                       digest_serialize, digest_union, digest_update,
                       ecmh_add_only_monoid, hash_multiset)
from .registry import get_adhash_bits, get_curve, get_field, get_muhash_prime

__version__ = "1.0.0"

__all__ = [
    "BinaryCurve", "BinaryField", "ECMHParams", "EcmhError", "EncoderParams",
    "FieldElement", "GrothendieckHash", "LambdaAffinePoint",
    "LambdaProjectivePoint", "MonoidHash", "MultisetDigest", "UpdateOp",
    "digest_deserialize", "digest_eq", "digest_new", "digest_serialize",
    "digest_union", "digest_update", "ecmh_add_only_monoid", "get_adhash_bits",
    "get_curve", "get_field", "get_muhash_prime", "hash_multiset",
    "preimage_histogram", "preimages", "sw_encode", "sw_encode_batch",
    "sw_encode_blinded",
]
