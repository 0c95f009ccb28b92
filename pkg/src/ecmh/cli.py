"""Command-line interface: multiset hashing, digest algebra, and the
benchmark harness.

Digests are printed as hex.  Input streams come in two formats: `lines`
(one element per line, UTF-8) and `lp` (4-byte big-endian length prefix
followed by that many raw bytes, repeated).  Exit codes: 2 for unknown
parameter names, 3 for malformed streams, and for `eq` 0/1 meaning
equal/unequal.
"""

from __future__ import annotations

import concurrent.futures
import os
import sys

import click

from . import registry
from .baselines import (AdHashParams, MuHashParams, adhash_new, adhash_serialize,
                        adhash_update, muhash_insert, muhash_new, muhash_serialize)
from .bench import BenchConfig, run_bench
from .errors import EcmhError
from .multiset import (ECMHParams, UpdateOp, digest_deserialize, digest_eq,
                       digest_new, digest_serialize, digest_union, digest_update,
                       hash_multiset)

EXIT_BAD_PARAM = 2
EXIT_BAD_STREAM = 3


# -- per-construction digest algebra over serialized digests ---------------------


class _EcmhAdapter:
    def __init__(self, param, key):
        self.params = ECMHParams(registry.get_curve(param), key=key)

    def empty(self):
        return digest_serialize(digest_new(self.params))

    def hash_stream(self, elements, threads=1):
        if threads <= 1 or len(elements) < 2 * threads:
            d = hash_multiset(self.params, ((e, 1) for e in elements))
            return digest_serialize(d)
        # homomorphism makes chunked hashing safe: hash chunks, union
        chunk = (len(elements) + threads - 1) // threads
        parts = [elements[i:i + chunk] for i in range(0, len(elements), chunk)]
        with concurrent.futures.ThreadPoolExecutor(threads) as pool:
            digests = list(pool.map(
                lambda part: hash_multiset(self.params, ((e, 1) for e in part)), parts))
        acc = digests[0]
        for d in digests[1:]:
            acc = digest_union(acc, d)
        return digest_serialize(acc)

    def _load(self, data):
        return digest_deserialize(self.params, data)

    def update(self, data, element, delta):
        return digest_serialize(digest_update(self._load(data), UpdateOp(element, delta)))

    def union(self, d1, d2):
        return digest_serialize(digest_union(self._load(d1), self._load(d2)))

    def eq(self, d1, d2):
        return digest_eq(self._load(d1), self._load(d2))


class _MuHashAdapter:
    def __init__(self, param, key):
        self.params = MuHashParams(registry.get_muhash_prime(param), key=key, name=param)

    def empty(self):
        return muhash_serialize(muhash_new(self.params))

    def hash_stream(self, elements, threads=1):
        s = muhash_new(self.params)
        for e in elements:
            s = muhash_insert(s, e)
        return muhash_serialize(s)

    def _load(self, data):
        if len(data) != self.params.nbytes:
            raise ValueError("wrong digest length for this construction")
        return int.from_bytes(data, "big")

    def _dump(self, v):
        return v.to_bytes(self.params.nbytes, "big")

    def update(self, data, element, delta):
        p = self.params.p
        v = self._load(data) * pow(self.params.element(element), delta, p) % p
        return self._dump(v)

    def union(self, d1, d2):
        return self._dump(self._load(d1) * self._load(d2) % self.params.p)

    def eq(self, d1, d2):
        return self._load(d1) == self._load(d2)


class _AdHashAdapter:
    def __init__(self, param, key):
        self.params = AdHashParams(registry.get_adhash_bits(param), key=key, name=param)

    def empty(self):
        return adhash_serialize(self.params, adhash_new(self.params))

    def hash_stream(self, elements, threads=1):
        acc = adhash_new(self.params)
        for e in elements:
            acc = adhash_update(self.params, acc, e, 1)
        return adhash_serialize(self.params, acc)

    def _load(self, data):
        if len(data) != self.params.nbytes:
            raise ValueError("wrong digest length for this construction")
        return int.from_bytes(data, "big")

    def update(self, data, element, delta):
        v = adhash_update(self.params, self._load(data), element, delta)
        return adhash_serialize(self.params, v)

    def union(self, d1, d2):
        v = (self._load(d1) + self._load(d2)) & self.params.mask
        return adhash_serialize(self.params, v)

    def eq(self, d1, d2):
        return self._load(d1) == self._load(d2)


_ADAPTERS = {"ecmh": _EcmhAdapter, "muhash": _MuHashAdapter, "adhash": _AdHashAdapter}


def _make_adapter(construction, param, key_hex):
    try:
        key = bytes.fromhex(key_hex or "")
    except ValueError:
        click.echo("error: --key must be hex", err=True)
        sys.exit(EXIT_BAD_PARAM)
    try:
        return _ADAPTERS[construction](param, key)
    except (KeyError, ValueError, EcmhError) as exc:
        click.echo("error: unknown or invalid parameter %r (%s)" % (param, exc), err=True)
        sys.exit(EXIT_BAD_PARAM)


def _read_stream(path, fmt):
    try:
        if path == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(path, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        click.echo("error: cannot read input: %s" % exc, err=True)
        sys.exit(EXIT_BAD_STREAM)
    try:
        if fmt == "lines":
            data.decode("utf-8")  # must be valid text
            lines = data.split(b"\n")
            if lines and lines[-1] == b"":
                lines.pop()  # trailing newline, not an empty element
            return lines
        elements = []
        pos = 0
        while pos < len(data):
            if pos + 4 > len(data):
                raise ValueError("truncated length prefix")
            n = int.from_bytes(data[pos:pos + 4], "big")
            pos += 4
            if pos + n > len(data):
                raise ValueError("truncated element body")
            elements.append(data[pos:pos + n])
            pos += n
        return elements
    except (ValueError, UnicodeDecodeError) as exc:
        click.echo("error: malformed %s stream: %s" % (fmt, exc), err=True)
        sys.exit(EXIT_BAD_STREAM)


def _digest_arg(hexstr):
    try:
        return bytes.fromhex(hexstr)
    except ValueError:
        click.echo("error: digest arguments must be hex", err=True)
        sys.exit(EXIT_BAD_STREAM)


def _common(fn):
    fn = click.option("--key", default="", help="intermediate-hash key, hex")(fn)
    fn = click.option("--param", required=True,
                      help="parameter set name (e.g. sect233k1, toy13, p3072, n128)")(fn)
    fn = click.option("--construction", type=click.Choice(["ecmh", "muhash", "adhash"]),
                      default="ecmh", show_default=True)(fn)
    return fn


@click.group()
def main():
    """Homomorphic multiset hashing: ECMH and baseline constructions."""


@main.command("hash")
@_common
@click.option("--format", "fmt", type=click.Choice(["lines", "lp"]), default="lines",
              show_default=True, help="input stream format")
@click.option("--in", "path", default="-", show_default=True,
              help="input path, or - for stdin")
@click.option("--threads", default=1, show_default=True,
              help="hash chunks in parallel and combine by union")
def cli_hash(construction, param, key, fmt, path, threads):
    """Hash an input stream (every item multiplicity +1) to a digest."""
    adapter = _make_adapter(construction, param, key)
    elements = _read_stream(path, fmt)
    click.echo(adapter.hash_stream(elements, threads=threads).hex())


@main.command("update")
@_common
@click.option("--digest", required=True, help="starting digest, hex")
@click.option("--element", required=True, help="element (UTF-8 string)")
@click.option("--delta", default=1, show_default=True, help="signed multiplicity change")
def cli_update(construction, param, key, digest, element, delta):
    """Apply one multiplicity change to a digest."""
    adapter = _make_adapter(construction, param, key)
    try:
        out = adapter.update(_digest_arg(digest), element.encode("utf-8"), delta)
    except (ValueError, EcmhError) as exc:
        click.echo("error: %s" % exc, err=True)
        sys.exit(EXIT_BAD_STREAM)
    click.echo(out.hex())


@main.command("union")
@_common
@click.argument("digest1")
@click.argument("digest2")
def cli_union(construction, param, key, digest1, digest2):
    """Combine two digests (hash of the multiset sum)."""
    adapter = _make_adapter(construction, param, key)
    try:
        out = adapter.union(_digest_arg(digest1), _digest_arg(digest2))
    except (ValueError, EcmhError) as exc:
        click.echo("error: %s" % exc, err=True)
        sys.exit(EXIT_BAD_STREAM)
    click.echo(out.hex())


@main.command("eq")
@_common
@click.argument("digest1")
@click.argument("digest2")
def cli_eq(construction, param, key, digest1, digest2):
    """Compare two digests; exits 0 if equal, 1 otherwise."""
    adapter = _make_adapter(construction, param, key)
    try:
        equal = adapter.eq(_digest_arg(digest1), _digest_arg(digest2))
    except (ValueError, EcmhError) as exc:
        click.echo("error: %s" % exc, err=True)
        sys.exit(EXIT_BAD_STREAM)
    click.echo("equal" if equal else "unequal")
    sys.exit(0 if equal else 1)


@main.command("bench")
@click.option("--out", "csv_path", default="bench.csv", show_default=True,
              help="CSV report path")
@click.option("--fig", "fig_path", default=None,
              help="figure path (default: CSV path with .png)")
@click.option("--warmup", default=2000, show_default=True)
@click.option("--samples", default=1000, show_default=True)
def cli_bench(csv_path, fig_path, warmup, samples):
    """Run the benchmark suites; writes CSV and a rendered figure."""
    if fig_path is None:
        fig_path = os.path.splitext(csv_path)[0] + ".png"
    config = BenchConfig(warmup_discard=warmup, min_samples=samples)
    run_bench(config, csv_path=csv_path, fig_path=fig_path,
              log=lambda msg: click.echo(msg, err=True))
    click.echo("wrote %s and %s" % (csv_path, fig_path))


if __name__ == "__main__":
    main()
