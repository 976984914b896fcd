"""Verification timing and encoded sizes across parameter rows."""

from __future__ import annotations

import csv
import io
import os
import statistics
import time
from dataclasses import asdict, dataclass
from typing import Iterable

from .codec import encode_compact, encode_compact_many
from .keygen import Params, generate_keypair, make_rng
from .scheme_one import sign_v1, verify_v1
from .scheme_two import sign_v2, verify_v2

CSV_FIELDS = ("d", "r", "scheme", "verify_ms_median", "sig_bytes", "pub_bytes",
              "priv_bytes", "trials")

PAPER_ROWS = ((100, 127), (150, 127), (200, 127))


@dataclass(frozen=True)
class BenchRow:
    degree: int
    coeff_range: tuple[int, int]
    scheme: int
    verify_time_median: float
    sig_size: int
    pub_size: int
    priv_size: int
    trials: int

    def as_csv(self) -> dict:
        return {"d": self.degree, "r": self.coeff_range[1], "scheme": self.scheme,
                "verify_ms_median": f"{1000 * self.verify_time_median:.3f}",
                "sig_bytes": self.sig_size, "pub_bytes": self.pub_size,
                "priv_bytes": self.priv_size, "trials": self.trials}


def bench_row(d: int, r: int, scheme: int, trials: int, rng=None) -> BenchRow:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = make_rng(rng)
    params = Params(d=d, r=r, scheme=scheme)
    key = generate_keypair(params, rng)
    sign, verify = (sign_v1, verify_v1) if scheme == 1 else (sign_v2, verify_v2)
    times, sig_sizes = [], []
    for _ in range(trials):
        message = os.urandom(32)
        sig = sign(message, key, rng)
        verify(message, sig, key.public)  # warm-up
        start = time.perf_counter()
        outcome = verify(message, sig, key.public)
        times.append(time.perf_counter() - start)
        if not outcome:
            raise RuntimeError(f"honest signature rejected during benchmark: {outcome}")
        sig_sizes.append(len(encode_compact_many(sig.components())))
    return BenchRow(
        degree=d, coeff_range=(0, r), scheme=scheme,
        verify_time_median=statistics.median(times),
        sig_size=max(sig_sizes),
        pub_size=len(encode_compact(key.M)),
        priv_size=len(encode_compact(key.X)) + len(encode_compact(key.Y)),
        trials=trials,
    )


def run_bench(rows: Iterable[tuple[int, int]] = PAPER_ROWS, trials: int = 30,
              schemes: Iterable[int] = (1, 2), rng=None) -> list[BenchRow]:
    """One :class:`BenchRow` per ``(d, r)`` row and scheme, timed sequentially."""
    rng = make_rng(rng)
    return [bench_row(d, r, scheme, trials, rng) for d, r in rows for scheme in schemes]


def to_csv(rows: Iterable[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.as_csv())
    return buf.getvalue()


def summary(rows: Iterable[BenchRow]) -> str:
    lines = []
    for row in rows:
        d = asdict(row)
        lines.append(
            f"scheme {d['scheme']} d={d['degree']} r={d['coeff_range'][1]}: "
            f"verify {1000 * d['verify_time_median']:.2f} ms, sig {d['sig_size']} B, "
            f"pub {d['pub_size']} B, priv {d['priv_size']} B ({d['trials']} trials)")
    return "\n".join(lines)
