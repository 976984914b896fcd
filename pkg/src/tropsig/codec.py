"""Text and compact binary formats for polynomials, keys and signatures.

Polynomial text record::

    TP1 d=<degree> <c0>,<c1>,...,<cd>

with ``inf`` for an absent coefficient and ``TP1 d=- -`` for the
ε-polynomial. Key and signature files start with a header line
``TSIG v1 scheme=<1|2> d=<d> r=<r>`` followed by one ``LABEL=<record>`` line
per component, in a fixed order. Parsing is strict: every line ends in a
single ``\\n``, integers have no sign on zero, no leading zeros and no
padding, so each object has exactly one valid encoding.

Compact record: 4-byte little-endian degree, then ``degree + 1`` 2-byte
little-endian coefficients, ``0xFFFF`` marking ``EPS``. A compact signature
or key is the concatenation of its component records.
"""

from __future__ import annotations

import os
import re
import struct
import tempfile
from pathlib import Path
from typing import Union

from .keygen import KeyPair, Params, PublicKey
from .scheme_one import SignatureV1
from .scheme_two import SignatureV2
from .semiring import EPS, MAX_ABS_COEFF, TropicalPoly, otimes

COMPACT_EPS = 0xFFFF
COMPACT_MAX = 0xFFFE
_COMPACT_EPS_DEGREE = 0xFFFFFFFF

_INT = re.compile(r"(?:0|-?[1-9][0-9]*)\Z")
_HEADER = re.compile(r"TSIG v1 scheme=([12]) d=(0|[1-9][0-9]*) r=(0|[1-9][0-9]*)( hash=2d)?\Z")

Signature = Union[SignatureV1, SignatureV2]


class CodecError(ValueError):
    """Base class for every parse/encode failure."""


class HeaderError(CodecError):
    pass


class TokenError(CodecError):
    pass


class TokenCountError(CodecError):
    pass


class NonCanonicalError(CodecError):
    pass


class CoefficientRangeError(CodecError):
    pass


class LayoutError(CodecError):
    """Wrong labels, order or line structure in a key/signature file."""


# -- polynomial text ------------------------------------------------------

def encode_poly_text(p: TropicalPoly) -> str:
    if p.is_eps:
        return "TP1 d=- -"
    body = ",".join("inf" if c == EPS else str(c) for c in p.coeffs)
    return f"TP1 d={p.degree} {body}"


def decode_poly_text(line: str) -> TropicalPoly:
    parts = line.split(" ")
    if len(parts) != 3 or parts[0] != "TP1" or not parts[1].startswith("d="):
        raise HeaderError(f"malformed polynomial header in {line[:40]!r}")
    deg_tok, body = parts[1][2:], parts[2]
    if deg_tok == "-":
        if body != "-":
            raise TokenCountError("ε-polynomial record must have body '-'")
        return TropicalPoly.eps()
    if not _INT.match(deg_tok) or deg_tok.startswith("-"):
        raise HeaderError(f"bad degree token {deg_tok[:20]!r}")
    tokens = body.split(",")
    if len(tokens) != int(deg_tok) + 1:
        raise TokenCountError(f"expected {int(deg_tok) + 1} coefficients, got {len(tokens)}")
    coeffs = []
    for tok in tokens:
        if tok == "inf":
            coeffs.append(EPS)
            continue
        if not _INT.match(tok):
            raise TokenError(f"bad coefficient token {tok[:20]!r}")
        v = int(tok)
        if abs(v) > MAX_ABS_COEFF:
            raise CoefficientRangeError(f"coefficient {tok[:20]} outside the 64-bit safe window")
        coeffs.append(v)
    if coeffs[-1] == EPS:
        raise NonCanonicalError("leading coefficient is EPS")
    return TropicalPoly(coeffs)


# -- polynomial compact ---------------------------------------------------

def encode_compact(p: TropicalPoly) -> bytes:
    if p.is_eps:
        return struct.pack("<I", _COMPACT_EPS_DEGREE)
    out = bytearray(struct.pack("<I", p.degree))
    for c in p.coeffs:
        if c == EPS:
            out += struct.pack("<H", COMPACT_EPS)
        elif 0 <= c <= COMPACT_MAX:
            out += struct.pack("<H", c)
        else:
            raise CoefficientRangeError(f"coefficient {c} not representable in the compact format")
    return bytes(out)


def read_compact(buf: bytes, offset: int = 0) -> tuple[TropicalPoly, int]:
    """Decode one record at ``offset``; return it and the offset just past it."""
    if len(buf) - offset < 4:
        raise TokenCountError("truncated compact record")
    (deg,) = struct.unpack_from("<I", buf, offset)
    offset += 4
    if deg == _COMPACT_EPS_DEGREE:
        return TropicalPoly.eps(), offset
    end = offset + 2 * (deg + 1)
    if end > len(buf):
        raise TokenCountError("truncated compact record")
    raw = struct.unpack_from(f"<{deg + 1}H", buf, offset)
    if raw[-1] == COMPACT_EPS:
        raise NonCanonicalError("leading coefficient is EPS")
    return TropicalPoly([EPS if v == COMPACT_EPS else v for v in raw]), end


def decode_compact(data: bytes) -> TropicalPoly:
    p, end = read_compact(data)
    if end != len(data):
        raise TokenCountError("trailing bytes after compact record")
    return p


def encode_compact_many(polys) -> bytes:
    return b"".join(encode_compact(p) for p in polys)


def decode_compact_many(data: bytes, count: int) -> list[TropicalPoly]:
    out, offset = [], 0
    for _ in range(count):
        p, offset = read_compact(data, offset)
        out.append(p)
    if offset != len(data):
        raise TokenCountError("trailing bytes after compact records")
    return out


def signature_compact_size(sig: Signature) -> int:
    return len(encode_compact_many(sig.components()))


# -- key and signature files ---------------------------------------------

def format_header(params: Params) -> str:
    extra = " hash=2d" if params.hash_mode == "2d" else ""
    return f"TSIG v1 scheme={params.scheme} d={params.d} r={params.r}{extra}"


def parse_header(line: str) -> Params:
    m = _HEADER.match(line)
    if not m:
        raise HeaderError(f"malformed file header {line[:60]!r}")
    try:
        return Params(d=int(m.group(2)), r=int(m.group(3)), scheme=int(m.group(1)),
                      hash_mode="2d" if m.group(4) else "d")
    except ValueError as exc:
        raise HeaderError(str(exc)) from exc


def dumps_bundle(params: Params, labelled: dict) -> str:
    lines = [format_header(params)]
    lines += [f"{label}={encode_poly_text(p)}" for label, p in labelled.items()]
    return "\n".join(lines) + "\n"


def loads_bundle(text: str, labels: tuple[str, ...]) -> tuple[Params, dict]:
    if not text.endswith("\n") or "\r" in text:
        raise LayoutError("file must consist of newline-terminated lines")
    lines = text[:-1].split("\n")
    if len(lines) != len(labels) + 1:
        raise LayoutError(f"expected {len(labels) + 1} lines, got {len(lines)}")
    params = parse_header(lines[0])
    out = {}
    for label, line in zip(labels, lines[1:]):
        prefix = f"{label}="
        if not line.startswith(prefix):
            raise LayoutError(f"expected a {label}= line, got {line[:20]!r}")
        out[label] = decode_poly_text(line[len(prefix):])
    return params, out


PRIVATE_LABELS = ("X", "Y", "M")
PUBLIC_LABELS = ("M",)


def dumps_private(key: KeyPair) -> str:
    return dumps_bundle(key.params, {"X": key.X, "Y": key.Y, "M": key.M})


def loads_private(text: str) -> KeyPair:
    params, polys = loads_bundle(text, PRIVATE_LABELS)
    X, Y, M = polys["X"], polys["Y"], polys["M"]
    if X.is_eps or Y.is_eps or X.degree + Y.degree != 2 * params.d:
        raise LayoutError("private key degrees do not sum to 2d")
    if otimes(X, Y) != M:
        raise LayoutError("private key is inconsistent: M != X ⊗ Y")
    return KeyPair(X, Y, M, params)


def dumps_public(public: PublicKey) -> str:
    return dumps_bundle(public.params, {"M": public.M})


def loads_public(text: str) -> PublicKey:
    params, polys = loads_bundle(text, PUBLIC_LABELS)
    return PublicKey(polys["M"], params)


def dumps_signature(sig: Signature, params: Params) -> str:
    return dumps_bundle(params, dict(zip(sig.LABELS, sig.components())))


def loads_signature(text: str) -> tuple[Params, Signature]:
    first = text.split("\n", 1)[0]
    params = parse_header(first)
    cls = SignatureV1 if params.scheme == 1 else SignatureV2
    params, polys = loads_bundle(text, cls.LABELS)
    return params, cls(**polys)


# -- file helpers ---------------------------------------------------------

def read_text(path) -> str:
    try:
        return Path(path).read_bytes().decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CodecError(f"{path}: not UTF-8") from exc


def write_atomic(path, data: Union[str, bytes]) -> None:
    """Write via a temporary file in the same directory, then rename."""
    path = Path(path)
    if isinstance(data, str):
        data = data.encode("utf-8")
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise
