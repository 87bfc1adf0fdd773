"""Dense univariate polynomials with real or complex coefficients.

Polynomials are 1-D numpy arrays of coefficients in ascending degree order,
``c[n]`` being the coefficient of ``z**n``.  A real polynomial has dtype
``float64``, a complex one ``complex128``.  The normalized form carries no
trailing (exact) zeros; the zero polynomial is ``[0.0]``.

The module also implements the plain-text polynomial format used by the
command line and the test fixtures: one coefficient per line, ascending
degree, written either as ``re`` or as ``re im``; ``#`` starts a comment.
"""

from __future__ import annotations

import math
import os
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "PolyFormatError",
    "ConsistencyError",
    "as_poly",
    "is_real",
    "degree",
    "evaluate",
    "monicize",
    "require_monic",
    "conjugate_poly",
    "realify",
    "deflate",
    "strip_zero_roots",
    "derivative",
    "multiply",
    "from_roots",
    "coefficient_scale",
    "parse_poly",
    "read_poly",
    "format_poly",
    "write_poly",
]


class PolyFormatError(ValueError):
    """Malformed polynomial text; ``lineno`` is 1-based (0 if not line-specific)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno else ""
        super().__init__(prefix + message)


class ConsistencyError(ArithmeticError):
    """An internal numerical invariant was violated."""


def as_poly(coeffs) -> np.ndarray:
    """Return ``coeffs`` as a normalized coefficient array.

    Integer and real input becomes ``float64``; anything complex stays
    ``complex128`` even when every imaginary part is zero.  Only exact zeros
    are trimmed from the top.
    """
    c = np.asarray(coeffs)
    if c.ndim == 0:
        c = c.reshape(1)
    if c.ndim != 1:
        raise ValueError("polynomial coefficients must be one-dimensional")
    if np.iscomplexobj(c):
        c = c.astype(np.complex128)
    else:
        c = c.astype(np.float64)
    if c.size == 0:
        return np.zeros(1, dtype=c.dtype)
    if not np.all(np.isfinite(c)):
        raise ValueError("polynomial coefficients must be finite")
    nz = np.flatnonzero(c)
    if nz.size == 0:
        return np.zeros(1, dtype=c.dtype)
    return c[: nz[-1] + 1].copy()


def is_real(c) -> bool:
    """True when every coefficient has zero imaginary part."""
    c = np.asarray(c)
    return not np.iscomplexobj(c) or not np.any(c.imag)


def degree(c) -> int:
    return len(as_poly(c)) - 1


def evaluate(c, z):
    """Evaluate the polynomial at ``z`` by Horner's rule.

    ``z`` may be a scalar or an array; the result has the same shape.
    """
    c = np.asarray(c)
    if np.ndim(z) == 0:
        acc = c[-1].item()
        for a in c[-2::-1].tolist():
            acc = acc * z + a
        return acc
    z = np.asarray(z)
    acc = np.full(z.shape, c[-1], dtype=np.result_type(c, z))
    for a in c[-2::-1]:
        acc = acc * z + a
    return acc


def require_monic(c) -> np.ndarray:
    """Normalize ``c`` and insist on degree >= 1 with leading coefficient exactly 1."""
    c = as_poly(c)
    if len(c) < 2:
        raise ValueError("a nonconstant polynomial is required")
    if c[-1] != 1:
        raise ValueError("polynomial must be monic (leading coefficient exactly 1)")
    return c


def monicize(c) -> np.ndarray:
    """Divide through by the leading coefficient."""
    c = as_poly(c)
    if len(c) == 1 and c[0] == 0:
        raise ValueError("cannot monicize the zero polynomial")
    out = c / c[-1]
    out[-1] = 1.0
    return out


def conjugate_poly(c) -> np.ndarray:
    """Coefficientwise complex conjugate."""
    c = as_poly(c)
    return np.conj(c) if np.iscomplexobj(c) else c.copy()


def realify(c) -> np.ndarray:
    """Real polynomial ``f * conj(f)`` of degree ``2 * deg f``.

    Its roots are the roots of ``f`` together with their complex
    conjugates.  Each product coefficient is accumulated with ``math.fsum``.
    """
    c = as_poly(c)
    n = len(c) - 1
    if n < 1:
        raise ValueError("realify requires a nonconstant polynomial")
    re = c.real.tolist()
    im = c.imag.tolist() if np.iscomplexobj(c) else [0.0] * (n + 1)
    out = np.empty(2 * n + 1)
    scale = math.fsum(x * x + y * y for x, y in zip(re, im))
    for k in range(2 * n + 1):
        lo, hi = max(0, k - n), min(k, n)
        # c_j * conj(c_{k-j})
        real_part = math.fsum(
            p
            for j in range(lo, hi + 1)
            for p in (re[j] * re[k - j], im[j] * im[k - j])
        )
        imag_part = math.fsum(
            p
            for j in range(lo, hi + 1)
            for p in (im[j] * re[k - j], -re[j] * im[k - j])
        )
        if abs(imag_part) > 1e-14 * scale:
            raise ConsistencyError(
                f"realify: imaginary residue {imag_part:.3e} at degree {k}"
            )
        out[k] = real_part
    return out


def deflate(c, root) -> tuple[np.ndarray, complex]:
    """Synthetic division by ``(z - root)``.

    Returns ``(quotient, remainder)``; the remainder equals ``f(root)`` and
    is only diagnostic.
    """
    c = as_poly(c)
    if len(c) < 2:
        raise ValueError("cannot deflate a constant polynomial")
    root = complex(root)
    dtype = np.complex128 if (np.iscomplexobj(c) or root.imag) else np.float64
    if dtype is np.float64:
        root = root.real
    q = np.empty(len(c) - 1, dtype=dtype)
    acc = c[-1]
    for k in range(len(c) - 2, -1, -1):
        q[k] = acc
        acc = acc * root + c[k]
    return q, complex(acc)


def strip_zero_roots(c) -> tuple[int, np.ndarray]:
    """Split ``f = z**m * g`` with ``g(0) != 0``."""
    c = as_poly(c)
    if len(c) == 1 and c[0] == 0:
        raise ValueError("the zero polynomial has no finite factorization")
    m = int(np.flatnonzero(c)[0])
    return m, c[m:].copy()


def derivative(c) -> np.ndarray:
    c = as_poly(c)
    if len(c) == 1:
        return np.zeros(1, dtype=c.dtype)
    return as_poly(c[1:] * np.arange(1, len(c)))


def multiply(a, b) -> np.ndarray:
    return as_poly(np.convolve(as_poly(a), as_poly(b)))


def from_roots(roots: Iterable) -> np.ndarray:
    """Monic polynomial with the given roots (real dtype if all roots are real)."""
    out = np.ones(1)
    for r in roots:
        out = multiply(out, np.array([-r, 1.0]))
    return out


def coefficient_scale(c, z) -> float:
    """``sum |c_n| * max(1, |z|)**N``: the size of the terms summed in ``f(z)``."""
    c = as_poly(c)
    return float(np.sum(np.abs(c))) * max(1.0, abs(z)) ** (len(c) - 1)


# -- text format ---------------------------------------------------------


def parse_poly(text: str) -> np.ndarray:
    """Parse the text polynomial format; raises :class:`PolyFormatError`."""
    values: list[complex] = []
    any_complex = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) > 2:
            raise PolyFormatError(
                f"expected 're' or 're im', got {len(fields)} fields", lineno
            )
        try:
            parts = [float(f) for f in fields]
        except ValueError:
            raise PolyFormatError(f"not a number: {line!r}", lineno) from None
        if not all(math.isfinite(p) for p in parts):
            raise PolyFormatError("coefficients must be finite", lineno)
        if len(parts) == 2:
            any_complex = True
            values.append(complex(parts[0], parts[1]))
        else:
            values.append(complex(parts[0], 0.0))
    if not values:
        raise PolyFormatError("no coefficients found")
    arr = np.array(values, dtype=np.complex128)
    return as_poly(arr if any_complex else arr.real)


def read_poly(path: str | os.PathLike) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        return parse_poly(fh.read())


def format_poly(c, header: Sequence[str] = ()) -> str:
    """Inverse of :func:`parse_poly`; ``repr`` gives shortest round-trip decimals."""
    c = as_poly(c)
    lines = [f"# {h}" for h in header]
    cplx = np.iscomplexobj(c)
    for a in c.tolist():
        if cplx:
            lines.append(f"{a.real!r} {a.imag!r}")
        else:
            lines.append(repr(a))
    return "\n".join(lines) + "\n"


def write_poly(path: str | os.PathLike, c, header: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_poly(c, header))
