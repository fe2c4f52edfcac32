"""Dimension-vector arithmetic for the n-Kronecker quiver.

Vertex 1 is the source and vertex 2 the sink, so a dimension vector ``(x, y)``
records the dimension at the source first.  Everything here is exact integer
arithmetic on Python ints.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import NamedTuple

from .errors import ArithmeticRangeError, DomainError, UnsupportedIndexError

__all__ = [
    "DimVector",
    "RootTag",
    "RootClass",
    "CoxeterConvention",
    "check_index",
    "tits_form",
    "classify",
    "is_positive_imaginary",
    "reflect_source",
    "reflect_sink",
    "coxeter",
    "in_fundamental_domain",
    "reduce_to_fundamental_domain",
    "preprojective_dims",
    "preinjective_dims",
    "cover_thin_exists",
    "cover_thin_violation",
    "imaginary_roots",
]


class DimVector(NamedTuple):
    x: int
    y: int

    @property
    def total(self) -> int:
        return self.x + self.y


class RootTag(enum.Enum):
    REAL = "real"
    IMAGINARY = "imaginary"
    NOT_A_ROOT = "not a root"


class RootClass(NamedTuple):
    tag: RootTag
    q: int


class CoxeterConvention(enum.Enum):
    FORWARD = "forward"
    INVERSE = "inverse"


def _int(value) -> int:
    # bool is an int subclass but never a meaningful coordinate
    if isinstance(value, bool) or not isinstance(value, int):
        try:
            import numpy as np

            if isinstance(value, np.integer):
                return int(value)
        except ImportError:  # pragma: no cover
            pass
        raise ArithmeticRangeError(f"expected an exact integer, got {value!r}")
    return value


def _vec(v) -> DimVector:
    x, y = v
    return DimVector(_int(x), _int(y))


def check_index(n) -> int:
    n = _int(n)
    if n < 1:
        raise UnsupportedIndexError(f"number of arrows must be >= 1, got {n}")
    return n


def tits_form(n: int, v) -> int:
    """Return ``x^2 + y^2 - n*x*y``."""
    n = check_index(n)
    x, y = _vec(v)
    return x * x + y * y - n * x * y


def classify(n: int, v) -> RootClass:
    n = check_index(n)
    v = _vec(v)
    q = tits_form(n, v)
    if v == (0, 0):
        return RootClass(RootTag.NOT_A_ROOT, q)
    if q == 1:
        return RootClass(RootTag.REAL, q)
    if q <= 0:
        return RootClass(RootTag.IMAGINARY, q)
    return RootClass(RootTag.NOT_A_ROOT, q)


def is_positive_imaginary(n: int, v) -> bool:
    x, y = _vec(v)
    return x >= 0 and y >= 0 and classify(n, (x, y)).tag is RootTag.IMAGINARY


def reflect_source(n: int, v) -> DimVector:
    n = check_index(n)
    x, y = _vec(v)
    return DimVector(n * y - x, y)


def reflect_sink(n: int, v) -> DimVector:
    n = check_index(n)
    x, y = _vec(v)
    return DimVector(x, n * x - y)


def coxeter(n: int, v, convention: CoxeterConvention = CoxeterConvention.FORWARD) -> DimVector:
    """Apply the Coxeter transformation or its inverse.

    FORWARD is ``reflect_sink(reflect_source(v))``, i.e.
    ``(x, y) -> (n*y - x, n^2*y - n*x - y)``; INVERSE composes the same two
    reflections in the opposite order.
    """
    if convention is CoxeterConvention.FORWARD:
        return reflect_sink(n, reflect_source(n, v))
    if convention is CoxeterConvention.INVERSE:
        return reflect_source(n, reflect_sink(n, v))
    raise DomainError(f"unknown Coxeter convention {convention!r}")


def in_fundamental_domain(n: int, v) -> bool:
    """Membership in the Coxeter fundamental domain of the imaginary cone.

    For n >= 3 this is ``x/(n-1) < y <= (n-1)*x``.  For n = 2 the imaginary
    roots ``(m, m)`` are all Coxeter-fixed and the domain is taken to be the
    whole diagonal ``m >= 1``.
    """
    n = check_index(n)
    x, y = _vec(v)
    if n == 1:
        raise UnsupportedIndexError("n = 1 has no imaginary roots")
    if n == 2:
        return x == y and x >= 1
    if x < 0 or y < 0:
        return False
    return Fraction(x, n - 1) < y <= (n - 1) * x


def reduce_to_fundamental_domain(n: int, v) -> tuple[DimVector, int]:
    """Move a positive imaginary root into the fundamental domain.

    Returns ``(w, k)`` with ``w = coxeter^k(v)`` (negative ``k`` meaning the
    inverse transformation).  Each orbit meets the domain exactly once, so the
    returned ``k`` is the unique, hence minimal, exponent.
    """
    n = check_index(n)
    v = _vec(v)
    if n == 1 or not is_positive_imaginary(n, v):
        raise DomainError(f"{tuple(v)} is not a positive imaginary root for n={n}")
    w, k = v, 0
    # forward raises the slope y/x, inverse lowers it
    while not in_fundamental_domain(n, w):
        if w.y > (n - 1) * w.x:
            w, k = coxeter(n, w, CoxeterConvention.INVERSE), k - 1
        else:
            w, k = coxeter(n, w, CoxeterConvention.FORWARD), k + 1
    return w, k


def _real_series(n: int, count: int) -> list[DimVector]:
    n = check_index(n)
    count = _int(count)
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    if n == 1 and count > 2:
        raise DomainError("n = 1 has only two preprojective modules of increasing dimension")
    out = [DimVector(0, 1)]
    if count > 1:
        out.append(DimVector(1, n))
    # the Coxeter transformation shifts the series by two places
    while len(out) < count:
        out.append(coxeter(n, out[-2]))
    return out


def preprojective_dims(n: int, count: int) -> list[DimVector]:
    """First ``count`` preprojective dimension vectors, starting at (0, 1)."""
    return _real_series(n, count)


def preinjective_dims(n: int, count: int) -> list[DimVector]:
    """First ``count`` preinjective dimension vectors, starting at (1, 0)."""
    return [DimVector(y, x) for x, y in _real_series(n, count)]


def cover_thin_violation(n: int, v) -> str | None:
    """Name the violated inequality, or None when a cover-thin module exists."""
    n = check_index(n)
    x, y = _vec(v)
    if x < 0 or y < 0:
        return "dimension vector has a negative entry"
    if (x, y) == (0, 0):
        return "zero vector"
    if x <= y:
        if y > (n - 1) * x + 1:
            return "y > (n-1)x+1"
        return None
    if x > (n - 1) * y + 1:
        return "x > (n-1)y+1"
    return None


def cover_thin_exists(n: int, v) -> bool:
    x, y = _vec(v)
    if (x, y) == (0, 0):
        raise DomainError("the zero vector is not a dimension vector of an indecomposable")
    return cover_thin_violation(n, v) is None


def imaginary_roots(n: int, max_total: int) -> list[DimVector]:
    """Positive imaginary roots with ``x + y <= max_total``, sorted by (total, x)."""
    n = check_index(n)
    out = []
    for total in range(1, max_total + 1):
        for x in range(total + 1):
            v = DimVector(x, total - x)
            if is_positive_imaginary(n, v):
                out.append(v)
    return out
