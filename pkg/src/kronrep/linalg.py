"""Exact linear algebra over F_p (int64 arrays) and Q (object arrays of Fraction)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError
from .kernels import matmul_mod_p, rref_mod_p

__all__ = ["FieldSpec", "F2", "F3", "QQ", "parse_field"]

MAX_PRIME = 2**16


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A prime field ``F_p`` (``p`` set) or the rationals (``p`` is None)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not _is_prime(self.p):
                raise DomainError(f"{self.p} is not prime")
            if self.p > MAX_PRIME:
                raise DomainError(f"p = {self.p} exceeds the supported bound 2**16")

    @property
    def is_prime(self) -> bool:
        return self.p is not None

    @property
    def name(self) -> str:
        return f"F{self.p}" if self.p is not None else "Q"

    def __str__(self) -> str:
        return self.name

    # -- element handling -------------------------------------------------

    def array(self, data, shape: tuple[int, int] | None = None) -> np.ndarray:
        """Coerce ``data`` to this field's matrix representation.

        ``shape`` disambiguates empty inputs such as ``[]`` for a 0 x 3 matrix.
        """
        if isinstance(data, np.ndarray) and data.dtype.kind in "iu" and self.p is not None:
            arr = np.mod(data.astype(np.int64), self.p)
        else:
            raw = np.array(data, dtype=object)
            if raw.size == 0 and shape is not None:
                raw = raw.reshape(shape)
            if self.p is not None:
                conv = [self._reduce_scalar(v) for v in raw.ravel()]
                arr = np.array(conv, dtype=np.int64).reshape(raw.shape)
            else:
                arr = np.empty(raw.shape, dtype=object)
                for idx, v in np.ndenumerate(raw):
                    arr[idx] = _to_fraction(v)
        if shape is not None and arr.shape != tuple(shape):
            raise DomainError(f"expected a {shape[0]}x{shape[1]} matrix, got shape {arr.shape}")
        return arr

    def _reduce_scalar(self, v) -> int:
        v = _to_fraction(v)
        if v.denominator % self.p == 0:
            raise DomainError(f"{v} has no image in F{self.p}")
        return (v.numerator * pow(v.denominator, -1, self.p)) % self.p

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        if self.p is not None:
            return np.zeros((rows, cols), dtype=np.int64)
        out = np.empty((rows, cols), dtype=object)
        out.fill(Fraction(0))
        return out

    def identity(self, size: int) -> np.ndarray:
        out = self.zeros(size, size)
        for i in range(size):
            out[i, i] = 1 if self.p is not None else Fraction(1)
        return out

    def to_int_list(self, arr: np.ndarray) -> list:
        """Row-major nested lists: ints for F_p, ints or 'a/b' strings for Q."""
        def conv(v):
            if self.p is not None:
                return int(v)
            v = Fraction(v)
            return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

        return [[conv(v) for v in row] for row in arr]

    # -- matrix operations ------------------------------------------------

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if a.shape[1] != b.shape[0]:
            raise DomainError(f"shape mismatch {a.shape} @ {b.shape}")
        if self.p is not None:
            if a.size == 0 or b.size == 0:
                return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
            return matmul_mod_p(a, b, self.p)
        if a.shape[1] == 0:
            return self.zeros(a.shape[0], b.shape[1])
        return a.dot(b)

    def matpow(self, a: np.ndarray, exponent: int) -> np.ndarray:
        result = self.identity(a.shape[0])
        base = a
        while exponent:
            if exponent & 1:
                result = self.matmul(result, base)
            exponent >>= 1
            if exponent:
                base = self.matmul(base, base)
        return result

    def sub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p is not None:
            return (a - b) % self.p
        return a - b

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p is not None:
            return (a + b) % self.p
        return a + b

    def scale(self, c, a: np.ndarray) -> np.ndarray:
        if self.p is not None:
            return (int(c) * a) % self.p
        return Fraction(c) * a

    def is_zero(self, a: np.ndarray) -> bool:
        return not np.any(a != 0)

    def rref(self, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form (copy) and pivot columns."""
        if self.p is not None:
            work = np.array(a, dtype=np.int64, copy=True)
            if work.size == 0:
                return work, []
            pivots = rref_mod_p(work, self.p)
            return work, [int(c) for c in pivots]
        return _rref_fraction(a)

    def rank(self, a: np.ndarray) -> int:
        return len(self.rref(a)[1])

    def nullspace(self, a: np.ndarray) -> list[np.ndarray]:
        """Basis of ``{v : a v = 0}``; one vector per free column, in column order."""
        cols = a.shape[1]
        r, pivots = self.rref(a)
        pivot_set = set(pivots)
        basis = []
        for free in range(cols):
            if free in pivot_set:
                continue
            v = self.zeros(cols, 1)[:, 0]
            v[free] = 1 if self.p is not None else Fraction(1)
            for row, pc in enumerate(pivots):
                v[pc] = (-r[row, free]) % self.p if self.p is not None else -r[row, free]
            basis.append(v)
        return basis

    def is_invertible(self, a: np.ndarray) -> bool:
        return a.shape[0] == a.shape[1] and self.rank(a) == a.shape[0]


def _to_fraction(v) -> Fraction:
    if isinstance(v, float):
        raise DomainError(f"inexact entry {v!r}; use an integer or an 'a/b' string")
    if isinstance(v, np.integer):
        v = int(v)
    try:
        return Fraction(v)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"cannot read {v!r} as an exact field element") from exc


def _rref_fraction(a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    rows, cols = a.shape
    m = [[Fraction(v) for v in row] for row in a]
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    out = np.empty((rows, cols), dtype=object)
    for i in range(rows):
        for j in range(cols):
            out[i, j] = m[i][j]
    return out, pivots


F2 = FieldSpec(2)
F3 = FieldSpec(3)
QQ = FieldSpec(None)


def parse_field(text: str) -> FieldSpec:
    """Accept ``F2``, ``f3``, ``F5``, ``Q`` (case-insensitive)."""
    t = text.strip().upper()
    if t in {"Q", "QQ"}:
        return QQ
    if t.startswith("F") and t[1:].isdigit():
        return FieldSpec(int(t[1:]))
    raise DomainError(f"unknown field {text!r}; use F<p> or Q")
