"""Exact arithmetic in Z[zeta_k], the ring of k-th cyclotomic integers.

Elements are stored in the group-ring basis: a length-k integer vector whose
j-th entry is the coefficient of zeta_k^j.  That basis is redundant (the
power basis has only phi(k) coordinates), but conjugation is an index
permutation and the Hermitian inner products of unit vectors are plain entry
counts there, so all hot paths stay permutation-and-add.  Equality and other
decisions reduce to the canonical representative: the remainder modulo the
k-th cyclotomic polynomial, re-expanded with zeros in positions >= phi(k).

Coefficients are Python integers, so arithmetic is exact at every scale;
nothing here ever touches floating point.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .numtheory import divisors, totient


def _poly_trim(c: list[int]) -> list[int]:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_divmod(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Quotient and remainder for integer polynomials; den must be monic."""
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(num)
    dn = len(den) - 1
    if len(rem) - 1 < dn:
        return [0], _poly_trim(rem)
    quo = [0] * (len(rem) - dn)
    for i in range(len(rem) - 1, dn - 1, -1):
        c = rem[i]
        if c:
            quo[i - dn] = c
            for j, dj in enumerate(den):
                rem[i - dn + j] -= c * dj
    return _poly_trim(quo), _poly_trim(rem)


class CyclotomicPolynomial:
    """The monic minimal polynomial of zeta_k, of degree phi(k)."""

    __slots__ = ("order", "coefficients")

    def __init__(self, order: int, coefficients: tuple[int, ...]):
        self.order = order
        self.coefficients = coefficients

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __repr__(self) -> str:
        return f"CyclotomicPolynomial(order={self.order}, coefficients={self.coefficients})"


@lru_cache(maxsize=None)
def cyclotomic_polynomial(k: int) -> CyclotomicPolynomial:
    """Phi_k, by exact division of x^k - 1 by the product of Phi_d, d | k, d < k."""
    if k < 1:
        raise ValueError(f"order must be positive, got {k}")
    num = [-1] + [0] * (k - 1) + [1]
    den = [1]
    for d in divisors(k):
        if d < k:
            den = _poly_mul(den, list(cyclotomic_polynomial(d).coefficients))
    quo, rem = _poly_divmod(num, den)
    if rem != [0]:
        raise AssertionError(f"x^{k}-1 not divisible by product of proper Phi_d")
    poly = CyclotomicPolynomial(k, tuple(quo))
    if poly.degree != totient(k):
        raise AssertionError(f"Phi_{k} has degree {poly.degree}, expected {totient(k)}")
    return poly


@lru_cache(maxsize=None)
def _reduction_rows(k: int) -> tuple[tuple[int, ...], ...]:
    """Row j is the coefficient vector (length phi(k)) of x^j mod Phi_k."""
    phi = cyclotomic_polynomial(k)
    d = phi.degree
    rows: list[tuple[int, ...]] = []
    row = [0] * d
    for j in range(k):
        if j < d:
            row = [0] * d
            row[j] = 1
        else:
            # multiply the previous row by x and fold x^d = -(low part of Phi_k)
            lead = row[d - 1]
            row = [0] + row[: d - 1]
            if lead:
                for i in range(d):
                    row[i] -= lead * phi.coefficients[i]
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def reduction_matrix(k: int) -> np.ndarray:
    """The k x phi(k) integer matrix of _reduction_rows, for batched reductions.

    Reducing a batch of coefficient rows C (shape (..., k)) is C @ reduction_matrix(k).
    Entries are small; int64 accumulation is exact for every in-scope count batch.
    """
    m = np.array(_reduction_rows(k), dtype=np.int64)
    m.flags.writeable = False
    return m


def reduce_coeffs(coeffs: Sequence[int], k: int) -> tuple[int, ...]:
    """Canonical length-k coefficient tuple: remainder mod Phi_k, zero-padded."""
    rows = _reduction_rows(k)
    d = len(rows[0])
    out = [0] * d
    for j, c in enumerate(coeffs):
        if c:
            row = rows[j]
            for i in range(d):
                out[i] += c * row[i]
    return tuple(out) + (0,) * (k - d)


class CycInt:
    """An element of Z[zeta_k] in the group-ring basis.

    Immutable.  Arithmetic never reduces; equality, hashing, norm tests and
    root-of-unity recognition reduce modulo Phi_k first, so two
    representations of the same ring element always compare equal.
    """

    __slots__ = ("phase", "coeffs")

    def __init__(self, phase: int, coeffs: Iterable[int]):
        if phase < 1:
            raise ValueError(f"phase must be positive, got {phase}")
        c = tuple(int(v) for v in coeffs)
        if len(c) != phase:
            raise ValueError(f"need {phase} coefficients, got {len(c)}")
        object.__setattr__(self, "phase", phase)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("CycInt is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, phase: int) -> CycInt:
        return cls(phase, (0,) * phase)

    @classmethod
    def integer(cls, phase: int, value: int) -> CycInt:
        return cls(phase, (value,) + (0,) * (phase - 1))

    @classmethod
    def root(cls, phase: int, exponent: int) -> CycInt:
        """zeta_phase ** exponent."""
        c = [0] * phase
        c[exponent % phase] = 1
        return cls(phase, c)

    # -- ring operations ---------------------------------------------------

    def _same_phase(self, other: CycInt) -> None:
        if self.phase != other.phase:
            raise ValueError(f"phase mismatch: {self.phase} vs {other.phase}")

    def __add__(self, other: CycInt | int) -> CycInt:
        if isinstance(other, int):
            other = CycInt.integer(self.phase, other)
        self._same_phase(other)
        return CycInt(self.phase, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycInt:
        return CycInt(self.phase, tuple(-a for a in self.coeffs))

    def __sub__(self, other: CycInt | int) -> CycInt:
        if isinstance(other, int):
            other = CycInt.integer(self.phase, other)
        return self + (-other)

    def __mul__(self, other: CycInt | int) -> CycInt:
        if isinstance(other, int):
            return CycInt(self.phase, tuple(a * other for a in self.coeffs))
        self._same_phase(other)
        k = self.phase
        out = [0] * k
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % k] += a * b
        return CycInt(k, out)

    __rmul__ = __mul__

    def times_root(self, exponent: int) -> CycInt:
        """Multiply by zeta^exponent: a cyclic shift of the coefficients."""
        k = self.phase
        t = exponent % k
        if t == 0:
            return self
        return CycInt(k, self.coeffs[-t:] + self.coeffs[:-t])

    def conj(self) -> CycInt:
        """Complex conjugate: coefficient at j moves to (k - j) mod k."""
        k = self.phase
        c = self.coeffs
        return CycInt(k, tuple(c[(k - j) % k] for j in range(k)))

    def norm_sq(self) -> CycInt:
        """z * conj(z), canonically reduced; a rational integer for |z|^2 in Z."""
        return (self * self.conj()).reduce()

    # -- canonical form and predicates --------------------------------------

    def reduce(self) -> CycInt:
        """Canonical representative modulo Phi_k."""
        return CycInt(self.phase, reduce_coeffs(self.coeffs, self.phase))

    def is_zero(self) -> bool:
        return not any(reduce_coeffs(self.coeffs, self.phase))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = CycInt.integer(self.phase, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        if self.phase != other.phase:
            return False
        return reduce_coeffs(self.coeffs, self.phase) == reduce_coeffs(other.coeffs, other.phase)

    def __hash__(self) -> int:
        return hash((self.phase, reduce_coeffs(self.coeffs, self.phase)))

    def is_root_of_unity(self) -> tuple[int, int] | None:
        """(sign, exponent) with self = sign * zeta^exponent, or None.

        Representations can coincide (for even k, -zeta^t = zeta^(t+k/2)); the
        positive-sign form is preferred when both exist.
        """
        return _root_table(self.phase).get(reduce_coeffs(self.coeffs, self.phase))

    def embed(self, new_phase: int) -> CycInt:
        """The same ring element expressed in Z[zeta_new]: zeta_k -> zeta_new^(new/k)."""
        k = self.phase
        if new_phase % k != 0:
            raise ValueError(f"phase {k} does not divide {new_phase}")
        step = new_phase // k
        c = [0] * new_phase
        for j, a in enumerate(self.coeffs):
            c[j * step] += a
        return CycInt(new_phase, c)

    # -- display -----------------------------------------------------------

    def __repr__(self) -> str:
        return f"CycInt({self.phase}, {self.coeffs})"

    def __str__(self) -> str:
        terms = []
        for j, a in enumerate(self.reduce().coeffs):
            if a == 0:
                continue
            mag = "" if abs(a) == 1 and j > 0 else str(abs(a))
            var = "" if j == 0 else ("z" if j == 1 else f"z^{j}")
            sep = "*" if mag and var else ""
            term = f"{mag}{sep}{var}"
            terms.append(("- " if a < 0 else "+ ") + term)
        if not terms:
            return "0"
        head = terms[0].replace("+ ", "").replace("- ", "-")
        return " ".join([head] + terms[1:])


@lru_cache(maxsize=None)
def _root_table(k: int) -> dict[tuple[int, ...], tuple[int, int]]:
    table: dict[tuple[int, ...], tuple[int, int]] = {}
    for sign in (1, -1):
        for t in range(k):
            key = reduce_coeffs([sign if j == t else 0 for j in range(k)], k)
            table.setdefault(key, (sign, t))
    return table


def canonical_reduce(z: CycInt) -> CycInt:
    """Free-function spelling of CycInt.reduce."""
    return z.reduce()
