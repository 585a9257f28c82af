"""Butson Hadamard matrices in logarithmic form.

A matrix H with entries in the k-th roots of unity is stored as its exponent
table L, an n x n integer array with H[i, j] = zeta_k ** L[i, j].  All
verification is exact: Hermitian inner products of rows are computed as
exponent-difference counts and reduced modulo the k-th cyclotomic polynomial,
so H H* = nI is decided by integer arithmetic alone.

The count kernels use float32 matmuls on one-hot indicators.  Every count is
at most n, far below 2**24, so those matmuls are exact integer arithmetic in
disguise.
"""

from __future__ import annotations

from math import isqrt, lcm
from typing import Iterable, Sequence

import numpy as np

from .cyclotomic import CycInt, reduction_matrix


class LogMatrix:
    """Exponent table of a square matrix over the k-th roots of unity."""

    def __init__(self, phase: int, entries):
        if phase < 1:
            raise ValueError(f"phase must be positive, got {phase}")
        arr = np.asarray(entries, dtype=np.int64) % phase
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"entries must be square, got shape {arr.shape}")
        arr.flags.writeable = False
        self.phase = phase
        self.entries = arr
        self._hadamard: bool | None = None
        self._row_cache: tuple[tuple[int, ...], ...] | None = None

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def rows(self) -> tuple[tuple[int, ...], ...]:
        if self._row_cache is None:
            self._row_cache = tuple(tuple(int(v) for v in row) for row in self.entries)
        return self._row_cache

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LogMatrix):
            return NotImplemented
        return (
            self.phase == other.phase
            and self.entries.shape == other.entries.shape
            and bool((self.entries == other.entries).all())
        )

    def __hash__(self) -> int:
        return hash((self.phase, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"LogMatrix(phase={self.phase}, order={self.order})"

    # -- elementwise and structural transforms ------------------------------

    def conjugate(self) -> LogMatrix:
        return LogMatrix(self.phase, (-self.entries) % self.phase)

    def transpose(self) -> LogMatrix:
        return LogMatrix(self.phase, self.entries.T)

    def conj_transpose(self) -> LogMatrix:
        return LogMatrix(self.phase, (-self.entries.T) % self.phase)

    def negate(self) -> LogMatrix:
        """Multiply every entry by -1; needs even phase so -1 is a k-th root."""
        if self.phase % 2:
            raise ValueError(f"-1 is not a root of unity of odd order {self.phase}")
        return LogMatrix(self.phase, (self.entries + self.phase // 2) % self.phase)

    def lift_phase(self, new_phase: int) -> LogMatrix:
        """Reindex exponents so entries are read as new_phase-th roots."""
        if new_phase % self.phase != 0:
            raise ValueError(f"phase {self.phase} does not divide {new_phase}")
        return LogMatrix(new_phase, self.entries * (new_phase // self.phase))

    def dephase(self) -> LogMatrix:
        """Equivalent matrix with zero first row, then zero first column."""
        a = (self.entries - self.entries[0, :]) % self.phase
        a = (a - a[:, :1]) % self.phase
        return LogMatrix(self.phase, a)

    def monomial_transform(
        self,
        row_perm: Sequence[int],
        row_shifts: Sequence[int],
        col_perm: Sequence[int],
        col_shifts: Sequence[int],
    ) -> LogMatrix:
        """Permute rows/columns and multiply each by a root of unity."""
        a = self.entries[np.asarray(row_perm), :][:, np.asarray(col_perm)]
        a = a + np.asarray(row_shifts)[:, None] + np.asarray(col_shifts)[None, :]
        return LogMatrix(self.phase, a % self.phase)

    def entry(self, i: int, j: int) -> CycInt:
        return CycInt.root(self.phase, int(self.entries[i, j]))

    def column(self, j: int) -> LogVector:
        return LogVector(self.phase, self.entries[:, j])


class LogVector:
    """Exponent vector over the k-th roots of unity."""

    def __init__(self, phase: int, entries: Iterable[int]):
        if phase < 1:
            raise ValueError(f"phase must be positive, got {phase}")
        self.phase = phase
        self.entries = tuple(int(v) % phase for v in entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LogVector):
            return NotImplemented
        return self.phase == other.phase and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.phase, self.entries))

    def __repr__(self) -> str:
        return f"LogVector(phase={self.phase}, entries={self.entries})"


# -- constructions ----------------------------------------------------------


def fourier_matrix(n: int) -> LogMatrix:
    """Character table of the cyclic group C_n: entry (i, j) = i*j mod n."""
    idx = np.arange(n, dtype=np.int64)
    return LogMatrix(n, np.outer(idx, idx) % n)


def character_table(orders: Sequence[int]) -> LogMatrix:
    """Character table of C_{orders[0]} x ... x C_{orders[-1]}.

    Rows (characters) and columns (group elements) are enumerated in
    lexicographic mixed-radix order, most significant factor first.  The
    phase is the group exponent lcm(orders).
    """
    orders = tuple(int(d) for d in orders)
    if not orders or any(d < 1 for d in orders):
        raise ValueError(f"orders must be positive, got {orders}")
    k = lcm(*orders)
    h = LogMatrix(k, [[0]])
    for d in orders:
        idx = np.arange(d, dtype=np.int64)
        h = kronecker(h, LogMatrix(k, np.outer(idx, idx) * (k // d) % k))
    return h


def sylvester_matrix(m: int) -> LogMatrix:
    """The 2^m x 2^m real Hadamard matrix F(C_2)^(kron m) in log form."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    h = LogMatrix(2, [[0]])
    f2 = fourier_matrix(2)
    for _ in range(m):
        h = kronecker(h, f2)
    return h


def kronecker(a: LogMatrix, b: LogMatrix) -> LogMatrix:
    """Kronecker product; exponents add after lifting both to phase lcm."""
    k = lcm(a.phase, b.phase)
    ea = a.entries * (k // a.phase)
    eb = b.entries * (k // b.phase)
    na, nb = a.order, b.order
    out = (ea[:, None, :, None] + eb[None, :, None, :]).reshape(na * nb, na * nb)
    return LogMatrix(k, out % k)


def circulant_from_row(x: LogVector) -> LogMatrix:
    """Circulant exponent table: entry (i, j) = x[(i - j) mod n]."""
    row = np.asarray(x.entries, dtype=np.int64)
    n = len(row)
    idx = (np.arange(n)[:, None] - np.arange(n)[None, :]) % n
    return LogMatrix(x.phase, row[idx])


def is_circulant(h: LogMatrix) -> bool:
    """True iff entry (i, j) depends only on (i - j) mod n."""
    n = h.order
    x = h.entries[0][(-np.arange(n)) % n]  # x[m] = entry(0, -m)
    idx = (np.arange(n)[:, None] - np.arange(n)[None, :]) % n
    return bool((h.entries == x[idx]).all())


# -- exact verification and products ----------------------------------------


def _pair_difference_counts(a: np.ndarray, b: np.ndarray, k: int) -> np.ndarray:
    """counts[i, j, t] = #{m : a[i, m] - b[j, m] = t mod k}."""
    n = a.shape[0]
    d = (a[:, None, :] - b[None, :, :]) % k
    flat = d.reshape(n * n, -1)
    offsets = k * np.arange(n * n, dtype=np.int64)[:, None]
    binc = np.bincount((flat + offsets).ravel(), minlength=k * n * n)
    return binc.reshape(n, n, k)


def verify_hadamard(h: LogMatrix) -> bool:
    """Exact check of H H* = nI via reduced exponent-difference counts.

    Row orthogonality suffices: a square matrix of unit entries with
    orthogonal rows is invertible, and H* H = nI follows.
    """
    if h._hadamard is not None:
        return h._hadamard
    n, k = h.order, h.phase
    counts = _pair_difference_counts(h.entries, h.entries, k)
    reduced = counts @ reduction_matrix(k)
    target = np.zeros_like(reduced)
    target[np.arange(n), np.arange(n), 0] = n
    ok = bool((reduced == target).all())
    h._hadamard = ok
    return ok


def _one_hot(entries: np.ndarray, k: int) -> np.ndarray:
    """(k, n, n) float32 indicator stack of an exponent table."""
    n = entries.shape[0]
    oh = np.zeros((k, n, n), dtype=np.float32)
    oh[entries, np.arange(n)[:, None], np.arange(n)[None, :]] = 1.0
    return oh


def product_counts(a: LogMatrix, b: LogMatrix) -> np.ndarray:
    """counts[i, j, t] = #{m : a[i, m] + b[m, j] = t mod k}, so that
    (AB)_{ij} = sum_t counts[i, j, t] zeta^t.

    counts <= n << 2**24, so the float32 matmuls below are exact.
    """
    if a.phase != b.phase:
        raise ValueError(f"phase mismatch: {a.phase} vs {b.phase}")
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    k, n = a.phase, a.order
    oa = _one_hot(a.entries, k)
    ob = _one_hot(b.entries, k)
    counts = np.zeros((k, n, n), dtype=np.float32)
    for s in range(k):
        for t in range(k):
            counts[(s + t) % k] += oa[s] @ ob[t]
    return np.rint(counts).astype(np.int64).transpose(1, 2, 0)


def hermitian_product_counts(a: LogMatrix, b: LogMatrix) -> np.ndarray:
    """Exponent counts of A B*, i.e. entries sum_m zeta^(a[i,m] - b[j,m])."""
    if a.phase != b.phase:
        raise ValueError(f"phase mismatch: {a.phase} vs {b.phase}")
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    return _pair_difference_counts(a.entries, b.entries, a.phase)


def counts_equal_scalar_matrix(counts: np.ndarray, k: int, diag: CycInt, off_diag: CycInt | int = 0) -> bool:
    """Does the count tensor represent diag * I (off-diagonal = off_diag)?"""
    n = counts.shape[0]
    reduced = counts @ reduction_matrix(k)
    d = np.array(diag.reduce().coeffs[: reduced.shape[2]], dtype=np.int64)
    if isinstance(off_diag, int):
        off_diag = CycInt.integer(k, off_diag)
    o = np.array(off_diag.reduce().coeffs[: reduced.shape[2]], dtype=np.int64)
    target = np.broadcast_to(o, reduced.shape).copy()
    target[np.arange(n), np.arange(n)] = d
    return bool((reduced == target).all())


class NotHadamardError(ValueError):
    pass


def is_unbiased(a: LogMatrix, b: LogMatrix) -> CycInt | None:
    """The scalar z with A B* = z L for some phase-k Butson matrix L, if any.

    z must satisfy z conj(z) = n; it is read off as the top-left entry of
    A B*, every entry is then required to be z times a k-th root of unity,
    and the exponent table of those roots must itself verify as Hadamard.
    Returns None when any of that fails.
    """
    if a.phase != b.phase or a.order != b.order:
        raise ValueError("matrices must share order and phase")
    k, n = a.phase, a.order
    counts = hermitian_product_counts(a, b)
    reduced = counts @ reduction_matrix(k)
    z = CycInt(k, tuple(int(v) for v in counts[0, 0]))
    if z.norm_sq() != n:
        return None
    # reductions of z * zeta^t for every t
    zrots = np.stack([np.roll(counts[0, 0], t) for t in range(k)]) @ reduction_matrix(k)
    quotient = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            match = np.where((zrots == reduced[i, j]).all(axis=1))[0]
            if len(match) == 0:
                return None
            quotient[i, j] = match[0]
    if not verify_hadamard(LogMatrix(k, quotient)):
        return None
    return z


# -- exact unitary order -----------------------------------------------------


def _cyc_rows(h: LogMatrix) -> list[list[CycInt]]:
    k = h.phase
    return [[CycInt.root(k, int(e)).reduce() for e in row] for row in h.entries]


def _right_multiply(p: list[list[CycInt]], h: LogMatrix) -> list[list[CycInt]]:
    """P -> P H for a log-form H: each term is a coefficient rotation."""
    n = h.order
    ent = h.rows()
    out = []
    for i in range(n):
        prow = p[i]
        orow = []
        for j in range(n):
            acc = prow[0].times_root(ent[0][j])
            for m in range(1, n):
                acc = acc + prow[m].times_root(ent[m][j])
            orow.append(acc.reduce())
        out.append(orow)
    return out


def unitary_order(h: LogMatrix, max_t: int) -> int | None:
    """Smallest t with H^t = n^(t/2) I, or None if none up to max_t.

    Equivalently the multiplicative order of H / sqrt(n); odd t can only
    qualify when n is a perfect square.  Powers are exact: H^t is carried as
    a cyclotomic-integer matrix, divided by n whenever every entry allows it
    so coefficients stay small, and compared against the matching power of
    sqrt(n) times the identity.
    """
    if max_t < 2:
        raise ValueError(f"max_t must be at least 2, got {max_t}")
    if not verify_hadamard(h):
        raise NotHadamardError("unitary order is defined for Butson Hadamard matrices")
    n = h.order
    root = isqrt(n)
    square = root * root == n
    p = _cyc_rows(h)
    scale = 0  # accumulated exponent: true power is p * n**scale
    for t in range(1, max_t + 1):
        if t > 1:
            p = _right_multiply(p, h)
        # divide out a factor of n when every reduced coefficient allows it
        while all(c % n == 0 for row in p for z in row for c in z.coeffs):
            p = [[CycInt(z.phase, tuple(c // n for c in z.coeffs)) for z in row] for row in p]
            scale += 1
        if t % 2 == 0:
            target = n ** (t // 2 - scale) if t // 2 >= scale else None
        elif square:
            target = root ** (t - 2 * scale) if t >= 2 * scale else None
        else:
            target = None
        if target is None:
            continue
        if all(p[i][j] == (target if i == j else 0) for i in range(n) for j in range(n)):
            return t
    return None
