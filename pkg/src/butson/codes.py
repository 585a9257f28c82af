"""Z_k codes attached to Butson Hadamard matrices and their covering radii.

A Z_k code of length n is a nonempty set of vectors in Z_k^n.  From a
Hadamard matrix H in log form we take R_H, the rows of L(H), and the
translate-closed code C_H = union over alpha of (R_H + alpha 1).  The
covering radius r(C) = max over ambient x of min over codewords of the
Hamming distance is computed by exhaustive scan with single-coordinate
distance updates, so each ambient vector costs O(|C|) instead of O(n |C|).

Exact arithmetic backs the bound computations: the upper bound
(q-1)n/q - sqrt(n)/q and the phase-3 lower bound ceil((2/3)(n - sqrt(n)))
are evaluated as rational/surd expressions with integer floors and ceilings
decided by integer-square comparisons, never by floating point.  For phase 3
the Hamming distance between log vectors is also available through the
identity d(L(v), L(w)) = (2/3)(n - R<v, w>), where the real part of the
inner product z = s0 + s1 zeta + s2 zeta^2 is the rational s0 - (s1+s2)/2.
"""

from __future__ import annotations

import multiprocessing as mp
import random
from fractions import Fraction
from math import ceil, isqrt
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .bent import check_bent
from .matrices import LogMatrix, LogVector, NotHadamardError, verify_hadamard
from .numtheory import is_prime


class BudgetExceededError(ValueError):
    """The ambient space is too large for an exhaustive scan."""


class ZkCode:
    """A set of distinct words in Z_k^n with cached distance statistics."""

    def __init__(self, modulus: int, words: Iterable[Sequence[int]]):
        if modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {modulus}")
        normalized = [tuple(int(e) % modulus for e in w) for w in words]
        if not normalized:
            raise ValueError("a code must contain at least one word")
        distinct = tuple(dict.fromkeys(normalized))
        lengths = {len(w) for w in distinct}
        if len(lengths) != 1:
            raise ValueError(f"words of mixed lengths {sorted(lengths)}")
        self.modulus = modulus
        self.words = distinct
        self.length = len(distinct[0])
        self.duplicates_removed = len(normalized) - len(distinct)
        self._word_set = frozenset(distinct)
        self._min_distance: int | None = None
        self._covering_radius: int | None = None

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w: Sequence[int]) -> bool:
        return tuple(int(e) % self.modulus for e in w) in self._word_set

    def __repr__(self) -> str:
        return f"ZkCode(length={self.length}, modulus={self.modulus}, size={len(self.words)})"

    def word_array(self) -> np.ndarray:
        return np.array(self.words, dtype=np.int64)


def hamming_distance(v: Sequence[int], w: Sequence[int]) -> int:
    """Number of coordinates where v and w differ."""
    if len(v) != len(w):
        raise ValueError(f"length mismatch: {len(v)} vs {len(w)}")
    return sum(1 for a, b in zip(v, w) if a != b)


def code_from_matrix(h: LogMatrix) -> tuple[ZkCode, ZkCode]:
    """The row code R_H and its translate closure C_H.

    Rows of a Hadamard matrix never differ by a constant vector (that would
    make their inner product a nonzero multiple of a root of unity), so for
    Hadamard input C_H always has exactly phase * order words; the
    deduplication in ZkCode is a formality.
    """
    if not verify_hadamard(h):
        raise NotHadamardError(f"matrix of order {h.order} is not Butson Hadamard")
    k = h.phase
    rows = [tuple(int(e) for e in row) for row in h.entries]
    r_code = ZkCode(k, rows)
    translates = [tuple((e + alpha) % k for e in row) for row in rows for alpha in range(k)]
    return r_code, ZkCode(k, translates)


def min_distance(c: ZkCode) -> int:
    """Exact minimum pairwise Hamming distance; needs at least two words."""
    if len(c) < 2:
        raise ValueError("minimum distance needs at least two words")
    if c._min_distance is None:
        w = c.word_array()
        best = c.length
        for i in range(len(c) - 1):
            d = int((w[i + 1 :] != w[i]).sum(axis=1).min())
            if d < best:
                best = d
        c._min_distance = best
    return c._min_distance


class CoveringRadiusResult(NamedTuple):
    value: int
    exact: bool


def _column_tables(words: np.ndarray, k: int) -> list[list[np.ndarray]]:
    n = words.shape[1]
    return [[(words[:, i] == v).astype(np.int64) for v in range(k)] for i in range(n)]


def _digits_of(index: int, k: int, n: int) -> list[int]:
    digits = [0] * n
    for i in range(n - 1, -1, -1):
        index, digits[i] = divmod(index, k)
    return digits


def _scan_radius_range(words: np.ndarray, k: int, start: int, stop: int) -> int:
    """Largest min-distance over ambient indices [start, stop), lexicographic.

    The distance vector to all codewords is maintained under single-digit
    odometer increments: changing coordinate i from a to b adjusts distances
    by eq[i][a] - eq[i][b].  Carries touch one digit each, so the amortized
    work per ambient vector is O(|C|).
    """
    m, n = words.shape
    eq = _column_tables(words, k)
    digits = _digits_of(start, k, n)
    x = np.array(digits, dtype=np.int64)
    dist = (words != x).sum(axis=1)
    best = int(dist.min())
    for _ in range(stop - start - 1):
        i = n - 1
        while digits[i] == k - 1:
            dist += eq[i][k - 1]
            dist -= eq[i][0]
            digits[i] = 0
            i -= 1
        dist += eq[i][digits[i]]
        digits[i] += 1
        dist -= eq[i][digits[i]]
        d = int(dist.min())
        if d > best:
            best = d
    return best


_RADIUS_STATE: dict = {}


def _init_radius_worker(words: np.ndarray, k: int) -> None:
    _RADIUS_STATE["words"] = words
    _RADIUS_STATE["k"] = k


def _radius_worker(bounds: tuple[int, int]) -> int:
    return _scan_radius_range(_RADIUS_STATE["words"], _RADIUS_STATE["k"], *bounds)


def covering_radius(
    c: ZkCode,
    strategy: str = "exhaustive",
    *,
    budget: int = 2**30,
    samples: int = 1000,
    seed: int = 0,
    workers: int = 1,
) -> CoveringRadiusResult:
    """Covering radius of c, exact or as a certified lower bound.

    The exhaustive strategy scans all modulus**length ambient vectors (guarded
    by `budget`, raising BudgetExceededError otherwise) and returns the exact
    radius.  The sampled strategy draws `samples` ambient vectors from the
    seeded generator and returns the largest observed min-distance, which is
    a lower bound on the radius and is flagged exact=False.  Multi-worker
    scans partition the ambient space into contiguous index ranges and reduce
    by max, so the result does not depend on the worker count.
    """
    k, n = c.modulus, c.length
    if strategy == "exhaustive":
        if c._covering_radius is not None:
            return CoveringRadiusResult(c._covering_radius, True)
        total = k**n
        if total > budget:
            raise BudgetExceededError(
                f"ambient space {k}^{n} = {total} vectors exceeds budget {budget}"
            )
        words = c.word_array()
        if workers <= 1 or total < 4 * workers:
            value = _scan_radius_range(words, k, 0, total)
        else:
            step = -(-total // workers)
            bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
            ctx = mp.get_context("fork")
            with ctx.Pool(workers, initializer=_init_radius_worker, initargs=(words, k)) as pool:
                value = max(pool.map(_radius_worker, bounds))
        c._covering_radius = value
        return CoveringRadiusResult(value, True)
    if strategy == "sampled":
        rng = random.Random(seed)
        words = c.word_array()
        best = 0
        for _ in range(samples):
            x = np.array([rng.randrange(k) for _ in range(n)], dtype=np.int64)
            d = int((words != x).sum(axis=1).min())
            if d > best:
                best = d
        return CoveringRadiusResult(best, False)
    raise ValueError(f"unknown strategy {strategy!r}; use 'exhaustive' or 'sampled'")


class LeducqBound(NamedTuple):
    """Exact value of (q-1)n/q - sqrt(n)/q as rational_part + root_coefficient*sqrt(radicand)."""

    rational_part: Fraction
    root_coefficient: Fraction
    radicand: int
    floor: int

    def __float__(self) -> float:
        return float(self.rational_part) + float(self.root_coefficient) * self.radicand**0.5


def leducq_upper_bound(n: int, q: int) -> LeducqBound:
    """Upper bound (q-1)n/q - sqrt(n)/q on the covering radius of a
    self-complementary strength-2 code from a BH(n, q), q an odd prime.

    The floor is exact: with T = (q-1)n the bound is (T - sqrt(n))/q, and
    floor((T - sqrt(n))/q) = m iff mq <= T - sqrt(n), decided by comparing
    (T - mq)^2 against n in integers.
    """
    if not is_prime(q) or q == 2:
        raise ValueError(f"q must be an odd prime, got {q}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    t = (q - 1) * n
    s = isqrt(n)
    if s * s == n:
        fl = (t - s) // q
    else:
        # (t - s - 1)/q < value < (t - s)/q, so the floor is one of two
        # adjacent integers; m <= value iff t - mq > sqrt(n), an integer
        # comparison of squares (equality impossible for non-square n)
        hi = (t - s) // q
        fl = hi if t - hi * q >= 0 and (t - hi * q) ** 2 > n else hi - 1
    return LeducqBound(Fraction(t, q), Fraction(-1, q), n, fl)


def ternary_real_inner(v: Sequence[int], w: Sequence[int]) -> Fraction:
    """Real part of <zeta^v, zeta^w> over phase 3, as an exact rational.

    The inner product is s0 + s1 zeta + s2 zeta^2 where s_j counts the
    coordinates with v_i - w_i = j mod 3; its real part is s0 - (s1+s2)/2.
    """
    if len(v) != len(w):
        raise ValueError(f"length mismatch: {len(v)} vs {len(w)}")
    counts = [0, 0, 0]
    for a, b in zip(v, w):
        counts[(a - b) % 3] += 1
    return Fraction(counts[0]) - Fraction(counts[1] + counts[2], 2)


def ternary_distance(v: Sequence[int], w: Sequence[int]) -> int:
    """Hamming distance recovered from the exact real part:
    d = (2/3)(n - R<zeta^v, zeta^w>), always an integer."""
    d = Fraction(2, 3) * (len(v) - ternary_real_inner(v, w))
    if d.denominator != 1:
        raise ArithmeticError(f"non-integral distance {d}")
    return int(d)


def _ceil_two_thirds_gap(n: int) -> int:
    """Exact ceil((2/3)(n - sqrt(n))), by integer-square comparison when
    sqrt(n) is irrational."""
    s = isqrt(n)
    if s * s == n:
        return ceil(Fraction(2 * (n - s), 3))
    # (2/3)(n - s - 1) < value < (2/3)(n - s), so the ceiling is one of two
    # adjacent integers; m >= value iff 2 sqrt(n) >= 2n - 3m, an integer
    # comparison of squares (equality impossible for non-square n)
    hi = ceil(Fraction(2 * (n - s), 3))
    lo = hi - 1
    if 2 * n - 3 * lo <= 0 or (2 * n - 3 * lo) ** 2 < 4 * n:
        return lo
    return hi


class BentBound(NamedTuple):
    """Lower bound on r(C_H) from a bent vector, with the exact distance
    from the vector to every codeword of C_H."""

    bound: int
    distances: tuple[int, ...]

    @property
    def min_distance(self) -> int:
        return min(self.distances)


def bent_lower_bound(h: LogMatrix, x: LogVector) -> BentBound:
    """Certified lower bound ceil((2/3)(n - sqrt(n))) <= r(C_H) for phase 3.

    A bent vector has |<x, r>|^2 = n against every row r, hence against every
    word of C_H (translates only rotate the inner product by a root of
    unity), so R<x, r> <= sqrt(n) and the distance identity puts x at
    distance at least (2/3)(n - sqrt(n)) from the whole code.  The returned
    distances are computed through the exact rational real parts, one per
    codeword of C_H in code order.
    """
    if h.phase != 3:
        raise ValueError(f"the distance identity needs phase 3, got {h.phase}")
    cert = check_bent(h, x)
    if not cert.bent:
        raise ValueError("x is not a bent vector for h")
    n = h.order
    _, c_code = code_from_matrix(h)
    distances = tuple(ternary_distance(x.entries, w) for w in c_code.words)
    return BentBound(_ceil_two_thirds_gap(n), distances)


def is_self_complementary(c: ZkCode) -> bool:
    """True iff the code is closed under adding alpha*1 for every alpha."""
    word_set = set(c.words)
    k = c.modulus
    return all(
        tuple((e + alpha) % k for e in w) in word_set for w in c.words for alpha in range(1, k)
    )


def has_strength_2(c: ZkCode) -> bool:
    """True iff every ordered coordinate pair shows each value pair in Z_k^2
    equally often over the codewords."""
    k = c.modulus
    m = len(c)
    if c.length < 2:
        return False
    if m % (k * k) != 0:
        return False
    target = m // (k * k)
    w = c.word_array()
    for i in range(c.length - 1):
        for j in range(i + 1, c.length):
            counts = np.bincount(w[:, i] * k + w[:, j], minlength=k * k)
            if not (counts == target).all():
                return False
    return True


def reed_muller_1(q: int, m: int, *, budget: int = 2**22) -> ZkCode:
    """First-order generalized Reed-Muller code: all affine functions
    a0 + sum a_i x_i on the lexicographically ordered points of Z_q^m.

    The result is a (q^m, q^{m+1}, (q-1) q^{m-1}) code: a nonzero affine
    function with nonzero linear part vanishes on exactly q^{m-1} points,
    and a nonzero constant vanishes nowhere, so the minimum weight over this
    linear code is q^m - q^{m-1}.  All three parameters are asserted after
    construction.
    """
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    if q ** (2 * m + 1) > budget:
        raise BudgetExceededError(
            f"{q}^{m + 1} words of length {q}^{m} = {q ** (2 * m + 1)} entries exceed budget {budget}"
        )
    points = np.array(
        [_digits_of(i, q, m) for i in range(q**m)], dtype=np.int64
    )  # lexicographic, most significant digit first
    words = []
    for idx in range(q ** (m + 1)):
        coeffs = _digits_of(idx, q, m + 1)
        a0, lin = coeffs[0], np.array(coeffs[1:], dtype=np.int64)
        words.append(tuple(int(e) for e in (a0 + points @ lin) % q))
    code = ZkCode(q, words)
    assert code.length == q**m and len(code) == q ** (m + 1)
    assert min_distance(code) == (q - 1) * q ** (m - 1)
    return code


def schmidt_rho(q: int, m: int) -> int:
    """Covering radius q^{m-1}(q-1) - q^{m/2-1} of the first-order
    generalized Reed-Muller code, for prime q and even m."""
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if m % 2 != 0 or m < 2:
        raise ValueError(f"the formula needs even m >= 2, got {m}")
    return q ** (m - 1) * (q - 1) - q ** (m // 2 - 1)
