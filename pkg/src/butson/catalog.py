"""A small labeled catalog of constructed matrices and certified vectors.

Each entry carries a matrix, optionally a companion vector, and the bent
kinds the vector certifies for that matrix.  The catalog spans the
constructions the library ships: the quadratic-form vectors on character
tables, the block-circulant Bush family and its diagonal scalings, the
quaternary block-constant family, and the order-4 real circulant.  Tests
re-certify every claimed kind exactly, and the number-theoretic obstruction
predicates are screened against every (order, phase) pair that carries a
certified bent vector.
"""

from __future__ import annotations

from typing import NamedTuple

from .bent import ksw_vector
from .bush import bush_circulant, bush_modify, bush_real_order4
from .matrices import LogMatrix, LogVector, character_table, circulant_from_row


class CatalogEntry(NamedTuple):
    label: str
    matrix: LogMatrix
    vector: LogVector | None
    kinds: tuple[str, ...]


def sample_bh48() -> LogMatrix:
    """The shipped BH(4, 8): the Fourier matrix of C_4 with entries read as
    eighth roots of unity."""
    return LogMatrix(8, [[0, 0, 0, 0], [0, 2, 4, 6], [0, 4, 0, 4], [0, 6, 4, 2]])


KSW_PAIRS = ((2, 2), (2, 4), (3, 2), (3, 4), (4, 2), (5, 2), (7, 2))


def catalog() -> tuple[CatalogEntry, ...]:
    entries = [CatalogEntry("BH(4,8) sample", sample_bh48(), None, ())]
    for k, m in KSW_PAIRS:
        entries.append(
            CatalogEntry(
                f"quadratic-form vector on F(C_{k}^{m})",
                character_table([k] * m),
                ksw_vector(k, m),
                ("bent", "conjugate_self_dual"),
            )
        )
    for p in (3, 5, 7):
        b = bush_circulant(p, 1)
        partner = bush_circulant(p, (p - 2) % p)
        entries.append(
            CatalogEntry(
                f"Bush block circulant p={p}, column witness",
                b.base,
                partner.base.column(0),
                ("bent", "conjugate_self_dual"),
            )
        )
    scaled = bush_modify(bush_circulant(3, 1), (1, 2, 0))
    entries.append(
        CatalogEntry(
            "diagonally scaled Bush matrix p=3, u=(1,2,0)",
            scaled.matrix,
            scaled.conjugate_self_dual_vector,
            ("bent", "conjugate_self_dual"),
        )
    )
    entries.append(
        CatalogEntry(
            "quaternary Bush block-constant vector",
            bush_real_order4().base,
            LogVector(4, (1, 1, 1, 1)),
            ("bent", "self_dual"),
        )
    )
    entries.append(
        CatalogEntry(
            "order-4 real circulant",
            circulant_from_row(LogVector(4, (0, 0, 0, 2))),
            None,
            (),
        )
    )
    return tuple(entries)


def bent_orders_and_phases() -> tuple[tuple[int, int], ...]:
    """Distinct (order, phase) pairs for which the catalog certifies a bent
    vector, in catalog order."""
    pairs = []
    for entry in catalog():
        if "bent" in entry.kinds:
            pair = (entry.matrix.order, entry.matrix.phase)
            if pair not in pairs:
                pairs.append(pair)
    return tuple(pairs)
