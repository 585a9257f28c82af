from __future__ import annotations

import random

from butson.bent import (
    NotAmicableError,
    NotCommutingError,
    NotSymmetricError,
    check_bent,
    circulant_bent_bridge,
    devectorize,
    ksw_vector,
    search_bent,
    tensor_bent,
    tensor_corollary_check,
    vectorize,
)
from butson.cyclotomic import CycInt
from butson.matrices import (
    LogMatrix,
    LogVector,
    character_table,
    fourier_matrix,
    kronecker,
    verify_hadamard,
)

from oracles import bent_kinds_float, brute_force_bent_vectors


def test_ksw_is_conjugate_self_dual():
    h = character_table([3, 3])
    cert = check_bent(h, ksw_vector(3, 2))
    assert cert.bent and cert.conjugate_self_dual
    # F(C_k^m) x = k^(m/2) conj(x): the unit (Hx)_i x_i equals k^(m/2) = 3
    assert cert.conjugate_self_dual_unit == 3
    assert cert.conjugate_self_dual_unit.norm_sq() == 9


def test_ksw_smallest_case():
    h = character_table([2, 2])
    cert = check_bent(h, ksw_vector(2, 2))
    assert ksw_vector(2, 2).entries == (0, 0, 0, 1)
    assert cert.conjugate_self_dual
    # real case: also self-dual
    assert cert.self_dual


def test_ksw_m4():
    h = character_table([2, 2, 2, 2])
    x = ksw_vector(2, 4)
    cert = check_bent(h, x)
    assert cert.conjugate_self_dual


def test_ksw_range():
    for k in range(2, 8):
        cert = check_bent(character_table([k, k]), ksw_vector(k, 2))
        assert cert.conjugate_self_dual, k


def test_ksw_rejects_odd_m():
    try:
        ksw_vector(3, 3)
        raise AssertionError("expected ValueError")
    except ValueError:
        pass


def test_not_bent_example():
    cert = check_bent(fourier_matrix(3), LogVector(3, (0, 0, 0)))
    assert not cert.bent
    assert cert.kind == "not_bent"
    assert cert.dual[0] == 3 and cert.dual[1] == 0 and cert.dual[2] == 0


def test_certificate_norms():
    h = character_table([3, 3])
    cert = check_bent(h, ksw_vector(3, 2))
    for e in cert.dual:
        assert e.norm_sq() == 9


def test_dual_entry_orders_present_when_self_conjugate():
    # 9 is self conjugate mod 3, so dual entries live in phase 4*3 = 12
    cert = check_bent(character_table([3, 3]), ksw_vector(3, 2))
    assert cert.dual_entry_orders is not None
    assert all(o is not None for o in cert.dual_entry_orders)
    for e, o in zip(cert.dual, cert.dual_entry_orders):
        # entry = 3 y with y a root of order o in phase 12
        y_pow = CycInt.integer(12, 1)
        for _ in range(o):
            y_pow = y_pow * e.embed(12)
        assert y_pow == 3**o


def test_dual_entries_are_ambient_roots_when_self_conjugate():
    # for self-conjugate (n, k) every dual entry of a bent vector is
    # sqrt(n) times a root of unity of phase 2k (even k) or 4k (odd k)
    cases = [
        (fourier_matrix(4), 8, 2),  # n=4, k=4: ambient 8, sqrt = 2
        (character_table([3, 3]), 12, 3),  # n=9, k=3: ambient 12, sqrt = 3
    ]
    for h, ambient, s in cases:
        hits = list(search_bent(h, mode="any", budget=200))
        assert hits
        for hit in hits:
            assert hit.certificate.dual_entry_orders is not None
            for e, order in zip(hit.certificate.dual, hit.certificate.dual_entry_orders):
                assert order is not None
                lifted = e.embed(ambient)
                y = CycInt(ambient, tuple(c // s for c in lifted.reduce().coeffs))
                assert y.is_root_of_unity() is not None
                p = CycInt.integer(ambient, 1)
                for _ in range(order):
                    p = p * y
                assert p == 1


def test_scalar_invariance_preserves_kind():
    rng = random.Random(13)
    h = character_table([3, 3])
    x = ksw_vector(3, 2)
    base = check_bent(h, x)
    for _ in range(100):
        c = rng.randrange(3)
        shifted = LogVector(3, [(e + c) % 3 for e in x.entries])
        cert = check_bent(h, shifted)
        assert cert.bent == base.bent
        assert cert.self_dual == base.self_dual
        assert cert.conjugate_self_dual == base.conjugate_self_dual


def test_check_bent_agrees_with_float():
    rng = random.Random(37)
    for _ in range(150):
        n, k = rng.choice([(2, 2), (4, 2), (3, 3), (4, 4), (9, 3)])
        if (n, k) == (4, 2):
            h = character_table([2, 2])
        elif (n, k) == (9, 3):
            h = character_table([3, 3])
        else:
            h = fourier_matrix(n)
        x = LogVector(k, [rng.randrange(k) for _ in range(n)])
        cert = check_bent(h, x)
        bent, sd, csd = bent_kinds_float(h.entries, k, x.entries)
        assert cert.bent == bent
        if bent:
            assert cert.self_dual == sd and cert.conjugate_self_dual == csd


def test_search_fc2_empty():
    assert list(search_bent(fourier_matrix(2), mode="any")) == []


def test_search_fc22_completeness():
    h = character_table([2, 2])
    hits = list(search_bent(h, mode="any"))
    found = {hit.vector.entries for hit in hits}
    brute = brute_force_bent_vectors(h.entries, 2)
    pinned = {x for x, _, _ in brute if x[0] == 0}
    assert found == pinned
    # every bent vector is a scalar shift of a pinned hit
    assert len(brute) == 2 * len(pinned)
    for index, vector, cert in hits:
        assert cert.bent


def test_search_fc4_count_regression():
    # 4^3 = 64 pinned candidates; full space 256 has 4x as many bent vectors.
    hits = list(search_bent(fourier_matrix(4), mode="any"))
    assert len(hits) == 8
    brute = brute_force_bent_vectors(fourier_matrix(4).entries, 4)
    assert len(brute) == 4 * len(hits)
    assert any(hit.vector.entries == (0, 0, 0, 2) for hit in hits)


def test_search_finds_ksw():
    h = character_table([3, 3])
    hits = list(search_bent(h, mode="conjugate_self_dual"))
    assert ksw_vector(3, 2).entries in {hit.vector.entries for hit in hits}
    for hit in hits:
        assert hit.certificate.conjugate_self_dual


def test_search_budget_prefix():
    h = fourier_matrix(4)
    full = list(search_bent(h, mode="any"))
    part = list(search_bent(h, mode="any", budget=30))
    assert part == [hit for hit in full if hit.index < 30]


def test_search_worker_determinism():
    h = character_table([3, 3])
    one = [(hit.index, hit.vector.entries) for hit in search_bent(h, mode="conjugate_self_dual", budget=2000)]
    two = [(hit.index, hit.vector.entries) for hit in search_bent(h, mode="conjugate_self_dual", budget=2000, workers=2)]
    assert one == two


def test_search_index_encodes_candidate():
    h = fourier_matrix(4)
    for hit in search_bent(h, mode="any", budget=64):
        # index digits base k, most significant first, after the pinned 0
        digits = []
        rem = hit.index
        for _ in range(3):
            rem, d = divmod(rem, 4)
            digits.append(d)
        assert (0,) + tuple(reversed(digits)) == hit.vector.entries


def test_tensor_bent():
    x = ksw_vector(3, 2)
    xx = tensor_bent(x, x)
    h = character_table([3, 3])
    hh = kronecker(h, h)
    cert = check_bent(hh, xx)
    assert cert.conjugate_self_dual

    a = tensor_bent(ksw_vector(2, 2), ksw_vector(2, 2))
    b = ksw_vector(2, 4)
    h4 = character_table([2, 2, 2, 2])
    assert check_bent(h4, a).conjugate_self_dual
    assert check_bent(h4, b).conjugate_self_dual

    try:
        tensor_bent(x, LogVector(4, (0,)))
        raise AssertionError("expected ValueError")
    except ValueError:
        pass


def test_vectorize_round_trip():
    m = LogMatrix(8, [[0, 0, 0, 0], [0, 2, 4, 6], [0, 4, 0, 4], [0, 6, 4, 2]])
    x = vectorize(m)
    assert len(x) == 16
    assert x.entries == (0, 0, 0, 0, 0, 2, 4, 6, 0, 4, 0, 4, 0, 6, 4, 2)
    assert devectorize(x, 4) == m
    assert vectorize(LogMatrix(3, [[2]])).entries == (2,)
    try:
        devectorize(x, 3)
        raise AssertionError("expected ValueError")
    except ValueError:
        pass


def test_tensor_corollary_variant1():
    cert = tensor_corollary_check(fourier_matrix(3), variant=1)
    assert cert.conjugate_self_dual


def test_tensor_corollary_variant2():
    f2 = fourier_matrix(2)
    cert = tensor_corollary_check(f2, f2, variant=2)
    assert cert.self_dual
    # F(C_3) and a column-permuted copy do not commute
    h = fourier_matrix(3)
    m = h.monomial_transform([0, 1, 2], [0, 0, 0], [1, 2, 0], [0, 0, 0])
    try:
        tensor_corollary_check(h, m, variant=2)
        raise AssertionError("expected NotCommutingError")
    except NotCommutingError:
        pass


def test_tensor_corollary_variant3():
    f2 = fourier_matrix(2)
    cert = tensor_corollary_check(f2, f2, variant=3)
    assert cert.conjugate_self_dual


def test_tensor_corollary_variant3_rejections():
    f3 = fourier_matrix(3)
    # any matrix is amicable with itself, so an asymmetric M hits the
    # symmetry check
    asym = f3.monomial_transform([1, 0, 2], [0, 0, 0], [0, 1, 2], [0, 0, 0])
    try:
        tensor_corollary_check(asym, asym, variant=3)
        raise AssertionError("expected NotSymmetricError")
    except NotSymmetricError:
        pass
    # multiplying one row by zeta breaks H M* = M H*
    shifted = f3.monomial_transform([0, 1, 2], [1, 0, 0], [0, 1, 2], [0, 0, 0])
    try:
        tensor_corollary_check(f3, shifted, variant=3)
        raise AssertionError("expected NotAmicableError")
    except NotAmicableError:
        pass


def test_circulant_bridge():
    h, cert = circulant_bent_bridge(LogVector(4, (0, 0, 0, 2)))
    assert verify_hadamard(h) and cert.bent

    h, cert = circulant_bent_bridge(LogVector(4, (0, 0, 0, 0)))
    assert not verify_hadamard(h) and not cert.bent

    rng = random.Random(71)
    for _ in range(100):
        n = rng.randrange(2, 6)
        k = rng.choice([2, 3, 4])
        x = LogVector(k, [rng.randrange(k) for _ in range(n)])
        h, cert = circulant_bent_bridge(x)
        assert verify_hadamard(h) == cert.bent
