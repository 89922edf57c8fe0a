"""Tableau engine tests: filling rules, enumeration against the determinant
characters, canonical fillings, and the spinor column pairs with residues."""

import itertools

import pytest

from crystalline.symfunc import (
    LaurentPoly,
    monomials_to_schur,
    schur_poly,
    sigma_char,
    spinor_char,
    spinor_char_barred,
)
from crystalline.tableaux import (
    DEFAULT_CONFIG,
    KNConfig,
    KNTableau,
    SpinorColumnPair,
    alphabet,
    column_pair_ok,
    enumerate_kn,
    enumerate_spinor_columns,
    enumerate_spinor_columns_barred,
    enumerate_sst_pairs,
    kn_validate,
    kn_violations,
    leq,
    letter_ok,
    lt,
    n_admissible,
    normalize_shape,
    residue,
    row_pair_ok,
    t_lambda,
)
from crystalline.weights import (
    InvalidShapeError,
    ResourceCapError,
    Weight,
    conjugate,
    partitions_of,
)


# ---------------------------------------------------------------------------
# oracles and sweep helpers


def brute_residue(T: SpinorColumnPair) -> int:
    """Independent slide check on the explicit visual grid."""
    best = 0
    for k in range(0, min(T.a, T.b) + 1):
        ok = True
        for row in range(1, T.a + T.b + T.c + 1):
            has_left = T.b < row <= T.a + T.b + T.c
            has_right = k < row <= T.b + T.c + k
            if has_left and has_right:
                if T.left[row - T.b - 1] > T.right[row - k - 1]:
                    ok = False
                    break
        if ok:
            best = k
    return best


def all_columns(lie_type: str, n: int, h: int) -> list[tuple[int, ...]]:
    """Every column filling of height h whose adjacent cells are allowed."""
    letters = alphabet(lie_type, n)
    out = []

    def extend(col):
        if len(col) == h:
            out.append(tuple(col))
            return
        for x in letters:
            if not col or column_pair_ok(col[-1], x, lie_type):
                col.append(x)
                extend(col)
                col.pop()

    extend([])
    return out


def weight_poly(tableaux, n: int) -> LaurentPoly:
    return LaurentPoly.from_weights(n, [T.weight().window(n) for T in tableaux])


def sweep_shapes(n: int, lie_type: str, budget: int) -> list[tuple[int, ...]]:
    out = []
    for m in range(0, budget + 1):
        for lam in partitions_of(m):
            if lam and (len(lam) > n or lam[0] > n):
                continue
            out.append(tuple(lam))
    if lie_type == "d":
        for total in range(2, budget + 1):
            for lam in partitions_of(total):
                if len(lam) == n and lam[0] <= n and lam[-1] >= 1:
                    out.append(tuple(lam[:-1]) + (-lam[-1],))
    return out


def signed_shapes(n: int, budget: int) -> list[tuple[int, ...]]:
    return [s for s in sweep_shapes(n, "d", budget) if s and s[-1] < 0]


# ---------------------------------------------------------------------------
# letters, order, admissibility


def test_alphabet():
    assert alphabet("c", 2) == (-2, -1, 1, 2)
    assert alphabet("b", 2) == (-2, -1, 0, 1, 2)
    assert alphabet("d", 3) == (-3, -2, -1, 1, 2, 3)
    with pytest.raises(ValueError):
        alphabet("c", 0)


def test_letter_order():
    assert lt(-2, -1, "c") and lt(-1, 1, "c") and lt(1, 2, "c")
    assert lt(-1, 0, "b") and lt(0, 1, "b")
    # the even orthogonal letters 1 and -1 are incomparable
    assert not lt(-1, 1, "d") and not lt(1, -1, "d")
    assert not leq(-1, 1, "d") and not leq(1, -1, "d")
    assert leq(1, 1, "d") and lt(-2, 1, "d") and lt(-1, 2, "d")
    assert not letter_ok(0, "c", 2) and not letter_ok(0, "d", 2)
    assert letter_ok(0, "b", 2) and not letter_ok(3, "b", 2)


def test_row_and_column_rules():
    # zero may not repeat in a row but may repeat in a column
    assert not row_pair_ok(0, 0, "b")
    assert column_pair_ok(0, 0, "b")
    assert row_pair_ok(0, 1, "b") and row_pair_ok(-1, 0, "b")
    # columns are strict elsewhere
    assert not column_pair_ok(1, 1, "c")
    assert not column_pair_ok(2, 1, "c")
    assert column_pair_ok(-1, 1, "c")
    # the incomparable pair alternates in even orthogonal columns
    assert column_pair_ok(1, -1, "d") and column_pair_ok(-1, 1, "d")
    assert not column_pair_ok(1, 1, "d") and not column_pair_ok(-1, -1, "d")
    # and never shares a row
    assert not row_pair_ok(1, -1, "d") and not row_pair_ok(-1, 1, "d")


def test_n_admissible_examples():
    assert not n_admissible((-2, -1, 1, 2), 3, "c")  # four letters of size >= 1
    assert n_admissible((), 5, "b")
    assert n_admissible((-1, 1), 2, "c")
    assert not n_admissible((-2, 2), 2, "d")  # two letters of size >= 2
    assert not n_admissible((0, 0, 0), 2, "b")  # height above the rank
    assert n_admissible((0, 0), 2, "b")
    with pytest.raises(ValueError):
        n_admissible((4,), 3, "c")
    with pytest.raises(ValueError):
        n_admissible((0,), 3, "d")


def test_admissibility_is_rank_monotone():
    for lie_type in ("b", "c", "d"):
        for h in range(0, 5):
            for col in all_columns(lie_type, 4, h):
                if n_admissible(col, 4, lie_type):
                    for bigger in (5, 6, 7, 8):
                        assert n_admissible(col, bigger, lie_type)


# ---------------------------------------------------------------------------
# shapes, construction, serialization


def test_normalize_shape():
    assert normalize_shape((3, 2, 0, 0), "c", 3) == (3, 2)
    assert normalize_shape((2, 1, -1), "d", 3) == (2, 1, -1)
    with pytest.raises(InvalidShapeError):
        normalize_shape((1, 1, 1), "c", 2)  # too tall
    with pytest.raises(InvalidShapeError):
        normalize_shape((2, -1), "b", 2)  # signed shape outside type d
    with pytest.raises(InvalidShapeError):
        normalize_shape((2, -1), "d", 3)  # signed shape must fill the rank
    with pytest.raises(InvalidShapeError):
        normalize_shape((1, 1, -2), "d", 3)  # last row wider than the body
    with pytest.raises(InvalidShapeError):
        normalize_shape((2, 1, 2), "c", 3)  # not decreasing


def test_tableau_construction_checks():
    with pytest.raises(ValueError):
        KNTableau((2, 1), ((1, 1),), "c", 2)  # rows do not fill the shape
    with pytest.raises(ValueError):
        KNTableau((1,), ((3,),), "c", 2)  # letter outside the alphabet
    T = KNTableau((2, 1), ((1, 1), (2,)), "c", 2)
    assert T.columns() == ((1, 2), (1,))
    assert T.cell(2, 1) == 2
    assert T.size() == 3
    assert T.weight() == Weight((2, 1), 0)


def test_json_round_trip():
    T = t_lambda((4, 3, 1, -1), "d", 4)
    data = T.to_json()
    assert data == {
        "type": "D",
        "rank": 4,
        "shape": [4, 3, 1, -1],
        "rows": [["-4", "1", "1", "1"], ["1", "2", "2"], ["2"], ["3*"]],
    }
    assert KNTableau.from_json(data) == T
    U = t_lambda((2, 2), "b", 3)
    assert KNTableau.from_json(U.to_json()) == U


def test_config_validation():
    with pytest.raises(ValueError):
        KNConfig(pair_scope="sideways")
    with pytest.raises(ValueError):
        KNConfig(sign_span="sp")
    with pytest.raises(ValueError):
        KNConfig(full_parity="diagonal")
    assert DEFAULT_CONFIG == KNConfig("same", "qr", "row")


# ---------------------------------------------------------------------------
# canonical fillings


def test_t_lambda_examples():
    T = t_lambda((4, 3, 1, -1), "d", 4)
    assert T.rows == ((-4, 1, 1, 1), (1, 2, 2), (2,), (3,))
    assert kn_validate(T)
    assert T.weight() == Weight((4, 3, 1, -1), 0)

    for lie_type in ("b", "c", "d"):
        U = t_lambda((2, 1), lie_type, 3)
        assert U.rows == ((1, 1), (2,))
    assert t_lambda((1, 1, 1), "c", 3).columns() == ((1, 2, 3),)
    assert t_lambda((1, 1, -1), "d", 3).columns() == ((-3, 1, 2),)
    with pytest.raises(InvalidShapeError):
        t_lambda((1, 1, 1), "c", 2)


def test_t_lambda_sweep():
    for lie_type in ("b", "c", "d"):
        for n in range(1, 5):
            if lie_type == "d" and n < 2:
                continue
            shapes = [
                lam
                for m in range(0, 7)
                for lam in partitions_of(m)
                if len(lam) <= n
            ]
            if lie_type == "d":
                shapes += [
                    s
                    for s in signed_shapes(n, 6)
                    if True
                ]
            for shape in shapes:
                T = t_lambda(shape, lie_type, n)
                assert kn_validate(T), (lie_type, n, shape, kn_violations(T))
                assert T.weight() == Weight(tuple(shape), 0)


# ---------------------------------------------------------------------------
# frozen enumeration anchors


def test_single_column_anchors():
    assert {t.rows for t in enumerate_kn((1,), "c", 2)} == {
        ((-2,),),
        ((-1,),),
        ((1,),),
        ((2,),),
    }
    assert {t.rows[0][0] for t in enumerate_kn((1,), "b", 2)} == {-2, -1, 0, 1, 2}
    assert len(enumerate_kn((1, 1), "c", 2)) == 5
    assert len(enumerate_kn((1, 1), "b", 2)) == 10
    # the zero column of height two is allowed
    assert ((0,), (0,)) in {t.rows for t in enumerate_kn((1, 1), "b", 2)}


def test_even_orthogonal_column_anchors():
    assert {t.columns()[0] for t in enumerate_kn((1, 1), "d", 2)} == {
        (-2, -1),
        (1, -1),
        (1, 2),
    }
    assert {t.columns()[0] for t in enumerate_kn((1, -1), "d", 2)} == {
        (-2, 1),
        (-1, 1),
        (-1, 2),
    }
    assert {t.columns()[0] for t in enumerate_kn((1, 1, 1), "d", 3)} == {
        (-3, -2, 1),
        (-3, -1, 1),
        (-3, -1, 2),
        (-2, -1, 1),
        (-2, -1, 2),
        (-2, -1, 3),
        (1, -1, 1),
        (1, -1, 2),
        (1, -1, 3),
        (1, 2, 3),
    }


def test_full_height_columns_split_between_the_two_shapes():
    for n in (2, 3):
        plain = {t.columns()[0] for t in enumerate_kn((1,) * n, "d", n)}
        signed = {
            t.columns()[0] for t in enumerate_kn((1,) * (n - 1) + (-1,), "d", n)
        }
        admissible = {
            col
            for col in all_columns("d", n, n)
            if n_admissible(col, n, "d")
        }
        assert plain | signed == admissible
        assert not plain & signed


def test_two_column_symplectic_anchor():
    ts = enumerate_kn((2, 2), "c", 2)
    rows = {t.rows for t in ts}
    assert len(ts) == 14
    # the unique filling excluded by the bracket-pair rule
    assert ((-1, -1), (1, 1)) not in rows
    # both other zero-weight fillings survive
    assert ((-2, 1), (-1, 2)) in rows
    assert ((-2, -1), (1, 2)) in rows
    assert weight_poly(ts, 2) == sigma_char((2, 2), "c", 2)


def test_two_column_even_orthogonal_anchor():
    ts = enumerate_kn((2, 2), "d", 2)
    assert {t.rows for t in ts} == {
        ((-2, -2), (-1, -1)),
        ((-2, 1), (-1, -1)),
        ((-2, 1), (-1, 2)),
        ((1, 1), (-1, 2)),
        ((1, 1), (2, 2)),
    }
    assert weight_poly(ts, 2) == sigma_char((2, 2), "d", 2)


def test_empty_shape():
    for lie_type, n in (("b", 1), ("c", 2), ("d", 2)):
        ts = enumerate_kn((), lie_type, n)
        assert len(ts) == 1 and ts[0].rows == ()
        assert kn_validate(ts[0])
        assert ts[0].weight() == Weight((), 0)


def test_enumeration_cap():
    with pytest.raises(ResourceCapError):
        enumerate_kn((1,), "b", 2, max_count=3)


# ---------------------------------------------------------------------------
# the determinant-character sweep (the adjudicating oracle)


def test_character_sweep_matches_determinants():
    for lie_type in ("b", "c", "d"):
        for n in (1, 2, 3):
            if lie_type == "d" and n < 2:
                continue
            for shape in sweep_shapes(n, lie_type, 4):
                ts = enumerate_kn(shape, lie_type, n)
                assert weight_poly(ts, n) == sigma_char(shape, lie_type, n), (
                    lie_type,
                    n,
                    shape,
                )


def test_character_extras_full_height_and_wide():
    # these shapes are exactly the ones that distinguish the flagged
    # readings of the garbled two-column rules
    for shape, lie_type, n in [
        ((2, 2, 2, 2), "c", 4),
        ((2, 2, 2), "b", 3),
        ((2, 2, 2), "d", 3),
        ((3, 3, -3), "d", 3),
    ]:
        ts = enumerate_kn(shape, lie_type, n)
        assert weight_poly(ts, n) == sigma_char(shape, lie_type, n), (lie_type, shape)


def test_rank_monotone_inclusion():
    for lie_type in ("b", "c", "d"):
        for n in (2, 3):
            for m in range(0, 4):
                for lam in partitions_of(m):
                    if len(lam) > n or (lam and lam[0] > n):
                        continue
                    small = {t.rows for t in enumerate_kn(lam, lie_type, n)}
                    large = {t.rows for t in enumerate_kn(lam, lie_type, n + 1)}
                    assert small <= large, (lie_type, n, lam)


# ---------------------------------------------------------------------------
# violation reports and the flagged readings


def test_bracket_pair_violation():
    T = KNTableau((2, 2), ((-1, -1), (1, 1)), "c", 2)
    assert {v.clause for v in kn_violations(T)} == {"bracket-pair-distance"}


def test_zero_band_violation():
    T = KNTableau((2, 2, 2), ((-2, 0), (0, 1), (1, 2)), "b", 3)
    assert {v.clause for v in kn_violations(T)} == {"zero-band-distance"}


def test_zero_overlap_violation():
    T = KNTableau((2, 2), ((-1, 0), (0, 1)), "b", 2)
    assert {v.clause for v in kn_violations(T)} == {"zero-overlap"}


def test_sign_overlap_violation():
    T = KNTableau((2, 2), ((1, 1), (-1, -1)), "d", 2)
    assert {v.clause for v in kn_violations(T)} == {"sign-overlap"}


def test_sign_band_violation():
    # bracket from -2 at row one to 2 at row three around alternating cells
    T = KNTableau((2, 2, 2), ((-2, -1), (1, 1), (-1, 2)), "d", 4)
    assert {v.clause for v in kn_violations(T)} == {"sign-band-distance"}


def test_sign_span_violation():
    T = KNTableau((2, 2, 2), ((-2, 1), (1, 2), (2, 3)), "d", 4)
    assert {v.clause for v in kn_violations(T)} == {"sign-span-parity"}


def test_full_column_parity_violation():
    T = KNTableau((1, 1), ((-1,), (1,)), "d", 2)
    assert {v.clause for v in kn_violations(T)} == {"full-column-parity"}
    U = KNTableau((1, 1), ((1,), (-1,)), "d", 2)
    assert kn_validate(U)


def test_order_and_admissibility_violations():
    T = KNTableau((1, 1), ((2,), (1,)), "c", 2)
    assert {v.clause for v in kn_violations(T)} == {"column-order"}
    U = KNTableau((2,), ((2, 1),), "c", 2)
    assert {v.clause for v in kn_violations(U)} == {"row-order"}
    V = KNTableau((1, 1), ((-2,), (2,)), "d", 2)
    assert "column-admissibility" in {v.clause for v in kn_violations(V)}
    W = KNTableau((2,), ((0, 0),), "b", 2)
    assert {v.clause for v in kn_violations(W)} == {"row-order"}


def test_sign_span_reading_is_adjudicated_by_characters():
    # the literal bottom-anchored span over-kills; the pairwise span matches
    literal = KNConfig(sign_span="qs")
    default_set = {t.rows for t in enumerate_kn((2, 2, 2), "d", 3)}
    literal_set = {t.rows for t in enumerate_kn((2, 2, 2), "d", 3, literal)}
    assert len(default_set) == 35 == sigma_char((2, 2, 2), "d", 3).at_ones()
    assert len(literal_set) == 31
    assert literal_set < default_set
    witness = ((-3, 1), (-1, -1), (1, 3))
    T = KNTableau((2, 2, 2), witness, "d", 3)
    assert kn_validate(T)
    assert {v.clause for v in kn_violations(T, literal)} == {"sign-span-parity"}


def test_pair_scope_reading_is_adjudicated_by_characters():
    mixed = KNConfig(pair_scope="mixed")
    ts = enumerate_kn((2, 2, 2, 2), "c", 4)
    assert len(ts) == 594 == sigma_char((2, 2, 2, 2), "c", 4).at_ones()
    assert len(enumerate_kn((2, 2, 2, 2), "c", 4, mixed)) == 544
    T = KNTableau(
        (2, 2, 2, 2), ((-4, -1), (-2, 1), (-1, 2), (1, 4)), "c", 4
    )
    assert kn_validate(T)
    assert {v.clause for v in kn_violations(T, mixed)} == {"bracket-pair-distance"}


def test_full_parity_reading_swaps_families_at_odd_rank():
    depth = KNConfig(full_parity="depth")
    ts = enumerate_kn((1, 1, 1), "d", 3, depth)
    # same count, but the weights belong to the signed twin shape
    assert len(ts) == 10
    assert weight_poly(ts, 3) == sigma_char((1, 1, -1), "d", 3)
    # at even rank the two readings agree
    assert {t.rows for t in enumerate_kn((1, 1), "d", 2, depth)} == {
        t.rows for t in enumerate_kn((1, 1), "d", 2)
    }


# ---------------------------------------------------------------------------
# spinor column pairs


def test_spinor_pair_validation():
    with pytest.raises(ValueError):
        SpinorColumnPair(1, 0, 1, (1,), (1,))  # left column too short
    with pytest.raises(ValueError):
        SpinorColumnPair(0, 0, 2, (2, 1), (1, 2))  # not strictly increasing
    with pytest.raises(ValueError):
        SpinorColumnPair(0, 0, 1, (2,), (1,))  # row decreases
    with pytest.raises(ValueError):
        SpinorColumnPair(0, 1, 1, (1,), (2, 0))  # entries must be positive
    T = SpinorColumnPair(1, 1, 1, (1, 3), (2, 4))
    assert T.size() == 4
    assert T.entry_counts(4) == (1, 1, 1, 1)


def test_residue_examples():
    # no slide room without both excesses
    assert residue(SpinorColumnPair(0, 2, 1, (1,), (1, 2, 3))) == 0
    assert residue(SpinorColumnPair(2, 0, 1, (1, 2, 3), (1,))) == 0
    # single-cell columns on the (1,1,0) frame
    assert residue(SpinorColumnPair(1, 1, 0, (2,), (1,))) == 0
    assert residue(SpinorColumnPair(1, 1, 0, (1,), (2,))) == 1
    # disjoint ranges always slide to the bound
    assert residue(SpinorColumnPair(2, 3, 1, (1, 2, 3), (4, 5, 6, 7))) == 2
    assert residue(SpinorColumnPair(3, 2, 2, (1, 2, 3, 4, 5), (6, 7, 8, 9))) == 2


def test_residue_against_brute_slides():
    for a in range(0, 3):
        for b in range(0, 3):
            for c in range(0, 3):
                for T in enumerate_sst_pairs(a, b, c, 4):
                    assert residue(T) == brute_residue(T), T


def test_residue_strata_partition_and_characters():
    for a in range(0, 3):
        for b in range(0, 3):
            for c in range(0, 3):
                m = a + b + 2 * c
                if m == 0:
                    continue
                pairs = enumerate_sst_pairs(a, b, c, m)
                strata = {}
                for T in pairs:
                    strata.setdefault(residue(T), []).append(T)
                assert sum(len(v) for v in strata.values()) == len(pairs)
                assert set(strata) == set(range(0, min(a, b) + 1))
                for k, members in strata.items():
                    got = LaurentPoly.from_weights(
                        m, [T.entry_counts(m) for T in members]
                    )
                    lam = conjugate((a + b + c - k, c + k))
                    assert got == schur_poly(lam, m), (a, b, c, k)


def test_empty_frame():
    pairs = enumerate_sst_pairs(0, 0, 0, 3)
    assert len(pairs) == 1 and residue(pairs[0]) == 0


def test_enumerate_spinor_columns_examples():
    # symplectic, excess zero: only c varies; the degree-two layer is a row
    cs = enumerate_spinor_columns(0, "c", 2)
    assert {(T.b, T.c) for T in cs} == {(0, 0), (0, 1)}
    layer = [T for T in cs if T.size() == 2]
    got = LaurentPoly.from_weights(2, [T.entry_counts(2) for T in layer])
    assert monomials_to_schur(got) == {(2,): 1}
    # a frame needs at least its own excess in cells
    assert enumerate_spinor_columns(3, "c", 2) == ()
    # even orthogonal grids are even, and the residue bound is one
    ds = enumerate_spinor_columns(2, "d", 6)
    assert all(T.b % 2 == 0 and T.c % 2 == 0 for T in ds)
    assert all(residue(T) <= 1 for T in ds)
    assert any(residue(T) == 1 for T in ds)
    excluded = SpinorColumnPair(2, 2, 0, (1, 2), (3, 4))
    assert residue(excluded) == 2 and excluded not in set(ds)
    # odd orthogonal keeps residue zero only
    bs = enumerate_spinor_columns(1, "b", 4)
    assert all(residue(T) == 0 for T in bs)


def test_spinor_empty_pair_membership():
    unbarred = enumerate_spinor_columns(0, "d", 4)
    barred = enumerate_spinor_columns_barred(4)
    assert any(T.size() == 0 for T in unbarred)
    assert all(T.size() > 0 for T in barred)
    assert all(T.b % 2 == 0 and T.c % 2 == 1 for T in barred)


def spinor_schur(pairs, degree_bound):
    total = {}
    for T in pairs:
        if T.size() <= degree_bound:
            exp = T.entry_counts(degree_bound)
            total[exp] = total.get(exp, 0) + 1
    poly = LaurentPoly(degree_bound, total) if total else LaurentPoly.zero(degree_bound)
    return monomials_to_schur(poly)


def test_spinor_enumeration_matches_series_characters():
    D = 6
    for lie_type in ("b", "c"):
        for a in range(0, 3):
            got = spinor_schur(enumerate_spinor_columns(a, lie_type, D), D)
            want = dict(spinor_char(a, lie_type, D).coeffs)
            assert got == want, (lie_type, a)
    for a in (0, 1, 2):
        got = spinor_schur(enumerate_spinor_columns(a, "d", D), D)
        want = dict(spinor_char(a, "d", D).coeffs)
        assert got == want, ("d", a)
    got = spinor_schur(enumerate_spinor_columns_barred(D), D)
    assert got == dict(spinor_char_barred(D).coeffs)
