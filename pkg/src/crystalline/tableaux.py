"""Kashiwara-Nakashima tableaux at finite rank, plus two-column spinor pairs.

Letters of the rank-n alphabet are encoded as integers: k stands for the
unbarred letter k, -k for the barred letter, and 0 for the zero letter that
exists only in the odd orthogonal alphabet.  The integer order realizes the
letter order, with one exception: in the even orthogonal alphabet the letters
-1 and 1 are incomparable, and they may alternate inside a column.

A tableau is stored row-major over a shape that is either a partition or, in
the even orthogonal case, a full-length shape whose last row count is
negative (the "signed" shapes).  Validation reports every broken rule by a
stable clause name so that sweeps can pinpoint which filling rule failed:

* ``row-order`` / ``column-order``: the semistandard rules, including the
  odd orthogonal zero-repetition rules and the even orthogonal alternation.
* ``column-admissibility``: a column may carry at most n-z+1 letters of
  absolute value at least z.
* ``bracket-pair-distance``: inside a bracket (barred a in the left column
  above unbarred a in the right column) a barred/unbarred witness pair for a
  smaller letter must sit close to the bracket ends.
* ``zero-band-distance`` / ``zero-overlap``: the odd orthogonal rules for
  cells from {-1, 0, 1}.
* ``sign-band-distance`` / ``sign-overlap`` / ``sign-span-parity``: the even
  orthogonal rules for cells from {-1, 1}.
* ``full-column-parity``: the even orthogonal rule pinning at which rows of
  a full-height column the letters 1 and -1 may appear.

Two-column spinor pairs hold positive integers: the left column of length
a+c starts b+1 rows down, the right column of length b+c starts at the top,
and the residue of a pair is the largest downward slide of the right column
that keeps all overlapping rows weakly increasing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from crystalline.weights import (
    InvalidShapeError,
    ResourceCapError,
    Weight,
    check_lie_type,
    conjugate,
    make_partition,
)

__all__ = [
    "DEFAULT_CONFIG",
    "KNConfig",
    "KNTableau",
    "SpinorColumnPair",
    "Violation",
    "alphabet",
    "column_pair_ok",
    "enumerate_kn",
    "enumerate_spinor_columns",
    "enumerate_spinor_columns_barred",
    "enumerate_sst_pairs",
    "kn_validate",
    "kn_violations",
    "leq",
    "letter_ok",
    "lt",
    "n_admissible",
    "normalize_shape",
    "residue",
    "row_pair_ok",
    "t_lambda",
]


# ---------------------------------------------------------------------------
# letters


def alphabet(lie_type: str, n: int) -> tuple[int, ...]:
    """All letters of the rank-n alphabet, listed in increasing order."""
    check_lie_type(lie_type)
    if n < 1:
        raise ValueError("rank must be at least 1")
    letters = list(range(-n, 0))
    if lie_type == "b":
        letters.append(0)
    letters.extend(range(1, n + 1))
    return tuple(letters)


def letter_ok(x: int, lie_type: str, n: int) -> bool:
    """Whether x encodes a letter of the rank-n alphabet."""
    if x == 0:
        return lie_type == "b"
    return 1 <= abs(x) <= n


def lt(x: int, y: int, lie_type: str) -> bool:
    """Strict letter order; -1 and 1 are incomparable in the even orthogonal case."""
    if lie_type == "d" and abs(x) == 1 and abs(y) == 1 and x != y:
        return False
    return x < y


def leq(x: int, y: int, lie_type: str) -> bool:
    return x == y or lt(x, y, lie_type)


def row_pair_ok(left: int, right: int, lie_type: str) -> bool:
    """Adjacent cells of a row: weakly increasing, but 0 never repeats in a row."""
    if lie_type == "b" and left == 0 and right == 0:
        return False
    return leq(left, right, lie_type)


def column_pair_ok(upper: int, lower: int, lie_type: str) -> bool:
    """Adjacent cells of a column: "not greater", so that the incomparable
    pair -1, 1 may alternate, plus the zero-repetition exception."""
    if lie_type == "b" and upper == 0 and lower == 0:
        return True
    return not leq(lower, upper, lie_type)


def _letter_str(x: int) -> str:
    return str(x)


# ---------------------------------------------------------------------------
# column admissibility


def n_admissible(column: Sequence[int], n: int, lie_type: str) -> bool:
    """Height at most n, and at most n-z+1 letters of absolute value >= z.

    The zero letter is never counted.  Raises ValueError when a letter lies
    outside the rank-n alphabet.
    """
    check_lie_type(lie_type)
    for x in column:
        if not letter_ok(x, lie_type, n):
            raise ValueError(f"letter {x} outside the rank-{n} alphabet")
    if len(column) > n:
        return False
    for z in range(1, n + 1):
        if sum(1 for x in column if abs(x) >= z) > n - z + 1:
            return False
    return True


# ---------------------------------------------------------------------------
# configuration of the deliberately flagged readings


@dataclass(frozen=True)
class KNConfig:
    """Selects between alternative readings of the two-column filling rules.

    pair_scope
        Where the witness pair (barred b above unbarred b) of the
        bracket-pair rule may live.  ``"same"`` (default) requires the pair
        to sit inside a single column, either the left or the right one.
        ``"mixed"`` additionally admits pairs straddling the two columns;
        a straddling pair never reuses both bracket cells at once.
    sign_span
        Which row span carries the parity in the signed-span rule of the
        even orthogonal type.  Writing p/s for the rows of the bracket
        (barred a left, unbarred a right) and q/r for the rows of the
        right-column and left-column sign cells (q < r), the span is
        r-q+1 for ``"qr"`` (default: the rows between the two sign cells),
        s-q+1 for ``"qs"``, and r-p+1 for ``"pr"``.  Only ``"qr"``
        reproduces the determinant characters on full-height shapes with
        more than one column.
    full_parity
        How the row parity of 1 and -1 in full-height columns is anchored.
        ``"row"`` (default) fixes the parity of the row index: for a shape
        with positive last row, 1 sits only at odd rows and -1 only at even
        rows, and the parities swap for a signed shape.  ``"depth"``
        anchors the same alternation at the bottom row instead; the two
        agree at even rank, and only ``"row"`` keeps the canonical tableau
        valid at odd rank.
    """

    pair_scope: str = "same"
    sign_span: str = "qr"
    full_parity: str = "row"

    def __post_init__(self) -> None:
        if self.pair_scope not in ("same", "mixed"):
            raise ValueError(f"unknown pair_scope {self.pair_scope!r}")
        if self.sign_span not in ("qs", "qr", "pr"):
            raise ValueError(f"unknown sign_span {self.sign_span!r}")
        if self.full_parity not in ("row", "depth"):
            raise ValueError(f"unknown full_parity {self.full_parity!r}")


DEFAULT_CONFIG = KNConfig()


# ---------------------------------------------------------------------------
# shapes and the tableau container


def normalize_shape(shape: Sequence[int], lie_type: str, n: int) -> tuple[int, ...]:
    """Validate a (possibly signed) shape against the rank and normalize it.

    Partitions are returned with trailing zeros stripped; their height must
    not exceed n.  A signed shape (negative last row count) is allowed only
    in the even orthogonal case, must have exactly n rows, and its absolute
    row counts must still be weakly decreasing.
    """
    check_lie_type(lie_type)
    parts = tuple(int(x) for x in shape)
    if parts and parts[-1] < 0:
        if lie_type != "d":
            raise InvalidShapeError(
                "only the even orthogonal type admits a signed last row"
            )
        if len(parts) != n:
            raise InvalidShapeError(
                f"signed shape {parts} must have exactly {n} rows at rank {n}"
            )
        body, last = parts[:-1], parts[-1]
        if any(x <= 0 for x in body):
            raise InvalidShapeError(f"signed shape {parts} has a nonpositive body row")
        if any(body[i] < body[i + 1] for i in range(len(body) - 1)):
            raise InvalidShapeError(f"signed shape {parts} is not weakly decreasing")
        if body and body[-1] < -last:
            raise InvalidShapeError(
                f"signed shape {parts}: the last row is wider than the one above"
            )
        return parts
    lam = make_partition(parts)
    if len(lam) > n:
        raise InvalidShapeError(f"shape {lam} is too tall for rank {n}")
    return lam


def _abs_shape(signed: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(abs(x) for x in signed)


@dataclass(frozen=True)
class KNTableau:
    """A filling of a rank-n shape, stored row-major.

    The shape may be signed (negative last entry, even orthogonal only); the
    rows then cover the absolute shape and the last row counts as colored.
    Construction checks only structural consistency; the filling rules are
    judged by :func:`kn_violations`.
    """

    shape: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]
    lie_type: str
    rank: int

    def __post_init__(self) -> None:
        signed = normalize_shape(self.shape, self.lie_type, self.rank)
        object.__setattr__(self, "shape", signed)
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        widths = _abs_shape(signed)
        if tuple(len(row) for row in rows) != widths:
            raise ValueError(f"rows {rows} do not fill shape {signed}")
        for row in rows:
            for x in row:
                if not letter_ok(x, self.lie_type, self.rank):
                    raise ValueError(
                        f"letter {x} outside the rank-{self.rank} alphabet"
                    )

    def columns(self) -> tuple[tuple[int, ...], ...]:
        widths = _abs_shape(self.shape)
        ncols = widths[0] if widths else 0
        return tuple(
            tuple(row[j] for row in self.rows if len(row) > j) for j in range(ncols)
        )

    def cell(self, i: int, j: int) -> int:
        """1-indexed entry of row i, column j."""
        return self.rows[i - 1][j - 1]

    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    def is_colored(self) -> bool:
        return bool(self.shape) and self.shape[-1] < 0

    def weight(self) -> Weight:
        counts = [0] * self.rank
        for row in self.rows:
            for x in row:
                if x > 0:
                    counts[x - 1] += 1
                elif x < 0:
                    counts[-x - 1] -= 1
        return Weight(tuple(counts), 0)

    def to_json(self) -> dict:
        colored = self.is_colored()
        rows_json = []
        for i, row in enumerate(self.rows, start=1):
            mark = "*" if colored and i == len(self.rows) else ""
            rows_json.append([_letter_str(x) + mark for x in row])
        return {
            "type": self.lie_type.upper(),
            "rank": self.rank,
            "shape": list(self.shape),
            "rows": rows_json,
        }

    @staticmethod
    def from_json(data: Mapping) -> "KNTableau":
        rows = tuple(
            tuple(int(cell.rstrip("*")) for cell in row) for row in data["rows"]
        )
        return KNTableau(
            tuple(data["shape"]), rows, str(data["type"]).lower(), int(data["rank"])
        )

    def __str__(self) -> str:
        colored = self.is_colored()
        lines = []
        for i, row in enumerate(self.rows, start=1):
            mark = "*" if colored and i == len(self.rows) else ""
            lines.append(" ".join(f"{x:>3}" for x in row) + mark)
        return "\n".join(lines) if lines else "(empty)"


@dataclass(frozen=True)
class Violation:
    """One broken filling rule: a stable clause name plus a human detail."""

    clause: str
    detail: str


# ---------------------------------------------------------------------------
# the filling rules


def _rows_of(column: Sequence[int], letter: int) -> list[int]:
    return [i for i, x in enumerate(column, start=1) if x == letter]


def _bracket_pairs(
    left: Sequence[int], right: Sequence[int], a: int
) -> Iterator[tuple[int, int]]:
    """All brackets for the letter a: barred a in the left column at row p,
    unbarred a in the right column at row s."""
    for p in _rows_of(left, -a):
        for s in _rows_of(right, a):
            yield p, s


def _pair_condition_violations(
    left: Sequence[int],
    right: Sequence[int],
    lie_type: str,
    n: int,
    config: KNConfig,
    col_index: int,
) -> list[Violation]:
    out = []
    b_lo = 1 if lie_type == "c" else 2
    for a in range(b_lo, n + 1):
        for p, s in _bracket_pairs(left, right, a):
            for b in range(b_lo, a + 1):
                witnesses: list[tuple[int, int]] = []
                for col in (left, right):
                    for q in _rows_of(col, -b):
                        for r in _rows_of(col, b):
                            witnesses.append((q, r))
                if config.pair_scope == "mixed":
                    for colq, colr in ((left, right), (right, left)):
                        for q in _rows_of(colq, -b):
                            for r in _rows_of(colr, b):
                                if b == a and colq is left and q == p and r == s:
                                    continue
                                witnesses.append((q, r))
                for q, r in witnesses:
                    if p <= q < r <= s and (q - p) + (s - r) >= a - b:
                        out.append(
                            Violation(
                                "bracket-pair-distance",
                                f"columns {col_index},{col_index + 1}: bracket "
                                f"{-a}@{p}..{a}@{s} with pair {-b}@{q},{b}@{r} "
                                f"has gap {(q - p) + (s - r)} >= {a - b}",
                            )
                        )
    return out


def _band_condition_violations(
    left: Sequence[int],
    right: Sequence[int],
    lie_type: str,
    n: int,
    col_index: int,
) -> list[Violation]:
    band = {-1, 0, 1} if lie_type == "b" else {-1, 1}
    clause = "zero-band-distance" if lie_type == "b" else "sign-band-distance"
    out = []
    for a in range(2, n + 1):
        for p, s in _bracket_pairs(left, right, a):
            if p >= s:
                continue
            for col in (left, right):
                for q in range(p, s):
                    r = q + 1
                    if r > len(col):
                        continue
                    cq, cr = col[q - 1], col[r - 1]
                    if cq in band and cr in band and (lie_type == "b" or cq != cr):
                        if (q - p) + (s - r) >= a - 1:
                            out.append(
                                Violation(
                                    clause,
                                    f"columns {col_index},{col_index + 1}: bracket "
                                    f"{-a}@{p}..{a}@{s} spans the band cells at rows "
                                    f"{q},{r} with gap {(q - p) + (s - r)} >= {a - 1}",
                                )
                            )
    return out


def _overlap_condition_violations(
    left: Sequence[int],
    right: Sequence[int],
    lie_type: str,
    col_index: int,
) -> list[Violation]:
    if lie_type == "b":
        upper_set, lower_set, clause = {-1, 0}, {0, 1}, "zero-overlap"
    else:
        upper_set, lower_set, clause = {-1, 1}, {-1, 1}, "sign-overlap"
    out = []
    for p in range(1, len(left) + 1):
        if left[p - 1] not in upper_set:
            continue
        for q in range(p + 1, len(right) + 1):
            if right[q - 1] in lower_set:
                out.append(
                    Violation(
                        clause,
                        f"columns {col_index},{col_index + 1}: {left[p - 1]}@{p} "
                        f"left sits above {right[q - 1]}@{q} right",
                    )
                )
    return out


def _span_condition_violations(
    left: Sequence[int],
    right: Sequence[int],
    n: int,
    config: KNConfig,
    col_index: int,
) -> list[Violation]:
    out = []
    for a in range(2, n + 1):
        for p, s in _bracket_pairs(left, right, a):
            if p >= s:
                continue
            for q in range(p, s + 1):
                if q > len(right) or abs(right[q - 1]) != 1:
                    continue
                for r in range(q + 1, s + 1):
                    if r > len(left) or abs(left[r - 1]) != 1:
                        continue
                    same = right[q - 1] == left[r - 1]
                    span = {"qs": s - q + 1, "qr": r - q + 1, "pr": r - p + 1}[
                        config.sign_span
                    ]
                    if (span % 2 == 0) == same and s - p >= a - 1:
                        out.append(
                            Violation(
                                "sign-span-parity",
                                f"columns {col_index},{col_index + 1}: bracket "
                                f"{-a}@{p}..{a}@{s} with signs {right[q - 1]}@{q} "
                                f"right, {left[r - 1]}@{r} left has span {span} and "
                                f"width {s - p} >= {a - 1}",
                            )
                        )
    return out


def _parity_ok(x: int, k: int, n: int, sign: int, mode: str) -> bool:
    if mode == "row":
        if (x == 1) == (sign > 0):
            return k % 2 == 1
        return k % 2 == 0
    depth = n - k
    if (x == -1) == (sign > 0):
        return depth % 2 == 0
    return depth % 2 == 1


def _column_parity_ok(
    column: Sequence[int], n: int, sign: int, mode: str
) -> bool:
    return all(
        _parity_ok(x, k, n, sign, mode)
        for k, x in enumerate(column, start=1)
        if abs(x) == 1
    )


def kn_violations(
    T: KNTableau, config: KNConfig = DEFAULT_CONFIG
) -> tuple[Violation, ...]:
    """Every broken filling rule of T, each named by a stable clause string."""
    out: list[Violation] = []
    lie_type, n = T.lie_type, T.rank
    cols = T.columns()
    for i, row in enumerate(T.rows, start=1):
        for j in range(len(row) - 1):
            if not row_pair_ok(row[j], row[j + 1], lie_type):
                out.append(
                    Violation(
                        "row-order",
                        f"row {i}: {row[j]} may not precede {row[j + 1]}",
                    )
                )
    for j, col in enumerate(cols, start=1):
        for i in range(len(col) - 1):
            if not column_pair_ok(col[i], col[i + 1], lie_type):
                out.append(
                    Violation(
                        "column-order",
                        f"column {j}: {col[i]} may not sit above {col[i + 1]}",
                    )
                )
        if not n_admissible(col, n, lie_type):
            out.append(
                Violation("column-admissibility", f"column {j}: {col} at rank {n}")
            )
    if lie_type == "d" and len(T.shape) == n and T.shape:
        sign = 1 if T.shape[-1] > 0 else -1
        for j, col in enumerate(cols, start=1):
            if len(col) == n:
                for k, x in enumerate(col, start=1):
                    if abs(x) == 1 and not _parity_ok(
                        x, k, n, sign, config.full_parity
                    ):
                        out.append(
                            Violation(
                                "full-column-parity",
                                f"column {j}: {x} at row {k} of a full column "
                                f"(last row count {T.shape[-1]})",
                            )
                        )
    for j in range(len(cols) - 1):
        left, right = cols[j], cols[j + 1]
        out.extend(
            _pair_condition_violations(left, right, lie_type, n, config, j + 1)
        )
        if lie_type in ("b", "d"):
            out.extend(_band_condition_violations(left, right, lie_type, n, j + 1))
            out.extend(_overlap_condition_violations(left, right, lie_type, j + 1))
        if lie_type == "d":
            out.extend(_span_condition_violations(left, right, n, config, j + 1))
    return tuple(out)


def kn_validate(T: KNTableau, config: KNConfig = DEFAULT_CONFIG) -> bool:
    return not kn_violations(T, config)


# ---------------------------------------------------------------------------
# canonical tableaux and enumeration


def t_lambda(shape: Sequence[int], lie_type: str, n: int) -> KNTableau:
    """The canonical extremal filling: row i holds the letter i, except that
    a signed shape puts the barred letter n on top of its first columns and
    shifts those columns down by one."""
    signed = normalize_shape(shape, lie_type, n)
    widths = _abs_shape(signed)
    rows = []
    if signed and signed[-1] < 0:
        m = -signed[-1]
        for i, width in enumerate(widths, start=1):
            head = -n if i == 1 else i - 1
            rows.append(tuple([head] * m + [i] * (width - m)))
    else:
        for i, width in enumerate(widths, start=1):
            rows.append(tuple([i] * width))
    return KNTableau(signed, tuple(rows), lie_type, n)


@lru_cache(maxsize=None)
def _admissible_columns(lie_type: str, n: int, h: int) -> tuple[tuple[int, ...], ...]:
    """All rank-n admissible columns of height h, in generation order."""
    letters = alphabet(lie_type, n)
    out: list[tuple[int, ...]] = []

    def extend(col: list[int]) -> None:
        if len(col) == h:
            if n_admissible(col, n, lie_type):
                out.append(tuple(col))
            return
        for x in letters:
            if not col or column_pair_ok(col[-1], x, lie_type):
                col.append(x)
                extend(col)
                col.pop()

    extend([])
    return tuple(out)


def _columns_compatible(
    left: tuple[int, ...],
    right: tuple[int, ...],
    lie_type: str,
    n: int,
    config: KNConfig,
) -> bool:
    if not all(
        row_pair_ok(left[i], right[i], lie_type) for i in range(len(right))
    ):
        return False
    if _pair_condition_violations(left, right, lie_type, n, config, 1):
        return False
    if lie_type in ("b", "d"):
        if _band_condition_violations(left, right, lie_type, n, 1):
            return False
        if _overlap_condition_violations(left, right, lie_type, 1):
            return False
    if lie_type == "d" and _span_condition_violations(left, right, n, config, 1):
        return False
    return True


def _tableau_from_columns(
    signed: tuple[int, ...],
    chosen: Sequence[tuple[int, ...]],
    lie_type: str,
    n: int,
) -> KNTableau:
    widths = _abs_shape(signed)
    rows = tuple(
        tuple(chosen[j][i - 1] for j in range(widths[i - 1]))
        for i in range(1, len(widths) + 1)
    )
    return KNTableau(signed, rows, lie_type, n)


def enumerate_kn(
    shape: Sequence[int],
    lie_type: str,
    n: int,
    config: KNConfig = DEFAULT_CONFIG,
    max_count: int = 1_000_000,
) -> tuple[KNTableau, ...]:
    """The complete set of valid fillings of the shape at rank n, sorted.

    Enumeration goes column by column from the left, pruning by column
    admissibility (and the full-column parity rule when it applies) before
    filtering adjacent columns through the two-column rules.  Raises
    ResourceCapError when more than max_count fillings accumulate.
    """
    signed = normalize_shape(shape, lie_type, n)
    widths = _abs_shape(signed)
    heights = conjugate(widths)
    candidates: list[tuple[tuple[int, ...], ...]] = []
    for h in heights:
        cols = _admissible_columns(lie_type, n, h)
        if lie_type == "d" and h == n and len(signed) == n and signed:
            sign = 1 if signed[-1] > 0 else -1
            cols = tuple(
                c for c in cols if _column_parity_ok(c, n, sign, config.full_parity)
            )
        candidates.append(cols)
    results: list[KNTableau] = []

    def extend(j: int, chosen: list[tuple[int, ...]]) -> None:
        if j == len(heights):
            if len(results) >= max_count:
                raise ResourceCapError(
                    f"more than {max_count} fillings of shape {signed} at rank {n}"
                )
            results.append(_tableau_from_columns(signed, chosen, lie_type, n))
            return
        for col in candidates[j]:
            if j == 0 or _columns_compatible(chosen[-1], col, lie_type, n, config):
                chosen.append(col)
                extend(j + 1, chosen)
                chosen.pop()

    extend(0, [])
    results.sort(key=lambda t: t.rows)
    return tuple(results)


# ---------------------------------------------------------------------------
# spinor column pairs


@dataclass(frozen=True)
class SpinorColumnPair:
    """Two strictly increasing columns of positive integers on a skew frame.

    The right column (length b+c) occupies rows 1..b+c; the left column
    (length a+c) occupies rows b+1..a+b+c.  On the c overlapping rows the
    row entries must weakly increase from left to right.
    """

    a: int
    b: int
    c: int
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self) -> None:
        a, b, c = self.a, self.b, self.c
        if min(a, b, c) < 0:
            raise ValueError("column frame parameters must be nonnegative")
        left = tuple(int(x) for x in self.left)
        right = tuple(int(x) for x in self.right)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        if len(left) != a + c or len(right) != b + c:
            raise ValueError(
                f"column lengths {len(left)},{len(right)} do not match "
                f"frame ({a},{b},{c})"
            )
        for col in (left, right):
            if any(x < 1 for x in col):
                raise ValueError("entries must be positive integers")
            if any(col[i] >= col[i + 1] for i in range(len(col) - 1)):
                raise ValueError(f"column {col} is not strictly increasing")
        for i in range(c):
            if left[i] > right[b + i]:
                raise ValueError(
                    f"row {b + i + 1}: left entry {left[i]} exceeds right "
                    f"entry {right[b + i]}"
                )

    def size(self) -> int:
        return self.a + self.b + 2 * self.c

    def entry_counts(self, nvars: int) -> tuple[int, ...]:
        """How often each of 1..nvars appears; entries must not exceed nvars."""
        counts = [0] * nvars
        for col in (self.left, self.right):
            for x in col:
                counts[x - 1] += 1
        return tuple(counts)

    def __str__(self) -> str:
        rows = []
        top = self.b + self.c
        bottom = self.a + self.b + self.c
        for r in range(1, bottom + 1):
            lx = self.left[r - self.b - 1] if self.b < r <= bottom else None
            rx = self.right[r - 1] if r <= top else None
            rows.append(
                ("." if lx is None else f"{lx:>2}")
                + " "
                + ("." if rx is None else f"{rx:>2}")
            )
        return "\n".join(rows) if rows else "(empty)"


def residue(T: SpinorColumnPair) -> int:
    """The largest downward slide of the right column keeping rows weak.

    Sliding by k moves the right column to rows 1+k..b+c+k; the slide is
    allowed while k stays at most min(a, b) and every overlapping row still
    weakly increases.
    """
    for k in range(min(T.a, T.b), -1, -1):
        if all(
            T.left[r - T.b - 1] <= T.right[r - k - 1]
            for r in range(T.b + 1, T.b + T.c + k + 1)
        ):
            return k
    raise AssertionError("the zero slide is semistandard by construction")


def enumerate_sst_pairs(
    a: int, b: int, c: int, max_entry: int
) -> tuple[SpinorColumnPair, ...]:
    """All fillings of the (a, b, c) frame with entries in 1..max_entry."""
    if min(a, b, c) < 0:
        raise ValueError("column frame parameters must be nonnegative")
    if a + c > max_entry or b + c > max_entry:
        return ()
    out = []
    rights = list(itertools.combinations(range(1, max_entry + 1), b + c))
    for left in itertools.combinations(range(1, max_entry + 1), a + c):
        for right in rights:
            if all(left[i] <= right[b + i] for i in range(c)):
                out.append(SpinorColumnPair(a, b, c, left, right))
    return tuple(out)


def _frame_grid(lie_type: str, a: int, max_degree: int) -> Iterator[tuple[int, int]]:
    step = 2 if lie_type == "d" else 1
    b_values = (0,) if lie_type == "c" else range(0, max_degree + 1, step)
    for b in b_values:
        for c in range(0, max_degree + 1, step):
            if a + b + 2 * c <= max_degree:
                yield b, c


def _max_residue(lie_type: str) -> int:
    return 1 if lie_type == "d" else 0


def enumerate_spinor_columns(
    a: int, lie_type: str, max_degree: int
) -> tuple[SpinorColumnPair, ...]:
    """All admissible column pairs with a left-column excess of a, with at
    most max_degree cells and entries bounded by max_degree.

    The frame grid and the residue bound depend on the type: the symplectic
    case allows only b = 0, the odd orthogonal case any frame, and the even
    orthogonal case even b and c with residue at most 1 instead of 0.
    """
    check_lie_type(lie_type)
    if a < 0:
        raise ValueError("the left-column excess must be nonnegative")
    out = []
    for b, c in _frame_grid(lie_type, a, max_degree):
        for T in enumerate_sst_pairs(a, b, c, max_degree):
            if residue(T) <= _max_residue(lie_type):
                out.append(T)
    out.sort(key=lambda t: (t.b, t.c, t.left, t.right))
    return tuple(out)


def enumerate_spinor_columns_barred(max_degree: int) -> tuple[SpinorColumnPair, ...]:
    """The even orthogonal companion family at excess zero: frames (0, b, c+1)
    with b and c even, so the right-column excess is odd and the empty pair
    never occurs."""
    out = []
    for b in range(0, max_degree + 1, 2):
        for c in range(0, max_degree + 1, 2):
            if b + 2 * (c + 1) <= max_degree:
                out.extend(enumerate_sst_pairs(0, b, c + 1, max_degree))
    out.sort(key=lambda t: (t.b, t.c, t.left, t.right))
    return tuple(out)
