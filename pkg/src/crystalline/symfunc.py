"""Symmetric functions in the Schur basis and rank-n Laurent characters.

Two rings live here:

* :class:`SchurSeries`: degree-truncated elements of the completed ring of
  symmetric functions in infinitely many variables, stored as integer
  combinations of Schur functions, multiplied by the Littlewood-Richardson
  rule.  A nonnegative integer ``t_power`` records the external grading
  symbol accompanying characters of level ``t_power``.
* :class:`LaurentPoly`: integer Laurent polynomials in n variables, used
  for rank-n characters over the alphabets x_1..x_n, their inverses, and
  (odd orthogonal case) an extra letter 1.

The bridge between them is :func:`laurent_specialize`, which sets
x_{n+1} = x_{n+2} = ... = 0 and converts each power of t into
(x_1...x_n)^{-1}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from crystalline.weights import (
    DominantShape,
    InvalidShapeError,
    Partition,
    check_lie_type,
    conjugate,
    make_partition,
)


class CutoffMismatchError(ValueError):
    """Raised when combining Schur series truncated at different degrees."""


# ---------------------------------------------------------------------------
# Littlewood-Richardson rule

_LR_CACHE: dict[tuple[Partition, Partition], dict[Partition, int]] = {}


def lr_expand(lam: Sequence[int], mu: Sequence[int]) -> dict[Partition, int]:
    """Coefficients of s_lam * s_mu in the Schur basis.

    Letters 1..len(mu) are placed on top of lam as horizontal strips of
    sizes mu_1, mu_2, ...; a placement is admitted when, for every letter
    i >= 2 and every row r, the letters i in rows <= r are at most the
    letters i-1 in rows <= r-1 (the lattice-word condition row by row).
    """
    lam = make_partition(lam)
    mu = make_partition(mu)
    key = (lam, mu)
    if key in _LR_CACHE:
        return _LR_CACHE[key]
    results: dict[Partition, int] = {}
    rows = len(lam) + len(mu)
    shape = list(lam) + [0] * (rows - len(lam) + 1)

    def place_letter(i: int, prev_counts: tuple[int, ...]) -> None:
        if i == len(mu):
            nu = make_partition(tuple(shape))
            results[nu] = results.get(nu, 0) + 1
            return
        counts = [0] * rows
        old = tuple(shape)

        def fill(r: int, left: int, prev_before: int, cum: int) -> None:
            # prev_before: boxes of letter i in rows < r; cum: of letter i+1
            if left == 0:
                place_letter(i + 1, tuple(counts))
                return
            if r > rows:
                return
            cap = left
            if r > 1:
                cap = min(cap, old[r - 2] - old[r - 1])
            if i > 0:
                cap = min(cap, prev_before - cum)
            for a in range(cap, -1, -1):
                counts[r - 1] = a
                shape[r - 1] = old[r - 1] + a
                fill(
                    r + 1,
                    left - a,
                    prev_before + (prev_counts[r - 1] if i > 0 else 0),
                    cum + a,
                )
            counts[r - 1] = 0
            shape[r - 1] = old[r - 1]

        fill(1, mu[i], 0, 0)

    place_letter(0, ())
    _LR_CACHE[key] = results
    return results


# ---------------------------------------------------------------------------
# Schur series


@dataclass(frozen=True)
class SchurSeries:
    """Truncated integer combination of Schur functions with a t grading.

    Partitions of size greater than ``cutoff`` are unknown and never
    stored; binary operations insist on equal cutoffs so that a truncated
    identity is never mistaken for an exact one.
    """

    cutoff: int
    coeffs: dict = field(default_factory=dict)
    t_power: int = 0

    def __post_init__(self) -> None:
        clean = {
            make_partition(lam): int(c)
            for lam, c in self.coeffs.items()
            if c != 0 and sum(lam) <= self.cutoff
        }
        object.__setattr__(self, "coeffs", clean)

    def _check(self, other: "SchurSeries") -> None:
        if self.cutoff != other.cutoff:
            raise CutoffMismatchError(
                f"cutoffs differ: {self.cutoff} vs {other.cutoff}"
            )
        if self.t_power != other.t_power:
            raise CutoffMismatchError(
                f"t gradings differ: {self.t_power} vs {other.t_power}"
            )

    def __add__(self, other: "SchurSeries") -> "SchurSeries":
        self._check(other)
        merged = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            merged[lam] = merged.get(lam, 0) + c
        return SchurSeries(self.cutoff, merged, self.t_power)

    def __sub__(self, other: "SchurSeries") -> "SchurSeries":
        return self + (-other)

    def __neg__(self) -> "SchurSeries":
        return SchurSeries(self.cutoff, {l: -c for l, c in self.coeffs.items()}, self.t_power)

    def scale(self, c: int) -> "SchurSeries":
        return SchurSeries(self.cutoff, {l: c * v for l, v in self.coeffs.items()}, self.t_power)

    def __mul__(self, other: "SchurSeries") -> "SchurSeries":
        return schur_mul(self, other)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, lam: Sequence[int]) -> int:
        return self.coeffs.get(make_partition(lam), 0)

    def homogeneous(self, degree: int) -> "SchurSeries":
        return SchurSeries(
            self.cutoff,
            {l: c for l, c in self.coeffs.items() if sum(l) == degree},
            self.t_power,
        )

    def truncate(self, cutoff: int) -> "SchurSeries":
        if cutoff > self.cutoff:
            raise CutoffMismatchError("cannot raise a cutoff after truncation")
        return SchurSeries(
            cutoff,
            {l: c for l, c in self.coeffs.items() if sum(l) <= cutoff},
            self.t_power,
        )

    def with_t_power(self, t_power: int) -> "SchurSeries":
        return SchurSeries(self.cutoff, self.coeffs, t_power)

    def half(self) -> "SchurSeries":
        if any(c % 2 for c in self.coeffs.values()):
            raise ArithmeticError("series has an odd coefficient, cannot halve")
        return SchurSeries(
            self.cutoff, {l: c // 2 for l, c in self.coeffs.items()}, self.t_power
        )

    def to_json(self) -> dict:
        terms = [
            {"partition": list(lam), "coeff": c}
            for lam, c in sorted(self.coeffs.items())
        ]
        return {"cutoff": self.cutoff, "t_power": self.t_power, "terms": terms}

    @staticmethod
    def from_json(data: Mapping) -> "SchurSeries":
        coeffs = {tuple(t["partition"]): t["coeff"] for t in data["terms"]}
        return SchurSeries(data["cutoff"], coeffs, data.get("t_power", 0))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for lam, c in sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            name = "s[%s]" % ",".join(map(str, lam)) if lam else "1"
            parts.append(f"{c}*{name}" if c != 1 else name)
        return " + ".join(parts)


def schur_basis(lam: Sequence[int], cutoff: int, t_power: int = 0) -> SchurSeries:
    """The single Schur function s_lam as a series."""
    return SchurSeries(cutoff, {make_partition(lam): 1}, t_power)


def zero_series(cutoff: int, t_power: int = 0) -> SchurSeries:
    return SchurSeries(cutoff, {}, t_power)


def one_series(cutoff: int, t_power: int = 0) -> SchurSeries:
    return SchurSeries(cutoff, {(): 1}, t_power)


def e_series(r: int, cutoff: int, t_power: int = 0) -> SchurSeries:
    """Elementary symmetric function e_r = s_{(1^r)}; zero for r < 0."""
    if r < 0:
        return zero_series(cutoff, t_power)
    return schur_basis((1,) * r, cutoff, t_power)


def schur_mul(f: SchurSeries, g: SchurSeries) -> SchurSeries:
    if f.cutoff != g.cutoff:
        raise CutoffMismatchError(f"cutoffs differ: {f.cutoff} vs {g.cutoff}")
    cutoff = f.cutoff
    out: dict[Partition, int] = {}
    for lam, a in f.coeffs.items():
        for mu, b in g.coeffs.items():
            if sum(lam) + sum(mu) > cutoff:
                continue
            for nu, c in lr_expand(lam, mu).items():
                out[nu] = out.get(nu, 0) + a * b * c
    return SchurSeries(cutoff, out, f.t_power + g.t_power)


def determinant(matrix: Sequence[Sequence], zero):
    """Cofactor-expansion determinant over any commutative ring elements."""
    size = len(matrix)
    if size == 0:
        raise ValueError("empty matrix has no determinant here; handle upstream")
    if size == 1:
        return matrix[0][0]
    total = zero
    rest = [row[1:] for row in matrix]
    for i in range(size):
        minor = [rest[k] for k in range(size) if k != i]
        term = matrix[i][0] * determinant(minor, zero)
        total = total + term if i % 2 == 0 else total - term
    return total


# ---------------------------------------------------------------------------
# the E series and spinor characters


def cap_e(r: int, cutoff: int) -> SchurSeries:
    """E_r = sum over i of e_i * e_{r+i}, truncated at the cutoff."""
    total = zero_series(cutoff)
    i = max(0, -r)
    while 2 * i + r <= cutoff:
        total = total + schur_mul(e_series(i, cutoff), e_series(r + i, cutoff))
        i += 1
    return total


def cap_e_variant(r: int, flavor: str, cutoff: int) -> SchurSeries:
    """E_r (plain), E'_r = E_r - E_{r+2}, or E''_r = E_r + E_{r+1}."""
    if flavor == "plain":
        return cap_e(r, cutoff)
    if flavor == "prime":
        return cap_e(r, cutoff) - cap_e(r + 2, cutoff)
    if flavor == "second":
        return cap_e(r, cutoff) + cap_e(r + 1, cutoff)
    raise ValueError(f"unknown flavor {flavor!r}")


def alternating_e_product(cutoff: int) -> SchurSeries:
    """The product (sum of e_i) * (sum of (-1)^i e_i), truncated."""
    plus = zero_series(cutoff)
    signed = zero_series(cutoff)
    for i in range(cutoff + 1):
        ei = e_series(i, cutoff)
        plus = plus + ei
        signed = signed + (ei if i % 2 == 0 else -ei)
    return schur_mul(plus, signed)


def two_column_schur(left: int, right: int, cutoff: int) -> SchurSeries:
    """s_{(left,right)'}: the Schur function with column heights given."""
    if right > left:
        raise InvalidShapeError("column heights must decrease")
    lam = conjugate(make_partition((left, right)))
    return schur_basis(lam, cutoff)


def spinor_char(a: int, lie_type: str, cutoff: int) -> SchurSeries:
    """Weight generating function of the one-column-pair model, t power 1.

    Closed Schur expansions, summed over all shapes admitted for the type:
    symplectic sums s over column pairs (a+c, c); odd orthogonal over
    (a+b+c, c); even orthogonal (a >= 1) over (a+2b+c, c); the even
    orthogonal a = 0 case sums over even column pairs.
    """
    check_lie_type(lie_type)
    if a < 0:
        raise InvalidShapeError("column height must be non-negative")
    total = zero_series(cutoff)
    if lie_type == "c":
        for c in range(0, (cutoff - a) // 2 + 1):
            total = total + two_column_schur(a + c, c, cutoff)
    elif lie_type == "b":
        for c in range(0, cutoff + 1):
            for b in range(0, cutoff + 1 - a - 2 * c):
                total = total + two_column_schur(a + b + c, c, cutoff)
    elif a >= 1:
        for c in range(0, cutoff + 1):
            for b in range(0, (cutoff - a - 2 * c) // 2 + 1):
                total = total + two_column_schur(a + 2 * b + c, c, cutoff)
    else:
        for c in range(0, cutoff // 2 + 1):
            for b in range(0, (cutoff - 4 * c) // 2 + 1):
                total = total + two_column_schur(2 * b + 2 * c, 2 * c, cutoff)
    return total.with_t_power(1)


def spinor_char_barred(cutoff: int) -> SchurSeries:
    """The barred even-orthogonal companion at a = 0, t power 1."""
    total = zero_series(cutoff)
    for c in range(0, cutoff + 1):
        for b in range(0, cutoff + 1):
            p, q = 2 * b + 2 * c + 1, 2 * c + 1
            if p + q > cutoff:
                break
            total = total + two_column_schur(p, q, cutoff)
    return total.with_t_power(1)


# ---------------------------------------------------------------------------
# Jacobi-Trudi determinants in the completed ring


def jt_determinant(shape: DominantShape, flavor: str, cutoff: int) -> SchurSeries:
    """The ell x ell determinant with E-flavor entries for (lam, ell).

    Row i is based at lam_{ell-i+1} + i - 1 (lam zero-padded); column j
    adds the reflected index, entry E_{base+(j-1)} + [j != 1] E_{base-(j-1)}.
    """
    lam, ell = shape.lam, shape.ell
    if len(lam) > ell:
        raise InvalidShapeError("determinant requires at most ell rows")
    if ell == 0:
        return one_series(cutoff)
    padded = tuple(lam) + (0,) * (ell - len(lam))
    matrix = []
    for i in range(1, ell + 1):
        base = padded[ell - i] + i - 1
        row = []
        for j in range(1, ell + 1):
            entry = cap_e_variant(base + (j - 1), flavor, cutoff)
            if j != 1:
                entry = entry + cap_e_variant(base - (j - 1), flavor, cutoff)
            row.append(entry)
        matrix.append(row)
    return determinant(matrix, zero_series(cutoff))


def s_g_series(shape: DominantShape, cutoff: int) -> SchurSeries:
    """The type-adapted series S for a dominant shape (t power zero).

    Symplectic and odd orthogonal shapes take the prime and double-prime
    determinants.  Even orthogonal shapes branch on t = number of rows
    against ell, the off-diagonal branches being half-sums whose integrality
    is asserted.
    """
    lam, ell = shape.lam, shape.ell
    if shape.lie_type == "c":
        return jt_determinant(shape, "prime", cutoff)
    if shape.lie_type == "b":
        return jt_determinant(shape, "second", cutoff)
    t = len(lam)
    if t == ell:
        return jt_determinant(shape, "plain", cutoff)
    if t < ell:
        plain = jt_determinant(shape, "plain", cutoff)
        prime = jt_determinant(DominantShape("d", lam, ell - 1), "prime", cutoff)
        return (plain + schur_mul(alternating_e_product(cutoff), prime)).half()
    mu = make_partition(lam[: 2 * ell - t])
    plain = jt_determinant(DominantShape("d", mu, ell), "plain", cutoff)
    prime = jt_determinant(DominantShape("d", mu, ell - 1), "prime", cutoff)
    return (plain - schur_mul(alternating_e_product(cutoff), prime)).half()


# ---------------------------------------------------------------------------
# Laurent polynomials at rank n


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial in a fixed number of variables."""

    nvars: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for exp, c in self.terms.items():
            if c == 0:
                continue
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.nvars:
                raise ValueError(f"exponent {exp} has wrong length for {self.nvars} vars")
            clean[exp] = int(c)
        object.__setattr__(self, "terms", clean)

    @staticmethod
    def zero(nvars: int) -> "LaurentPoly":
        return LaurentPoly(nvars, {})

    @staticmethod
    def one(nvars: int) -> "LaurentPoly":
        return LaurentPoly(nvars, {(0,) * nvars: 1})

    @staticmethod
    def monomial(nvars: int, exp: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly(nvars, {tuple(exp): coeff})

    @staticmethod
    def from_weights(nvars: int, weights: Iterable[Sequence[int]]) -> "LaurentPoly":
        """Character polynomial: one monomial per listed weight."""
        terms: dict[tuple, int] = {}
        for w in weights:
            exp = tuple(w)
            terms[exp] = terms.get(exp, 0) + 1
        return LaurentPoly(nvars, terms)

    def _check(self, other: "LaurentPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        merged = dict(self.terms)
        for exp, c in other.terms.items():
            merged[exp] = merged.get(exp, 0) + c
        return LaurentPoly(self.nvars, merged)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        out: dict[tuple, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.nvars, out)

    def scale(self, c: int) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {e: c * v for e, v in self.terms.items()})

    def half(self) -> "LaurentPoly":
        if any(c % 2 for c in self.terms.values()):
            raise ArithmeticError("polynomial has an odd coefficient, cannot halve")
        return LaurentPoly(self.nvars, {e: c // 2 for e, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exp: Sequence[int]) -> int:
        return self.terms.get(tuple(exp), 0)

    def at_ones(self) -> int:
        """Value with every variable set to 1 (dimension count)."""
        return sum(self.terms.values())

    def to_json(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [
                {"exponents": list(e), "coeff": c}
                for e, c in sorted(self.terms.items())
            ],
        }

    @staticmethod
    def from_json(data: Mapping) -> "LaurentPoly":
        terms = {tuple(t["exponents"]): t["coeff"] for t in data["terms"]}
        return LaurentPoly(data["nvars"], terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exp, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exp)
                if e != 0
            )
            if not mono:
                chunks.append(str(c))
            elif c == 1:
                chunks.append(mono)
            elif c == -1:
                chunks.append(f"-{mono}")
            else:
                chunks.append(f"{c}*{mono}")
        return " + ".join(chunks).replace("+ -", "- ")


def pm_alphabet(lie_type: str, n: int) -> list[tuple[int, ...]]:
    """Exponent vectors of the rank-n letters: x_i, x_i^{-1}, and 1 for b."""
    check_lie_type(lie_type)
    letters = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        letters.append(tuple(e))
    for i in range(n):
        e = [0] * n
        e[i] = -1
        letters.append(tuple(e))
    if lie_type == "b":
        letters.append((0,) * n)
    return letters


def elementary_laurent(r: int, letters: Sequence[tuple[int, ...]], nvars: int) -> LaurentPoly:
    """e_r of a finite alphabet of monomials."""
    if r < 0 or r > len(letters):
        return LaurentPoly.zero(nvars)
    layers = [LaurentPoly.one(nvars)] + [LaurentPoly.zero(nvars)] * r
    for letter in letters:
        mono = LaurentPoly.monomial(nvars, letter)
        for k in range(min(r, len(layers) - 1), 0, -1):
            layers[k] = layers[k] + layers[k - 1] * mono
    return layers[r]


def elementary_variant(r: int, flavor: str, letters, nvars: int) -> LaurentPoly:
    """e_r or the primed e'_r = e_r - e_{r-2} over the given alphabet."""
    if flavor == "plain":
        return elementary_laurent(r, letters, nvars)
    if flavor == "prime":
        return elementary_laurent(r, letters, nvars) - elementary_laurent(
            r - 2, letters, nvars
        )
    raise ValueError(f"unknown flavor {flavor!r}")


def _sigma_det(mu: Partition, flavor: str, letters, n: int) -> LaurentPoly:
    """det(e-flavor entries) with row base mu_i - i + 1, size n x n."""
    padded = tuple(mu) + (0,) * (n - len(mu))
    matrix = []
    for i in range(1, n + 1):
        base = padded[i - 1] - i + 1
        row = []
        for j in range(1, n + 1):
            entry = elementary_variant(base + (j - 1), flavor, letters, n)
            if j != 1:
                entry = entry + elementary_variant(base - (j - 1), flavor, letters, n)
            row.append(entry)
        matrix.append(row)
    return determinant(matrix, LaurentPoly.zero(n))


def x_minus_inverse_product(n: int) -> LaurentPoly:
    """The product of (x_i - x_i^{-1}) over all n variables."""
    total = LaurentPoly.one(n)
    for i in range(n):
        e = [0] * n
        e[i] = 1
        term = LaurentPoly.monomial(n, e) - LaurentPoly.monomial(n, [-v for v in e])
        total = total * term
    return total


def sigma_char(shape: Sequence[int], lie_type: str, n: int) -> LaurentPoly:
    """Rank-n character of the classical crystal with the given shape.

    ``shape`` is a weakly decreasing integer window of length <= n whose
    first part is at most n; the even orthogonal family also accepts a
    negative last entry at full height (the mirrored spin flavor).
    """
    check_lie_type(lie_type)
    parts = tuple(int(p) for p in shape)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if len(parts) > n:
        raise InvalidShapeError(f"shape {parts} has more than {n} rows")
    negative_last = bool(parts) and parts[-1] < 0
    if negative_last:
        if lie_type != "d" or len(parts) != n:
            raise InvalidShapeError(
                "negative last entries require the even orthogonal type at full height"
            )
        mu = make_partition(parts[:-1] + (-parts[-1],))
        if len(mu) != n:
            raise InvalidShapeError("generalized shapes must have full height")
    else:
        mu = make_partition(parts)
    if mu and mu[0] > n:
        raise InvalidShapeError(f"first part {mu[0]} exceeds rank {n}")
    letters = pm_alphabet(lie_type, n)
    if lie_type == "c":
        return _sigma_det(conjugate(mu), "prime", letters, n)
    if lie_type == "b":
        return _sigma_det(conjugate(mu), "plain", letters, n)
    if len(mu) < n:
        return _sigma_det(conjugate(mu), "plain", letters, n)
    plain = _sigma_det(conjugate(mu), "plain", letters, n)
    reduced = make_partition(tuple(p - 1 for p in mu))
    primed = _sigma_det(conjugate(reduced), "prime", letters, n)
    correction = primed * x_minus_inverse_product(n)
    if negative_last:
        return (plain - correction).half()
    return (plain + correction).half()


# ---------------------------------------------------------------------------
# Schur polynomials at rank n and the specialization bridge

_SSYT_CACHE: dict[tuple[Partition, int], LaurentPoly] = {}


def schur_poly(lam: Sequence[int], n: int) -> LaurentPoly:
    """s_lam(x_1..x_n) by semistandard tableau enumeration."""
    lam = make_partition(lam)
    key = (lam, n)
    if key in _SSYT_CACHE:
        return _SSYT_CACHE[key]
    if len(lam) > n:
        result = LaurentPoly.zero(n)
        _SSYT_CACHE[key] = result
        return result
    terms: dict[tuple, int] = {}
    rows = [[0] * p for p in lam]

    def fill(r: int, c: int, counts: list[int]) -> None:
        if r == len(lam):
            exp = tuple(counts)
            terms[exp] = terms.get(exp, 0) + 1
            return
        if c == lam[r]:
            fill(r + 1, 0, counts)
            return
        lo = 1
        if c > 0:
            lo = max(lo, rows[r][c - 1])
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, n + 1):
            rows[r][c] = v
            counts[v - 1] += 1
            fill(r, c + 1, counts)
            counts[v - 1] -= 1

    fill(0, 0, [0] * n)
    result = LaurentPoly(n, terms)
    _SSYT_CACHE[key] = result
    return result


def laurent_specialize(f: SchurSeries, n: int) -> LaurentPoly:
    """Set x_{n+1} = ... = 0 and send each t to (x_1...x_n)^{-1}."""
    total = LaurentPoly.zero(n)
    for lam, c in f.coeffs.items():
        if len(lam) > n:
            continue
        total = total + schur_poly(lam, n).scale(c)
    if f.t_power:
        shift = LaurentPoly.monomial(n, (-f.t_power,) * n)
        total = total * shift
    return total


def monomials_to_schur(poly: LaurentPoly) -> dict[Partition, int]:
    """Expand a symmetric polynomial with non-negative exponents in Schur terms.

    Peels the lexicographically greatest sorted exponent vector; requires the
    input to be genuinely symmetric, otherwise the peel leaves a remainder
    and a ValueError is raised.
    """
    remaining = dict(poly.terms)
    out: dict[Partition, int] = {}
    while remaining:
        best = max(
            (tuple(sorted(e, reverse=True)) for e in remaining), default=None
        )
        if any(v < 0 for v in best):
            raise ValueError("monomial expansion expects non-negative exponents")
        lam = make_partition(best)
        coeff = remaining.get(best + (0,) * (poly.nvars - len(best)), 0)
        if coeff == 0:
            raise ValueError("input is not symmetric in its variables")
        for exp, c in schur_poly(lam, poly.nvars).terms.items():
            key = exp
            val = remaining.get(key, 0) - coeff * c
            if val:
                remaining[key] = val
            else:
                remaining.pop(key, None)
        out[lam] = out.get(lam, 0) + coeff
    return {l: c for l, c in out.items() if c != 0}
