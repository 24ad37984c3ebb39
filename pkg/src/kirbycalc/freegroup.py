"""Free-group words and the truncated Magnus algebra.

Words are sequences of signed generators, kept freely reduced.  The Magnus
embedding sends generator g to 1 + X_g and g^-1 to 1 - X_g + X_g^2 - ... in
the ring of integer noncommutative polynomials truncated above a total-degree
bound.  Truncation at degree d-1 detects membership in the d-th lower central
series subgroup of a free group.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CalcError

Letter = tuple[int, int]  # (generator id, exponent sign +-1)


@dataclass(frozen=True)
class Word:
    """Freely reduced word in generators 0, 1, 2, ..."""

    letters: tuple[Letter, ...] = ()

    @staticmethod
    def of(seq) -> "Word":
        return Word(_reduce(tuple(seq)))

    @staticmethod
    def gen(g: int, sign: int = 1) -> "Word":
        if sign not in (1, -1):
            raise CalcError("BAD_GENERATOR", f"sign must be +-1, got {sign}")
        return Word(((g, sign),))

    def __mul__(self, other: "Word") -> "Word":
        return Word(_reduce(self.letters + other.letters))

    def inverse(self) -> "Word":
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def conjugate(self, by: "Word") -> "Word":
        return by * self * by.inverse()

    def commutator(self, other: "Word") -> "Word":
        return self * other * self.inverse() * other.inverse()

    def is_trivial(self) -> bool:
        return not self.letters

    def cyclic_reduce(self) -> "Word":
        """Cyclically reduced form with lexicographically least rotation.

        Canonical within a conjugacy class of the cyclic word, so it is stable
        under change of starting point along a closed curve.
        """
        ls = list(self.letters)
        while len(ls) >= 2 and ls[0][0] == ls[-1][0] and ls[0][1] == -ls[-1][1]:
            ls = ls[1:-1]
        if not ls:
            return Word()
        rots = [tuple(ls[i:] + ls[:i]) for i in range(len(ls))]
        return Word(min(rots))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{g}" if s > 0 else f"x{g}^-1" for g, s in self.letters)


def _reduce(letters: tuple[Letter, ...]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for g, s in letters:
        if s not in (1, -1):
            raise CalcError("BAD_GENERATOR", f"sign must be +-1, got {s}")
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return tuple(out)


Monomial = tuple[int, ...]  # sequence of variable indices; () is the constant term


@dataclass(frozen=True)
class TruncatedSeries:
    """Integer noncommutative polynomial truncated above total degree ``bound``.

    Sparse: ``coeffs`` maps monomials (tuples of variable indices, length =
    degree) to nonzero integers.
    """

    bound: int
    nvars: int
    coeffs: dict[Monomial, int] = field(default_factory=dict)

    def __post_init__(self):
        # normalize: drop zeros and over-degree monomials defensively
        clean = {m: c for m, c in self.coeffs.items() if c != 0 and len(m) <= self.bound}
        object.__setattr__(self, "coeffs", clean)

    @staticmethod
    def one(bound: int, nvars: int) -> "TruncatedSeries":
        return TruncatedSeries(bound, nvars, {(): 1})

    def is_one(self) -> bool:
        return self.coeffs == {(): 1}

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return TruncatedSeries(self.bound, self.nvars, out)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.bound, self.nvars, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.bound == other.bound
            and self.nvars == other.nvars
            and self.coeffs == other.coeffs
        )

    def _check(self, other: "TruncatedSeries") -> None:
        if self.bound != other.bound or self.nvars != other.nvars:
            raise CalcError(
                "BOUND_MISMATCH",
                f"({self.bound},{self.nvars} vars) vs ({other.bound},{other.nvars} vars)",
            )


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Noncommutative product truncated at the shared degree bound."""
    a._check(b)
    out: dict[Monomial, int] = {}
    for ma, ca in a.coeffs.items():
        rem = a.bound - len(ma)
        for mb, cb in b.coeffs.items():
            if len(mb) > rem:
                continue
            m = ma + mb
            out[m] = out.get(m, 0) + ca * cb
    return TruncatedSeries(a.bound, a.nvars, out)


def series_inv(a: TruncatedSeries) -> TruncatedSeries:
    """Inverse of a series with constant term 1: 1 - N + N^2 - ... truncated."""
    if a.coeffs.get((), 0) != 1:
        raise CalcError("BOUND_MISMATCH", "series inverse needs constant term 1")
    n = TruncatedSeries(a.bound, a.nvars, {m: c for m, c in a.coeffs.items() if m != ()})
    out = TruncatedSeries.one(a.bound, a.nvars)
    power = TruncatedSeries.one(a.bound, a.nvars)
    for k in range(1, a.bound + 1):
        power = series_mul(power, n)
        if not power.coeffs:
            break
        out = out + power if k % 2 == 0 else out - power
    return out


def series_pow(a: TruncatedSeries, sign: int) -> TruncatedSeries:
    return a if sign > 0 else series_inv(a)


def magnus_gen(g: int, sign: int, nvars: int, bound: int) -> TruncatedSeries:
    """Magnus image of a single signed generator."""
    if not 0 <= g < nvars:
        raise CalcError("BAD_GENERATOR", f"generator {g} out of range (nvars={nvars})")
    if sign > 0:
        return TruncatedSeries(bound, nvars, {(): 1, (g,): 1})
    coeffs = {tuple([g] * k): (-1) ** k for k in range(bound + 1)}
    return TruncatedSeries(bound, nvars, coeffs)


def magnus(w: Word, nvars: int, bound: int) -> TruncatedSeries:
    """Magnus expansion of a word, truncated above total degree ``bound``."""
    out = TruncatedSeries.one(bound, nvars)
    for g, s in w.letters:
        out = series_mul(out, magnus_gen(g, s, nvars, bound))
    return out


def coefficient(s: TruncatedSeries, monomial: Monomial) -> int:
    if len(monomial) > s.bound:
        raise CalcError("DEGREE_EXCEEDED", f"degree {len(monomial)} > bound {s.bound}")
    return s.coeffs.get(tuple(monomial), 0)


def in_gamma(w: Word, nvars: int, d: int) -> bool:
    """Membership of ``w`` in the d-th lower central series subgroup.

    For a free group this holds exactly when the Magnus expansion of ``w`` has
    no terms of degree 1 .. d-1.
    """
    if d < 1:
        raise CalcError("BAD_GENERATOR", f"class must be >= 1, got {d}")
    if d == 1:
        return True
    return magnus(w, nvars, d - 1).is_one()
