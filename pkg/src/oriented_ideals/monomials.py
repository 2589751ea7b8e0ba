"""Exact arithmetic for monomials and monomial ideals.

A monomial is a power product of variables, stored sparsely as a mapping
from variable name to positive exponent; the identity monomial is the
empty mapping.  A monomial ideal lives in a fixed ambient polynomial ring,
given as an ordered tuple of variable names, and is always kept in
canonical form: the unique minimal generating set, sorted by total degree
and then lexicographically in the ambient variable order.  Everything is
exact integer arithmetic; there are no coefficients anywhere.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence


class Monomial:
    """An exponent vector with named variables, e.g. x1*x3^2."""

    __slots__ = ("_exps", "_hash")

    def __init__(self, exponents: Mapping[str, int] | Iterable[tuple[str, int]] = ()):
        exps = dict(exponents)
        for var, exp in exps.items():
            if not isinstance(var, str):
                raise TypeError(f"variable names must be strings, got {var!r}")
            if not isinstance(exp, int) or isinstance(exp, bool):
                raise TypeError(f"exponent of {var} must be an int, got {exp!r}")
            if exp < 0:
                raise ValueError(f"exponent of {var} is negative: {exp}")
        # zero exponents are not stored
        self._exps = {v: e for v, e in sorted(exps.items()) if e > 0}
        self._hash: int | None = None

    @classmethod
    def from_str(cls, text: str) -> Monomial:
        """Parse "x1*x3^2" (exponent 1 omitted, "1" is the identity)."""
        text = text.strip()
        if text == "1":
            return cls()
        exps: dict[str, int] = {}
        for factor in text.split("*"):
            factor = factor.strip()
            var, sep, exp = factor.partition("^")
            if not var:
                raise ValueError(f"empty factor in monomial string {text!r}")
            if sep:
                try:
                    e = int(exp)
                except ValueError:
                    raise ValueError(f"bad exponent in factor {factor!r}") from None
            else:
                e = 1
            if e < 1:
                raise ValueError(f"exponent must be positive in factor {factor!r}")
            if var in exps:
                raise ValueError(f"repeated variable {var!r} in {text!r}")
            exps[var] = e
        return cls(exps)

    @property
    def exponents(self) -> dict[str, int]:
        return dict(self._exps)

    @property
    def support(self) -> frozenset[str]:
        return frozenset(self._exps)

    @property
    def degree(self) -> int:
        return sum(self._exps.values())

    @property
    def is_identity(self) -> bool:
        return not self._exps

    def __getitem__(self, var: str) -> int:
        return self._exps.get(var, 0)

    def items(self) -> Iterable[tuple[str, int]]:
        return self._exps.items()

    def divides(self, other: Monomial) -> bool:
        other_exps = other._exps
        return all(other_exps.get(v, 0) >= e for v, e in self._exps.items())

    def lcm(self, other: Monomial) -> Monomial:
        exps = dict(self._exps)
        for v, e in other._exps.items():
            if e > exps.get(v, 0):
                exps[v] = e
        return Monomial(exps)

    def __mul__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        exps = dict(self._exps)
        for v, e in other._exps.items():
            exps[v] = exps.get(v, 0) + e
        return Monomial(exps)

    def __pow__(self, k: int) -> Monomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"monomial power must be a nonnegative int, got {k!r}")
        return Monomial({v: e * k for v, e in self._exps.items()})

    def format(self, order: Sequence[str] | None = None) -> str:
        """Render as "x1*x3^2", listing variables in the given order."""
        if not self._exps:
            return "1"
        if order is None:
            vs = list(self._exps)
        else:
            vs = [v for v in order if v in self._exps]
            vs += sorted(v for v in self._exps if v not in set(order))
        return "*".join(v if self._exps[v] == 1 else f"{v}^{self._exps[v]}" for v in vs)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Monomial({self._exps!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._exps == other._exps

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._exps.items()))
        return self._hash


def _row_key(row: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    # graded lex: total degree first, then bigger exponent on an earlier
    # variable sorts first
    return (sum(row), tuple(-e for e in row))


def _row_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _minimal_rows(rows: Iterable[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    """Discard rows divisible by another row; result sorted graded-lex."""
    uniq = sorted(set(rows), key=_row_key)
    if not uniq:
        return ()
    if sum(uniq[0]) == 0:
        # the identity divides everything: unit ideal
        return (uniq[0],)
    kept: list[tuple[int, ...]] = []
    block_start = 0  # kept entries before this index have strictly smaller degree
    current_degree = -1
    for row in uniq:
        d = sum(row)
        if d != current_degree:
            current_degree = d
            block_start = len(kept)
        smaller = kept[:block_start]
        if not any(_row_divides(k, row) for k in smaller):
            kept.append(row)
    return tuple(kept)


class MonomialIdeal:
    """A monomial ideal in canonical form over a fixed variable order.

    Generators are minimalized and sorted on construction, so structural
    equality of two ideals over the same ambient is ideal equality.  The
    zero ideal has no generators; the unit ideal is generated by 1.
    """

    __slots__ = ("_ambient", "_position", "_rows", "_gens", "_hash")

    def __init__(
        self,
        ambient: Sequence[str],
        generators: Iterable[Monomial | str] = (),
    ):
        ambient = tuple(ambient)
        if len(set(ambient)) != len(ambient):
            raise ValueError("ambient variables must be distinct")
        position = {v: i for i, v in enumerate(ambient)}
        rows = []
        for g in generators:
            if isinstance(g, str):
                g = Monomial.from_str(g)
            row = [0] * len(ambient)
            for v, e in g.items():
                if v not in position:
                    raise ValueError(f"generator {g} uses {v!r}, not an ambient variable")
                row[position[v]] = e
            rows.append(tuple(row))
        self._ambient = ambient
        self._position = position
        self._rows = _minimal_rows(rows)
        self._gens = tuple(self._monomial(r) for r in self._rows)
        self._hash: int | None = None

    @classmethod
    def zero(cls, ambient: Sequence[str]) -> MonomialIdeal:
        return cls(ambient, ())

    @classmethod
    def unit(cls, ambient: Sequence[str]) -> MonomialIdeal:
        return cls(ambient, (Monomial(),))

    @classmethod
    def _from_rows(
        cls, ambient: tuple[str, ...], position: dict[str, int],
        rows: Iterable[tuple[int, ...]],
    ) -> MonomialIdeal:
        ideal = cls.__new__(cls)
        ideal._ambient = ambient
        ideal._position = position
        ideal._rows = _minimal_rows(rows)
        ideal._gens = tuple(ideal._monomial(r) for r in ideal._rows)
        ideal._hash = None
        return ideal

    def _monomial(self, row: tuple[int, ...]) -> Monomial:
        return Monomial({v: e for v, e in zip(self._ambient, row) if e})

    def _row(self, m: Monomial) -> tuple[int, ...]:
        row = [0] * len(self._ambient)
        for v, e in m.items():
            if v not in self._position:
                raise ValueError(f"{m} uses {v!r}, not an ambient variable")
            row[self._position[v]] = e
        return tuple(row)

    @property
    def ambient(self) -> tuple[str, ...]:
        return self._ambient

    @property
    def generators(self) -> tuple[Monomial, ...]:
        return self._gens

    @property
    def is_zero(self) -> bool:
        return not self._rows

    @property
    def is_unit(self) -> bool:
        return len(self._rows) == 1 and sum(self._rows[0]) == 0

    def generator_strings(self) -> list[str]:
        return [g.format(self._ambient) for g in self._gens]

    def _require_same_ambient(self, other: MonomialIdeal) -> None:
        if self._ambient != other._ambient:
            raise ValueError(
                f"ambient mismatch: {self._ambient} vs {other._ambient}"
            )

    def contains(self, m: Monomial | str) -> bool:
        """Membership: some generator divides m."""
        if isinstance(m, str):
            m = Monomial.from_str(m)
        return any(g.divides(m) for g in self._gens)

    def contains_ideal(self, other: MonomialIdeal) -> bool:
        """True iff other is a subideal of self."""
        self._require_same_ambient(other)
        return all(self.contains(g) for g in other._gens)

    def __le__(self, other: MonomialIdeal) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return other.contains_ideal(self)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        self._require_same_ambient(other)
        return MonomialIdeal._from_rows(
            self._ambient, self._position, self._rows + other._rows
        )

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        self._require_same_ambient(other)
        products = {
            tuple(x + y for x, y in zip(a, b))
            for a in self._rows
            for b in other._rows
        }
        return MonomialIdeal._from_rows(self._ambient, self._position, products)

    def __pow__(self, s: int) -> MonomialIdeal:
        """s-fold product, minimalizing after each step; s=0 gives the unit ideal."""
        if not isinstance(s, int) or s < 0:
            raise ValueError(f"ideal power must be a nonnegative int, got {s!r}")
        if s == 0:
            return MonomialIdeal.unit(self._ambient)
        result = self
        for _ in range(s - 1):
            result = result * self
        return result

    def intersect(self, other: MonomialIdeal) -> MonomialIdeal:
        """Pairwise-lcm intersection of two monomial ideals."""
        self._require_same_ambient(other)
        lcms = {
            tuple(max(x, y) for x, y in zip(a, b))
            for a in self._rows
            for b in other._rows
        }
        return MonomialIdeal._from_rows(self._ambient, self._position, lcms)

    def saturate(self, variables: Iterable[str]) -> MonomialIdeal:
        """Saturation with respect to the product of the given variables.

        For monomial ideals this just zeroes out the exponents of those
        variables in every generator and minimalizes.
        """
        idx = set()
        for v in variables:
            if v not in self._position:
                raise ValueError(f"{v!r} is not an ambient variable")
            idx.add(self._position[v])
        rows = (
            tuple(0 if i in idx else e for i, e in enumerate(row))
            for row in self._rows
        )
        return MonomialIdeal._from_rows(self._ambient, self._position, rows)

    def with_ambient(self, ambient: Sequence[str]) -> MonomialIdeal:
        """The same generators viewed in a different ambient ring."""
        return MonomialIdeal(ambient, self._gens)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self._ambient == other._ambient and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._ambient, self._rows))
        return self._hash

    def __str__(self) -> str:
        return "[" + ", ".join(self.generator_strings()) + "]"

    def __repr__(self) -> str:
        return f"MonomialIdeal({self._ambient!r}, {self.generator_strings()!r})"


def intersect_all(
    ideals: Sequence[MonomialIdeal], *, ambient: Sequence[str] | None = None
) -> MonomialIdeal:
    """Fold a list of ideals with intersect; empty list gives the unit ideal."""
    if not ideals:
        if ambient is None:
            raise ValueError("empty intersection needs an explicit ambient")
        return MonomialIdeal.unit(ambient)
    result = ideals[0]
    for other in ideals[1:]:
        result = result.intersect(other)
    return result
