"""Sparse exact linear algebra over the rationals.

Rows are stored as ``{column: value}`` dicts without zeros.  Elimination is
fraction-free: every row is scaled to a primitive integer vector and pivots
are combined by integer cross-multiplication followed by content removal.
A modular rank is available as a fast path; :func:`kernel_dim` only trusts
it when two word-sized primes agree and falls back to exact arithmetic
otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping, Sequence

PRIMES = (2_147_483_647, 2_305_843_009_213_693_951)


def _primitive(row: Mapping[int, object]) -> dict[int, int]:
    """Scale a rational row to a primitive integer row with positive leading entry."""
    items = [(c, Fraction(v)) for c, v in row.items() if v]
    if not items:
        return {}
    den = reduce(lcm, (v.denominator for _, v in items), 1)
    ints = {c: int(v * den) for c, v in items}
    g = reduce(gcd, (abs(v) for v in ints.values()))
    lead = ints[min(ints)]
    if lead < 0:
        g = -g
    return {c: v // g for c, v in ints.items()}


@dataclass
class ExactMatrix:
    """Sparse matrix with labelled rows and columns.

    ``rows`` maps a row label to ``{column label: value}``.  Column order is
    fixed by ``columns``; labels outside it are rejected.
    """

    columns: list = field(default_factory=list)
    rows: dict = field(default_factory=dict)

    def __post_init__(self):
        self.col_index = {c: i for i, c in enumerate(self.columns)}
        if len(self.col_index) != len(self.columns):
            raise ValueError("duplicate column labels")
        clean = {}
        for r, entries in self.rows.items():
            row = {c: v for c, v in entries.items() if v}
            for c in row:
                if c not in self.col_index:
                    raise KeyError(f"column {c!r} not declared")
            if row:
                clean[r] = row
        self.rows = clean

    @classmethod
    def from_vectors(cls, vectors: Iterable[Mapping[Hashable, object]], columns: Sequence | None = None) -> "ExactMatrix":
        vectors = list(vectors)
        if columns is None:
            seen = {}
            for vec in vectors:
                for c in vec:
                    seen.setdefault(c, None)
            columns = list(seen)
        return cls(list(columns), {i: dict(v) for i, v in enumerate(vectors)})

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.columns)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def _int_rows(self) -> list[dict[int, int]]:
        ci = self.col_index
        rows = [_primitive({ci[c]: v for c, v in r.items()}) for r in self.rows.values()]
        return sorted((r for r in rows if r), key=len)

    def echelon(self) -> dict[int, dict[int, int]]:
        """Integer row echelon form: pivot column -> primitive row whose min column is the pivot."""
        pivots: dict[int, dict[int, int]] = {}
        for row in self._int_rows():
            while row:
                c = min(row)
                p = pivots.get(c)
                if p is None:
                    pivots[c] = row
                    break
                a, b = p[c], row[c]
                g = gcd(a, b)
                a, b = a // g, b // g
                new = {k: a * v for k, v in row.items()}
                for k, v in p.items():
                    nv = new.get(k, 0) - b * v
                    if nv:
                        new[k] = nv
                    else:
                        new.pop(k, None)
                row = _primitive(new)
        return pivots

    def rank(self, modular: bool = False) -> int:
        if modular:
            ranks = [self.rank_mod(p) for p in PRIMES]
            if ranks[0] == ranks[1]:
                return ranks[0]
        return len(self.echelon())

    def rank_mod(self, p: int) -> int:
        ci = self.col_index
        pivots: dict[int, dict[int, int]] = {}
        for r in self.rows.values():
            row = {}
            for c, v in r.items():
                v = Fraction(v)
                x = v.numerator * pow(v.denominator, -1, p) % p
                if x:
                    row[ci[c]] = x
            while row:
                c = min(row)
                piv = pivots.get(c)
                if piv is None:
                    inv = pow(row[c], -1, p)
                    pivots[c] = {k: v * inv % p for k, v in row.items()}
                    break
                f = row[c]
                for k, v in piv.items():
                    nv = (row.get(k, 0) - f * v) % p
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        return len(pivots)

    def nullity(self, modular: bool = False) -> int:
        return len(self.columns) - self.rank(modular)

    def nullspace(self) -> list[dict]:
        """Basis of the right kernel, one ``{column label: Fraction}`` per free column."""
        pivots = self.echelon()
        n = len(self.columns)
        free = [c for c in range(n) if c not in pivots]
        order = sorted(pivots, reverse=True)
        basis = []
        for f in free:
            x: dict[int, Fraction] = {f: Fraction(1)}
            for c in order:
                if c > f:
                    continue  # pivot rows only reach columns >= their pivot
                row = pivots[c]
                s = sum((v * x[k] for k, v in row.items() if k != c and k in x), Fraction(0))
                if s:
                    x[c] = -s / row[c]
            basis.append({self.columns[k]: v for k, v in x.items() if v})
        return basis

    def apply(self, vector: Mapping[Hashable, object]) -> dict:
        """Matrix-vector product as ``{row label: value}`` (zeros dropped)."""
        out = {}
        for r, entries in self.rows.items():
            s = sum((Fraction(v) * Fraction(vector.get(c, 0)) for c, v in entries.items()), Fraction(0))
            if s:
                out[r] = s
        return out


def kernel_dim(m: ExactMatrix, modular: bool = False) -> int:
    """Exact nullity; ``modular`` tries two primes first and falls back on disagreement."""
    return m.nullity(modular)


def span_rank(vectors: Iterable[Mapping[Hashable, object]], modular: bool = False) -> int:
    """Dimension of the span of sparse vectors."""
    return ExactMatrix.from_vectors(vectors).rank(modular)
