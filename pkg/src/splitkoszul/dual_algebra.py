"""Graded dimensions of the quadratic dual via linked monomials.

The relation space is R = sum over v of span{v (w1 - w2) : w1, w2 covered by v}.
A vector in V^k lies in R^(k) iff it is supported on cover chains and
deleting (summing out) any factor after the first gives zero.  Everything
is computed per first factor v and only inside the span of cover chains
starting at v, never in the full tensor power.

Monomials are tuples of vertex ids.  The minimal vertex is never a factor:
a monomial "from v to *" ends on level 1.
"""

from __future__ import annotations

import warnings
from collections import Counter, defaultdict
from fractions import Fraction
from itertools import combinations, permutations
from math import comb
from typing import Hashable, Iterable, Mapping, Sequence

from .builders import SimplicialComplex, _sort_key, face_id
from .exact import ExactMatrix, kernel_dim
from .graph_core import LayeredGraph, is_uniform
from .poly import IntPolynomial

Monomial = tuple  # of vertex ids
Vector = dict  # Monomial -> coefficient


class LengthExceedsLevel(ValueError):
    pass


class MixedLengths(ValueError):
    pass


class MixedTopVertex(ValueError):
    pass


def _length_for(g: LayeredGraph, v: str, l: int | None, bottom: str | None) -> int:
    lv = g.levels[v]
    if bottom is not None:
        gap = lv - g.levels[bottom]
        if l is not None and l != gap:
            raise ValueError(f"length {l} inconsistent with bottom {bottom!r} (gap {gap})")
        if gap < 1:
            raise ValueError(f"{bottom!r} is not below {v!r}")
        l = gap
    if l is None or l < 1:
        raise ValueError("length must be a positive integer")
    if l > lv:
        raise LengthExceedsLevel(f"length {l} > level {lv} of {v!r}")
    return l


def enumerate_linked(g: LayeredGraph, v: str, l: int | None = None, bottom: str | None = None) -> list[Monomial]:
    """Cover chains v > u1 > ... > u_{l-1} of generators.

    With ``bottom`` = w the last factor must cover w, and ``l`` defaults to
    level(v) - level(w).
    """
    l = _length_for(g, v, l, bottom)
    out: list[Monomial] = []

    def extend(chain):
        if len(chain) == l:
            if bottom is None or bottom in g.down[chain[-1]]:
                out.append(tuple(chain))
            return
        for w in g.down[chain[-1]]:
            if g.levels[w] >= 1:
                chain.append(w)
                extend(chain)
                chain.pop()

    extend([v])
    return out


def alternatives(g: LayeredGraph, m: Monomial, p: int, bottom: str | None = None) -> list[str]:
    """Vertices that can replace ``m[p]`` keeping the chain linked (and over ``bottom``)."""
    l = len(m)
    if not 1 <= p <= l - 1:
        raise IndexError(f"position {p} outside 1..{l - 1}")
    out = []
    for w in g.down[m[p - 1]]:
        if w == m[p] or g.levels[w] < 1:
            continue
        if p < l - 1:
            if m[p + 1] not in g.down[w]:
                continue
        elif bottom is not None and bottom not in g.down[w]:
            continue
        out.append(w)
    return out


def is_admissible(g: LayeredGraph, m: Monomial, bottom: str | None = None) -> bool:
    return all(alternatives(g, m, p, bottom) for p in range(1, len(m)))


def enumerate_admissible(g: LayeredGraph, v: str, l: int | None = None, bottom: str | None = None) -> list[Monomial]:
    return [m for m in enumerate_linked(g, v, l, bottom) if is_admissible(g, m, bottom)]


def deletion_system(monomials: Sequence[Monomial], k: int | None = None,
                    positions: Iterable[int] | None = None) -> ExactMatrix:
    """Stacked "sum out position p" maps, p = 1..k-1 by default.

    Rows are labelled ``(p, monomial without position p)``, columns are the
    input monomials.  The kernel is the part of their span that lies in R^(k).
    """
    monomials = list(dict.fromkeys(monomials))
    lengths = {len(m) for m in monomials}
    if k is None:
        k = lengths.pop() if len(lengths) == 1 else 0
        lengths = {k}
    if lengths - {k}:
        raise MixedLengths(f"monomial lengths {sorted(lengths)} but k = {k}")
    pos = list(range(1, k)) if positions is None else list(positions)
    rows: dict = defaultdict(dict)
    for m in monomials:
        for p in pos:
            rows[(p, m[:p] + m[p + 1:])][m] = 1
    return ExactMatrix(monomials, dict(rows))


def prune(monomials: Iterable[Monomial], positions: Sequence[int]) -> list[Monomial]:
    """Drop monomials that sit alone in some deletion row, until stable.

    Such a monomial has coefficient zero in every kernel vector, so this never
    changes the kernel.  One pass is exactly the admissibility filter.
    """
    current = list(dict.fromkeys(monomials))
    while True:
        count = Counter((p, m[:p] + m[p + 1:]) for m in current for p in positions)
        kept = [m for m in current if all(count[(p, m[:p] + m[p + 1:])] > 1 for p in positions)]
        if len(kept) == len(current):
            return kept
        current = kept


def dual_component_dim(g: LayeredGraph, v: str, k: int, modular: bool = False) -> int:
    """dim of R_v^(k) = v V^(k-1) ∩ R^(k)."""
    if k == 1:
        return 1
    if k > g.levels[v]:
        return 0
    cols = prune(enumerate_linked(g, v, k), range(1, k))
    if not cols:
        return 0
    return kernel_dim(deletion_system(cols, k), modular=modular)


def dual_dims(g: LayeredGraph, modular: bool = False) -> dict[int, int]:
    """dim R^(k) for k = 0..height (zero beyond)."""
    gens = g.generators
    dims = {0: 1, 1: len(gens)}
    for k in range(2, g.height + 1):
        dims[k] = sum(dual_component_dim(g, v, k, modular) for v in gens if g.levels[v] >= k)
    return dims


def dual_hilbert(g: LayeredGraph, modular: bool = False) -> IntPolynomial:
    """H(A^!, z) as a polynomial; warns on non-uniform input."""
    ok, witness = is_uniform(g)
    if not ok:
        warnings.warn(f"graph is not uniform ({witness[0]!r}); quadratic presentation not justified",
                      stacklevel=2)
    dims = dual_dims(g, modular)
    return IntPolynomial(dims[k] for k in range(len(dims)))


def is_linked(g: LayeredGraph, m: Monomial) -> bool:
    return all(g.levels[x] >= 1 for x in m) and all(b in g.down[a] for a, b in zip(m, m[1:]))


def _clean(t: Mapping) -> dict:
    return {m: Fraction(c) for m, c in t.items() if c}


def membership(g: LayeredGraph, t: Mapping[Monomial, object], k: int | None = None) -> bool:
    """Is the combination ``t`` of length-k monomials an element of R^(k)?"""
    t = _clean(t)
    if not t:
        return True
    tops = {m[0] for m in t}
    if len(tops) != 1:
        raise MixedTopVertex(f"first factors {sorted(tops)}")
    lengths = {len(m) for m in t}
    if k is None:
        k = next(iter(lengths))
    if lengths != {k}:
        raise MixedLengths(f"lengths {sorted(lengths)} but k = {k}")
    if not all(is_linked(g, m) for m in t):
        return False
    return not deletion_system(list(t), k).apply(t)


# simplicial complexes

def simplicial_sab(A: Iterable, B: Iterable) -> Vector:
    """S(A:B) = sum over orderings b_1..b_k of B of sgn * A (A - b_1) ... (A - {b_1..b_(k-1)}).

    Returned as a vector over monomials of face ids.  Any non-empty B ⊆ A
    gives an element of R^(k), k = |B|.
    """
    A = frozenset(A)
    B = sorted(B, key=_sort_key)
    if not B or not set(B) <= A:
        raise ValueError("B must be a non-empty subset of A")
    out: dict = defaultdict(int)
    for perm in permutations(range(len(B))):
        sign = _perm_sign(perm)
        cur, mono = A, [face_id(A)]
        for idx in perm[:-1]:
            cur = cur - {B[idx]}
            mono.append(face_id(cur))
        out[tuple(mono)] += sign
    return {m: c for m, c in out.items() if c}


def _perm_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, n = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            n += 1
        if n % 2 == 0:
            sign = -sign
    return sign


def sab_basis(A: Iterable, k: int) -> list[Vector]:
    """The elements S(A:B) with |B| = k and min A in B.

    There are C(|A| - 1, k - 1) of them, matching dim of A V^(k-1) ∩ R^(k).
    """
    items = sorted(A, key=_sort_key)
    low, rest = items[0], items[1:]
    return [simplicial_sab(A, (low,) + c) for c in combinations(rest, k - 1)]


def simplicial_dual_formula(delta: SimplicialComplex) -> IntPolynomial:
    """sum_k ( sum_{i >= k} |faces of size i| C(i - 1, k - 1) ) z^k, constant term 1."""
    n = delta.dimension + 1
    sizes = [len(delta.by_size(i)) for i in range(n + 1)]
    coeffs = [1] + [sum(sizes[i] * comb(i - 1, k - 1) for i in range(k, n + 1)) for k in range(1, n + 1)]
    return IntPolynomial(coeffs)
