"""Hilbert series of the splitting algebra from signed chain counts.

``chain_sums`` gives the table s[a, b] of signed chains v1 > ... > vl > *
with |v1| = a and |vl| = b.  The inverse Hilbert series is then

    H(A, z)^-1 = 1 + sum_i ( sum_{a >= i >= a-b+1} s[a, b] ) z^i.

``grw_inverse`` reaches the same polynomial by a separate route (pairwise
Möbius values and an exact division by 1 - z) and serves as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph_core import LayeredGraph, mobius_from
from .poly import IntPolynomial


class NonUnitConstant(ValueError):
    pass


class NoUniqueTop(ValueError):
    pass


def chain_sums(g: LayeredGraph) -> dict[tuple[int, int], int]:
    """Signed chain sums s[a, b] for 1 <= b <= a <= height.

    For each target level b, f_b(v) = -[|v| = b] - sum_{v > w, |w| >= b} f_b(w)
    is the signed count of chains starting at v and ending on level b.  The
    sum runs over the full order relation, not only over covers.
    """
    cl = g.closure
    n = g.height
    s: dict[tuple[int, int], int] = {}
    for b in range(1, n + 1):
        f: dict[str, int] = {}
        for v in g.order:
            lv = g.levels[v]
            if lv < b:
                continue
            val = -1 if lv == b else 0
            for w in cl.below(v):
                if w in f:
                    val -= f[w]
            f[v] = val
        for a in range(b, n + 1):
            s[a, b] = sum(f[v] for v in g.by_level[a])
    return s


def hilbert_inverse(g: LayeredGraph, sums: dict | None = None) -> IntPolynomial:
    s = chain_sums(g) if sums is None else sums
    n = g.height
    coeffs = [1] + [0] * n
    for (a, b), val in s.items():
        # s[a, b] contributes to z^i for a - b + 1 <= i <= a
        for i in range(a - b + 1, a + 1):
            coeffs[i] += val
    return IntPolynomial(coeffs)


def grw_inverse(g: LayeredGraph) -> IntPolynomial:
    """Inverse Hilbert series through the (1 - z)-denominator form.

    numerator = 1 - z + sum over pairs x >= y (y may be *) of
    c(x, y) (z^{|x|-|y|+1} - z^{|x|+1}), with c(x, y) the signed count of
    chains from x to y, i.e. -μ(y, x).  Division by 1 - z must be exact.
    """
    n = g.height
    num = [0] * (n + 2)
    num[0] += 1
    num[1] -= 1
    for y in g.order:
        ly = g.levels[y]
        for x, mu in mobius_from(g, y).items():
            if mu == 0:
                continue
            c = -mu
            lx = g.levels[x]
            num[lx - ly + 1] += c
            num[lx + 1] -= c
    return IntPolynomial(num).div_one_minus_z()


@dataclass(frozen=True)
class SeriesExpansion:
    coeffs: tuple[int, ...]
    first_negative: int | None

    @property
    def nonnegative(self) -> bool:
        return self.first_negative is None

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)


def expand_series(p: IntPolynomial | Sequence[int], order: int) -> SeriesExpansion:
    """First ``order + 1`` coefficients of 1/p; p(0) must be 1."""
    p = p if isinstance(p, IntPolynomial) else IntPolynomial(p)
    if p[0] != 1:
        raise NonUnitConstant(f"constant term is {p[0]}, expected 1")
    out: list[int] = []
    for n in range(order + 1):
        c = 1 if n == 0 else 0
        for k in range(1, min(n, p.degree) + 1):
            c -= p[k] * out[n - k]
        out.append(c)
    neg = next((i for i, c in enumerate(out) if c < 0), None)
    return SeriesExpansion(tuple(out), neg)


def surface_closed_forms(g_count: int, h_count: int, f_count: int) -> tuple[IntPolynomial, IntPolynomial]:
    """Closed forms for a good decomposition of a closed surface.

    Returns (H(A, z)^-1, H(A^!, z)) with u = g + f as stated for
    decompositions where every edge has two endpoints and two faces.
    """
    u, h = g_count + f_count, h_count
    inverse = IntPolynomial([1, -(1 + u + h), 3 * h - 1, -(h + 1), u - h - 1])
    dual = IntPolynomial([1, 1 + u + h, 3 * h - 1, u - 1, 1])
    return inverse, dual


@dataclass(frozen=True)
class EulerMuReport:
    n: int
    chi: int | None
    mu: int
    top_coeff: int

    @property
    def consistent(self) -> bool:
        ok = self.mu == self.top_coeff
        if self.chi is not None:
            ok = ok and self.mu == self.chi - 1
        return ok


def euler_mu_report(g: LayeredGraph) -> EulerMuReport:
    """Compare μ(*, M), χ - 1 and the top coefficient of H(A, z)^-1.

    χ is taken from ``g.meta['chi']`` when the builder recorded it.
    """
    top = g.top
    if top is None:
        raise NoUniqueTop(f"maximal vertices: {list(g.maximal)}")
    mu = mobius_from(g, g.min_vertex)[top]
    inv = hilbert_inverse(g)
    chi = g.meta.get("chi")
    return EulerMuReport(n=g.height, chi=chi, mu=mu, top_coeff=inv[g.height])
