"""Koszulity screens and criteria for splitting algebras.

Three checkable criteria are combined:

* the numerical identity H(A, z) H(A^!, -z) = 1, tested exactly as
  H(A, z)^-1 == H(A^!, -z);
* a sufficient condition comparing, for every vertex v and indices j, l,
  the space of zero-sum combinations j levels below v inside R^(l+2) with
  the image of R^(l+3) one level higher under deletion of the first factor;
* for height <= 4, numerical Koszulity alone (backed here by a direct check
  that the lattice of V^2R, VRV, RV^2 in V^4 is distributive).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping

from .dual_algebra import Vector, deletion_system, dual_component_dim, dual_hilbert, enumerate_linked, is_linked, prune
from .exact import ExactMatrix, kernel_dim
from .graph_core import LayeredGraph
from .hilbert import expand_series, hilbert_inverse
from .poly import IntPolynomial


class OutOfRange(ValueError):
    pass


class Verdict(str, enum.Enum):
    KOSZUL_BY_PROP6_1 = "Koszul_by_Prop6_1"
    KOSZUL_BY_HEIGHT_LE4 = "Koszul_by_height_le4"
    NOT_NUMERICALLY_KOSZUL = "NotNumericallyKoszul"
    INCONCLUSIVE = "Inconclusive"

    @property
    def is_koszul(self) -> bool:
        return self in (Verdict.KOSZUL_BY_PROP6_1, Verdict.KOSZUL_BY_HEIGHT_LE4)


def numerical_koszul(g: LayeredGraph, modular: bool = False) -> tuple[bool, IntPolynomial]:
    residual = hilbert_inverse(g) - dual_hilbert(g, modular).negate_variable()
    return not residual, residual


def positivity_screen(g: LayeredGraph) -> tuple[bool, int | None]:
    """H(A, -z)^-1 must have non-negative coefficients to be a Hilbert series.

    Returns ``(passed, first offending degree)``.
    """
    p = hilbert_inverse(g).negate_variable()
    bad = next((i for i, c in enumerate(p.coeffs) if c < 0), None)
    return bad is None, bad


def b_coefficients(g: LayeredGraph, upto: int, modular: bool = False, dual: IntPolynomial | None = None) -> list[int]:
    """Coefficients b_0..b_upto of H(A, z) H(A^!, -z)."""
    series = expand_series(hilbert_inverse(g), upto).coeffs
    d = (dual if dual is not None else dual_hilbert(g, modular)).negate_variable()
    return [sum(series[n - k] * d[k] for k in range(n + 1)) for n in range(upto + 1)]


# distributivity of the degree-4 lattice

@dataclass(frozen=True)
class LatticeDims:
    vertex: str
    ambient: int
    x1: int
    x2: int
    x3: int
    x1_cap_x2_x3_sum: int
    intersections_sum: int

    @property
    def distributive(self) -> bool:
        return self.x1_cap_x2_x3_sum == self.intersections_sum


def _diff_pairs(items):
    items = list(items)
    return [(items[0], x) for x in items[1:]]


def _below_exactly(g: LayeredGraph, v: str, j: int) -> list[str]:
    if j == 0:
        return [v]
    target = g.levels[v] - j
    return [w for w in g.closure.below(v) if g.levels[w] == target]


def lattice_dims(g: LayeredGraph, a: str, modular: bool = False) -> LatticeDims:
    """Dimensions for V^2R, VRV, RV^2 restricted to monomials a b c d with b, c, d
    one, two and three levels below ``a``.

    All three subspaces split along that restriction, and outside it at most
    two of them are non-zero, so distributivity is decided here.
    """
    s1, s2, s3 = g.down[a], _below_exactly(g, a, 2), _below_exactly(g, a, 3)
    x1, x2, x3 = [], [], []
    for b in s1:
        for c in s2:
            for d0, d in _diff_pairs(g.down[c]):
                x1.append({(a, b, c, d0): 1, (a, b, c, d): -1})
        for c0, c in _diff_pairs(g.down[b]):
            for d in s3:
                x2.append({(a, b, c0, d): 1, (a, b, c, d): -1})
    for b0, b in _diff_pairs(s1):
        for c in s2:
            for d in s3:
                x3.append({(a, b0, c, d): 1, (a, b, c, d): -1})

    def rk(*parts):
        vecs = [v for p in parts for v in p]
        return ExactMatrix.from_vectors(vecs).rank(modular) if vecs else 0

    d1, d2, d3 = rk(x1), rk(x2), rk(x3)
    d12, d13, d23, d123 = rk(x1, x2), rk(x1, x3), rk(x2, x3), rk(x1, x2, x3)
    triple = dual_component_dim(g, a, 4, modular)
    lhs = d1 + d23 - d123
    rhs = (d1 + d2 - d12) + (d1 + d3 - d13) - triple
    return LatticeDims(a, len(s1) * len(s2) * len(s3), d1, d2, d3, lhs, rhs)


def distributivity_check(g: LayeredGraph, modular: bool = False) -> bool:
    """Is X1 ∩ (X2 + X3) = X1 ∩ X2 + X1 ∩ X3 for X1 = V^2R, X2 = VRV, X3 = RV^2?

    Only first factors of level >= 4 can break it; lower graphs pass vacuously.
    """
    return all(lattice_dims(g, a, modular).distributive for a in g.generators if g.levels[a] >= 4)


# sufficient condition

@dataclass(frozen=True)
class SufficientCondition:
    v: str
    j: int
    l: int
    left_dim: int
    right_dim: int
    contained: bool

    @property
    def holds(self) -> bool:
        return self.contained and self.left_dim == self.right_dim

    def __bool__(self) -> bool:
        return self.holds


def _left_system(g: LayeredGraph, v: str, j: int, l: int) -> ExactMatrix:
    k = l + 2
    cols = [m for w in _below_exactly(g, v, j) for m in enumerate_linked(g, w, k)]
    return deletion_system(cols, k, positions=range(0, k))


def _check_range(g: LayeredGraph, v: str, j: int, l: int) -> bool:
    if g.levels[v] < 2 or j < 1 or l < 0:
        raise OutOfRange(f"need level(v) >= 2, j >= 1, l >= 0; got {g.levels[v]}, {j}, {l}")
    return l + j + 2 <= g.levels[v]


def in_left_space(g: LayeredGraph, v: str, j: int, l: int, vector: Mapping) -> bool:
    """Membership in P_j(v) V^(l+1) ∩ R^(l+2): zero-sum over first factors j below v."""
    vec = {m: Fraction(c) for m, c in vector.items() if c}
    below = set(_below_exactly(g, v, j))
    if any(len(m) != l + 2 or m[0] not in below or not is_linked(g, m) for m in vec):
        return False
    return not deletion_system(list(vec), l + 2, positions=range(0, l + 2)).apply(vec)


def _delete_first(vec: Mapping) -> dict:
    out: dict = {}
    for m, c in vec.items():
        out[m[1:]] = out.get(m[1:], 0) + c
    return {m: c for m, c in out.items() if c}


def sufficient_condition(g: LayeredGraph, v: str, j: int, l: int, modular: bool = False) -> SufficientCondition:
    """Compare P_j(v) V^(l+1) ∩ R^(l+2) with g(S_(j-1)(v) V^(l+2) ∩ R^(l+3)).

    P_j(v) is the zero-sum part of the span of vertices exactly j levels
    below v, S_0(v) is span{v}, and g sums out the first factor.  Both sides
    live in linked spans; when l + j + 2 > level(v) both are zero.
    """
    if not _check_range(g, v, j, l):
        return SufficientCondition(v, j, l, 0, 0, True)
    left = _left_system(g, v, j, l)
    left_dim = kernel_dim(left, modular)
    k = l + 3
    images = []
    for u in _below_exactly(g, v, j - 1):
        cols = prune(enumerate_linked(g, u, k), range(1, k))
        if cols:
            images += [_delete_first(x) for x in deletion_system(cols, k).nullspace()]
    images = [x for x in images if x]
    right_dim = ExactMatrix.from_vectors(images).rank(modular) if images else 0
    contained = all(in_left_space(g, v, j, l, x) for x in images)
    return SufficientCondition(v, j, l, left_dim, right_dim, contained)


def sufficient_condition_instances(g: LayeredGraph) -> Iterator[tuple[str, int, int]]:
    """All (v, j, l) with level(v) >= 2 for which the two sides are not trivially zero."""
    for v in g.generators:
        n = g.levels[v]
        for j in range(1, n - 1):
            for l in range(0, n - j - 1):
                yield v, j, l


def sufficient_condition_all(g: LayeredGraph, modular: bool = False,
                             stop_on_failure: bool = True) -> tuple[bool, list[SufficientCondition]]:
    """Run every instance; returns (all hold, results or failures)."""
    results = []
    for v, j, l in sufficient_condition_instances(g):
        r = sufficient_condition(g, v, j, l, modular)
        results.append(r)
        if not r and stop_on_failure:
            return False, results
    return all(results), results


# verdict

CRITERIA = {
    "hilbert_inverse": "signed chain sums over the vertex poset",
    "dual_hilbert": "kernel dimensions of factor-deletion maps on linked monomials (graded relations)",
    "residual": "H(A,z)^-1 - H(A^!,-z); zero iff numerically Koszul",
    "b_coeffs": "coefficients of H(A,z) H(A^!,-z)",
    "screen_pass": "non-negativity of H(A,-z)^-1",
    "verdict": "residual, then the kernel/image sufficient condition, then height <= 4",
}


@dataclass
class KoszulReport:
    hilbert_inverse: IntPolynomial
    dual_hilbert: IntPolynomial
    residual: IntPolynomial
    b_coeffs: list[int]
    screen_pass: bool
    verdict: Verdict
    height: int
    sufficient_failure: SufficientCondition | None = None
    distributive: bool | None = None
    metadata: dict = field(default_factory=lambda: dict(CRITERIA))

    def to_json(self) -> dict:
        fail = self.sufficient_failure
        return {
            "hilbert_inverse": self.hilbert_inverse.to_json(),
            "hilbert_inverse_str": str(self.hilbert_inverse),
            "dual_hilbert": self.dual_hilbert.to_json(),
            "dual_hilbert_str": str(self.dual_hilbert),
            "residual": self.residual.to_json(),
            "b_coeffs": list(self.b_coeffs),
            "screen_pass": self.screen_pass,
            "verdict": self.verdict.value,
            "height": self.height,
            "sufficient_failure": None if fail is None else {
                "v": fail.v, "j": fail.j, "l": fail.l, "left_dim": fail.left_dim,
                "right_dim": fail.right_dim, "contained": fail.contained},
            "distributive": self.distributive,
            "metadata": dict(self.metadata),
        }

    @classmethod
    def from_json(cls, d: dict) -> "KoszulReport":
        fail = d.get("sufficient_failure")
        return cls(
            hilbert_inverse=IntPolynomial(d["hilbert_inverse"]),
            dual_hilbert=IntPolynomial(d["dual_hilbert"]),
            residual=IntPolynomial(d["residual"]),
            b_coeffs=list(d["b_coeffs"]),
            screen_pass=d["screen_pass"],
            verdict=Verdict(d["verdict"]),
            height=d["height"],
            sufficient_failure=None if fail is None else SufficientCondition(**fail),
            distributive=d.get("distributive"),
            metadata=dict(d.get("metadata", {})),
        )


def koszul_verdict(g: LayeredGraph, modular: bool = False) -> KoszulReport:
    inv = hilbert_inverse(g)
    dual = dual_hilbert(g, modular)
    residual = inv - dual.negate_variable()
    screen, _ = positivity_screen(g)
    b = b_coefficients(g, max(4, 2 * g.height), dual=dual)
    report = KoszulReport(inv, dual, residual, b, screen, Verdict.INCONCLUSIVE, g.height)
    if residual:
        report.verdict = Verdict.NOT_NUMERICALLY_KOSZUL
        return report
    ok, results = sufficient_condition_all(g, modular)
    if ok:
        report.verdict = Verdict.KOSZUL_BY_PROP6_1
        return report
    report.sufficient_failure = results[-1]
    if g.height <= 4:
        report.verdict = Verdict.KOSZUL_BY_HEIGHT_LE4
        report.distributive = distributivity_check(g, modular)
    return report
