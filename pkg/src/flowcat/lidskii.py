"""Volumes and lattice-point counts of flow polytopes via composition sums.

Implements the Baldoni-Vergne composition-indexed expansions of the normalized
volume and of the lattice-point count, the Postnikov-Stanley indegree
specialization for netflow (1,0,...,0,-1), and an independent Ehrhart
interpolation oracle that uses nothing but Kostant evaluations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .compositions import binomial, multinomial, weak_compositions
from .core import Multigraph, degree_offsets, kostant


class NotFullDimensionalError(ValueError):
    """The flow polytope is not full-dimensional in R^{N-n}, so the
    interpolation degree would be wrong; raised instead of a bad volume."""


def _check_netflow(G: Multigraph, netflow: Sequence[int]) -> tuple[int, ...]:
    a = tuple(int(x) for x in netflow)
    if len(a) != G.vertex_count:
        raise ValueError("netflow length must equal the vertex count")
    if sum(a) != 0:
        raise ValueError("netflow entries must sum to zero")
    if any(x < 0 for x in a[:-1]):
        raise ValueError("netflow entries before the last must be nonnegative")
    return a


def lidskii_volume(G: Multigraph, netflow: Sequence[int], prune: bool = True) -> int:
    """Normalized volume of F_G(netflow) as a weak-composition sum.

    vol = sum over i |= N-n of multinomial(N-n; i) * prod a_k^{i_k}
          * K_{G'}(i - t), with G' the restriction to [n] and t the outdegree
    offsets.  With prune=True, compositions putting weight on a zero netflow
    entry are skipped outright (their term vanishes since 0^positive = 0).
    """
    a = _check_netflow(G, netflow)
    if not G.is_connected():
        raise ValueError("graph must be connected")
    n = G.vertex_count - 1
    N = G.edge_count
    t, _ = degree_offsets(G)
    Gp = G.restriction(n)
    mask = [x > 0 for x in a[:n]] if prune else None
    total = 0
    for comp in weak_compositions(N - n, n, mask):
        coeff = multinomial(N - n, comp)
        for ak, ik in zip(a, comp):
            coeff *= ak**ik  # 0**0 == 1, as the expansion requires
            if coeff == 0:
                break
        if coeff == 0:
            continue
        k = kostant(Gp, tuple(ik - tk for ik, tk in zip(comp, t)))
        total += coeff * k
    return total


def lidskii_points(G: Multigraph, netflow: Sequence[int]) -> int:
    """Lattice-point count of F_G(netflow) as a binomial-weighted sum.

    Equals K_G(netflow) exactly; the two routes are compared in the tests.
    """
    a = _check_netflow(G, netflow)
    if not G.is_connected():
        raise ValueError("graph must be connected")
    n = G.vertex_count - 1
    N = G.edge_count
    t, _ = degree_offsets(G)
    Gp = G.restriction(n)
    total = 0
    for comp in weak_compositions(N - n, n):
        coeff = 1
        for ak, tk, ik in zip(a, t, comp):
            coeff *= binomial(ak + tk, ik)
            if coeff == 0:
                break
        if coeff == 0:
            continue
        k = kostant(Gp, tuple(ik - tk for ik, tk in zip(comp, t)))
        total += coeff * k
    return total


def ps_volume(G: Multigraph) -> int:
    """Volume of F_G(1,0,...,0,-1) from indegree offsets alone.

    Returns K_G(0, d_2, ..., d_{n-1}, -sum d_i) with d_i = indeg(i) - 1,
    following the Postnikov-Stanley specialization.
    """
    n = G.vertex_count
    if n < 2:
        raise ValueError("graph needs at least 2 vertices")
    _, d = degree_offsets(G)
    middle = d[1 : n - 1]
    vec = (0,) + middle + (-sum(middle),)
    return kostant(G, vec)


@dataclass(frozen=True)
class EhrhartPolynomial:
    """Exact Ehrhart polynomial, constant term first."""

    coefficients: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t: int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    @property
    def normalized_volume(self) -> int:
        lead = self.coefficients[-1] * factorial(self.degree)
        if lead.denominator != 1:
            raise ArithmeticError("leading term times degree! is not integral")
        return int(lead)


def has_interior_flow(G: Multigraph, netflow: Sequence[int]) -> bool:
    """Whether F_G(netflow) contains a strictly positive flow.

    Since every edge points forward and only the last vertex has negative
    netflow, a flow decomposes into source-to-sink paths; edge (i, j) can
    carry flow iff some source with positive supply reaches i and j reaches
    the sink.  Averaging witnesses gives a point positive on every edge.
    """
    a = _check_netflow(G, netflow)
    n1 = G.vertex_count
    succ: dict[int, set[int]] = {v: set() for v in range(1, n1 + 1)}
    for i, j, _ in G.edges:
        succ[i].add(j)

    def reaches(src: int, dst: int) -> bool:
        if src == dst:
            return True
        seen, stack = {src}, [src]
        while stack:
            for w in succ[stack.pop()]:
                if w == dst:
                    return True
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return False

    sources = [v for v in range(1, n1) if a[v - 1] > 0]
    for i, j, _ in G.edges:
        if not any(reaches(s, i) for s in sources):
            return False
        if not reaches(j, n1):
            return False
    return True


def ehrhart_polynomial(G: Multigraph, netflow: Sequence[int]) -> EhrhartPolynomial:
    """Interpolate t -> K_G(t * netflow) at t = 0..N-n, exactly.

    Verifies the interpolant at two extra nodes; a mismatch there, or the
    absence of a strictly positive flow, means the polytope is not
    full-dimensional and NotFullDimensionalError is raised.
    """
    a = _check_netflow(G, netflow)
    if not G.is_connected():
        raise ValueError("graph must be connected")
    d = G.edge_count - (G.vertex_count - 1)
    if not has_interior_flow(G, a):
        raise NotFullDimensionalError(
            "no strictly positive flow exists; the polytope has dimension < N - n"
        )
    values = [kostant(G, tuple(t * x for x in a)) for t in range(d + 3)]
    coeffs = _lagrange(values[: d + 1])
    poly = EhrhartPolynomial(tuple(coeffs))
    for t in (d + 1, d + 2):
        if poly(t) != values[t]:
            raise NotFullDimensionalError(
                f"interpolant fails at t={t}; degree is below {d}"
            )
    if d > 0 and poly.coefficients[-1] == 0:
        raise NotFullDimensionalError("leading Ehrhart coefficient vanishes")
    return poly


def _lagrange(values: Sequence[int]) -> list[Fraction]:
    """Exact coefficients of the interpolant through (t, values[t]), t=0..d."""
    d = len(values) - 1
    coeffs = [Fraction(0)] * (d + 1)
    for node, val in enumerate(values):
        # basis polynomial prod_{m != node} (x - m) / (node - m)
        basis = [Fraction(1)]
        denom = 1
        for m in range(d + 1):
            if m == node:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= m * basis[k + 1]
            denom *= node - m
        for k in range(len(basis)):
            coeffs[k] += Fraction(val, denom) * basis[k]
    return coeffs
