"""Constructive inverse solvers: target spectrum -> nonnegative weights.

Each solver follows the constructive existence proof for its topology.
Cycle and kite work under the sum-8 normalization and rescale back; the
path works with the raw sum 2f.  ``invert_complete`` realizes any
nonnegative tuple on a complete graph through repeated suspensions.
"""

from __future__ import annotations

import math

from dataclasses import dataclass

import numpy as np

from . import cubic
from .cubic import (
    CubicCoeffs,
    NoThreeRealRoots,
    cubic_real_roots,
    laplacian_cubic_roots,
    reduced_cubic,
    solve_cubic_real,
)
from .graphs import CYCLE4, KITE, PATH4, STAR, Topology, build_laplacian, complete
from .jacobi import spectrum_numeric
from .realizability import (
    Certificate,
    check_cycle,
    check_kite,
    check_path,
    _validate_triple,
)

#: clamp band for roundoff-negative weights and quadratic discriminants
CLAMP_TOL = 1e-9


class NotRealizable(Exception):
    """The target spectrum is outside the topology's realizable region."""

    def __init__(self, certificate: Certificate | None = None):
        self.certificate = certificate
        detail = certificate.detail if certificate else "no three real roots"
        super().__init__(detail)


class InternalInfeasible(RuntimeError):
    """A recovery step failed although the predicate passed (indicates a bug)."""


@dataclass(frozen=True)
class InverseSolution:
    topology: Topology
    weights: tuple[float, ...]
    residual: float


def _clamp_nonneg(values, scale: float = 1.0):
    out = []
    band = CLAMP_TOL * max(1.0, scale)
    for v in values:
        if v < 0.0:
            if v < -band:
                raise InternalInfeasible(f"negative weight {v} beyond clamp band")
            v = 0.0
        out.append(v)
    return out


def _quad_roots(sigma: float, prod: float) -> tuple[float, float]:
    """Roots of u^2 - sigma*u + prod, larger first; discriminant clamped at 0."""
    disc = sigma * sigma - 4.0 * prod
    if disc < 0.0:
        if disc < -CLAMP_TOL * max(1.0, sigma * sigma):
            raise InternalInfeasible(
                f"quadratic u^2 - {sigma}u + {prod} has negative discriminant {disc}"
            )
        disc = 0.0
    r = math.sqrt(disc)
    return (sigma + r) / 2.0, (sigma - r) / 2.0


def _closed_form_residual(topology: Topology, weights, target) -> float:
    got = laplacian_cubic_roots(reduced_cubic(topology, weights))
    want = sorted(target)
    return max(abs(g - w) for g, w in zip(sorted(got), want))


def invert_star(target) -> InverseSolution:
    """Star weights are the roots of the length cubic

    L^3 - (1/2)(sum)L^2 + (1/3)(sum of pairs)L - (1/4)(product) = 0;
    complex roots mean the target is not realizable.
    """
    x, y, z = _validate_triple(target)
    coeffs = CubicCoeffs(
        -0.5 * (x + y + z),
        (x * y + x * z + y * z) / 3.0,
        -0.25 * x * y * z,
    )
    try:
        roots = solve_cubic_real(coeffs)
    except NoThreeRealRoots:
        raise NotRealizable(
            Certificate(
                "star-length-cubic",
                cubic.cubic_discriminant(coeffs.p2, coeffs.p1, coeffs.p0),
                "length cubic has complex roots",
            )
        ) from None
    weights = tuple(_clamp_nonneg(roots, scale=x + y + z))
    residual = _closed_form_residual(STAR, weights, (x, y, z))
    return InverseSolution(STAR, weights, residual)


def invert_cycle(target) -> InverseSolution:
    """Cycle construction under the sum-8 normalization.

    With the largest entry written as 4 + s and the smaller remaining entry
    as t, one of two explicit (a, c, d) parameter choices applies; the edge
    weights are recovered from the quadratics u^2 - a*u + c and
    u^2 - (4-a)*u + d.
    """
    triple = _validate_triple(target)
    verdict = check_cycle(triple)
    if not verdict.realizable:
        raise NotRealizable(verdict.certificate)
    total = sum(triple)
    if total == 0.0:
        return InverseSolution(CYCLE4, (0.0, 0.0, 0.0, 0.0), 0.0)
    factor = 8.0 / total
    lam = sorted(v * factor for v in triple)  # ascending
    s = lam[2] - 4.0
    t = lam[0]  # smaller remaining entry
    if 2.0 * t + s <= 4.0:
        a = 4.0 - t
        d = t * t / 4.0
        c = (-((2 * t + s - 4.0) ** 2) - (8.0 - 3.0 * t) * (2 * t + s - 4.0) + t * (4.0 - t)) / 4.0
    else:
        a = s + t
        d = (s + t - 4.0) ** 2 / 4.0
        c = (s * s + 3.0 * s * t - 4.0 * s + t * t) / 4.0
    b = 4.0 - a
    l1, l3 = _quad_roots(a, c)
    l2, l4 = _quad_roots(b, d)
    weights = tuple(
        w / factor for w in _clamp_nonneg((l1, l2, l3, l4), scale=8.0)
    )
    residual = _closed_form_residual(CYCLE4, weights, triple)
    return InverseSolution(CYCLE4, weights, residual)


def invert_path(target) -> InverseSolution:
    """Path construction with eigenvalue sum 2f.

    The middle weight a solves a cubic and must fall in an explicit window;
    the outer weights come from u^2 - (f-a)*u + d.  The degenerate case
    with a zero entry uses a = 0 directly.
    """
    triple = _validate_triple(target)
    verdict = check_path(triple)
    if not verdict.realizable:
        raise NotRealizable(verdict.certificate)
    total = sum(triple)
    if total == 0.0:
        return InverseSolution(PATH4, (0.0, 0.0, 0.0), 0.0)
    f = total / 2.0
    lam = sorted(triple)  # ascending
    s = lam[2] - f
    t = lam[1] - lam[0]  # nonnegative spread of the remaining pair
    band = CLAMP_TOL * max(1.0, f)
    if lam[0] <= band:
        # target is (f+s, 0, f-s) up to roundoff
        d = (f * f - s * s) / 4.0
        l2, l4 = _quad_roots(f, d)
        weights = tuple(_clamp_nonneg((l2, 0.0, l4), scale=f))
        residual = _closed_form_residual(PATH4, weights, triple)
        return InverseSolution(PATH4, weights, residual)
    lin = 4.0 * (f * f - s * s) + (f - s) ** 2 - t * t
    const = (f + s) * ((f - s) ** 2 - t * t)
    roots = cubic_real_roots(-f, lin / 12.0, -const / 12.0)
    window = 6.0 * s * s + 4.0 * s * f + 2.0 * t * t - f * f
    if window < -band * f:
        raise InternalInfeasible(f"empty admissible window ({window}) after predicate passed")
    half = 0.25 * math.sqrt(max(window, 0.0))
    lo = f / 4.0 - half
    hi = min(f / 4.0 + half, f)
    admissible = [r for r in roots if lo - band <= r <= hi + band and r > band]
    if not admissible:
        raise InternalInfeasible(
            f"no cubic root in admissible window [{lo}, {hi}] (roots {roots})"
        )
    a = min(max(admissible), f)
    d = const / (16.0 * a)
    l2, l4 = _quad_roots(f - a, d)
    weights = tuple(_clamp_nonneg((l2, a, l4), scale=f))
    residual = _closed_form_residual(PATH4, weights, triple)
    return InverseSolution(PATH4, weights, residual)


def invert_kite(target) -> InverseSolution:
    """Kite construction under the sum-8 normalization.

    Sorting the target descending, the parameters are
    b = ((L1+L3) - R)/3, d = ((L1+L3) + R)/4 with
    R = sqrt((L1-L3)^2 - 2*L1*L3), and c = 4b - bd - (3/4)b^2; then
    l4 = d, l1 = 4 - b - d and l2, l3 solve u^2 - b*u + (c - b*l1).
    """
    triple = _validate_triple(target)
    verdict = check_kite(triple)
    if not verdict.realizable:
        raise NotRealizable(verdict.certificate)
    total = sum(triple)
    if total == 0.0:
        return InverseSolution(KITE, (0.0, 0.0, 0.0, 0.0), 0.0)
    factor = 8.0 / total
    lam3, _, lam1 = sorted(v * factor for v in triple)
    rsq = (lam1 - lam3) ** 2 - 2.0 * lam1 * lam3
    if rsq < 0.0:
        if rsq < -CLAMP_TOL * 64.0:
            raise InternalInfeasible(f"negative radicand {rsq} after predicate passed")
        rsq = 0.0
    r = math.sqrt(rsq)
    b = (lam1 + lam3 - r) / 3.0
    d = (lam1 + lam3 + r) / 4.0
    if b + d > 4.0 + CLAMP_TOL * 8.0:
        raise InternalInfeasible(f"b + d = {b + d} exceeds 4")
    l1 = 4.0 - b - d
    # with c = 4b - bd - (3/4)b^2 the product l2*l3 = c - b*l1 collapses to
    # (b/2)^2 exactly, so the two triangle weights are always equal
    l2 = l3 = b / 2.0
    weights = tuple(
        w / factor for w in _clamp_nonneg((l1, l2, l3, d), scale=8.0)
    )
    residual = _closed_form_residual(KITE, weights, triple)
    return InverseSolution(KITE, weights, residual)


INVERTERS = {
    "star": invert_star,
    "cycle": invert_cycle,
    "path": invert_path,
    "kite": invert_kite,
}


def suspend_spectrum(spectrum, c: float) -> np.ndarray:
    """Spectrum of the suspension with uniform new-edge weight ``c``.

    The zero eigenvalue stays, every other eigenvalue shifts by ``c`` and
    one new eigenvalue c*(n+1) appears.
    """
    spec = np.sort(np.asarray(spectrum, dtype=float))
    if spec.size == 0:
        raise ValueError("empty spectrum")
    if spec[0] > CLAMP_TOL:
        raise ValueError(f"smallest entry {spec[0]} is not a zero eigenvalue")
    if c < 0:
        raise ValueError(f"suspension weight must be nonnegative, got {c}")
    n = spec.size
    out = np.concatenate(([0.0], spec[1:] + c, [c * (n + 1)]))
    return np.sort(out)


def _complete_weight_matrix(lams_desc: list[float]) -> np.ndarray:
    m = len(lams_desc)
    w = np.zeros((m + 1, m + 1))
    if m == 1:
        w[0, 1] = w[1, 0] = lams_desc[0] / 2.0
        return w
    smallest = lams_desc[-1]
    if smallest <= 0.0:
        c = 0.0
        core_targets = lams_desc[:-1]
    else:
        c = smallest / (m + 1)
        core_targets = [max(v - c, 0.0) for v in lams_desc[:-1]]
    core = _complete_weight_matrix(core_targets)
    w[:m, :m] = core
    w[:m, m] = c
    w[m, :m] = c
    return w


def invert_complete(target) -> InverseSolution:
    """Realize any nonnegative n-tuple on K_{n+1} by nested suspensions."""
    vals = [float(v) for v in target]
    if not vals:
        raise ValueError("empty target")
    if any(v < 0 for v in vals):
        raise ValueError(f"negative target eigenvalue in {vals}")
    lams_desc = sorted(vals, reverse=True)
    wmat = _complete_weight_matrix(lams_desc)
    n1 = len(vals) + 1
    topo = complete(n1)
    weights = tuple(float(wmat[i, j]) for i, j in topo.edges)
    spec = spectrum_numeric(build_laplacian(topo, weights))
    want = np.sort(np.concatenate(([0.0], vals)))
    residual = float(np.max(np.abs(spec - want)))
    return InverseSolution(topo, weights, residual)
