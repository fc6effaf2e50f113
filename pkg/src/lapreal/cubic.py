"""Closed-form cubics for the nonzero part of the Laplacian spectrum.

Each four-vertex topology has a monic cubic whose roots, together with
the forced zero eigenvalue, form the Laplacian spectrum.  The
coefficients are taken from the symmetric-function systems of the
characteristic polynomials, not from det(lambda*I - L), so that the
iterative eigensolver remains an independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import (
    CYCLE_KIND,
    KITE_KIND,
    PATH_KIND,
    STAR_KIND,
    Topology,
    check_weights,
)

#: relative scale for the negative-discriminant rejection band
DISC_TOL = 1e-9

#: roots this close below zero are treated as roundoff and clamped
ZERO_CLAMP = 1e-9


@dataclass(frozen=True)
class CubicCoeffs:
    """Monic cubic lambda^3 + p2*lambda^2 + p1*lambda + p0."""

    p2: float
    p1: float
    p0: float


class NoThreeRealRoots(Exception):
    """The cubic has a pair of complex conjugate roots."""


def _star_coeffs(l1, l2, l3):
    p2 = -2.0 * (l1 + l2 + l3)
    p1 = 3.0 * (l1 * l2 + l1 * l3 + l2 * l3)
    p0 = -4.0 * l1 * l2 * l3
    return p2, p1, p0


def _cycle_coeffs(l1, l2, l3, l4):
    p2 = -2.0 * (l1 + l2 + l3 + l4)
    p1 = 3.0 * (l1 * l2 + l2 * l3 + l3 * l4 + l4 * l1) + 4.0 * (l1 * l3 + l2 * l4)
    p0 = -4.0 * (l1 * l2 * l3 + l1 * l2 * l4 + l1 * l3 * l4 + l2 * l3 * l4)
    return p2, p1, p0


def _kite_coeffs(l1, l2, l3, l4):
    p2 = -2.0 * (l1 + l2 + l3 + l4)
    p1 = 3.0 * (l1 * l2 + l1 * l3 + l2 * l3 + l2 * l4 + l3 * l4) + 4.0 * l1 * l4
    p0 = -4.0 * (l1 * l2 * l4 + l1 * l3 * l4 + l2 * l3 * l4)
    return p2, p1, p0


def reduced_cubic(topology: Topology, weights) -> CubicCoeffs:
    """Cubic whose roots are the three nonzero-slot eigenvalues."""
    w = check_weights(topology, weights)
    if topology.kind == STAR_KIND:
        coeffs = _star_coeffs(*w)
    elif topology.kind == CYCLE_KIND:
        coeffs = _cycle_coeffs(*w)
    elif topology.kind == PATH_KIND:
        # path = cycle with the v4v1 edge deleted
        coeffs = _cycle_coeffs(0.0, *w)
    elif topology.kind == KITE_KIND:
        coeffs = _kite_coeffs(*w)
    else:
        raise ValueError(
            f"no closed-form cubic for {topology.kind}(order={topology.order}); "
            "use spectrum_numeric"
        )
    return CubicCoeffs(*coeffs)


def reduced_cubic_batch(topology: Topology, weight_rows: np.ndarray):
    """Vectorized :func:`reduced_cubic`; returns (p2, p1, p0) arrays."""
    w = np.asarray(weight_rows, dtype=float)
    if w.ndim != 2 or w.shape[1] != topology.edge_count:
        raise ValueError(f"expected shape (batch, {topology.edge_count}), got {w.shape}")
    cols = [w[:, k] for k in range(w.shape[1])]
    if topology.kind == STAR_KIND:
        return _star_coeffs(*cols)
    if topology.kind == CYCLE_KIND:
        return _cycle_coeffs(*cols)
    if topology.kind == PATH_KIND:
        return _cycle_coeffs(np.zeros(w.shape[0]), *cols)
    if topology.kind == KITE_KIND:
        return _kite_coeffs(*cols)
    raise ValueError(f"no closed-form cubic for {topology.kind}")


def cubic_discriminant(p2: float, p1: float, p0: float) -> float:
    """Discriminant 18*B*C*D - 4*B^3*D + B^2*C^2 - 4*C^3 - 27*D^2 of the monic cubic."""
    return (
        18.0 * p2 * p1 * p0
        - 4.0 * p2**3 * p0
        + p2**2 * p1**2
        - 4.0 * p1**3
        - 27.0 * p0**2
    )


def _disc_tol(p2, p1, p0):
    scale = max(1.0, abs(p2), abs(p1), abs(p0))
    return DISC_TOL * scale**3


def _cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def _newton_polish(root, p2, p1, p0):
    # single guarded Newton step on the monic cubic; skipped near critical points
    f = ((root + p2) * root + p1) * root + p0
    fp = (3.0 * root + 2.0 * p2) * root + p1
    scale = max(1.0, abs(root))
    if abs(fp) > 1e-6 * scale * scale:
        root -= f / fp
    return root


def _refine_close_pair(roots: list[float], p2: float, p1: float) -> list[float]:
    """Recover a nearly repeated pair of roots through deflation.

    The trigonometric formula loses half the digits at a double root.  When
    the third root is well separated (hence accurate after polishing), the
    close pair solves u^2 - sigma*u + prod with sigma and prod read off the
    cubic's coefficients, which restores full precision.
    """
    r1, r2, r3 = roots
    d12 = r2 - r1
    d23 = r3 - r2
    scale = max(1.0, abs(r1), abs(r3))
    if d12 <= d23:
        iso, dpair, diso = r3, d12, d23
    else:
        iso, dpair, diso = r1, d23, d12
    if dpair >= 1e-3 * scale or diso <= 10.0 * dpair:
        return roots
    sigma = -p2 - iso
    prod = p1 - iso * sigma
    disc = max(sigma * sigma - 4.0 * prod, 0.0)
    r = math.sqrt(disc)
    pair = [(sigma - r) / 2.0, (sigma + r) / 2.0]
    return sorted(pair + [iso])


def cubic_real_roots(p2: float, p1: float, p0: float) -> list[float]:
    """All real roots of the monic cubic (one or three), ascending.

    Uses the trigonometric form of the depressed cubic when all roots are
    real and the Cardano branch otherwise.
    """
    p = p1 - p2 * p2 / 3.0
    q = 2.0 * p2**3 / 27.0 - p2 * p1 / 3.0 + p0
    shift = -p2 / 3.0
    h = q * q / 4.0 + p**3 / 27.0
    if h <= 0.0:
        # three real roots (p <= 0 here)
        m = 2.0 * math.sqrt(-p / 3.0) if p < 0.0 else 0.0
        if m == 0.0:
            roots = [shift, shift, shift]
        else:
            cosarg = min(1.0, max(-1.0, 3.0 * q / (p * m)))
            phi = math.acos(cosarg)
            roots = [
                m * math.cos((phi - 2.0 * math.pi * k) / 3.0) + shift for k in range(3)
            ]
        roots = [_newton_polish(r, p2, p1, p0) for r in roots]
        roots.sort()
        return _refine_close_pair(roots, p2, p1)
    sqrt_h = math.sqrt(h)
    root = _cbrt(-q / 2.0 + sqrt_h) + _cbrt(-q / 2.0 - sqrt_h) + shift
    return [_newton_polish(root, p2, p1, p0)]


def solve_cubic_real(coeffs: CubicCoeffs) -> tuple[float, float, float]:
    """The three real roots of ``coeffs``, ascending; repeated roots duplicated.

    Raises :class:`NoThreeRealRoots` when the discriminant is negative
    beyond the roundoff band.
    """
    p2, p1, p0 = coeffs.p2, coeffs.p1, coeffs.p0
    disc = cubic_discriminant(p2, p1, p0)
    if disc < -_disc_tol(p2, p1, p0):
        raise NoThreeRealRoots(f"discriminant {disc} < 0 for {coeffs}")
    roots = cubic_real_roots(p2, p1, p0)
    if len(roots) == 1:
        # discriminant within the roundoff band but Cardano saw h > 0:
        # deflate by the accurate real root and clamp the remaining pair's
        # discriminant to zero (covers near-double and near-triple roots)
        r = roots[0]
        double = -(p2 + r) / 2.0
        roots = sorted([r, double, double])
    return tuple(roots)


def laplacian_cubic_roots(coeffs: CubicCoeffs) -> tuple[float, float, float]:
    """Roots of a Laplacian cubic, with near-zero roundoff clamped to 0."""
    roots = solve_cubic_real(coeffs)
    return tuple(0.0 if -ZERO_CLAMP < r < 0.0 else r for r in roots)


def solve_cubic_real_batch(p2, p1, p0, strict: bool = True) -> np.ndarray:
    """Vectorized three-real-root solver; returns a (batch, 3) ascending array.

    With ``strict`` set, raises :class:`NoThreeRealRoots` if any row has a
    discriminant below the roundoff band.  Intended for Laplacian cubics,
    whose roots are always real.
    """
    p2 = np.asarray(p2, dtype=float)
    p1 = np.asarray(p1, dtype=float)
    p0 = np.asarray(p0, dtype=float)
    if strict:
        disc = (
            18.0 * p2 * p1 * p0
            - 4.0 * p2**3 * p0
            + p2**2 * p1**2
            - 4.0 * p1**3
            - 27.0 * p0**2
        )
        scale = np.maximum(1.0, np.maximum(np.abs(p2), np.maximum(np.abs(p1), np.abs(p0))))
        bad = disc < -DISC_TOL * scale**3
        if np.any(bad):
            idx = int(np.argmax(bad))
            raise NoThreeRealRoots(
                f"row {idx}: discriminant {disc[idx]} < 0 for "
                f"({p2[idx]}, {p1[idx]}, {p0[idx]})"
            )
    p = p1 - p2 * p2 / 3.0
    q = 2.0 * p2**3 / 27.0 - p2 * p1 / 3.0 + p0
    shift = -p2 / 3.0
    m = 2.0 * np.sqrt(np.maximum(-p, 0.0) / 3.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        cosarg = np.clip(3.0 * q / (p * m), -1.0, 1.0)
    cosarg = np.where(m > 0.0, cosarg, 1.0)
    phi = np.arccos(cosarg)
    ks = np.array([0.0, 1.0, 2.0])
    angles = (phi[:, None] - 2.0 * np.pi * ks[None, :]) / 3.0
    roots = m[:, None] * np.cos(angles) + shift[:, None]
    # single guarded Newton step to tighten simple roots
    f = ((roots + p2[:, None]) * roots + p1[:, None]) * roots + p0[:, None]
    fp = (3.0 * roots + 2.0 * p2[:, None]) * roots + p1[:, None]
    rscale = np.maximum(1.0, np.abs(roots))
    safe = np.abs(fp) > 1e-6 * rscale * rscale
    roots = np.where(safe, roots - np.where(safe, f / np.where(safe, fp, 1.0), 0.0), roots)
    roots.sort(axis=1)
    return _refine_close_pair_batch(roots, p2, p1)


def _refine_close_pair_batch(roots: np.ndarray, p2, p1) -> np.ndarray:
    """Vectorized :func:`_refine_close_pair` over a (batch, 3) root array."""
    d12 = roots[:, 1] - roots[:, 0]
    d23 = roots[:, 2] - roots[:, 1]
    scale = np.maximum(1.0, np.maximum(np.abs(roots[:, 0]), np.abs(roots[:, 2])))
    low_pair = d12 <= d23
    iso = np.where(low_pair, roots[:, 2], roots[:, 0])
    dpair = np.where(low_pair, d12, d23)
    diso = np.where(low_pair, d23, d12)
    fix = (dpair < 1e-3 * scale) & (diso > 10.0 * dpair)
    if not np.any(fix):
        return roots
    sigma = -p2 - iso
    prod = p1 - iso * sigma
    r = np.sqrt(np.maximum(sigma * sigma - 4.0 * prod, 0.0))
    lo = (sigma - r) / 2.0
    hi = (sigma + r) / 2.0
    fixed = np.stack([lo, hi, iso], axis=1)
    fixed.sort(axis=1)
    out = np.where(fix[:, None], fixed, roots)
    return out
