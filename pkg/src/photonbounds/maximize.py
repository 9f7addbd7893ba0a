"""Numeric maximization of radial Q profiles on ``u >= 0``.

A uniform scan locates the best sample, then golden-section search refines
the bracket around it, and a final parabolic step through three nearby samples
places smooth interior peaks below the sqrt(eps) resolution of comparisons.
The scan makes the search robust for profiles that
are not unimodal, which generic Fock sums need not be.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = ["MaxResult", "maximize_radial", "golden_section_max"]

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI2 = (3 - math.sqrt(5)) / 2


@dataclass(frozen=True)
class MaxResult:
    u_star: float
    q_max: float
    evaluations: int
    bracket: tuple[float, float]


def _finite(value, u):
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"profile returned non-finite value {value} at u={u}")
    return value


def golden_section_max(f, a, b, tol=1e-10, max_iter=500):
    """Maximize a unimodal ``f`` on ``[a, b]``.

    Stops once the bracket width is below ``tol`` relative to its midpoint
    (or ``tol**2`` times the starting width, whichever is larger, so that a
    maximum at ``u = 0`` still terminates). Returns ``(x, f(x), evaluations)``.
    """
    a, b = min(a, b), max(a, b)
    floor = tol * tol * (b - a)
    h = b - a
    c = a + INV_PHI2 * h
    d = a + INV_PHI * h
    yc, yd = _finite(f(c), c), _finite(f(d), d)
    evals = 2
    for _ in range(max_iter):
        if b - a <= max(tol * abs(0.5 * (a + b)), floor):
            break
        if yc > yd:
            b, d, yd = d, c, yc
            h = INV_PHI * h
            c = a + INV_PHI2 * h
            yc = _finite(f(c), c)
        else:
            a, c, yc = c, d, yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = _finite(f(d), d)
        evals += 1
    x, y = (c, yc) if yc > yd else (d, yd)
    return x, y, evals


def maximize_radial(profile, u_hi=None, coarse_points=1024, tol=1e-10) -> MaxResult:
    """Maximum of ``profile(u)`` over ``u`` in ``[0, u_hi]``.

    ``profile`` must accept numpy arrays. ``u_hi`` defaults to the profile's
    own ``u_ceiling()`` when it has one. A maximum at the left endpoint is
    reported as exactly ``u = 0`` once refinement confirms the profile
    decreases away from it.
    """
    if u_hi is None:
        u_hi = profile.u_ceiling()
    u_hi = float(u_hi)
    if not (math.isfinite(u_hi) and u_hi > 0):
        raise ValueError(f"u_hi must be finite and > 0, got {u_hi}")
    if coarse_points < 16:
        raise ValueError("coarse_points must be >= 16")
    if not tol > 0:
        raise ValueError("tol must be > 0")

    grid = np.linspace(0.0, u_hi, coarse_points)
    values = np.asarray(profile(grid), dtype=float)
    if not np.all(np.isfinite(values)):
        bad = grid[~np.isfinite(values)][0]
        raise ValueError(f"profile returned non-finite values (first at u={bad})")
    evals = coarse_points
    i = int(np.argmax(values))
    lo = grid[max(i - 1, 0)]
    hi = grid[min(i + 1, coarse_points - 1)]

    u_ref, q_ref, n = golden_section_max(profile, lo, hi, tol)
    evals += n

    if i == 0 and values[0] >= q_ref:
        return MaxResult(0.0, float(values[0]), evals, (float(lo), float(hi)))
    if values[i] > q_ref:
        u_ref, q_ref = float(grid[i]), float(values[i])
    elif lo < u_ref < hi:
        u_ref, q_ref, n = _parabolic_polish(profile, u_ref, q_ref, lo, hi)
        evals += n
    return MaxResult(float(u_ref), float(q_ref), evals, (float(lo), float(hi)))


def _parabolic_polish(f, u, fu, lo, hi, rel_step=1e-5, rounds=2):
    """Vertex of the parabola through three close samples.

    Comparing function values cannot place a smooth peak better than about
    sqrt(eps) in ``u``; the interpolated vertex gets to ~1e-10.
    """
    evals = 0
    for _ in range(rounds):
        h = rel_step * abs(u)
        if h == 0 or u - h < lo or u + h > hi:
            break
        fm, fp = float(f(u - h)), float(f(u + h))
        curv = fm - 2 * fu + fp
        evals += 2
        if not curv < 0:
            break
        step = 0.5 * h * (fm - fp) / curv
        if abs(step) > h:
            break
        u_new = u + step
        f_new = _finite(f(u_new), u_new)
        evals += 1
        if f_new < fu - 4 * np.finfo(float).eps * abs(fu):
            break
        u, fu = u_new, f_new
    return u, fu, evals
