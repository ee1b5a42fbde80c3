"""Exact Rayleigh-Schroedinger series for ladder Hamiltonians.

Everything here works in units of the level spacing, with ``u = v/E`` kept
symbolic, so results depend only on the band offsets and the dimension.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

from .exact import DEFAULT_ORDER_CAP, USeries, format_rational, series_eval
from .model import ModelSpec, neighbors


@dataclass(frozen=True)
class LeadingTerm:
    """``coeff * u**power_m``; ``power_m is None`` marks an identically vanishing amplitude."""

    power_m: int | None
    coeff: Fraction

    @property
    def vanishes(self) -> bool:
        return self.power_m is None

    def as_series(self, order_cap: int = DEFAULT_ORDER_CAP) -> USeries:
        if self.power_m is None or self.power_m > order_cap:
            return USeries.zero(order_cap)
        return USeries.monomial(self.coeff, self.power_m, order_cap)

    def __str__(self) -> str:
        if self.power_m is None:
            return "0"
        return f"{format_rational(self.coeff)} u^{self.power_m}"


@dataclass(frozen=True)
class SeriesState:
    """Perturbed state built on unperturbed level ``ref_index``.

    Intermediate normalization: ``amplitudes[ref_index]`` is exactly 1.
    ``energy_series`` is in units of E (its order-0 term is ``ref_index``).
    """

    ref_index: int
    energy_series: USeries
    amplitudes: tuple

    @property
    def order(self) -> int:
        return self.energy_series.order_cap

    def evaluate(self, u: float, normalize: bool = False) -> np.ndarray:
        vec = np.array([series_eval(a, u) for a in self.amplitudes])
        if normalize:
            vec = vec / np.linalg.norm(vec)
        return vec

    def norm_series(self) -> USeries:
        total = USeries.zero(self.order)
        for a in self.amplitudes:
            total = total + a * a
        return total

    def unit_normalized(self) -> tuple:
        """Amplitude series divided by the formal square root of the norm series."""
        scale = self.norm_series().inv_sqrt()
        return tuple(a * scale for a in self.amplitudes)

    def to_json(self) -> dict:
        return {
            "ref": self.ref_index,
            "energy": self.energy_series.to_json(),
            "amplitudes": [a.to_json() for a in self.amplitudes],
        }

    @classmethod
    def from_json(cls, d: dict) -> "SeriesState":
        return cls(
            int(d["ref"]),
            USeries.from_json(d["energy"]),
            tuple(USeries.from_json(a) for a in d["amplitudes"]),
        )


def _check_index(spec: ModelSpec, k: int, what: str) -> None:
    if not 0 <= k < spec.dim:
        raise ValueError(f"{what} {k} out of range 0..{spec.dim - 1}")


def band_distances(spec: ModelSpec, ref_index: int) -> list[int | None]:
    """Minimum number of band steps from ``ref_index`` to each level (BFS)."""
    _check_index(spec, ref_index, "ref_index")
    dist: list[int | None] = [None] * spec.dim
    dist[ref_index] = 0
    queue = deque([ref_index])
    while queue:
        n = queue.popleft()
        for m in neighbors(spec, n):
            if dist[m] is None:
                dist[m] = dist[n] + 1
                queue.append(m)
    return dist


def rs_series(spec: ModelSpec, ref_index: int, order: int = DEFAULT_ORDER_CAP) -> SeriesState:
    """Order-by-order perturbation expansion of the state built on ``ref_index``.

    For ``n != r`` and order ``k >= 1``::

        (n - r) c_n[k] = -(W c[k-1])_n + sum_{j=1}^{k-1} eps[j] c_n[k-j]
        eps[k] = (W c[k-1])_r
    """
    _check_index(spec, ref_index, "ref_index")
    if not 1 <= order:
        raise ValueError(f"order must be >= 1, got {order}")
    return _rs_cached(spec.dim, spec.offsets, ref_index, order)


@lru_cache(maxsize=256)
def _rs_cached(dim: int, offsets: frozenset, r: int, order: int) -> SeriesState:
    spec = ModelSpec(dim=dim, offsets=offsets)
    nbrs = [neighbors(spec, n) for n in range(dim)]
    # coeffs[k][n] = c_n^{(k)}
    coeffs = [[Fraction(0)] * dim]
    coeffs[0][r] = Fraction(1)
    eps = [Fraction(r)]
    for k in range(1, order + 1):
        prev = coeffs[k - 1]
        wc = [sum((prev[m] for m in nbrs[n]), Fraction(0)) for n in range(dim)]
        eps.append(wc[r])
        cur = [Fraction(0)] * dim
        for n in range(dim):
            if n == r:
                continue
            rhs = -wc[n]
            for j in range(1, k):
                if eps[j]:
                    rhs += eps[j] * coeffs[k - j][n]
            cur[n] = rhs / (n - r)
        coeffs.append(cur)
    amps = tuple(
        USeries((coeffs[k][n] for k in range(order + 1)), order) for n in range(dim)
    )
    return SeriesState(r, USeries(eps, order), amps)


def _walk_sum(spec: ModelSpec, ref: int, target: int, length: int,
              dist_to_target: list) -> Fraction:
    total = Fraction(0)
    # depth-first over walks ref -> target of exactly `length` steps
    stack = [(ref, 0, Fraction(1))]
    while stack:
        state, steps, weight = stack.pop()
        if steps == length:
            if state == target:
                total += weight
            continue
        remaining = length - steps - 1
        for nxt in neighbors(spec, state):
            if nxt == ref:
                continue
            d = dist_to_target[nxt]
            if d is None or d > remaining:
                continue
            stack.append((nxt, steps + 1, weight / (ref - nxt)))
    return total


def path_leading(spec: ModelSpec, ref_index: int, target: int) -> LeadingTerm:
    """Lowest-order amplitude of level ``target`` in the state built on ``ref_index``.

    Sums over every shortest walk; each step into level ``s`` contributes the
    energy denominator ``1/(ref - s)`` (units of E, coupling u per step).
    If those walks cancel exactly, the leading term is read off the full
    series instead (``power_m is None`` if it vanishes to the default cap).
    """
    _check_index(spec, ref_index, "ref_index")
    _check_index(spec, target, "target")
    if target == ref_index:
        raise ValueError("target must differ from ref_index")
    m = band_distances(spec, ref_index)[target]
    if m is None:
        return LeadingTerm(None, Fraction(0))
    coeff = _walk_sum(spec, ref_index, target, m, band_distances(spec, target))
    if coeff == 0:
        # shortest walks cancel; the series knows the true leading order
        k, c = rs_series(spec, ref_index, DEFAULT_ORDER_CAP).amplitudes[target].leading()
        return LeadingTerm(k, c)
    return LeadingTerm(m, coeff)


def leading_vector(spec: ModelSpec, ref_index: int) -> list[LeadingTerm]:
    """``path_leading`` for every component, with ``1`` at the reference level."""
    out = []
    for j in range(spec.dim):
        out.append(LeadingTerm(0, Fraction(1)) if j == ref_index
                   else path_leading(spec, ref_index, j))
    return out


# steps kept to the left/right of the reference in the interior rows of the
# printed weak-coupling table; the first and last rows are printed in full
PRINTED_WINDOW = (4, 3)


def table4_row(dim: int, k: int, window: tuple[int, int] | None = None) -> list[LeadingTerm]:
    """Closed-form weak-coupling eigenvector ``k`` of the tridiagonal ladder.

    Component ``j`` is ``u^(k-j)/(k-j)!`` below ``k`` and ``(-u)^(j-k)/(j-k)!``
    above it.  With ``window=(left, right)`` components more than ``left``
    steps below or ``right`` steps above ``k`` are zeroed for interior ``k``,
    mimicking the truncated rows of the published table.
    """
    if dim < 2:
        raise ValueError("dim must be >= 2")
    if not 0 <= k < dim:
        raise ValueError(f"k={k} out of range 0..{dim - 1}")
    row = []
    interior = 0 < k < dim - 1
    for j in range(dim):
        d = j - k
        if window is not None and interior and (-d > window[0] or d > window[1]):
            row.append(LeadingTerm(None, Fraction(0)))
            continue
        sign = -1 if d > 0 and d % 2 else 1
        row.append(LeadingTerm(abs(d), Fraction(sign, factorial(abs(d)))))
    return row
