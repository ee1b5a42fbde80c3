"""Transition strengths between ladder eigenstates.

The one-body operators connect neighbouring levels only.  ``T1`` has unit
matrix elements on every link ``n <-> n+1``; ``T2`` has ``sqrt(n+1)``.  The
amplitude between states ``a`` and ``b`` is::

    O = sum_n t_n (a_n b_{n+1} + b_n a_{n+1})

and the strength is ``O**2``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exact import DEFAULT_ORDER_CAP, USeries
from .model import ModelSpec, build_hamiltonian
from .rspt import (PRINTED_WINDOW, LeadingTerm, leading_vector, rs_series,
                   table4_row)
from .spectral import EigenSystem, decompose

NEG_INF = float("-inf")
T2_ZERO_TOL = 1e-12


class TransitionKind(str, enum.Enum):
    T1 = "T1"
    T2 = "T2"

    def weights(self, dim: int) -> np.ndarray:
        """Link weights ``t_n`` for ``n = 0 .. dim-2``."""
        if self is TransitionKind.T1:
            return np.ones(dim - 1)
        return np.sqrt(np.arange(1, dim, dtype=float))


class SeriesMode(str, enum.Enum):
    TABLE4 = "table4"
    FULL_RS = "full_rs"


class ZeroStrengthError(ArithmeticError):
    """A sampled amplitude was exactly zero, so no log-log slope exists."""


@dataclass(frozen=True)
class StrengthRecord:
    from_state: int
    to_state: int
    e_star: float
    amplitude_O: float
    strength: float
    ln_strength: float

    @classmethod
    def from_amplitude(cls, from_state, to_state, e_star, o) -> "StrengthRecord":
        s = o * o
        return cls(from_state, to_state, float(e_star), float(o), float(s),
                   math.log(s) if s > 0 else NEG_INF)


@dataclass(frozen=True)
class LeadingStrength:
    """Weak-coupling form ``O ~ coeff_A * u**power_m``.

    ``coeff_A`` is an exact fraction for T1 and a float for T2.  ``power_m``
    is ``None`` when every coefficient up to ``series`` cap vanishes.
    """

    power_m: int | None
    coeff_A: Fraction | float
    mode: SeriesMode
    kind: TransitionKind
    series: tuple = ()

    def ln_strength(self, u: float) -> float:
        """``ln(O**2)`` keeping only the leading term."""
        if self.power_m is None:
            return NEG_INF
        return 2.0 * (self.power_m * math.log(u) + math.log(abs(float(self.coeff_A))))


def transition_amplitude(a: np.ndarray, b: np.ndarray, weights: np.ndarray) -> float:
    return float(np.sum(weights * (a[:-1] * b[1:] + b[:-1] * a[1:])))


def _check_states(spec: ModelSpec, *states: int) -> None:
    for s in states:
        if not 0 <= s < spec.dim:
            raise ValueError(f"state {s} out of range 0..{spec.dim - 1}")


def strength_profile(spec: ModelSpec, kind: TransitionKind | str,
                     from_state: int = 0, eigensystem: EigenSystem | None = None
                     ) -> list[StrengthRecord]:
    """Strength from ``from_state`` to every other eigenstate, ordered by target."""
    kind = TransitionKind(kind)
    _check_states(spec, from_state)
    es = eigensystem if eigensystem is not None else decompose(build_hamiltonian(spec))
    w = kind.weights(spec.dim)
    a = es.vector(from_state)
    lam = es.eigenvalues
    out = []
    for k in range(spec.dim):
        if k == from_state:
            continue
        o = transition_amplitude(a, es.vector(k), w)
        out.append(StrengthRecord.from_amplitude(from_state, k, lam[k] - lam[from_state], o))
    return out


def strength_numeric(spec: ModelSpec, kind: TransitionKind | str,
                     from_state: int, to_state: int) -> StrengthRecord:
    _check_states(spec, from_state, to_state)
    if from_state == to_state:
        raise ValueError("from_state and to_state must differ")
    kind = TransitionKind(kind)
    es = decompose(build_hamiltonian(spec))
    o = transition_amplitude(es.vector(from_state), es.vector(to_state),
                             kind.weights(spec.dim))
    return StrengthRecord.from_amplitude(
        from_state, to_state, es.eigenvalues[to_state] - es.eigenvalues[from_state], o)


def _windowed(terms: list[LeadingTerm], ref: int, window) -> list[LeadingTerm]:
    if window is None or ref in (0, len(terms) - 1):
        return terms
    left, right = window
    return [t if -left <= j - ref <= right else LeadingTerm(None, Fraction(0))
            for j, t in enumerate(terms)]


def leading_state_series(spec: ModelSpec, ref: int, order: int,
                         window=PRINTED_WINDOW) -> list[USeries]:
    """Per-component leading terms as series (the weak-coupling table convention)."""
    return [t.as_series(order) for t in _windowed(leading_vector(spec, ref), ref, window)]


def link_series(a: Sequence[USeries], b: Sequence[USeries]) -> list[USeries]:
    """Exact series of ``a_n b_{n+1} + b_n a_{n+1}`` for each link ``n``."""
    return [a[n] * b[n + 1] + b[n] * a[n + 1] for n in range(len(a) - 1)]


def _combine(links: list[USeries], kind: TransitionKind) -> tuple[int | None, object, tuple]:
    cap = links[0].order_cap
    if kind is TransitionKind.T1:
        total = USeries.zero(cap)
        for s in links:
            total = total + s
        m, c = total.leading()
        return m, c, total.coefficients
    w = kind.weights(len(links) + 1)
    coeffs = tuple(
        math.fsum(wn * float(s[k]) for wn, s in zip(w, links)) for k in range(cap + 1)
    )
    for k, c in enumerate(coeffs):
        if abs(c) >= T2_ZERO_TOL:
            return k, c, coeffs
    return None, 0.0, coeffs


def strength_series(spec: ModelSpec, kind: TransitionKind | str, to_state: int,
                    mode: SeriesMode | str = SeriesMode.TABLE4,
                    order: int = DEFAULT_ORDER_CAP, window=PRINTED_WINDOW) -> LeadingStrength:
    """Leading weak-coupling power and coefficient of ``O(0 -> to_state)``.

    ``table4`` composes the O-sum from each component's lowest-order term only
    (interior states truncated to ``window``); ``full_rs`` uses complete,
    unit-normalized perturbation series up to ``order``.
    """
    kind = TransitionKind(kind)
    mode = SeriesMode(mode)
    if not 1 <= to_state < spec.dim:
        raise ValueError(f"to_state {to_state} out of range 1..{spec.dim - 1}")
    if not 1 <= order:
        raise ValueError("order must be >= 1")
    if mode is SeriesMode.TABLE4:
        a = leading_state_series(spec, 0, order, window)
        b = leading_state_series(spec, to_state, order, window)
    else:
        a = rs_series(spec, 0, order).unit_normalized()
        b = rs_series(spec, to_state, order).unit_normalized()
    m, c, coeffs = _combine(link_series(a, b), kind)
    return LeadingStrength(m, c, mode, kind, coeffs)


def fit_power(spec: ModelSpec, kind: TransitionKind | str, to_state: int,
              u_list: Sequence[float], from_state: int = 0) -> float:
    """Least-squares slope of ``ln|O|`` against ``ln u`` from the numeric solver."""
    u = np.asarray(u_list, dtype=float)
    if u.size < 3:
        raise ValueError("need at least 3 coupling values")
    if np.any(u <= 0) or np.any(u > 1e-2):
        raise ValueError("coupling ratios must lie in (0, 1e-2]")
    ratios = u[1:] / u[:-1]
    if not np.allclose(ratios, ratios[0], rtol=1e-9):
        raise ValueError("u_list must be a geometric sequence")
    amps = []
    for x in u:
        rec = strength_numeric(spec.with_coupling(x * spec.spacing_E), kind,
                               from_state, to_state)
        if rec.amplitude_O == 0.0:
            raise ZeroStrengthError(f"O({from_state}->{to_state}) = 0 at u={x:g}")
        amps.append(abs(rec.amplitude_O))
    slope, _ = np.polyfit(np.log(u), np.log(amps), 1)
    return float(slope)


# ---------------------------------------------------------------------------
# Table of leading T1 amplitudes for the tridiagonal ladder

TABLE3_U = 1e-4
# ln(O^2) as printed alongside the leading-term expressions, n = 1..9
PRINTED_LN_STRENGTH = {1: 0.0, 2: -56.07, 3: -77.84, 4: -96.09, 5: -118.89,
                       6: -101.67, 7: -120.43, 8: -140.46, 9: -161.46}


@dataclass(frozen=True)
class Table3Row:
    n: int
    m: int | None
    A: Fraction
    expression: str
    ln_strength: float
    printed_ln_strength: float | None


def g_expression(a: list[LeadingTerm], b: list[LeadingTerm], power: int) -> str:
    """Write the order-``power`` coefficient as a sum of products of ``g_k = 1/k!``.

    Only meaningful for tridiagonal rows, whose entries are all ``+-1/k!``.
    """
    terms: dict[tuple, int] = {}
    for n in range(len(a) - 1):
        for x, y in ((a[n], b[n + 1]), (b[n], a[n + 1])):
            if x.power_m is None or y.power_m is None or x.power_m + y.power_m != power:
                continue
            sign = (1 if x.coeff > 0 else -1) * (1 if y.coeff > 0 else -1)
            key = tuple(sorted((p for p in (x.power_m, y.power_m) if p > 1), reverse=True))
            terms[key] = terms.get(key, 0) + sign
    # g2 = 1/2, so 2*g2*X collapses to X
    for key in list(terms):
        if 2 in key and terms[key] % 2 == 0 and terms[key]:
            rest = list(key)
            rest.remove(2)
            rest = tuple(rest)
            terms[rest] = terms.get(rest, 0) + terms.pop(key) // 2
    parts = []
    # constant-free monomials ordered by their largest index, then by length
    for key in sorted(terms, key=lambda k: (max(k, default=0), -len(k))):
        count = terms[key]
        if count == 0:
            continue
        if not key:
            body = "1"
        else:
            body = "*".join(f"g{p}" for p in key)
            if len(key) == 2 and key[0] == key[1]:
                body = f"g{key[0]}^2"
        mag = abs(count)
        text = body if mag == 1 else f"{mag}*{body}"
        parts.append(("-" if count < 0 else "+") + text)
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


def table3(dim: int = 11, u: float = TABLE3_U, order: int = DEFAULT_ORDER_CAP) -> list[Table3Row]:
    """Leading T1 amplitudes ``O(0 -> n) = A u^m`` for the tridiagonal ladder."""
    spec = ModelSpec.preset("tri", dim=dim)
    a = table4_row(dim, 0, PRINTED_WINDOW)
    rows = []
    for n in range(1, dim):
        lead = strength_series(spec, TransitionKind.T1, n, SeriesMode.TABLE4, order)
        b = table4_row(dim, n, PRINTED_WINDOW)
        expr = "0" if lead.power_m is None else g_expression(a, b, lead.power_m)
        rows.append(Table3Row(n, lead.power_m, Fraction(lead.coeff_A), expr,
                              lead.ln_strength(u), PRINTED_LN_STRENGTH.get(n)))
    return rows
