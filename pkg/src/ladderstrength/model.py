"""Ladder Hamiltonians: equally spaced levels ``E_n = n E`` with a uniform
coupling ``v`` on a chosen set of off-diagonal bands."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

MAX_DIM = 64
PRESETS = ("tri", "penta", "allv")


def preset_offsets(name: str, dim: int) -> frozenset[int]:
    if name == "tri":
        return frozenset({1})
    if name == "penta":
        return frozenset({1, 2})
    if name == "allv":
        return frozenset(range(1, dim))
    raise ValueError(f"unknown model preset {name!r}")


@dataclass(frozen=True)
class ModelSpec:
    """Parameters of a ladder Hamiltonian ``H = H0 + v W``.

    ``spacing_E`` and ``coupling_v`` are in MeV; only their ratio matters for
    wave functions.
    """

    dim: int = 11
    spacing_E: float = 1.0
    coupling_v: float = 0.1
    offsets: frozenset = field(default_factory=lambda: frozenset({1}))
    name: str = "custom"

    def __post_init__(self):
        object.__setattr__(self, "offsets", frozenset(int(o) for o in self.offsets))
        if int(self.dim) != self.dim or self.dim < 2:
            raise ValueError(f"dim must be an integer >= 2, got {self.dim}")
        if self.dim > MAX_DIM:
            raise ValueError(f"dim {self.dim} exceeds the supported maximum {MAX_DIM}")
        if not self.offsets:
            raise ValueError("offsets must be nonempty")
        bad = [o for o in self.offsets if not 1 <= o <= self.dim - 1]
        if bad:
            raise ValueError(f"offsets {sorted(bad)} out of range 1..{self.dim - 1}")
        if not (np.isfinite(self.spacing_E) and self.spacing_E > 0):
            raise ValueError("spacing_E must be positive and finite")
        if not np.isfinite(self.coupling_v):
            raise ValueError("coupling_v must be finite")

    @classmethod
    def preset(cls, name: str, dim: int = 11, E: float = 1.0, v: float = 0.1) -> "ModelSpec":
        return cls(dim=dim, spacing_E=E, coupling_v=v,
                   offsets=preset_offsets(name, dim), name=name)

    @property
    def u(self) -> float:
        return self.coupling_v / self.spacing_E

    def with_coupling(self, v: float) -> "ModelSpec":
        return ModelSpec(self.dim, self.spacing_E, v, self.offsets, self.name)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["offsets"] = sorted(self.offsets)
        return {"model": d.pop("name"), "dim": d["dim"], "E": d["spacing_E"],
                "v": d["coupling_v"], "offsets": d["offsets"]}

    @classmethod
    def from_dict(cls, d: dict) -> "ModelSpec":
        return cls(dim=d["dim"], spacing_E=d["E"], coupling_v=d["v"],
                   offsets=frozenset(d["offsets"]), name=d.get("model", "custom"))


TRI = ModelSpec.preset("tri")
PENTA = ModelSpec.preset("penta")
ALLV = ModelSpec.preset("allv")


def coupling_pattern(spec: ModelSpec) -> np.ndarray:
    """0/1 matrix ``W`` with ones where ``|i - j|`` is a coupled offset."""
    idx = np.arange(spec.dim)
    dist = np.abs(idx[:, None] - idx[None, :])
    return np.isin(dist, sorted(spec.offsets)).astype(float)


def split(spec: ModelSpec) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(H0, W)`` with ``H = H0 + coupling_v * W``."""
    h0 = np.diag(np.arange(spec.dim, dtype=float) * spec.spacing_E)
    return h0, coupling_pattern(spec)


def build_hamiltonian(spec: ModelSpec) -> np.ndarray:
    h0, w = split(spec)
    # w is exactly symmetric and 0/1, so the product keeps exact symmetry
    return h0 + spec.coupling_v * w


def neighbors(spec: ModelSpec, n: int) -> list[int]:
    """Levels coupled to ``n``, ascending."""
    out = [n - o for o in spec.offsets if n - o >= 0]
    out += [n + o for o in spec.offsets if n + o < spec.dim]
    return sorted(out)
