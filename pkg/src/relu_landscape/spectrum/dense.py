"""Dense Hessian spectra with gap clustering and isotypic labels."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..landscape import NetworkPair, hessian, scaling_tangents
from ..symmetry import detect_isotropy, reduce
from .isotypic import rep_blocks

# eigenvalues below this fraction of the spectral norm count as zero
ZERO_REL = 1e-9
# a rep eigenvalue is attributed to a cluster only if it lies this close to a member
MATCH_TOL = 1e-7


def default_gap(d) -> float:
    return max(1e-6, 0.05 / math.sqrt(d))


@dataclass
class Cluster:
    center: float
    multiplicity: int
    rep_label: str | None = None
    spread: float = 0.0
    composition: dict[str, int] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"center": self.center, "multiplicity": self.multiplicity, "rep_label": self.rep_label,
                "spread": self.spread, "composition": dict(self.composition)}


@dataclass
class SpectrumReport:
    raw: np.ndarray
    clusters: list[Cluster]
    d: int
    family: str | None = None
    mode: str = "full"
    gauge_modes: int = 0
    cluster_gap: float = 0.0

    @property
    def dimension(self) -> int:
        return sum(c.multiplicity for c in self.clusters)

    def as_dict(self, raw_path: str | None = None) -> dict:
        doc = {
            "family": self.family,
            "d": self.d,
            "mode": self.mode,
            "cluster_gap": self.cluster_gap,
            "clusters": [c.as_dict() for c in self.clusters],
            "gauge_modes": self.gauge_modes,
        }
        if raw_path is not None:
            doc["raw_path"] = raw_path
        return doc


def cluster_eigenvalues(values, gap: float) -> list[list[float]]:
    """Split the sorted values wherever consecutive ones differ by more than ``gap``."""
    vals = np.sort(np.asarray(values, dtype=float))
    if vals.size == 0:
        return []
    cuts = np.nonzero(np.diff(vals) > gap)[0] + 1
    return [list(chunk) for chunk in np.split(vals, cuts)]


def _labelled(pair: NetworkPair, first_layer_only: bool, tol: float):
    """``(value, degree, label)`` from the isotypic route, or None when the point has no block symmetry."""
    # block eigenvalues are computed in the unit second-layer gauge
    if not np.allclose(pair.alpha, 1.0, atol=tol):
        return None
    cls = detect_isotropy(pair.W, tol=tol)
    if not cls.family.named:
        return None
    r = reduce(pair, cls, tol=tol)
    out = []
    for label, block in rep_blocks(r, first_layer_only=first_layer_only).items():
        out += [(float(v), block.degree, label) for v in block.eigenvalues]
    return out


def _attach_labels(clusters: list[Cluster], members: list[list[float]], labelled) -> None:
    for c, vals in zip(clusters, members):
        lo, hi = vals[0] - MATCH_TOL, vals[-1] + MATCH_TOL
        for v, deg, label in labelled:
            if lo <= v <= hi:
                c.composition[label] = c.composition.get(label, 0) + int(round(deg))
        if len(c.composition) == 1:
            c.rep_label = next(iter(c.composition))


def full_spectrum(pair: NetworkPair, mode: str = "full", cluster_gap: float | None = None,
                  family: str | None = None, label: bool = True, symmetry_tol: float = 1e-8) -> SpectrumReport:
    """Eigenvalues of the Hessian (or of its first-layer block) grouped into clusters.

    Clusters whose eigenvalues all come from one irreducible carry its label;
    ``composition`` records how many eigenvalues each irreducible contributes.
    """
    if mode not in ("full", "first_layer_only", "first-layer"):
        raise ValueError(f"unknown mode {mode!r}")
    first_only = mode != "full"
    d = pair.d
    H = hessian(pair)
    if first_only:
        H = H[: pair.k * d, : pair.k * d]
    raw = np.linalg.eigvalsh(H)
    gap = default_gap(d) if cluster_gap is None else cluster_gap
    groups = cluster_eigenvalues(raw, gap)
    clusters = [Cluster(float(np.mean(g)), len(g), spread=float(g[-1] - g[0])) for g in groups]
    if label:
        labelled = _labelled(pair, first_only, symmetry_tol)
        if labelled is not None:
            _attach_labels(clusters, groups, labelled)
    scale = max(np.abs(raw).max(), 1e-300)
    zeros = int(np.sum(np.abs(raw) < ZERO_REL * scale))
    return SpectrumReport(raw, clusters, d, family, "first_layer_only" if first_only else "full", zeros, gap)


def gauge_forms(pair: NetworkPair, H: np.ndarray | None = None) -> np.ndarray:
    """``t^T H t`` for each unit scaling tangent ``t``."""
    H = hessian(pair) if H is None else H
    T = scaling_tangents(pair)
    T = T / np.linalg.norm(T, axis=1)[:, None]
    return np.einsum("ki,ij,kj->k", T, H, T)

