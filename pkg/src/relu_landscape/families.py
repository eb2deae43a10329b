"""The seven critical-point families of the ``k = d`` ReLU landscape.

Every family lives in one block fixed-point subspace (``p = 0..3``) and is
described by half-power expansions ``a_i(d) = sum_m c_m d^(-m/2)`` of its
template coefficients and of its loss. The expansions seed Newton solves at
large ``d``; exact points at moderate ``d`` are reached by continuation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import pi

from .symmetry import CLASS_NAMES, IsotropyFamily

PI2, PI3 = pi**2, pi**3

_A1_NEG = {0: -1.0, 2: 2.0, 4: -4.0 + 16.0 / pi}
_A2_NEG = {2: 2.0, 4: -2.0 + 8.0 / pi}
_A5_POS = {0: -1.0, 2: 8.0 / PI2 + 2.0 + 8.0 / pi, 3: -1.6994316812776071}
_A5_NEG = {0: 1.0, 2: 8.0 * (pi - 1.0) / PI2, 3: -4.798751223026084}
_A4_POS = {2: 4.0 / pi, 3: 32.0 / PI3}
_A4_NEG = {2: 2.0 - 4.0 / pi, 3: 32.0 * (1.0 - pi) / PI3}
_A6_POS = {2: 1.9227555703817034, 3: 0.7702176006881354}
_A6_NEG = {2: 0.07724442961829656, 3: 0.41174913476446423}

# loss expansion shared by the families whose rows point away from the teacher
_LOSS_NEG = {0: 0.5 - 1.0 / pi, 1: -4.0 / (3.0 * pi)}


@dataclass(frozen=True)
class FamilySpec:
    """One family: its block split, coefficient expansions and loss expansion.

    ``series[i]`` maps ``m`` to the coefficient of ``d^(-m/2)`` in ``a_i``.
    A value of ``None`` marks a coefficient with no known closed form.
    """

    name: str
    p: int
    series: dict[int, dict[int, float | None]]
    loss_series: dict[int, float]
    aliases: tuple[str, ...] = field(default=())

    @property
    def isotropy(self) -> IsotropyFamily:
        return IsotropyFamily.from_p(self.p)

    @property
    def m(self) -> int:
        return len(self.series)

    def seed(self, d: float) -> list[float]:
        """Truncated expansions at ``d``; unknown coefficients count as zero."""
        return [
            sum((c or 0.0) * d ** (-k / 2) for k, c in self.series[i].items())
            for i in range(1, self.m + 1)
        ]

    def loss_leading(self, d: float) -> float:
        return sum(c * d ** (-k / 2) for k, c in self.loss_series.items())


FAMILIES: dict[str, FamilySpec] = {
    f.name: f
    for f in [
        FamilySpec("identity", 0, {1: {0: 1.0}, 2: {}}, {}, ("global", "full_diag")),
        FamilySpec(
            "typeA", 0, {1: _A1_NEG, 2: _A2_NEG},
            {**_LOSS_NEG, 2: -0.5 - 2.0 / PI2 + 3.0 / pi},
        ),
        FamilySpec(
            "typeII", 1,
            {
                1: {0: 1.0, 4: 8.0 / pi},
                2: {4: -4.0 / pi},
                3: {2: 2.0, 4: -8.0 / pi - 2.0},
                4: {**_A4_POS, 4: -6.064989502452349},
                5: {**_A5_POS, 4: -35.3940633374259},
            },
            {2: 0.5 - 2.0 / PI2},
        ),
        FamilySpec(
            "typeI", 1,
            {
                1: _A1_NEG,
                2: _A2_NEG,
                3: {4: 4.0 * (4.0 - 3.0 * pi) / PI2},
                4: {**_A4_NEG, 4: 2.8554160851038795},
                5: {**_A5_NEG, 4: None},
            },
            {**_LOSS_NEG, 2: -1.0 - 4.0 / PI2 + 5.0 / pi},
        ),
        FamilySpec(
            "typeM_II", 2,
            {
                1: {0: 1.0, 4: 16.0 / pi},
                2: {4: -8.0 / pi},
                3: {2: 2.0, 4: -4.469234659852029},
                4: {**_A4_POS, 4: -6.344394898357116},
                5: {**_A5_POS, 4: -42.65030990242536},
                6: {**_A6_POS, 4: -14.151902840778268},
            },
            {2: 1.0 - 4.0 / PI2},
        ),
        FamilySpec(
            "typeM_I", 2,
            {
                1: {0: -1.0, 2: 2.0, 4: -4.0 + 24.0 / pi},
                2: {2: 2.0, 4: -2.0 + 12.0 / pi},
                3: {4: -2.2758241255463805},
                4: {**_A4_NEG, 4: 3.1348214810086463},
                5: {**_A5_NEG, 4: 5.550102229956092},
                6: {**_A6_NEG, 4: -2.911823978685281},
            },
            {**_LOSS_NEG, 2: -1.5 - 6.0 / PI2 + 7.0 / pi},
        ),
        FamilySpec(
            "typeN_II", 3,
            {
                1: {0: 1.0, 4: 24.0 / pi},
                2: {4: -12.0 / pi},
                3: {2: 2.0, 4: -4.391990230233732},
                4: {**_A4_POS, 4: -6.623800294261883},
                5: {**_A5_POS, 4: -49.23117498612849},
                6: {**_A6_POS, 4: -14.570790474991952},
            },
            {2: 1.5 - 6.0 / PI2},
        ),
    ]
}


def get_family(name: str) -> FamilySpec:
    """Look a family up by name or alias (case-insensitive)."""
    key = name.strip().lower()
    for f in FAMILIES.values():
        if key == f.name.lower() or key in f.aliases:
            return f
    raise KeyError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")


def isotropy_from_name(name: str) -> IsotropyFamily:
    """Accept a block-class name (``split1``) or a family name (``typeII``)."""
    key = name.strip().lower()
    if key in CLASS_NAMES:
        return CLASS_NAMES[key]
    return get_family(name).isotropy
