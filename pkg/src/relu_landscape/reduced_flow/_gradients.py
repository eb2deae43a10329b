"""Reduced gradient entries for the four block families.

Each entry is the sum of the full loss gradient over the matrix positions
holding one template coefficient, written in terms of row norms and angles
so that ``d`` may be any real number. ``s`` maps symbol names to values
(see :class:`relu_landscape.reduced_flow.angles.AngleSet`) and ``m`` supplies
``sin``, ``cos`` and ``pi`` (``math`` or ``mpmath.mp``).

Symbols: ``nu_i`` is the norm of representative row ``i``; ``alpha_i_j`` the
angle between rows ``i`` and ``j``; ``beta_i_j`` the angle between row ``i``
and teacher row ``j``. Row labels ``d``, ``dm1``, ``dm2`` stand for rows
``d``, ``d-1``, ``d-2``.
"""
# Generated from the closed-form entries; edit the generator, not this file.



def grad_full_diag(a, d, s, m):
    """Two entries of the diagonal family."""
    a1, a2 = a
    alpha_1_2 = s["alpha_1_2"]
    beta_1_1 = s["beta_1_1"]
    beta_1_2 = s["beta_1_2"]
    nu_1 = s["nu_1"]
    sin, cos, pi = m.sin, m.cos, m.pi
    g1 = (
        ((a1 * d) / 2)
        - ((a1 * d * sin(beta_1_1)) / (2 * pi * nu_1))
        + ((a1 * (d**2 - d) * sin(alpha_1_2)) / (2 * pi))
        - ((a1 * (d**2 - d) * sin(beta_1_2)) / (2 * pi * nu_1))
        - ((a2 * alpha_1_2 * (d**2 - d)) / (2 * pi))
        + ((a2 * (d**2 - d)) / 2)
        + ((beta_1_1 * d) / (2 * pi))
        - (d / 2)
    )
    g2 = (
        - ((a1 * alpha_1_2 * (d**2 - d)) / (2 * pi))
        + ((a1 * (d**2 - d)) / 2)
        - ((a2 * alpha_1_2 * (d**3 - 3 * d**2 + 2 * d)) / (2 * pi))
        + ((a2 * (d**3 - 2 * d**2 + d) * sin(alpha_1_2)) / (2 * pi))
        + ((a2 * (d**3 - 2 * d**2 + d)) / 2)
        - ((a2 * (d**2 - d) * sin(beta_1_1)) / (2 * pi * nu_1))
        - ((a2 * (d**3 - 2 * d**2 + d) * sin(beta_1_2)) / (2 * pi * nu_1))
        + ((beta_1_2 * (d**2 - d)) / (2 * pi))
        - ((d**2) / 2)
        + (d / 2)
    )
    return [g1, g2]


def grad_split1(a, d, s, m):
    """Five entries of the one-point split."""
    a1, a2, a3, a4, a5 = a
    alpha_1_2 = s["alpha_1_2"]
    alpha_1_d = s["alpha_1_d"]
    beta_1_1 = s["beta_1_1"]
    beta_1_2 = s["beta_1_2"]
    beta_1_d = s["beta_1_d"]
    beta_d_1 = s["beta_d_1"]
    beta_d_d = s["beta_d_d"]
    nu_1 = s["nu_1"]
    nu_d = s["nu_d"]
    sin, cos, pi = m.sin, m.cos, m.pi
    g1 = (
        ((a1 * (d - 1)) / 2)
        + ((a1 * (d**2 - 3 * d + 2) * sin(alpha_1_2)) / (2 * pi))
        + ((a1 * nu_d * (d - 1) * sin(alpha_1_d)) / (2 * pi * nu_1))
        - ((a1 * (d - 1) * sin(beta_1_1)) / (2 * pi * nu_1))
        - ((a1 * (d - 1) * sin(beta_1_d)) / (2 * pi * nu_1))
        - ((a1 * (d**2 - 3 * d + 2) * sin(beta_1_2)) / (2 * pi * nu_1))
        - ((a2 * alpha_1_2 * (d**2 - 3 * d + 2)) / (2 * pi))
        + ((a2 * (d**2 - 3 * d + 2)) / 2)
        - ((a4 * alpha_1_d * (d - 1)) / (2 * pi))
        + ((a4 * (d - 1)) / 2)
        + ((beta_1_1 * (d - 1)) / (2 * pi))
        - (d / 2)
        + (1 / 2)
    )
    g2 = (
        - ((a1 * alpha_1_2 * (d**2 - 3 * d + 2)) / (2 * pi))
        + ((a1 * (d**2 - 3 * d + 2)) / 2)
        - ((a2 * alpha_1_2 * (d**3 - 6 * d**2 + 11 * d - 6)) / (2 * pi))
        + ((a2 * (d**3 - 5 * d**2 + 8 * d - 4) * sin(alpha_1_2)) / (2 * pi))
        + ((a2 * (d**3 - 5 * d**2 + 8 * d - 4)) / 2)
        + ((a2 * nu_d * (d**2 - 3 * d + 2) * sin(alpha_1_d)) / (2 * pi * nu_1))
        - ((a2 * (d**2 - 3 * d + 2) * sin(beta_1_1)) / (2 * pi * nu_1))
        - ((a2 * (d**2 - 3 * d + 2) * sin(beta_1_d)) / (2 * pi * nu_1))
        - ((a2 * (d**3 - 5 * d**2 + 8 * d - 4) * sin(beta_1_2)) / (2 * pi * nu_1))
        - ((a4 * alpha_1_d * (d**2 - 3 * d + 2)) / (2 * pi))
        + ((a4 * (d**2 - 3 * d + 2)) / 2)
        + ((beta_1_2 * (d**2 - 3 * d + 2)) / (2 * pi))
        - ((d**2) / 2)
        + ((3 * d) / 2)
        - 1
    )
    g3 = (
        - ((a3 * alpha_1_2 * (d**2 - 3 * d + 2)) / (2 * pi))
        + ((a3 * (d**2 - 3 * d + 2) * sin(alpha_1_2)) / (2 * pi))
        + ((a3 * (d**2 - 2 * d + 1)) / 2)
        + ((a3 * nu_d * (d - 1) * sin(alpha_1_d)) / (2 * pi * nu_1))
        - ((a3 * (d - 1) * sin(beta_1_1)) / (2 * pi * nu_1))
        - ((a3 * (d - 1) * sin(beta_1_d)) / (2 * pi * nu_1))
        - ((a3 * (d**2 - 3 * d + 2) * sin(beta_1_2)) / (2 * pi * nu_1))
        - ((a5 * alpha_1_d * (d - 1)) / (2 * pi))
        + ((a5 * (d - 1)) / 2)
        + ((beta_1_d * (d - 1)) / (2 * pi))
        - (d / 2)
        + (1 / 2)
    )
    g4 = (
        - ((a1 * alpha_1_d * (d - 1)) / (2 * pi))
        + ((a1 * (d - 1)) / 2)
        - ((a2 * alpha_1_d * (d**2 - 3 * d + 2)) / (2 * pi))
        + ((a2 * (d**2 - 3 * d + 2)) / 2)
        + ((a4 * nu_1 * (d**2 - 2 * d + 1) * sin(alpha_1_d)) / (2 * pi * nu_d))
        + ((a4 * (d - 1)) / 2)
        - ((a4 * (d - 1) * sin(beta_d_d)) / (2 * pi * nu_d))
        - ((a4 * (d**2 - 2 * d + 1) * sin(beta_d_1)) / (2 * pi * nu_d))
        + ((beta_d_1 * (d - 1)) / (2 * pi))
        - (d / 2)
        + (1 / 2)
    )
    g5 = (
        - ((a3 * alpha_1_d * (d - 1)) / (2 * pi))
        + ((a3 * (d - 1)) / 2)
        + ((a5 * nu_1 * (d - 1) * sin(alpha_1_d)) / (2 * pi * nu_d))
        + (a5 / 2)
        - ((a5 * (d - 1) * sin(beta_d_1)) / (2 * pi * nu_d))
        - ((a5 * sin(beta_d_d)) / (2 * pi * nu_d))
        + (beta_d_d / (2 * pi))
        - (1 / 2)
    )
    return [g1, g2, g3, g4, g5]


def grad_split2(a, d, s, m):
    """Six entries of the two-point split."""
    a1, a2, a3, a4, a5, a6 = a
    alpha_1_2 = s["alpha_1_2"]
    alpha_1_dm1 = s["alpha_1_dm1"]
    alpha_dm1_d = s["alpha_dm1_d"]
    beta_1_1 = s["beta_1_1"]
    beta_1_2 = s["beta_1_2"]
    beta_1_dm1 = s["beta_1_dm1"]
    beta_dm1_1 = s["beta_dm1_1"]
    beta_dm1_d = s["beta_dm1_d"]
    beta_dm1_dm1 = s["beta_dm1_dm1"]
    nu_1 = s["nu_1"]
    nu_dm1 = s["nu_dm1"]
    sin, cos, pi = m.sin, m.cos, m.pi
    g1 = (
        ((a1 * (d - 2)) / 2)
        + ((a1 * (d**2 - 5 * d + 6) * sin(alpha_1_2)) / (2 * pi))
        + ((a1 * nu_dm1 * (d - 2) * sin(alpha_1_dm1)) / (pi * nu_1))
        - ((a1 * (d - 2) * sin(beta_1_1)) / (2 * pi * nu_1))
        - ((a1 * (d - 2) * sin(beta_1_dm1)) / (pi * nu_1))
        - ((a1 * (d**2 - 5 * d + 6) * sin(beta_1_2)) / (2 * pi * nu_1))
        - ((a2 * alpha_1_2 * (d**2 - 5 * d + 6)) / (2 * pi))
        + ((a2 * (d**2 - 5 * d + 6)) / 2)
        - ((a4 * alpha_1_dm1 * (d - 2)) / pi)
        + a4 * (d - 2)
        + ((beta_1_1 * (d - 2)) / (2 * pi))
        - (d / 2)
        + 1
    )
    g2 = (
        - ((a1 * alpha_1_2 * (d**2 - 5 * d + 6)) / (2 * pi))
        + ((a1 * (d**2 - 5 * d + 6)) / 2)
        - ((a2 * alpha_1_2 * (d**3 - 9 * d**2 + 26 * d - 24)) / (2 * pi))
        + ((a2 * (d**3 - 8 * d**2 + 21 * d - 18) * sin(alpha_1_2)) / (2 * pi))
        + ((a2 * (d**3 - 8 * d**2 + 21 * d - 18)) / 2)
        + ((a2 * nu_dm1 * (d**2 - 5 * d + 6) * sin(alpha_1_dm1)) / (pi * nu_1))
        - ((a2 * (d**2 - 5 * d + 6) * sin(beta_1_1)) / (2 * pi * nu_1))
        - ((a2 * (d**2 - 5 * d + 6) * sin(beta_1_dm1)) / (pi * nu_1))
        - ((a2 * (d**3 - 8 * d**2 + 21 * d - 18) * sin(beta_1_2)) / (2 * pi * nu_1))
        - ((a4 * alpha_1_dm1 * (d**2 - 5 * d + 6)) / pi)
        + a4 * (d**2 - 5 * d + 6)
        + ((beta_1_2 * (d**2 - 5 * d + 6)) / (2 * pi))
        - ((d**2) / 2)
        + ((5 * d) / 2)
        - 3
    )
    g3 = (
        - ((a3 * alpha_1_2 * (d**2 - 5 * d + 6)) / pi)
        + ((a3 * (d**2 - 5 * d + 6) * sin(alpha_1_2)) / pi)
        + a3 * (d**2 - 4 * d + 4)
        + ((2 * a3 * nu_dm1 * (d - 2) * sin(alpha_1_dm1)) / (pi * nu_1))
        - ((a3 * (d - 2) * sin(beta_1_1)) / (pi * nu_1))
        - ((2 * a3 * (d - 2) * sin(beta_1_dm1)) / (pi * nu_1))
        - ((a3 * (d**2 - 5 * d + 6) * sin(beta_1_2)) / (pi * nu_1))
        - ((a5 * alpha_1_dm1 * (d - 2)) / pi)
        + a5 * (d - 2)
        - ((a6 * alpha_1_dm1 * (d - 2)) / pi)
        + a6 * (d - 2)
        + ((beta_1_dm1 * (d - 2)) / pi)
        - d
        + 2
    )
    g4 = (
        - ((a1 * alpha_1_dm1 * (d - 2)) / pi)
        + a1 * (d - 2)
        - ((a2 * alpha_1_dm1 * (d**2 - 5 * d + 6)) / pi)
        + a2 * (d**2 - 5 * d + 6)
        - ((a4 * alpha_dm1_d * (d - 2)) / pi)
        + ((a4 * nu_1 * (d**2 - 4 * d + 4) * sin(alpha_1_dm1)) / (pi * nu_dm1))
        + ((a4 * (d - 2) * sin(alpha_dm1_d)) / pi)
        + 2 * a4 * (d - 2)
        - ((a4 * (d - 2) * sin(beta_dm1_d)) / (pi * nu_dm1))
        - ((a4 * (d - 2) * sin(beta_dm1_dm1)) / (pi * nu_dm1))
        - ((a4 * (d**2 - 4 * d + 4) * sin(beta_dm1_1)) / (pi * nu_dm1))
        + ((beta_dm1_1 * (d - 2)) / pi)
        - d
        + 2
    )
    g5 = (
        - ((a3 * alpha_1_dm1 * (d - 2)) / pi)
        + a3 * (d - 2)
        + ((a5 * nu_1 * (d - 2) * sin(alpha_1_dm1)) / (pi * nu_dm1))
        + ((a5 * sin(alpha_dm1_d)) / pi)
        + a5
        - ((a5 * (d - 2) * sin(beta_dm1_1)) / (pi * nu_dm1))
        - ((a5 * sin(beta_dm1_d)) / (pi * nu_dm1))
        - ((a5 * sin(beta_dm1_dm1)) / (pi * nu_dm1))
        - ((a6 * alpha_dm1_d) / pi)
        + a6
        + (beta_dm1_dm1 / pi)
        - 1
    )
    g6 = (
        - ((a3 * alpha_1_dm1 * (d - 2)) / pi)
        + a3 * (d - 2)
        - ((a5 * alpha_dm1_d) / pi)
        + a5
        + ((a6 * nu_1 * (d - 2) * sin(alpha_1_dm1)) / (pi * nu_dm1))
        + ((a6 * sin(alpha_dm1_d)) / pi)
        + a6
        - ((a6 * (d - 2) * sin(beta_dm1_1)) / (pi * nu_dm1))
        - ((a6 * sin(beta_dm1_d)) / (pi * nu_dm1))
        - ((a6 * sin(beta_dm1_dm1)) / (pi * nu_dm1))
        + (beta_dm1_d / pi)
        - 1
    )
    return [g1, g2, g3, g4, g5, g6]


def grad_split3(a, d, s, m):
    """Six entries of the three-point split."""
    a1, a2, a3, a4, a5, a6 = a
    alpha_1_2 = s["alpha_1_2"]
    alpha_1_dm2 = s["alpha_1_dm2"]
    alpha_dm2_dm1 = s["alpha_dm2_dm1"]
    beta_1_1 = s["beta_1_1"]
    beta_1_2 = s["beta_1_2"]
    beta_1_dm2 = s["beta_1_dm2"]
    beta_dm2_1 = s["beta_dm2_1"]
    beta_dm2_dm1 = s["beta_dm2_dm1"]
    beta_dm2_dm2 = s["beta_dm2_dm2"]
    nu_1 = s["nu_1"]
    nu_dm2 = s["nu_dm2"]
    sin, cos, pi = m.sin, m.cos, m.pi
    g1 = (
        ((a1 * (d - 3)) / 2)
        + ((a1 * (d**2 - 7 * d + 12) * sin(alpha_1_2)) / (2 * pi))
        + ((3 * a1 * nu_dm2 * (d - 3) * sin(alpha_1_dm2)) / (2 * pi * nu_1))
        - ((a1 * (d - 3) * sin(beta_1_1)) / (2 * pi * nu_1))
        - ((3 * a1 * (d - 3) * sin(beta_1_dm2)) / (2 * pi * nu_1))
        - ((a1 * (d**2 - 7 * d + 12) * sin(beta_1_2)) / (2 * pi * nu_1))
        - ((a2 * alpha_1_2 * (d**2 - 7 * d + 12)) / (2 * pi))
        + ((a2 * (d**2 - 7 * d + 12)) / 2)
        - ((3 * a4 * alpha_1_dm2 * (d - 3)) / (2 * pi))
        + ((3 * a4 * (d - 3)) / 2)
        + ((beta_1_1 * (d - 3)) / (2 * pi))
        - (d / 2)
        + (3 / 2)
    )
    g2 = (
        - ((a1 * alpha_1_2 * (d**2 - 7 * d + 12)) / (2 * pi))
        + ((a1 * (d**2 - 7 * d + 12)) / 2)
        - ((a2 * alpha_1_2 * (d**3 - 12 * d**2 + 47 * d - 60)) / (2 * pi))
        + ((a2 * (d**3 - 11 * d**2 + 40 * d - 48) * sin(alpha_1_2)) / (2 * pi))
        + ((a2 * (d**3 - 11 * d**2 + 40 * d - 48)) / 2)
        + ((3 * a2 * nu_dm2 * (d**2 - 7 * d + 12) * sin(alpha_1_dm2)) / (2 * pi * nu_1))
        - ((a2 * (d**2 - 7 * d + 12) * sin(beta_1_1)) / (2 * pi * nu_1))
        - ((3 * a2 * (d**2 - 7 * d + 12) * sin(beta_1_dm2)) / (2 * pi * nu_1))
        - ((a2 * (d**3 - 11 * d**2 + 40 * d - 48) * sin(beta_1_2)) / (2 * pi * nu_1))
        - ((3 * a4 * alpha_1_dm2 * (d**2 - 7 * d + 12)) / (2 * pi))
        + ((3 * a4 * (d**2 - 7 * d + 12)) / 2)
        + ((beta_1_2 * (d**2 - 7 * d + 12)) / (2 * pi))
        - ((d**2) / 2)
        + ((7 * d) / 2)
        - 6
    )
    g3 = (
        - ((3 * a3 * alpha_1_2 * (d**2 - 7 * d + 12)) / (2 * pi))
        + ((3 * a3 * (d**2 - 7 * d + 12) * sin(alpha_1_2)) / (2 * pi))
        + ((3 * a3 * (d**2 - 6 * d + 9)) / 2)
        + ((9 * a3 * nu_dm2 * (d - 3) * sin(alpha_1_dm2)) / (2 * pi * nu_1))
        - ((3 * a3 * (d - 3) * sin(beta_1_1)) / (2 * pi * nu_1))
        - ((9 * a3 * (d - 3) * sin(beta_1_dm2)) / (2 * pi * nu_1))
        - ((3 * a3 * (d**2 - 7 * d + 12) * sin(beta_1_2)) / (2 * pi * nu_1))
        - ((3 * a5 * alpha_1_dm2 * (d - 3)) / (2 * pi))
        + ((3 * a5 * (d - 3)) / 2)
        - ((3 * a6 * alpha_1_dm2 * (d - 3)) / pi)
        + 3 * a6 * (d - 3)
        + ((3 * beta_1_dm2 * (d - 3)) / (2 * pi))
        - ((3 * d) / 2)
        + (9 / 2)
    )
    g4 = (
        - ((3 * a1 * alpha_1_dm2 * (d - 3)) / (2 * pi))
        + ((3 * a1 * (d - 3)) / 2)
        - ((3 * a2 * alpha_1_dm2 * (d**2 - 7 * d + 12)) / (2 * pi))
        + ((3 * a2 * (d**2 - 7 * d + 12)) / 2)
        - ((3 * a4 * alpha_dm2_dm1 * (d - 3)) / pi)
        + ((3 * a4 * nu_1 * (d**2 - 6 * d + 9) * sin(alpha_1_dm2)) / (2 * pi * nu_dm2))
        + ((3 * a4 * (d - 3) * sin(alpha_dm2_dm1)) / pi)
        + ((9 * a4 * (d - 3)) / 2)
        - ((3 * a4 * (d - 3) * sin(beta_dm2_dm1)) / (pi * nu_dm2))
        - ((3 * a4 * (d - 3) * sin(beta_dm2_dm2)) / (2 * pi * nu_dm2))
        - ((3 * a4 * (d**2 - 6 * d + 9) * sin(beta_dm2_1)) / (2 * pi * nu_dm2))
        + ((3 * beta_dm2_1 * (d - 3)) / (2 * pi))
        - ((3 * d) / 2)
        + (9 / 2)
    )
    g5 = (
        - ((3 * a3 * alpha_1_dm2 * (d - 3)) / (2 * pi))
        + ((3 * a3 * (d - 3)) / 2)
        + ((3 * a5 * nu_1 * (d - 3) * sin(alpha_1_dm2)) / (2 * pi * nu_dm2))
        + ((3 * a5 * sin(alpha_dm2_dm1)) / pi)
        + ((3 * a5) / 2)
        - ((3 * a5 * (d - 3) * sin(beta_dm2_1)) / (2 * pi * nu_dm2))
        - ((3 * a5 * sin(beta_dm2_dm1)) / (pi * nu_dm2))
        - ((3 * a5 * sin(beta_dm2_dm2)) / (2 * pi * nu_dm2))
        - ((3 * a6 * alpha_dm2_dm1) / pi)
        + 3 * a6
        + ((3 * beta_dm2_dm2) / (2 * pi))
        - (3 / 2)
    )
    g6 = (
        - ((3 * a3 * alpha_1_dm2 * (d - 3)) / pi)
        + 3 * a3 * (d - 3)
        - ((3 * a5 * alpha_dm2_dm1) / pi)
        + 3 * a5
        - ((3 * a6 * alpha_dm2_dm1) / pi)
        + ((3 * a6 * nu_1 * (d - 3) * sin(alpha_1_dm2)) / (pi * nu_dm2))
        + ((6 * a6 * sin(alpha_dm2_dm1)) / pi)
        + 6 * a6
        - ((3 * a6 * (d - 3) * sin(beta_dm2_1)) / (pi * nu_dm2))
        - ((6 * a6 * sin(beta_dm2_dm1)) / (pi * nu_dm2))
        - ((3 * a6 * sin(beta_dm2_dm2)) / (pi * nu_dm2))
        + ((3 * beta_dm2_dm1) / pi)
        - 3
    )
    return [g1, g2, g3, g4, g5, g6]


GRADIENTS = {0: grad_full_diag, 1: grad_split1, 2: grad_split2, 3: grad_split3}
