"""Closed-form transition-matrix entries at points of the diagonal family.

``transition_entries(rep, a, d, s, m)`` returns the square matrix (as nested
lists) for ``rep`` in ``{"x", "y", "s", "t"}``. ``nus_1_2`` and ``mus_1_j``
are the sines of the corresponding student and teacher angles. Several
entries carry removable ``1/sin`` factors, so evaluation needs the rows to be
away from parallel to any teacher row (the identity point itself is excluded).
"""
# Generated from the closed-form entries; edit the generator, not this file.



def _x(a, d, s, m):
    a1, a2 = a
    alpha_1_2 = s["alpha_1_2"]
    beta_1_1 = s["beta_1_1"]
    beta_1_2 = s["beta_1_2"]
    mus_1_2 = s["mus_1_2"]
    nu_1 = s["nu_1"]
    nus_1_2 = s["nus_1_2"]
    sin, cos, pi = m.sin, m.cos, m.pi
    t11 = (
        - ((a1**2) / (2 * pi * nu_1**2 * nus_1_2))
        + ((a1**2 * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2) / (pi * nu_1**2 * nus_1_2))
        - ((a1 * a2 * sin(alpha_1_2)) / (pi * nu_1**2 * nus_1_2**2))
        - ((a2**2) / (2 * pi * nu_1**2 * nus_1_2))
        + ((a2**2 * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + (alpha_1_2 / (2 * pi))
        + (((d - 1) * sin(alpha_1_2)) / (2 * pi))
        - (((d - 1) * sin(beta_1_2)) / (2 * pi * nu_1))
        - ((sin(beta_1_1)) / (2 * pi * nu_1))
        - ((sin(beta_1_2)) / (2 * pi * mus_1_2**2 * nu_1))
    )
    return [[t11]]


def _y(a, d, s, m):
    a1, a2 = a
    alpha_1_2 = s["alpha_1_2"]
    beta_1_1 = s["beta_1_1"]
    beta_1_2 = s["beta_1_2"]
    mus_1_2 = s["mus_1_2"]
    nu_1 = s["nu_1"]
    nus_1_2 = s["nus_1_2"]
    sin, cos, pi = m.sin, m.cos, m.pi
    t11 = (
        ((a1**2) / (2 * pi * nu_1**2 * nus_1_2))
        + ((a1**2 * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        - ((a1 * a2) / (pi * nu_1**2 * nus_1_2))
        - ((a1 * a2 * sin(alpha_1_2)) / (pi * nu_1**2 * nus_1_2**2))
        + ((a2**2) / (2 * pi * nu_1**2 * nus_1_2))
        + ((a2**2 * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + (alpha_1_2 / (2 * pi))
        + (((d - 1) * sin(alpha_1_2)) / (2 * pi))
        - (((d - 1) * sin(beta_1_2)) / (2 * pi * nu_1))
        - ((sin(beta_1_1)) / (2 * pi * nu_1))
        - ((sin(beta_1_2)) / (2 * pi * mus_1_2**2 * nu_1))
    )
    return [[t11]]


def _s(a, d, s, m):
    a1, a2 = a
    alpha_1_2 = s["alpha_1_2"]
    beta_1_1 = s["beta_1_1"]
    beta_1_2 = s["beta_1_2"]
    mus_1_1 = s["mus_1_1"]
    mus_1_2 = s["mus_1_2"]
    nu_1 = s["nu_1"]
    nus_1_2 = s["nus_1_2"]
    sin, cos, pi = m.sin, m.cos, m.pi
    t11 = (
        - ((a1**2 * (d - 1) * sin(alpha_1_2)) / (2 * pi * nu_1**2))
        - ((a1**2) / (2 * pi * nu_1**2 * nus_1_2))
        + ((a1**2 * (d - 1) * sin(alpha_1_2) * cos(alpha_1_2)**2) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a1**2 * (d - 1) * sin(beta_1_2)) / (2 * pi * nu_1**3))
        + ((a1**2 * sin(beta_1_1)) / (2 * pi * nu_1**3))
        - ((a1**2 * (d - 1) * sin(beta_1_2) * cos(beta_1_2)**2) / (2 * pi * mus_1_2**2 * nu_1**3))
        - ((a1**2 * sin(beta_1_1) * cos(beta_1_1)**2) / (2 * pi * mus_1_1**2 * nu_1**3))
        + ((a1 * a2 * cos(alpha_1_2)) / (pi * nu_1**2 * nus_1_2))
        - ((a1 * a2 * (d - 1) * sin(alpha_1_2) * cos(alpha_1_2)) / (pi * nu_1**2 * nus_1_2**2))
        + ((a1 * sin(beta_1_1) * cos(beta_1_1)) / (pi * mus_1_1**2 * nu_1**2))
        - ((a2**2) / (2 * pi * nu_1**2 * nus_1_2))
        + ((a2**2 * (d - 1) * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + (((d - 1) * sin(alpha_1_2)) / (2 * pi))
        + (1 / 2)
        - (((d - 1) * sin(beta_1_2)) / (2 * pi * nu_1))
        - ((sin(beta_1_1)) / (2 * pi * nu_1))
        - ((sin(beta_1_1)) / (2 * pi * mus_1_1**2 * nu_1))
    )
    t12 = (
        ((a1**2 * d * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2))
        - ((a1**2 * d * sin(alpha_1_2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        - ((a1 * a2 * d) / (pi * nu_1**2 * nus_1_2))
        + ((a1 * a2 * d * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * d * sin(beta_1_1)) / (2 * pi * nu_1**3))
        - ((a1 * a2 * d * sin(beta_1_1) * cos(beta_1_1)**2) / (2 * pi * mus_1_1**2 * nu_1**3))
        - ((a1 * a2 * (d**2 - d) * sin(alpha_1_2)) / (2 * pi * nu_1**2))
        - ((a1 * a2 * (d**2 - 2 * d) * sin(alpha_1_2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * (d**2 - d) * sin(alpha_1_2) * cos(alpha_1_2)**2) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * (d**2 - d) * sin(beta_1_2)) / (2 * pi * nu_1**3))
        - ((a1 * a2 * (d**2 - d) * sin(beta_1_2) * cos(beta_1_2)**2) / (2 * pi * mus_1_2**2 * nu_1**3))
        + ((a1 * d * sin(beta_1_2) * cos(beta_1_2)) / (2 * pi * mus_1_2**2 * nu_1**2))
        + ((a2**2 * d * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2))
        + ((a2**2 * (d**2 - 2 * d) * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        - ((a2**2 * (d**2 - d) * sin(alpha_1_2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a2 * d * sin(beta_1_1) * cos(beta_1_1)) / (2 * pi * mus_1_1**2 * nu_1**2))
        + ((alpha_1_2 * d) / (2 * pi))
        - (d / 2)
    )
    t13 = (
        - ((a1**2 * (d - 2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2))
        - ((a1**2 * (d - 2) * sin(alpha_1_2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        - ((a1 * a2 * (d**2 - 3 * d + 2) * sin(alpha_1_2)) / (2 * pi * nu_1**2))
        + ((a1 * a2 * (d - 2) * cos(alpha_1_2)) / (pi * nu_1**2 * nus_1_2))
        + ((a1 * a2 * (d - 2) * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        - ((a1 * a2 * (d**2 - 4 * d + 4) * sin(alpha_1_2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * (d**2 - 3 * d + 2) * sin(alpha_1_2) * cos(alpha_1_2)**2) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * (d - 2) * sin(beta_1_1)) / (2 * pi * nu_1**3))
        + ((a1 * a2 * (d**2 - 3 * d + 2) * sin(beta_1_2)) / (2 * pi * nu_1**3))
        - ((a1 * a2 * (d**2 - 3 * d + 2) * sin(beta_1_2) * cos(beta_1_2)**2) / (2 * pi * mus_1_2**2 * nu_1**3))
        - ((a1 * a2 * (d - 2) * sin(beta_1_1) * cos(beta_1_1)**2) / (2 * pi * mus_1_1**2 * nu_1**3))
        + ((a1 * (d - 2) * sin(beta_1_2) * cos(beta_1_2)) / (2 * pi * mus_1_2**2 * nu_1**2))
        + ((a2**2 * (d - 2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2))
        - ((a2**2 * (d - 2)) / (pi * nu_1**2 * nus_1_2))
        + ((a2**2 * (d**2 - 4 * d + 4) * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        - ((a2**2 * (d**2 - 3 * d + 2) * sin(alpha_1_2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a2 * (d - 2) * sin(beta_1_1) * cos(beta_1_1)) / (2 * pi * mus_1_1**2 * nu_1**2))
        - ((alpha_1_2 * (d - 2)) / (2 * pi))
        + (d / 2)
        - 1
    )
    t14 = (
        ((a1 * (d - 2) * sin(alpha_1_2)) / (2 * pi))
        + a1
        - ((a1 * (d - 1) * sin(beta_1_2)) / (2 * pi * nu_1))
        - ((a1 * sin(beta_1_1)) / (2 * pi * nu_1))
        - ((a2 * alpha_1_2 * (d - 2)) / (2 * pi))
        + ((a2 * (d - 2)) / 2)
        + (beta_1_1 / (2 * pi))
        - (1 / 2)
    )
    t21 = (
        ((a1**2 * cos(alpha_1_2)) / (4 * pi * nu_1**2 * nus_1_2))
        - ((a1**2 * sin(alpha_1_2) * cos(alpha_1_2)) / (4 * pi * nu_1**2 * nus_1_2**2))
        - ((a1 * a2 * (d - 1) * sin(alpha_1_2)) / (4 * pi * nu_1**2))
        - ((a1 * a2) / (2 * pi * nu_1**2 * nus_1_2))
        - ((a1 * a2 * (d - 2) * sin(alpha_1_2) * cos(alpha_1_2)) / (4 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * (d - 1) * sin(alpha_1_2) * cos(alpha_1_2)**2) / (4 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * sin(alpha_1_2)) / (4 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * (d - 1) * sin(beta_1_2)) / (4 * pi * nu_1**3))
        + ((a1 * a2 * sin(beta_1_1)) / (4 * pi * nu_1**3))
        - ((a1 * a2 * (d - 1) * sin(beta_1_2) * cos(beta_1_2)**2) / (4 * pi * mus_1_2**2 * nu_1**3))
        - ((a1 * a2 * sin(beta_1_1) * cos(beta_1_1)**2) / (4 * pi * mus_1_1**2 * nu_1**3))
        + ((a1 * sin(beta_1_2) * cos(beta_1_2)) / (4 * pi * mus_1_2**2 * nu_1**2))
        + ((a2**2 * cos(alpha_1_2)) / (4 * pi * nu_1**2 * nus_1_2))
        + ((a2**2 * (d - 2) * sin(alpha_1_2)) / (4 * pi * nu_1**2 * nus_1_2**2))
        - ((a2**2 * (d - 1) * sin(alpha_1_2) * cos(alpha_1_2)) / (4 * pi * nu_1**2 * nus_1_2**2))
        + ((a2 * sin(beta_1_1) * cos(beta_1_1)) / (4 * pi * mus_1_1**2 * nu_1**2))
        + (alpha_1_2 / (4 * pi))
        - (1 / 4)
    )
    t22 = (
        - ((a1**2) / (2 * pi * nu_1**2 * nus_1_2))
        + ((a1**2 * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * d * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2))
        - ((a1 * a2 * d * sin(alpha_1_2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        - ((a1 * a2 * (d - 2)) / (2 * pi * nu_1**2 * nus_1_2))
        + ((a1 * a2 * (d - 2) * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a2**2 * d * sin(beta_1_1)) / (4 * pi * nu_1**3))
        - ((a2**2 * d * sin(beta_1_1) * cos(beta_1_1)**2) / (4 * pi * mus_1_1**2 * nu_1**3))
        - ((a2**2 * (d**2 - d) * sin(alpha_1_2)) / (4 * pi * nu_1**2))
        - ((a2**2) / (2 * pi * nu_1**2 * nus_1_2))
        - ((a2**2 * (d**2 - 2 * d) * sin(alpha_1_2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a2**2 * (d**2 - d) * sin(alpha_1_2) * cos(alpha_1_2)**2) / (4 * pi * nu_1**2 * nus_1_2**2))
        + ((a2**2 * (d**2 - 3 * d + 2) * sin(alpha_1_2)) / (4 * pi * nu_1**2 * nus_1_2**2))
        + ((a2**2 * (d**2 - d) * sin(beta_1_2)) / (4 * pi * nu_1**3))
        - ((a2**2 * (d**2 - d) * sin(beta_1_2) * cos(beta_1_2)**2) / (4 * pi * mus_1_2**2 * nu_1**3))
        + ((a2 * d * sin(beta_1_2) * cos(beta_1_2)) / (2 * pi * mus_1_2**2 * nu_1**2))
        - ((alpha_1_2 * (d - 2)) / (4 * pi))
        + (d / 4)
        + (((d - 1) * sin(alpha_1_2)) / (2 * pi))
        - (((d - 1) * sin(beta_1_2)) / (2 * pi * nu_1))
        - ((sin(beta_1_1)) / (2 * pi * nu_1))
        - ((sin(beta_1_2)) / (2 * pi * mus_1_2**2 * nu_1))
    )
    t23 = (
        - ((a1 * a2 * (d - 2) * sin(alpha_1_2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * (d - 2) * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        - ((a2**2 * (d**2 - 3 * d + 2) * sin(alpha_1_2)) / (4 * pi * nu_1**2))
        + ((a2**2 * (d - 2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2))
        - ((a2**2 * (d - 2)) / (2 * pi * nu_1**2 * nus_1_2))
        + ((a2**2 * (d**2 - 5 * d + 6) * sin(alpha_1_2)) / (4 * pi * nu_1**2 * nus_1_2**2))
        - ((a2**2 * (d**2 - 4 * d + 4) * sin(alpha_1_2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a2**2 * (d**2 - 3 * d + 2) * sin(alpha_1_2) * cos(alpha_1_2)**2) / (4 * pi * nu_1**2 * nus_1_2**2))
        + ((a2**2 * (d - 2) * sin(beta_1_1)) / (4 * pi * nu_1**3))
        + ((a2**2 * (d**2 - 3 * d + 2) * sin(beta_1_2)) / (4 * pi * nu_1**3))
        - ((a2**2 * (d**2 - 3 * d + 2) * sin(beta_1_2) * cos(beta_1_2)**2) / (4 * pi * mus_1_2**2 * nu_1**3))
        - ((a2**2 * (d - 2) * sin(beta_1_1) * cos(beta_1_1)**2) / (4 * pi * mus_1_1**2 * nu_1**3))
        + ((a2 * (d - 2) * sin(beta_1_2) * cos(beta_1_2)) / (2 * pi * mus_1_2**2 * nu_1**2))
        + ((alpha_1_2 * (d - 2)) / (4 * pi))
        - (d / 4)
        + (1 / 2)
    )
    t24 = (
        - ((a2 * alpha_1_2 * (d - 2)) / (4 * pi))
        + ((a2 * d) / 4)
        + ((a2 * (d - 2) * sin(alpha_1_2)) / (4 * pi))
        - ((a2 * (d - 1) * sin(beta_1_2)) / (4 * pi * nu_1))
        - ((a2 * sin(beta_1_1)) / (4 * pi * nu_1))
        + (beta_1_2 / (4 * pi))
        - (1 / 4)
    )
    t31 = (
        - ((a1**2 * cos(alpha_1_2)) / (4 * pi * nu_1**2 * nus_1_2))
        - ((a1**2 * sin(alpha_1_2) * cos(alpha_1_2)) / (4 * pi * nu_1**2 * nus_1_2**2))
        - ((a1 * a2 * (d - 1) * sin(alpha_1_2)) / (4 * pi * nu_1**2))
        + ((a1 * a2 * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2))
        - ((a1 * a2 * (d - 2) * sin(alpha_1_2) * cos(alpha_1_2)) / (4 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * (d - 1) * sin(alpha_1_2) * cos(alpha_1_2)**2) / (4 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * sin(alpha_1_2)) / (4 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * (d - 1) * sin(beta_1_2)) / (4 * pi * nu_1**3))
        + ((a1 * a2 * sin(beta_1_1)) / (4 * pi * nu_1**3))
        - ((a1 * a2 * (d - 1) * sin(beta_1_2) * cos(beta_1_2)**2) / (4 * pi * mus_1_2**2 * nu_1**3))
        - ((a1 * a2 * sin(beta_1_1) * cos(beta_1_1)**2) / (4 * pi * mus_1_1**2 * nu_1**3))
        + ((a1 * sin(beta_1_2) * cos(beta_1_2)) / (4 * pi * mus_1_2**2 * nu_1**2))
        + ((a2**2 * cos(alpha_1_2)) / (4 * pi * nu_1**2 * nus_1_2))
        - ((a2**2) / (2 * pi * nu_1**2 * nus_1_2))
        + ((a2**2 * (d - 2) * sin(alpha_1_2)) / (4 * pi * nu_1**2 * nus_1_2**2))
        - ((a2**2 * (d - 1) * sin(alpha_1_2) * cos(alpha_1_2)) / (4 * pi * nu_1**2 * nus_1_2**2))
        + ((a2 * sin(beta_1_1) * cos(beta_1_1)) / (4 * pi * mus_1_1**2 * nu_1**2))
        - (alpha_1_2 / (4 * pi))
        + (1 / 4)
    )
    t32 = (
        - ((a1 * a2 * d * sin(alpha_1_2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * d * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a2**2 * d * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2))
        - ((a2**2 * d) / (2 * pi * nu_1**2 * nus_1_2))
        + ((a2**2 * d * sin(beta_1_1)) / (4 * pi * nu_1**3))
        - ((a2**2 * d * sin(beta_1_1) * cos(beta_1_1)**2) / (4 * pi * mus_1_1**2 * nu_1**3))
        - ((a2**2 * (d**2 - d) * sin(alpha_1_2)) / (4 * pi * nu_1**2))
        + ((a2**2 * (d**2 - 3 * d) * sin(alpha_1_2)) / (4 * pi * nu_1**2 * nus_1_2**2))
        - ((a2**2 * (d**2 - 2 * d) * sin(alpha_1_2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a2**2 * (d**2 - d) * sin(alpha_1_2) * cos(alpha_1_2)**2) / (4 * pi * nu_1**2 * nus_1_2**2))
        + ((a2**2 * (d**2 - d) * sin(beta_1_2)) / (4 * pi * nu_1**3))
        - ((a2**2 * (d**2 - d) * sin(beta_1_2) * cos(beta_1_2)**2) / (4 * pi * mus_1_2**2 * nu_1**3))
        + ((a2 * d * sin(beta_1_2) * cos(beta_1_2)) / (2 * pi * mus_1_2**2 * nu_1**2))
        + ((alpha_1_2 * d) / (4 * pi))
        - (d / 4)
    )
    t33 = (
        ((a1**2) / (2 * pi * nu_1**2 * nus_1_2))
        + ((a1**2 * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * (d - 4)) / (2 * pi * nu_1**2 * nus_1_2))
        - ((a1 * a2 * (d - 2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2))
        + ((a1 * a2 * (d - 4) * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        - ((a1 * a2 * (d - 2) * sin(alpha_1_2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        - ((a2**2 * (d**2 - 3 * d + 2) * sin(alpha_1_2)) / (4 * pi * nu_1**2))
        - ((a2**2 * (d - (5 / 2))) / (pi * nu_1**2 * nus_1_2))
        + ((a2**2 * (d - 2) * cos(alpha_1_2)) / (pi * nu_1**2 * nus_1_2))
        + ((a2**2 * (d**2 - 5 * d + 8) * sin(alpha_1_2)) / (4 * pi * nu_1**2 * nus_1_2**2))
        - ((a2**2 * (d**2 - 4 * d + 4) * sin(alpha_1_2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a2**2 * (d**2 - 3 * d + 2) * sin(alpha_1_2) * cos(alpha_1_2)**2) / (4 * pi * nu_1**2 * nus_1_2**2))
        + ((a2**2 * (d - 2) * sin(beta_1_1)) / (4 * pi * nu_1**3))
        + ((a2**2 * (d**2 - 3 * d + 2) * sin(beta_1_2)) / (4 * pi * nu_1**3))
        - ((a2**2 * (d**2 - 3 * d + 2) * sin(beta_1_2) * cos(beta_1_2)**2) / (4 * pi * mus_1_2**2 * nu_1**3))
        - ((a2**2 * (d - 2) * sin(beta_1_1) * cos(beta_1_1)**2) / (4 * pi * mus_1_1**2 * nu_1**3))
        + ((a2 * (d - 2) * sin(beta_1_2) * cos(beta_1_2)) / (2 * pi * mus_1_2**2 * nu_1**2))
        - ((alpha_1_2 * (d - 4)) / (4 * pi))
        + (d / 4)
        + (((d - 1) * sin(alpha_1_2)) / (2 * pi))
        - (1 / 2)
        - (((d - 1) * sin(beta_1_2)) / (2 * pi * nu_1))
        - ((sin(beta_1_1)) / (2 * pi * nu_1))
        - ((sin(beta_1_2)) / (2 * pi * mus_1_2**2 * nu_1))
    )
    t34 = (
        - ((a1 * alpha_1_2) / (2 * pi))
        + (a1 / 2)
        - ((a2 * alpha_1_2 * (d - 4)) / (4 * pi))
        + ((a2 * (d - 2) * sin(alpha_1_2)) / (4 * pi))
        + ((a2 * (d - 2)) / 4)
        - ((a2 * (d - 1) * sin(beta_1_2)) / (4 * pi * nu_1))
        - ((a2 * sin(beta_1_1)) / (4 * pi * nu_1))
        + (beta_1_2 / (4 * pi))
        - (1 / 4)
    )
    t41 = (
        ((a1 * (d - 2) * sin(alpha_1_2)) / (2 * pi))
        + a1
        - ((a1 * (d - 1) * sin(beta_1_2)) / (2 * pi * nu_1))
        - ((a1 * sin(beta_1_1)) / (2 * pi * nu_1))
        - ((a2 * alpha_1_2 * (d - 2)) / (2 * pi))
        + ((a2 * (d - 2)) / 2)
        + (beta_1_1 / (2 * pi))
        - (1 / 2)
    )
    t42 = (
        - ((a2 * alpha_1_2 * (d**2 - 2 * d)) / (2 * pi))
        + ((a2 * d**2) / 2)
        - ((a2 * d * sin(beta_1_1)) / (2 * pi * nu_1))
        + ((a2 * (d**2 - 2 * d) * sin(alpha_1_2)) / (2 * pi))
        - ((a2 * (d**2 - d) * sin(beta_1_2)) / (2 * pi * nu_1))
        + ((beta_1_2 * d) / (2 * pi))
        - (d / 2)
    )
    t43 = (
        - ((a1 * alpha_1_2 * (d - 2)) / pi)
        + a1 * (d - 2)
        - ((a2 * alpha_1_2 * (d**2 - 6 * d + 8)) / (2 * pi))
        + ((a2 * (d**2 - 4 * d + 4) * sin(alpha_1_2)) / (2 * pi))
        + ((a2 * (d**2 - 4 * d + 4)) / 2)
        - ((a2 * (d - 2) * sin(beta_1_1)) / (2 * pi * nu_1))
        - ((a2 * (d**2 - 3 * d + 2) * sin(beta_1_2)) / (2 * pi * nu_1))
        + ((beta_1_2 * (d - 2)) / (2 * pi))
        - (d / 2)
        + 1
    )
    t44 = (
        ((alpha_1_2 * nu_1**2 * cos(alpha_1_2)) / (2 * pi))
        - ((nu_1**2 * sin(alpha_1_2)) / (2 * pi))
        - ((nu_1**2 * cos(alpha_1_2)) / 2)
        + ((nu_1**2) / 2)
    )
    return [[t11, t12, t13, t14], [t21, t22, t23, t24], [t31, t32, t33, t34], [t41, t42, t43, t44]]


def _t(a, d, s, m):
    a1, a2 = a
    alpha_1_2 = s["alpha_1_2"]
    beta_1_1 = s["beta_1_1"]
    beta_1_2 = s["beta_1_2"]
    mus_1_1 = s["mus_1_1"]
    mus_1_2 = s["mus_1_2"]
    nu_1 = s["nu_1"]
    nus_1_2 = s["nus_1_2"]
    sin, cos, pi = m.sin, m.cos, m.pi
    t11 = (
        - ((a1**2 * (d - 1) * sin(alpha_1_2)) / (2 * pi * nu_1**2))
        + ((a1**2 * (d - 1)) / (2 * pi * nu_1**2 * nus_1_2))
        + ((a1**2 * (d - 1) * sin(alpha_1_2) * cos(alpha_1_2)**2) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a1**2 * (d - 1) * sin(beta_1_2)) / (2 * pi * nu_1**3))
        + ((a1**2 * sin(beta_1_1)) / (2 * pi * nu_1**3))
        - ((a1**2 * (d - 1) * sin(beta_1_2) * cos(beta_1_2)**2) / (2 * pi * mus_1_2**2 * nu_1**3))
        - ((a1**2 * sin(beta_1_1) * cos(beta_1_1)**2) / (2 * pi * mus_1_1**2 * nu_1**3))
        - ((a1 * a2 * (d - 1) * cos(alpha_1_2)) / (pi * nu_1**2 * nus_1_2))
        - ((a1 * a2 * (d - 1) * sin(alpha_1_2) * cos(alpha_1_2)) / (pi * nu_1**2 * nus_1_2**2))
        + ((a1 * sin(beta_1_1) * cos(beta_1_1)) / (pi * mus_1_1**2 * nu_1**2))
        + ((a2**2 * (d - 1)) / (2 * pi * nu_1**2 * nus_1_2))
        + ((a2**2 * (d - 1) * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + (((d - 1) * sin(alpha_1_2)) / (2 * pi))
        + (1 / 2)
        - (((d - 1) * sin(beta_1_2)) / (2 * pi * nu_1))
        - ((sin(beta_1_1)) / (2 * pi * nu_1))
        - ((sin(beta_1_1)) / (2 * pi * mus_1_1**2 * nu_1))
    )
    t12 = (
        - ((a1**2 * (d - 1) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2))
        - ((a1**2 * (d - 1) * sin(alpha_1_2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        - ((a1 * a2 * (d**2 - 2 * d + 1) * sin(alpha_1_2)) / (2 * pi * nu_1**2))
        + ((a1 * a2 * (d**2 - d)) / (2 * pi * nu_1**2 * nus_1_2))
        - ((a1 * a2 * (d**2 - 3 * d + 2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2))
        + ((a1 * a2 * (d - 1) * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        - ((a1 * a2 * (d**2 - 3 * d + 2) * sin(alpha_1_2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * (d**2 - 2 * d + 1) * sin(alpha_1_2) * cos(alpha_1_2)**2) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * (d - 1) * sin(beta_1_1)) / (2 * pi * nu_1**3))
        + ((a1 * a2 * (d**2 - 2 * d + 1) * sin(beta_1_2)) / (2 * pi * nu_1**3))
        - ((a1 * a2 * (d**2 - 2 * d + 1) * sin(beta_1_2) * cos(beta_1_2)**2) / (2 * pi * mus_1_2**2 * nu_1**3))
        - ((a1 * a2 * (d - 1) * sin(beta_1_1) * cos(beta_1_1)**2) / (2 * pi * mus_1_1**2 * nu_1**3))
        + ((a1 * (d - 1) * sin(beta_1_2) * cos(beta_1_2)) / (2 * pi * mus_1_2**2 * nu_1**2))
        + ((a2**2 * (d**2 - 3 * d + 2)) / (2 * pi * nu_1**2 * nus_1_2))
        - ((a2**2 * (d**2 - 2 * d + 1) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2))
        + ((a2**2 * (d**2 - 3 * d + 2) * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        - ((a2**2 * (d**2 - 2 * d + 1) * sin(alpha_1_2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a2 * (d - 1) * sin(beta_1_1) * cos(beta_1_1)) / (2 * pi * mus_1_1**2 * nu_1**2))
        - ((alpha_1_2 * (d - 1)) / (2 * pi))
        + (d / 2)
        - (1 / 2)
    )
    t13 = (
        ((a1 * (d - 1) * sin(alpha_1_2)) / pi)
        + a1
        - ((a1 * (d - 1) * sin(beta_1_2)) / (2 * pi * nu_1))
        - ((a1 * sin(beta_1_1)) / (2 * pi * nu_1))
        - ((a2 * alpha_1_2 * (d - 1)) / pi)
        + a2 * (d - 1)
        + (beta_1_1 / (2 * pi))
        - (1 / 2)
    )
    t21 = (
        - ((a1**2 * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2))
        - ((a1**2 * sin(alpha_1_2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * d) / (2 * pi * nu_1**2 * nus_1_2))
        - ((a1 * a2 * (d - 1) * sin(alpha_1_2)) / (2 * pi * nu_1**2))
        - ((a1 * a2 * (d - 2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2))
        - ((a1 * a2 * (d - 2) * sin(alpha_1_2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * (d - 1) * sin(alpha_1_2) * cos(alpha_1_2)**2) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * (d - 1) * sin(beta_1_2)) / (2 * pi * nu_1**3))
        + ((a1 * a2 * sin(beta_1_1)) / (2 * pi * nu_1**3))
        - ((a1 * a2 * (d - 1) * sin(beta_1_2) * cos(beta_1_2)**2) / (2 * pi * mus_1_2**2 * nu_1**3))
        - ((a1 * a2 * sin(beta_1_1) * cos(beta_1_1)**2) / (2 * pi * mus_1_1**2 * nu_1**3))
        + ((a1 * sin(beta_1_2) * cos(beta_1_2)) / (2 * pi * mus_1_2**2 * nu_1**2))
        + ((a2**2 * (d - 2)) / (2 * pi * nu_1**2 * nus_1_2))
        - ((a2**2 * (d - 1) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2))
        + ((a2**2 * (d - 2) * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        - ((a2**2 * (d - 1) * sin(alpha_1_2) * cos(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a2 * sin(beta_1_1) * cos(beta_1_1)) / (2 * pi * mus_1_1**2 * nu_1**2))
        - (alpha_1_2 / (2 * pi))
        + (1 / 2)
    )
    t22 = (
        ((a1**2) / (2 * pi * nu_1**2 * nus_1_2))
        + ((a1**2 * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a1 * a2 * (d - 2)) / (pi * nu_1**2 * nus_1_2))
        - ((a1 * a2 * (d - 1) * cos(alpha_1_2)) / (pi * nu_1**2 * nus_1_2))
        + ((a1 * a2 * (d - 2) * sin(alpha_1_2)) / (pi * nu_1**2 * nus_1_2**2))
        - ((a1 * a2 * (d - 1) * sin(alpha_1_2) * cos(alpha_1_2)) / (pi * nu_1**2 * nus_1_2**2))
        - ((a2**2 * (d**2 - 2 * d + 1) * sin(alpha_1_2)) / (2 * pi * nu_1**2))
        - ((a2**2 * (d**2 - 3 * d + 2) * cos(alpha_1_2)) / (pi * nu_1**2 * nus_1_2))
        + ((a2**2 * (d**2 - 3 * d + (5 / 2))) / (pi * nu_1**2 * nus_1_2))
        + ((a2**2 * (d**2 - 4 * d + 4) * sin(alpha_1_2)) / (2 * pi * nu_1**2 * nus_1_2**2))
        - ((a2**2 * (d**2 - 3 * d + 2) * sin(alpha_1_2) * cos(alpha_1_2)) / (pi * nu_1**2 * nus_1_2**2))
        + ((a2**2 * (d**2 - 2 * d + 1) * sin(alpha_1_2) * cos(alpha_1_2)**2) / (2 * pi * nu_1**2 * nus_1_2**2))
        + ((a2**2 * (d - 1) * sin(beta_1_1)) / (2 * pi * nu_1**3))
        + ((a2**2 * (d**2 - 2 * d + 1) * sin(beta_1_2)) / (2 * pi * nu_1**3))
        - ((a2**2 * (d**2 - 2 * d + 1) * sin(beta_1_2) * cos(beta_1_2)**2) / (2 * pi * mus_1_2**2 * nu_1**3))
        - ((a2**2 * (d - 1) * sin(beta_1_1) * cos(beta_1_1)**2) / (2 * pi * mus_1_1**2 * nu_1**3))
        + ((a2 * (d - 1) * sin(beta_1_2) * cos(beta_1_2)) / (pi * mus_1_2**2 * nu_1**2))
        - ((alpha_1_2 * (d - 2)) / (2 * pi))
        + (d / 2)
        + (((d - 1) * sin(alpha_1_2)) / (2 * pi))
        - (1 / 2)
        - (((d - 1) * sin(beta_1_2)) / (2 * pi * nu_1))
        - ((sin(beta_1_1)) / (2 * pi * nu_1))
        - ((sin(beta_1_2)) / (2 * pi * mus_1_2**2 * nu_1))
    )
    t23 = (
        - ((a1 * alpha_1_2) / pi)
        + a1
        - ((a2 * alpha_1_2 * (d - 2)) / pi)
        + ((a2 * (d - 1) * sin(alpha_1_2)) / pi)
        + a2 * (d - 1)
        - ((a2 * (d - 1) * sin(beta_1_2)) / (2 * pi * nu_1))
        - ((a2 * sin(beta_1_1)) / (2 * pi * nu_1))
        + (beta_1_2 / (2 * pi))
        - (1 / 2)
    )
    t31 = (
        ((a1 * (d - 1) * sin(alpha_1_2)) / pi)
        + a1
        - ((a1 * (d - 1) * sin(beta_1_2)) / (2 * pi * nu_1))
        - ((a1 * sin(beta_1_1)) / (2 * pi * nu_1))
        - ((a2 * alpha_1_2 * (d - 1)) / pi)
        + a2 * (d - 1)
        + (beta_1_1 / (2 * pi))
        - (1 / 2)
    )
    t32 = (
        - ((a1 * alpha_1_2 * (d - 1)) / pi)
        + a1 * (d - 1)
        - ((a2 * alpha_1_2 * (d**2 - 3 * d + 2)) / pi)
        + ((a2 * (d**2 - 2 * d + 1) * sin(alpha_1_2)) / pi)
        + a2 * (d**2 - 2 * d + 1)
        - ((a2 * (d - 1) * sin(beta_1_1)) / (2 * pi * nu_1))
        - ((a2 * (d**2 - 2 * d + 1) * sin(beta_1_2)) / (2 * pi * nu_1))
        + ((beta_1_2 * (d - 1)) / (2 * pi))
        - (d / 2)
        + (1 / 2)
    )
    t33 = (
        - ((alpha_1_2 * nu_1**2 * (d - 1) * cos(alpha_1_2)) / (2 * pi))
        + ((nu_1**2 * (d - 1) * sin(alpha_1_2)) / (2 * pi))
        + ((nu_1**2 * (d - 1) * cos(alpha_1_2)) / 2)
        + ((nu_1**2) / 2)
    )
    return [[t11, t12, t13], [t21, t22, t23], [t31, t32, t33]]


_ENTRIES = {"x": _x, "y": _y, "s": _s, "t": _t}


def transition_entries(rep, a, d, s, m):
    return _ENTRIES[rep](a, d, s, m)
