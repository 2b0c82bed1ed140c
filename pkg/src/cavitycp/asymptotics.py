"""Closed forms and scaling laws for constant-reflectivity cavities.

These serve as independent oracles for the quadrature pipeline: the exact
series for the propagating integral I(phi), the nu = 1 closed form and its
high-reflectivity limits, and the depth-scaling law
Delta U_nu = coupling * (8 pi / (nu lambda^3)) * |ln(delta) + phi(nu)|.

Two variants of the intercept function phi(nu) are exposed: phi_nu returns
the published numeric-table value (the printed closed form plus
nu/(4(nu-1))), and phi_nu_printed evaluates the closed form exactly as
printed.  The two disagree; the quadrature intercept test in the test suite
records which one the numerics actually reproduce.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .constants import EULER_GAMMA, ZETA_3
from .specfun import digamma, hurwitz_zeta3

__all__ = [
    "ConstantRCavity", "I_phi_series", "I_half_closed", "I_half_asym",
    "I_zero_asym", "depth_nu1_asym", "phi_nu", "phi_nu_printed",
    "phi_asymptote", "depth_scaling",
]


@dataclass(frozen=True)
class ConstantRCavity:
    """Ideal cavity with r_p = -r_s = r tuned to the nu-th resonance of a
    transition of wavelength lam; width a = nu * lam / 2."""
    r: float
    nu: int
    lam: float
    a: float = field(init=False)
    delta: float = field(init=False)

    def __post_init__(self):
        if not 0 < self.r < 1:
            raise ValueError("ConstantRCavity requires 0 < r < 1")
        if self.nu < 1:
            raise ValueError("resonance order nu must be >= 1")
        if not self.lam > 0:
            raise ValueError("wavelength must be positive")
        object.__setattr__(self, "a", self.nu * self.lam / 2.0)
        object.__setattr__(self, "delta", 1.0 - self.r)


def _y(p, nu):
    c = np.cos(2.0 * np.pi * nu * p)
    s = np.sin(2.0 * np.pi * nu * p)
    return (-2.0 / p**3 + (2.0 / p**3 - 4.0 * nu**2 * np.pi**2 / p) * c
            + 4.0 * nu * np.pi / p**2 * s)


def I_phi_series(cfg: ConstantRCavity, phi: float) -> float:
    """Exact series for the constant-r propagating integral I(phi), 1/m^3.

    I(phi) = r/(2 pi nu^3 lam^3) * sum_j r^(2j) [y(j+1/2+phi) + y(j+1/2-phi)]
    truncated when r^(2j) < 1e-16.
    """
    r, nu, lam = cfg.r, cfg.nu, cfg.lam
    nterms = max(1, int(-16.0 * math.log(10.0) / (2.0 * math.log(r))) + 1) \
        if r < 1 else 1
    total = 0.0
    start = 0
    r2 = r * r
    while start < nterms:
        stop = min(start + 2_000_000, nterms)
        j = np.arange(start, stop, dtype=float)
        weights = np.power(r2, j)
        total += float(np.sum(weights * (_y(j + 0.5 + phi, nu)
                                         + _y(j + 0.5 - phi, nu))))
        start = stop
    return r / (2.0 * np.pi * nu**3 * lam**3) * total


def I_half_closed(r: float, a: float) -> float:
    """Exact nu = 1 wall value: I(1/2) = pi (r + 1/r)/(4 a^3) * ln(1 - r^2)."""
    if not 0 < r < 1:
        raise ValueError("I_half_closed requires 0 < r < 1")
    return math.pi * (r + 1.0 / r) / (4.0 * a**3) * math.log(1.0 - r * r)


def I_half_asym(delta: float, a: float) -> float:
    """High-reflectivity limit of I(1/2): (pi/(2 a^3)) (ln delta + ln 2)."""
    return math.pi / (2.0 * a**3) * (math.log(delta) + math.log(2.0))


def I_zero_asym(delta: float, a: float) -> float:
    """High-reflectivity limit of the nu = 1 center value:
    -(pi/(2 a^3)) [ln delta - ln 2 + 7 zeta(3)/pi^2]."""
    return -math.pi / (2.0 * a**3) * (math.log(delta) - math.log(2.0)
                                      + 7.0 * ZETA_3 / math.pi**2)


def depth_nu1_asym(coupling: float, delta: float, a: float) -> float:
    """U_pr(0) - U_pr(a/2) for nu = 1 as delta -> 0, with coupling =
    n(omega) d^2 / (3 eps0):
    -(pi * coupling / a^3) [ln delta + 7 zeta(3)/(2 pi^2)]."""
    return -math.pi * coupling / a**3 * (math.log(delta)
                                         + 7.0 * ZETA_3 / (2.0 * math.pi**2))


def phi_nu_printed(nu: int) -> float:
    """The depth-intercept closed form exactly as published."""
    if nu < 2:
        raise ValueError("phi_nu requires nu >= 2")
    return (math.log(2.0) + EULER_GAMMA
            + 0.25 * (digamma(1.0 - 1.5 / nu) + digamma(1.5 / nu)
                      + digamma(1.0 - 1.0 / nu) + digamma(1.0 / nu))
            + (hurwitz_zeta3(1.0 - 1.5 / nu) + hurwitz_zeta3(1.5 / nu))
            / (4.0 * math.pi**2 * nu**2))


def phi_nu(nu: int) -> float:
    """The published numeric-table variant: printed closed form plus
    nu/(4 (nu - 1)) (equivalently, psi(2 - 1/nu) in place of psi(1 - 1/nu))."""
    return phi_nu_printed(nu) + nu / (4.0 * (nu - 1.0))


def phi_asymptote(nu: int) -> float:
    """Large-nu asymptote -(5/12 - 2/(27 pi^2)) nu + ln 2 + 1/4."""
    if nu < 2:
        raise ValueError("phi_asymptote requires nu >= 2")
    return -(5.0 / 12.0 - 2.0 / (27.0 * math.pi**2)) * nu \
        + math.log(2.0) + 0.25


def depth_scaling(nu: int, delta: float, lam: float, coupling: float) -> float:
    """Well-depth law Delta U_nu = coupling * (8 pi/(nu lam^3))
    * |ln delta + phi(nu)|, with coupling = n(omega) d^2 / (3 eps0);
    positive values are well depths."""
    if not 0 < delta < 1:
        raise ValueError("depth_scaling requires 0 < delta < 1")
    return coupling * 8.0 * math.pi / (nu * lam**3) \
        * abs(math.log(delta) + phi_nu(nu))
