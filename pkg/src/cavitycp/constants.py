"""Physical constants (CODATA 2018), exposed as named module constants."""

HBAR = 1.054571817e-34      # reduced Planck constant, J s
K_B = 1.380649e-23          # Boltzmann constant, J/K
C = 2.99792458e8            # speed of light in vacuum, m/s
EPSILON_0 = 8.8541878128e-12  # vacuum permittivity, F/m
MU_0 = 1.25663706212e-6     # vacuum permeability, N/A^2

EULER_GAMMA = 0.5772156649015329  # Euler-Mascheroni constant
ZETA_3 = 1.2020569031595943       # Riemann zeta(3), Apery's constant
