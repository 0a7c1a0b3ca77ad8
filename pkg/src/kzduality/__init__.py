"""Exact Hecke-algebra calculus for non-symmetric Macdonald and ASEP
polynomials, their reductions at q = t^(-m), and multi-species ASEP duality."""

from .asep_poly import asep_polynomial, mpa_rank_r, mpa_rank_two
from .combinatorics import prec_compare, sector, spectral_vector, staircase
from .hecke import cherednik_Y, hecke_T, hecke_T_inv, omega
from .macdonald import exchange_step_E, nonsymmetric_macdonald
from .ratfunc import ONE, Q, T, ZERO, RatFunc, coeff_p_scalar, gcd_qt
from .reduction import (H_observable, conjecture_probe, psi_positions, psi_rank1, psi_rank2,
                        psi_table, reduce_expand)
from .report import CheckReport
from .zpoly import ZPoly, coeff_p_poly

__version__ = "0.1.0"
