"""Euler characteristics of homogeneous affine Springer fibers.

Closed forms for the special linear and symplectic families are computed with
exact integers and checked against brute-force counts of lattice chains,
directed paths and intersection matrices.
"""

from .type_a import euler_sl, euler_sl_oracle, springer_euler_sl
from .type_c import SymplecticPartition, euler_sp, euler_sp_oracle, euler_sp_paths, springer_euler_sp

__all__ = [
    "SymplecticPartition",
    "euler_sl",
    "euler_sl_oracle",
    "euler_sp",
    "euler_sp_oracle",
    "euler_sp_paths",
    "springer_euler_sl",
    "springer_euler_sp",
]
