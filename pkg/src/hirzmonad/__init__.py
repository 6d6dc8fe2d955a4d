"""Monads for framed torsion-free sheaves on Hirzebruch surfaces.

Exact rational arithmetic throughout: line-bundle cohomology of the
surface, monad points and their open conditions, hypercohomology on the
line at infinity, and the group action on framed points.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .exact import RatMatrix, UniPoly, BiPoly, ZeroLocus, kernel_basis, rank, rref, resultant_y
from .exact import zero_locus_class, zero_locus_points
from .surface import (
    BigradedPoly,
    ChartPoint,
    ChernCharacter,
    PicClass,
    chi,
    h0,
    h1,
    h2,
    intersect,
    restrict_to_linf,
    section_basis,
    vanishing_pattern,
)
from .monad import (
    KVector,
    MonadPoint,
    MonadShape,
    check_all,
    chern_of_cohomology,
    dim_Lk,
    k_from_chern,
    shape_from_k,
    trivial_monad,
)
from .linf import P1Complex, hyper_h, restrict_monad, splitting_type
from .moduli import (
    FramedPoint,
    GroupElement,
    act,
    act_framed,
    expected_dim,
    freeness_certificate,
    induced_lambda,
    orbit_fingerprint,
    sample_Lk,
    stabilizer_algebra,
)
