"""Exact-arithmetic toolkit for three-term recursions, weighted lattice
paths, monomer-dimer heaps, and J-fraction identities."""

from .basis import (
    CoeffSpec,
    HankelMatrix,
    MomentSeq,
    OrthoBasis,
    PositivityVerdict,
    basis_inverse_check,
    expand_in_basis,
    generate_basis,
    hankel_dets,
    hankel_positivity,
    qn_via_determinant,
    recursion_coeffs,
    scalar_product,
    stieltjes_moments,
)
from .contfrac import Convergent, convergent, convergent_difference, convergent_qstar_identity, j_series
from .heaps import (
    Heap,
    HeapWord,
    Piece,
    PlacedPiece,
    canonical_word,
    heap_to_motzkin,
    heaps_equivalent,
    motzkin_to_heap,
    path_to_heap,
    pyramid_summit,
    settle,
)
from .numeric import (
    QuadratureResult,
    binet_eval,
    catalan_integral,
    gf_coeff_check,
    jacobi_eigen_positivity,
)
from .paths import (
    Letter,
    MotzkinPath,
    PathWord,
    Step,
    enumerate_paths,
    h_tilde,
    moments_by_paths,
    path_from_word,
    path_weight,
    path_word,
)
from .poly import (
    BigRational,
    Indeterminate,
    MultiPoly,
    T,
    UniPoly,
    X,
    c_var,
    lam_var,
    reciprocal_poly,
    shift_vars,
)
from .series import RationalFn, TruncatedSeries, series_div

__version__ = "0.1.0"
