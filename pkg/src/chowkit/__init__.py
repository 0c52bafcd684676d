"""Exact symbolic intersection theory on Grassmannians and bundles over them."""

from .chernpoly import ChernPolynomial
from .graded import GradedElement, TruncatedSeries, newton_e_from_p, newton_p_from_e
from .partitions import BoxShape, Partition, complement_in_box, fits_in_box, giambelli_expand, pieri_multiply, schubert_product
from .sheaves import (
    O,
    Sheaf,
    adams,
    bundle_from_chern,
    direct_sum,
    dual,
    euler_class,
    line_bundle,
    projective_bundle,
    segre_series,
    sym,
    tautological_quotient,
    tautological_sub,
    trivial_bundle,
)
from .spaces import (
    FormalChernRing,
    Grassmannian,
    ProductSpace,
    ProjectiveBundle,
    ProjectiveSpace,
    express_in_chern_monomials,
    grassmannian,
    integrate,
    product_space,
    projbundle_pushforward,
    pushforward_to_first_factor,
)
from .voisin import (
    dims_report,
    determinant_degrees,
    eigen_crosscheck,
    fixed_locus_class,
    psi_star_h,
    rank_strata_codims,
    voisin_degree,
)

__version__ = "0.1.0"
