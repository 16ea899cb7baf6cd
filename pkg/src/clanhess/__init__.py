"""Exact combinatorics of (p,q)-clans, the weak and inclusion orders on
GL_p x GL_q orbit closures in the flag variety, Schubert-basis expansions of
their cohomology classes, and the classification of irreducible semisimple
Hessenberg varieties."""

from .clans import (
    Clan,
    ClanStatistics,
    clan_count,
    clan_length,
    dense_clan,
    enumerate_clans,
    gamma_w,
    inclusion_leq,
    interval_clans,
    orbit_dimension,
    parse_clan,
    render_clan,
    statistics,
)
from .flag_oracle import flag_representative, geometric_membership, integer_rank
from .hessenberg import (
    HessOrbitReport,
    area,
    catalan,
    classify_irreducibles,
    hess_dimension,
    hess_orbit_report,
    hessenberg_vectors,
    is_hessenberg_vector,
    m_of_w,
    orbit_in_hess,
)
from .perms import (
    Permutation,
    avoids,
    bruhat_leq,
    factorization_pairs,
    parse_permutation,
    phi,
    render_permutation,
    render_word,
    symmetric_group,
    weak_order_leq,
)
from .schubert import (
    IntPolynomial,
    SchubertExpansion,
    brion_class,
    expand_in_schubert_basis,
    is_multiplicity_free,
    monk_product,
    product_oracle,
    schubert_polynomial,
)
from .verify import CheckResult, run_all
from .weak_order import (
    LabeledCover,
    WeakOrderGraph,
    build_graph,
    covers_from,
    w_set,
    w_set_via_bijection,
)

__version__ = "0.1.0"

__all__ = [
    "Clan",
    "ClanStatistics",
    "CheckResult",
    "HessOrbitReport",
    "IntPolynomial",
    "LabeledCover",
    "Permutation",
    "SchubertExpansion",
    "WeakOrderGraph",
    "area",
    "avoids",
    "brion_class",
    "bruhat_leq",
    "build_graph",
    "catalan",
    "clan_count",
    "clan_length",
    "classify_irreducibles",
    "covers_from",
    "dense_clan",
    "enumerate_clans",
    "expand_in_schubert_basis",
    "factorization_pairs",
    "flag_representative",
    "gamma_w",
    "geometric_membership",
    "hess_dimension",
    "hess_orbit_report",
    "hessenberg_vectors",
    "inclusion_leq",
    "integer_rank",
    "interval_clans",
    "is_hessenberg_vector",
    "is_multiplicity_free",
    "m_of_w",
    "monk_product",
    "orbit_dimension",
    "orbit_in_hess",
    "parse_clan",
    "parse_permutation",
    "phi",
    "product_oracle",
    "render_clan",
    "render_permutation",
    "render_word",
    "run_all",
    "schubert_polynomial",
    "statistics",
    "symmetric_group",
    "w_set",
    "w_set_via_bijection",
    "weak_order_leq",
]
