"""Exact evaluation of the counting function psi(r, u) for powers of linear
forms, with polyhedral, phylogenetic and matroid-theoretic backends."""

from _coxnagata import (  # noqa: F401
    arrangement_size,
    classify_gr25,
    cremona,
    cubic_sagbi_check,
    dd_facets,
    decoration_count,
    f_vector,
    gt_count,
    psi,
    psi_binary,
    psi_cayley,
    psi_five_points,
    psi_generic,
    psi_six_points,
    psi_zonotopal,
    scalar_initial_coefficient,
    scalar_order,
    scalar_str,
    sweep_gr25,
    verlinde,
    weyl_orbit_size,
)

__all__ = [
    "arrangement_size",
    "classify_gr25",
    "cremona",
    "cubic_sagbi_check",
    "dd_facets",
    "decoration_count",
    "f_vector",
    "gt_count",
    "psi",
    "psi_binary",
    "psi_cayley",
    "psi_five_points",
    "psi_generic",
    "psi_six_points",
    "psi_zonotopal",
    "scalar_initial_coefficient",
    "scalar_order",
    "scalar_str",
    "sweep_gr25",
    "verlinde",
    "weyl_orbit_size",
]
