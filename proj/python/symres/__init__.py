"""Spherical-normalization densities and resolvent continuation.

Evaluates the Gamma-product normalization function and the spectral density
of a symmetric-space restricted-root datum, sphere-averages entire spectral
profiles into one-variable radial functions, and continues the associated
resolvent matrix elements across the essential spectrum (meromorphically in
rank one, holomorphically on a branched surface otherwise).

The heavy lifting lives in the compiled extension ``symres._core``; this
package re-exports its public API.
"""

from ._core import (
    CFunContext,
    ContourPath,
    DensityPole,
    EngineError,
    ErrorCode,
    EvalMode,
    Evaluation,
    OracleReport,
    Parity,
    RadialProfile,
    RestrictedRoot,
    SpaceInvariants,
    SpectralProfile,
    SurfacePoint,
    SymmetricSpaceSpec,
    WeylGroup,
    __version__,
    branch_radius,
    c_inverse,
    catalog_get,
    catalog_names,
    contour_resolvent,
    cross_contour_check,
    density_degree_bound,
    excluded_line_distance,
    faddeeva,
    faddeeva_convention_gate,
    gaussian_profile,
    h3_gaussian_resolvent,
    invariants,
    j_factor,
    load_or_parse_profile,
    load_space_file,
    log_gamma,
    make_context,
    make_radial_profile,
    min_width,
    parse_profile_text,
    parse_space_text,
    plancherel_density,
    plancherel_poles,
    profile_eval,
    profile_to_text,
    radial_F,
    reduce_to_strip,
    residue_at_pole,
    resolvent_eval,
    resolvent_physical,
    rho,
    space_to_text,
    surface_point,
    surface_point_valid,
    surface_to_z,
    symmetrize,
    validate_profile,
    validate_spec,
    weyl_generate,
)

__all__ = [
    "CFunContext",
    "ContourPath",
    "DensityPole",
    "EngineError",
    "ErrorCode",
    "EvalMode",
    "Evaluation",
    "OracleReport",
    "Parity",
    "RadialProfile",
    "RestrictedRoot",
    "SpaceInvariants",
    "SpectralProfile",
    "SurfacePoint",
    "SymmetricSpaceSpec",
    "WeylGroup",
    "__version__",
    "branch_radius",
    "c_inverse",
    "catalog_get",
    "catalog_names",
    "contour_resolvent",
    "cross_contour_check",
    "density_degree_bound",
    "excluded_line_distance",
    "faddeeva",
    "faddeeva_convention_gate",
    "gaussian_profile",
    "h3_gaussian_resolvent",
    "invariants",
    "j_factor",
    "load_or_parse_profile",
    "load_space_file",
    "log_gamma",
    "make_context",
    "make_radial_profile",
    "min_width",
    "parse_profile_text",
    "parse_space_text",
    "plancherel_density",
    "plancherel_poles",
    "profile_eval",
    "profile_to_text",
    "radial_F",
    "reduce_to_strip",
    "residue_at_pole",
    "resolvent_eval",
    "resolvent_physical",
    "rho",
    "space_to_text",
    "surface_point",
    "surface_point_valid",
    "surface_to_z",
    "symmetrize",
    "validate_profile",
    "validate_spec",
    "weyl_generate",
]
