"""Auslander-Reiten theory, radical powers and tilting for bound quiver algebras."""

from .artrans import ARQuiver, RepInfinite, almost_split_sequence, has_length, knit_ar_quiver, tau, tau_inv
from .bench import VerificationReport, dynkin_index, orientation_sweep, tilt_chain, verify
from .catalog import BUILTINS, builtin, load_algebra, parse_module, parse_modules
from .field import QQ, PrimeField
from .qalg import BoundQuiverAlgebra, parse_algebra, path_algebra
from .radcalc import depth, left_degree, nilpotency_index, nilpotency_index_oracle, rad_power, reduced_nilpotency_index, right_degree
from .repmod import Representation, decompose, ext1, hom_space, injective, projective, simple
from .tiltkit import TiltingDatum, apr_tilt, endo_presentation, is_tilting

__all__ = [
    "ARQuiver",
    "BUILTINS",
    "BoundQuiverAlgebra",
    "PrimeField",
    "QQ",
    "RepInfinite",
    "Representation",
    "TiltingDatum",
    "VerificationReport",
    "almost_split_sequence",
    "apr_tilt",
    "builtin",
    "decompose",
    "depth",
    "dynkin_index",
    "endo_presentation",
    "ext1",
    "has_length",
    "hom_space",
    "injective",
    "is_tilting",
    "knit_ar_quiver",
    "left_degree",
    "load_algebra",
    "nilpotency_index",
    "nilpotency_index_oracle",
    "orientation_sweep",
    "parse_algebra",
    "parse_module",
    "parse_modules",
    "path_algebra",
    "projective",
    "rad_power",
    "reduced_nilpotency_index",
    "right_degree",
    "simple",
    "tau",
    "tau_inv",
    "tilt_chain",
    "verify",
]
