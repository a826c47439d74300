"""Exact computations for fields with a generic multiplicative character."""

from .character import CharContext, chi, chi_preimage, chi_root, verify_character
from .cyclotomic import CycloNum, RootOfUnity, cyclo_op, cyclo_reduce
from .errors import (
    FieldError,
    GencharError,
    ParseError,
    PreconditionError,
    ResourceError,
    UnitKindError,
    UnresolvedComponentError,
)
from .finite_field import FqElem, conway_poly, fq_dlog, fq_embed
from .ideals import Ideal, groebner, i_ideal, ideal_dim, j_ideal, radical_member, special_poly, type_ideals
from .lattice import ExponentLattice, hnf
from .mann import axiom_instance, d_bound, genericity_check, mann_solve
from .mult_lattice import is_mult_independent, mcl_member, mtp, mult_basis, relation_lattice
from .pcsets import (
    AlgSet,
    FinitePresentation,
    PcSet,
    pc_closure,
    pc_op,
    pc_rank_deg,
    pc_rel,
    presentation_gr_gd,
    primary_quotient,
    refine_essentially_disjoint,
    refine_geometric,
)
from .pullback import char_pullback
from .rank import BOTTOM, Ordinal2, gd_eval, gr_eval, ord_compare, ord_max

__all__ = [name for name in dir() if not name.startswith("_")]
