"""Irreducible components of special loci of moduli of marked curves with cyclic symmetry.

Components are indexed by branching data (branch exponents of a cyclic
cover plus the exponents over which marked orbits sit) taken up to the
unit group of ``Z/n``.  :mod:`cyclic_loci.enumeration` lists them directly,
:mod:`cyclic_loci.monodromy` recovers them by brute force over permutation
monodromy, and :mod:`cyclic_loci.galois` holds the exponent congruences of
the Galois action on the inertia of each component.
"""

from .enumeration import enumerate_components, enumerate_hurwitz_data, enumerate_markings
from .hurwitz import (
    BranchingDatum,
    ComponentLabel,
    HurwitzDatum,
    canonicalize,
    etale_part,
    exponent_count,
    marked_degree,
    psi_degree,
    rh_genus,
    unit_twist,
    validate_branching,
)

__all__ = [
    "BranchingDatum",
    "ComponentLabel",
    "HurwitzDatum",
    "canonicalize",
    "enumerate_components",
    "enumerate_hurwitz_data",
    "enumerate_markings",
    "etale_part",
    "exponent_count",
    "marked_degree",
    "psi_degree",
    "rh_genus",
    "unit_twist",
    "validate_branching",
]
