"""Enumeration of numerical semigroups of fixed genus through a forest of
elementary-rooted trees over Kunz-coordinates vectors."""

from .elementary import (
    ElementarySeed,
    InfeasibleError,
    count_elementary,
    enumerate_elementary,
    feasible,
    is_elementary,
)
from .forest import (
    children,
    children_semigroup,
    enumerate_FG,
    enumerate_frobenius,
    enumerate_genus,
    parent_step,
    theta,
    theta_kunz,
    traverse_class,
)
from .irreducible import IrreducibleClassification, classify, enumerate_irreducible
from .kunz import (
    KunzVector,
    is_kunz_of_FG,
    is_kunz_vector,
    kunz_from_semigroup,
    kunz_invariants,
    semigroup_from_kunz,
)
from .semigroup import (
    GapSemigroup,
    NotASemigroupError,
    apery_set,
    from_generators,
    membership,
    minimal_generators,
    pseudo_frobenius,
)

__version__ = "0.1.0"
