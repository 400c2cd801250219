"""AG-groupoids and AG-groups modulo n: construction, classification, verification."""

from .classes import ClassListing, ClassVariant, ag_group_members, ag_members, enumerate_class, smallest_class
from .core import CayleyTable, ModGroupoid, apply, cayley_table, make_groupoid
from .properties import PropertyProfile, classify
from .theorems import TheoremId, TheoremReport, VerifyConfig, falsify_converse, verify, verify_all

__all__ = [
    "CayleyTable",
    "ClassListing",
    "ClassVariant",
    "ModGroupoid",
    "PropertyProfile",
    "TheoremId",
    "TheoremReport",
    "VerifyConfig",
    "ag_group_members",
    "ag_members",
    "apply",
    "cayley_table",
    "classify",
    "enumerate_class",
    "falsify_converse",
    "make_groupoid",
    "smallest_class",
    "verify",
    "verify_all",
]
