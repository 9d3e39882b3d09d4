"""Service network schemata: membership, compliance, protocols, enactment.

All document-shaped arguments and results are canonical JSON text; use
``json.loads`` on results to inspect them structurally.
"""

from svproto._core import (
    Error,
    canonical_predicate,
    canonicalize,
    check_compliance,
    classify,
    enabled_activities,
    find_subnetworks,
    implicit_schema,
    instance_of,
    new_instance,
    relational_member,
    step,
)

__all__ = [
    "Error",
    "canonical_predicate",
    "canonicalize",
    "check_compliance",
    "classify",
    "enabled_activities",
    "find_subnetworks",
    "implicit_schema",
    "instance_of",
    "new_instance",
    "relational_member",
    "step",
]
