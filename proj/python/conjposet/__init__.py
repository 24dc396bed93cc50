"""Subgroup lattices and conjugacy-class posets of finite groups."""

import json

from ._conjposet import (
    DEFAULT_MAX_ORDER,
    DEFAULT_MAX_SUBGROUPS,
    CapExceeded,
    Error,
    Group,
    NotComparable,
    OrderCapExceeded,
    PrimeNotInOrder,
    SpecInvalid,
    SpecParseError,
    SubgroupCapExceeded,
    breaking_points,
    build_group,
    canonical_spec,
    enumerate_subgroups,
    hasse_dot,
    suite_names,
    two_interval_cover,
)
from . import _conjposet

__all__ = [
    "DEFAULT_MAX_ORDER",
    "DEFAULT_MAX_SUBGROUPS",
    "CapExceeded",
    "Error",
    "Group",
    "NotComparable",
    "OrderCapExceeded",
    "PrimeNotInOrder",
    "SpecInvalid",
    "SpecParseError",
    "SubgroupCapExceeded",
    "analyze",
    "breaking_points",
    "build_group",
    "canonical_spec",
    "enumerate_subgroups",
    "hasse_dot",
    "in_class_c",
    "scan",
    "suite_names",
    "two_interval_cover",
    "verify",
]


def analyze(spec, all_witnesses=False):
    """Full analysis report as a dict (same schema as `conjposet analyze --json`)."""
    return json.loads(_conjposet.analyze_json(spec, all_witnesses))


def in_class_c(spec):
    """True if the conjugacy-class poset splits into two intervals."""
    return two_interval_cover(spec, "Lbar") is not None


def verify(suites=None):
    """Runs verification suites (all when None) and returns the results dict."""
    if isinstance(suites, str):
        suites = [suites]
    return json.loads(_conjposet.verify_json(list(suites or [])))


def scan(max_order=32, families=None):
    """Class membership rows for the selected families up to max_order."""
    return json.loads(_conjposet.scan_json(max_order, list(families or [])))
