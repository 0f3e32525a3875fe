"""Exact unit-group computations in group rings.

Decision procedures for hypercentrality of U(ZG) and hyperbolicity of the
unit groups of group algebras, plus exact enumeration, bounded unit
searches, and Z^2 witness construction. Every function returns the same
report dict the ``unitring`` command-line tool prints as JSON.
"""

try:
    from ._unitring import (
        central_series,
        classify_hypercentral,
        classify_hyperbolic,
        enumerate_units,
        unit_search,
        verify_dedekind,
        witness_z2,
    )
except ImportError:  # in-tree builds expose the module next to the package
    from _unitring import (
        central_series,
        classify_hypercentral,
        classify_hyperbolic,
        enumerate_units,
        unit_search,
        verify_dedekind,
        witness_z2,
    )

__all__ = [
    "central_series",
    "classify_hypercentral",
    "classify_hyperbolic",
    "enumerate_units",
    "unit_search",
    "verify_dedekind",
    "witness_z2",
]

__version__ = "1.0.0"
