"""curvatura: exact invariants of curvature operators.

Subpackages are imported lazily by the CLI; library users import the module
they need (symfun, weights, decomp, curvops, genera, qseries).
"""

__version__ = "0.1.0"
