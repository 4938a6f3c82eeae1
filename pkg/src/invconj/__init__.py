"""i-conjugacy in inverse semigroups.

Submodules:

* ``table`` / ``conjugacy``: finite inverse semigroups given by Cayley tables
* ``charts`` / ``partitions``: symmetric inverse monoids and class counting
* ``free_inverse``: Munn-tree canonical forms and conjugacy classes
* ``bicyclic``: the bicyclic monoid
* ``mcalister``: McAlister triples and P-semigroups
"""

from __future__ import annotations

from ._kernels import BACKEND
from .bicyclic import BicyclicPair, b_conjugate, b_conjugator, b_mul
from .charts import Chart, conjugate_charts, cycle_chain_type, parse_chart
from .conjugacy import characterize, conjugator_set, iconj_classes
from .free_inverse import canonical_of, conjugacy_class, words_equal
from .mcalister import McAlisterTriple, export_table, p_conjugate
from .partitions import class_count, partition_count
from .table import CayleyTable, load_table, validate_inverse

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BicyclicPair", "CayleyTable", "Chart", "McAlisterTriple",
    "b_conjugate", "b_conjugator", "b_mul", "canonical_of", "characterize",
    "class_count", "conjugacy_class", "conjugate_charts", "conjugator_set",
    "cycle_chain_type", "export_table", "iconj_classes", "load_table",
    "p_conjugate", "parse_chart", "partition_count", "validate_inverse",
    "words_equal",
]
