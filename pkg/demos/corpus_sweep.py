"""
Sweeping every small graph
==========================

Run the maxdeg pipeline on every non-isomorphic graph of a given order and
cross-check each result against brute force.
"""

from pathlib import Path

from equicolor import sweep
from equicolor.oracle import read_fixture

fixtures = Path(__file__).resolve().parent.parent / "fixtures"
report = sweep(read_fixture(fixtures / "graphs7.g6"))
print(report.summary())
print("digest:", report.digest)
