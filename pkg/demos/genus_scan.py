"""
Scanning the tree of semigroups by genus
========================================

Arithmetic-sequence semigroups are dropped. The work cap keeps each report
bounded and makes the output the same on any number of workers.
"""

from collections import Counter

from deltanu import ScanFilter, genus_tree_scan

entries = list(genus_tree_scan(ScanFilter(8, require_nonconstant=True), max_work=100_000))
print(Counter(e.genus for e in entries))
for e in entries[:10]:
    print(e.genus, e.generators, "period", e.report.minimal_period, "of", e.report.delta)
