"""
Timing and sizes
================

Median verification time and compact encoded sizes for d = 100, 150, 200.
"""

# %%
import random

from tropsig.bench import PAPER_ROWS, run_bench, summary, to_csv

rows = run_bench(PAPER_ROWS, trials=20, rng=random.Random(4))
print(summary(rows))
print()
print(to_csv(rows))
