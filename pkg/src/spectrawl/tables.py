"""Published reference values reproduced by this toolkit.

Four reference tables, addressed by their customary numbers:

* table 1 - closed-walk module outputs on the two example pairs
* table 2 - rounded CSL class scores (one per isomorphism class)
* table 4 - spectra and |u^T 1| for the 6-node pair (prism / k33)
* table 5 - spectra and |u^T 1| for the 10-node pair (bihexagon / bipentagon)

Comparison tolerance is half a unit in the last displayed digit of each
reference value. Known discrepancy: the table-2 entry published as 0.1 is not
reproducible; the score of that class computes to 1.0592 (every other entry
matches), so `compare_table(2)` reports exactly that one mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import discriminate, gnn, spectral
from .graphs import corpus_graph

# per-node outputs of the closed-walk module with the example filter, relu
TABLE1_OUTPUTS = {
    "prism": [10.42] * 6,
    "k33": [1.75] * 6,
    "bihexagon": [7.5, 7.5, 7.25, 7.25, 5.25, 5.25, 7.25, 7.25, 7.5, 7.5],
    "bipentagon": [7.9, 7.9, 7.65, 7.65, 5.65, 5.65, 7.65, 7.65, 7.9, 7.9],
}
TABLE1_TOL = 0.005

# rounded class scores 1^T y / 1e3 (multiset; class order is not published)
TABLE2_SCORES = [74, -46, 0.1, -31, -25, -26, -18, -29, 16, -21]
TABLE2_TOLS = [0.05 if abs(v) < 1 else 0.5 for v in TABLE2_SCORES]

# eigenvalues (ascending) and |u^T 1| magnitudes, aligned by position
TABLE4_SPECTRA = {
    "prism": {
        "eigenvalues": [-2, -2, 0, 0, 1, 3],
        "one_products": [0, 0, 0, 0, 0, 2.45],
    },
    "k33": {
        "eigenvalues": [-3, 0, 0, 0, 0, 3],
        "one_products": [0, 0, 0, 0, 0, 2.45],
    },
}
TABLE5_SPECTRA = {
    "bihexagon": {
        "eigenvalues": [-2.303, -1.618, -1.303, -1, -0.618, 0.618, 1, 1.303, 1.618, 2.303],
        "one_products": [0, 0, 0.210, 0, 0, 0, 0.816, 0, 0, 3.048],
    },
    "bipentagon": {
        "eigenvalues": [-2.115, -1.618, -1.618, -1.303, 0.254, 0.618, 0.618, 1, 1.861, 2.303],
        "one_products": [0, 0, 0, 0.210, 0, 0, 0, 0.816, 0, 3.048],
    },
}
EIGENVALUE_TOL = 1e-3
ONE_PRODUCT_TOL = 5e-3


@dataclass(frozen=True)
class ValueDiff:
    where: str
    reference: float
    computed: float
    tol: float

    @property
    def ok(self) -> bool:
        return abs(self.reference - self.computed) <= self.tol

    def __str__(self) -> str:
        mark = "ok" if self.ok else "MISMATCH"
        return (
            f"{self.where}: reference={self.reference:.6g} computed={self.computed:.6g} "
            f"tol={self.tol:.3g} [{mark}]"
        )


def compare_table1() -> list[ValueDiff]:
    diffs = []
    for key, expected in TABLE1_OUTPUTS.items():
        y = gnn.diagonal_module(corpus_graph(key), discriminate.PAIR_FILTER, gnn.RELU)
        for i, (ref, val) in enumerate(zip(expected, y)):
            diffs.append(ValueDiff(f"table1/{key}/node{i}", ref, float(val), TABLE1_TOL))
    return diffs


def compare_table2(spec: discriminate.CslSpec = discriminate.CslSpec()) -> list[ValueDiff]:
    computed = sorted(
        discriminate.csl_score(discriminate.csl_base_graph(spec.n, r)) for r in spec.skips
    )
    ref = sorted(zip(TABLE2_SCORES, TABLE2_TOLS))
    diffs = []
    for i, ((ref_val, tol), val) in enumerate(zip(ref, computed)):
        diffs.append(ValueDiff(f"table2/class-score[{i}]", float(ref_val), val, tol))
    return diffs


def _compare_spectrum_table(table: dict, label: str) -> list[ValueDiff]:
    diffs = []
    for key, ref in table.items():
        s = spectral.eigendecompose(corpus_graph(key))
        ones = spectral.eigenvector_one_products(s)
        for i, (ref_ev, ev) in enumerate(zip(ref["eigenvalues"], s.eigenvalues)):
            diffs.append(
                ValueDiff(f"{label}/{key}/eigenvalue[{i}]", float(ref_ev), float(ev), EIGENVALUE_TOL)
            )
        for i, (ref_up, up) in enumerate(zip(ref["one_products"], ones)):
            diffs.append(
                ValueDiff(f"{label}/{key}/|u^T 1|[{i}]", float(ref_up), float(up), ONE_PRODUCT_TOL)
            )
    return diffs


def compare_table(table: int) -> list[ValueDiff]:
    """All reference-vs-computed diffs for one table number."""
    if table == 1:
        return compare_table1()
    if table == 2:
        return compare_table2()
    if table == 4:
        return _compare_spectrum_table(TABLE4_SPECTRA, "table4")
    if table == 5:
        return _compare_spectrum_table(TABLE5_SPECTRA, "table5")
    raise ValueError(f"no reference table {table}; choose 1, 2, 4, or 5")
