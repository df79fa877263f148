"""Write cohomology dimension tables for the graph complexes to CSV.

usage: python scripts/dimension_tables.py OUT_DIR [--kmax 3] [--gmax 2]
"""
import argparse
import csv
from pathlib import Path

from graphcx import chains
from graphcx import decorated as DG
from graphcx.complexes import GraphComplex

ap = argparse.ArgumentParser()
ap.add_argument("out", type=Path)
ap.add_argument("--kmax", type=int, default=3)
ap.add_argument("--gmax", type=int, default=2)
args = ap.parse_args()
args.out.mkdir(parents=True, exist_ok=True)

for n, j in ((6, 4), (7, 5), (6, 3), (7, 4)):
    path = args.out / f"cohomology_{n}_{j}.csv"
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["complex", "k", "g", "degree", "dim_basis", "dim_cohomology"])
        for k in range(1, args.kmax + 1):
            for g in range(0, args.gmax + 1):
                cxs = [(kind, GraphComplex(kind, n, j, k, g)) for kind in ("pgc'", "pgc", "hh", "hgc")]
                if k <= 2 and g <= 1:
                    cxs.append(("dgc", DG.DecoratedComplex(n, j, k, g)))
                for kind, cx in cxs:
                    for info in chains.cohomology(cx):
                        w.writerow([kind, k, g, info.degree, info.dim_basis, info.dim_cohomology])
    print(path)
