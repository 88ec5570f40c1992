"""Nilpotency index of the radical of mod kQ for Dynkin quivers, over all orientations."""

from radtilt.bench import orientation_sweep

for kind, n in [("A", 2), ("A", 3), ("A", 4), ("A", 5), ("D", 4), ("D", 5), ("E", 6), ("E", 7), ("E", 8)]:
    rep = orientation_sweep(kind, n)
    rs = sorted({r.r for r in rep.rows})
    print(f"{kind}{n}: {len(rep.rows):3d} orientations, r = {rs}, nodes = {rep.rows[0].nodes}, ok = {rep.ok}")
