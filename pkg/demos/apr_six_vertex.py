"""APR tilt of a six-vertex algebra at its sink: the index grows from 7 to 8."""

from radtilt.catalog import builtin
from radtilt.radcalc import calculus, nilpotency_index
from radtilt.tiltkit import apr_tilt

A = builtin("aprsix")
rep = nilpotency_index(A)
print(f"r_A = {rep.r}, maximal vertices {rep.maximal_vertices}")
d = apr_tilt(A, "1")
print("B =\n" + d.B.to_text())
rc = calculus(d.B)
print(f"r_B = {nilpotency_index(d.B).r}")
for v in ("2'", "3'", "5'"):
    print(f"longest path P_{v} -> I_{v}: {rc.path_length(v)}")
