"""A hereditary tilt where a map from a torsion-free to a torsion module is not transported."""

from radtilt.bench import verify
from radtilt.catalog import builtin, parse_modules
from radtilt.radcalc import depth
from radtilt.repmod import hom_space, projective
from radtilt.tiltkit import is_tilting

A = builtin("a4cx")
d = is_tilting(A, parse_modules(A, "P(1)+I(3)+tau-(P(3))+S(3)"))
f = hom_space(projective(A, "2"), projective(A, "1")).basis[0]
X, Y = d.Fprime(projective(A, "2")), d.F(projective(A, "1"))
print(f"P2 -> P1 is irreducible (depth {depth(f)}), but Hom_B(F'(P2), F(P1)) has dimension {hom_space(X, Y).dim}")
for claim in ["Tsep", "Tsepdual", "TheoremA"]:
    r = verify(claim, "a4cx")
    print(f"{claim}: {r.status}" + (f" ({r.detail})" if r.detail else ""))
