"""Linear A_4 modulo the path of length three: index, tilting and transport of depth."""

from radtilt.catalog import builtin, parse_modules
from radtilt.radcalc import depth, nilpotency_index
from radtilt.repmod import hom_space, injective, simple
from radtilt.tiltkit import is_tilting

A = builtin("eje1a")
rep = nilpotency_index(A)
print(f"r_A = {rep.r}, maximal vertices {rep.maximal_vertices}")

d = is_tilting(A, parse_modules(A, "P(1)+P(2)+P(3)+S(3)"))
print(f"separating: {d.separating}, splitting: {d.splitting}")
print("B =\n" + d.B.to_text())
print(f"r_B = {nilpotency_index(d.B).r}")

f = hom_space(simple(A, "2"), injective(A, "2")).basis[0]
print(f"depth of S2 -> I2 in mod A: {depth(f)}; depth of its image in mod B: {depth(d.F_map(f))}")
