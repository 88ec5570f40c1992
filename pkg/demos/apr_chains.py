"""Iterated APR tilts ending at the path algebra of linear A_5."""

from radtilt.bench import tilt_chain
from radtilt.catalog import builtin

for name, sinks in [("ejemplo1a", [5, 4, 3, 5, 4, 5]), ("ejemplo1b", [5, 4, 5, 3, 4, 5, 4])]:
    rep = tilt_chain(builtin(name), sinks)
    print(f"{name}: sinks {sinks} -> indices {rep.indices}, ends at {rep.final_type}, bound {rep.bound}")
