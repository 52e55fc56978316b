"""
Colon ideals behind the bounds
==============================

The proofs reduce depth R/I^t to colons (I^t : M). This script builds a few
of them, checks the closed forms against the direct computation, and runs
one neighbor-exhausting chain with the depth of every link.
"""
from edgedepth.bounds import construct_E, exhaust_trace, leaf_colon_check
from edgedepth.graphs import complete, edge_ideal, order_neighbors, paper_example, path
from edgedepth.monomials import Monomial, ideal_colon_monomial, ideal_power, parse_monomial

###############################################################################
# Colon of the square by an edge: the edge ideal plus the products of
# neighbors. For the triangle that adds z^2.
T = complete(3)
xy = parse_monomial("x1*x2", T.vertex_names)
print("(I^2 : x1x2) =", construct_E(T, xy, 1).to_str(T.vertex_names))
print("direct       =", ideal_colon_monomial(ideal_power(edge_ideal(T), 2), xy).to_str(T.vertex_names))

###############################################################################
# Colon by a leaf edge just lowers the power.
print("leaf identity on path(5), t=3:", leaf_colon_check(path(5), 0, 3))

###############################################################################
# Exhausting the neighbors of x4 from root x1: delete them in an order that
# keeps x1 and x4 connected, recording each colon on the way.
G = paper_example("square-sharp")
Y = order_neighbors(G, 0, {3}, G.neighbors(3))
print("order:", [G.vertex_names[y] for y in Y])
tr = exhaust_trace(G, 0, Monomial.var(G.n, 3), 2, Y)
for s in tr.steps:
    print(f"  step {s.index}: colon by x4*{G.vertex_names[s.vertex]} -> depth {s.depth}")
print(f"  terminal depth {tr.terminal_depth}; depth R/(I^2 : x4) = {tr.root_depth} >= min = {tr.floor}")
