"""Encoding graph problems as shift decision problems.

Colored-graph isomorphism embeds into conjugacy, and graph homomorphism,
subgraph embedding and compaction embed into block-map, embedding and
factor existence.  The brute-force graph oracles validate the encodings on
small instances.
"""

from sofic2 import (
    ColoredGraph,
    Mode,
    SimpleGraph,
    brute_graph_oracle,
    decide,
    digraph_count_table,
    digraph_gadget,
    digraph_isomorphic,
    gi_gadget,
    hom_gadget,
)

# two colored graphs that differ only by renaming
G = ColoredGraph.make({"a": 0, "b": 1, "c": 0, "d": 1},
                      [("a", "b"), ("b", "c"), ("c", "d")])
H = ColoredGraph.make({"p": 1, "q": 0, "r": 1, "s": 0},
                      [("q", "p"), ("p", "s"), ("s", "r")])
print("color-preserving isomorphism:", brute_graph_oracle("iso_colored", G, H))
print("conjugacy of the gadget shifts:",
      decide(Mode.CONJUGACY, gi_gadget(G), gi_gadget(H)) is not None)

# odd cycles need three colors: C5 maps into K3 but not into C7's structure
C5 = SimpleGraph.make([], [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"),
                           ("e", "a")])
K3 = SimpleGraph.make([], [("x", "y"), ("y", "z"), ("x", "z")])
print("\ngraph homomorphism C5 -> K3:", brute_graph_oracle("hom", C5, K3))
print("block map between the gadget shifts:",
      decide(Mode.BLOCK_MAP, hom_gadget(C5), hom_gadget(K3)) is not None)
print("reverse direction (K3 -> C5):",
      brute_graph_oracle("hom", K3, C5),
      decide(Mode.BLOCK_MAP, hom_gadget(K3), hom_gadget(C5)) is not None)

# conjugacy itself reduces to plain digraph isomorphism
s, t = gi_gadget(G), gi_gadget(H)
table = digraph_count_table(s, t)
print("\ndigraph gadgets isomorphic:",
      digraph_isomorphic(digraph_gadget(s, table), digraph_gadget(t, table)))
