"""From a presentation to its canonical structure graph.

A countable shift of rank 2 consists of finitely many periodic orbits plus
isolated configurations that run along one periodic tail, stumble through a
finite defect, and settle into another periodic tail.  The structure graph
records the periodic points and, for each ordered pair, how many distinct
defect orbits connect them.
"""

from sofic2 import (
    LabeledGraph,
    analyze,
    build_structure,
    canonicalize_point,
    comb_rep,
    formats,
    from_comb_rep,
    oracle_structure,
)

# the union of five simple languages over {0,1,2,3}:
#   0* 1 0*   0* (12)*   0* (13)*   (12)* 1 (13)*   (12)* 2 (13)*
TERMS = [("0", "1", "0"), ("0", "", "12"), ("0", "", "13"),
         ("12", "1", "13"), ("12", "2", "13")]

rep = comb_rep(TERMS)
graph = from_comb_rep(rep)
print("presentation: %d states, %d edges" % (len(graph.vertices), len(graph.edges)))

report = analyze(graph)
print("right-resolving: %s, countable: %s, rank: %s"
      % (report.is_right_resolving, report.is_countable_certified, report.rank))

structure = build_structure(graph)
print("\nstructure graph (rotation edges implicit):")
print(formats.format_structure(structure))

print("brute-force path enumeration agrees:",
      oracle_structure(graph) == structure)


def chain(k):
    """A 0-loop and a 3-loop joined by k doubled edges labeled 1/2."""
    edges = [("q0", "q0", "0"), ("q%d" % k, "q%d" % k, "3")]
    for i in range(k):
        edges.append(("q%d" % i, "q%d" % (i + 1), "1"))
        edges.append(("q%d" % i, "q%d" % (i + 1), "2"))
    return LabeledGraph.make([], edges)


print("\ntransition counts are exact big integers:")
for k in (10, 64):
    s = build_structure(chain(k))
    count = s.count(canonicalize_point("0"), canonicalize_point("3"))
    print("  %2d doubled edges -> count %d" % (k, count))
