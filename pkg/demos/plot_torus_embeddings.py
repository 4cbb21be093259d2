"""
Torus embeddings of small graphs
================================

"""

from pt12 import embed_in_genus, genus, min_genus
from pt12.genus_search import embeddings_up_to_equivalence
from pt12.graph import complete_bipartite, complete_graph

# K7 triangulates the torus: 7 vertices, 21 edges, 14 triangles
k7 = embed_in_genus(complete_graph(7), 1).witness
print(genus(k7), k7.faces.lengths)

# K4,5 does not fit, and the search says so after exhausting the tree
out = embed_in_genus(complete_bipartite(4, 5), 1)
print("K4,5 on the torus:", out.found, "nodes", out.nodes)

# all inequivalent torus embeddings of K4,4
for e in embeddings_up_to_equivalence(complete_bipartite(4, 4), 1):
    print(e.faces.lengths)

print([min_genus(complete_graph(n), 3) for n in range(3, 9)])
