"""
Sphere triangulations level by level
====================================

"""

from collections import Counter

from pt12 import generate, genus, is_triangulation
from pt12.graph import degree_sequence

# each level is built from the previous one by splitting vertices, then
# deduplicated by canonical code
for n in range(4, 11):
    level = generate(n)
    print(n, len(level))

# every member is a triangulation of the sphere with 2n - 4 faces
level = generate(9)
e = level.embeddings[0]
print(is_triangulation(e), genus(e), len(e.faces))

# how the 50 order-9 triangulations spread over maximum degree
spread = Counter(degree_sequence(e.graph).max for e in level.embeddings)
for d in sorted(spread):
    print(f"max degree {d}: {spread[d]}")
