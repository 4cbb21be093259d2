"""
Complements of order-12 triangulations on the torus
===================================================

A torus triangulation on 12 vertices has 36 edges, exactly the number left
over when a sphere triangulation (30 edges) is removed from K12.
"""

import tempfile
from pathlib import Path

from pt12 import complement, embed_in_genus, run_filters
from pt12.reference import load_reference
from pt12.search import SearchConfig, run_search, write_catalog
from pt12.triangulations import generate

level = generate(12)
reports = [run_filters(e.graph, i) for i, e in enumerate(level.embeddings)]
survivors = [e for e, r in zip(level.embeddings, reports) if r.survivor]
print(len(level), "triangulations,", len(survivors), "pass every filter")

# a handful of survivors: none of their complements embeds on the torus
tmp = Path(tempfile.mkdtemp())
write_catalog(tmp / "few.txt", survivors[:10])
cfg = SearchConfig(input=str(tmp / "few.txt"), witnesses=str(tmp / "w.txt"),
                   checkpoint=str(tmp / "ck.txt"))
print(run_search(cfg).to_text())

# dropping two edges is enough for some triangulations
pair = load_reference("figure1")
w = embed_in_genus(pair.near_toroidal, 1).witness
print("removed", pair.dotted, "->", w.order, "vertices,", w.size, "edges, genus 1")
print(complement(pair.triangulation).size)
