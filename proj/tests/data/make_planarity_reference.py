"""Regenerates planarity_reference.txt: random graphs with their planarity
and triangle-freeness as decided by networkx."""
import random

import networkx as nx

rng = random.Random(20240611)
with open("planarity_reference.txt", "w") as out:
    out.write("# graph6 planar triangle_free\n")
    for i in range(400):
        n = rng.randint(5, 16)
        m = rng.randint(n - 1, min(3 * n - 3, n * (n - 1) // 2))
        g = nx.gnm_random_graph(n, m, seed=rng.randrange(1 << 30))
        planar = nx.check_planarity(g)[0]
        tri_free = sum(nx.triangles(g).values()) == 0
        g6 = nx.to_graph6_bytes(g, header=False).decode().strip()
        out.write(f"{g6} {int(planar)} {int(tri_free)}\n")
