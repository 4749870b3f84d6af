# Four matchings per lattice: how the boundary gluing changes them.
#
# Every walk step switches on four sets of disjoint couplings.  On the torus
# the first two act along rows and the last two along columns.  Gluing the
# sides differently only rewires the seam couplings.

import numpy as np

from sqwalk import LatticeSpec, adjacency, build_staggered_set, site_of, validate_set
from sqwalk.tessellation import dump_edge_list

d = 6
for topology, scheme in [("torus", "axis"), ("klein", "axis"), ("rp2", "axis"),
                         ("torus", "interleaved"), ("sphere", "axis")]:
    spec = LatticeSpec(d, topology, scheme)
    sset = build_staggered_set(spec)
    report = validate_set(sset)
    sizes = [(len(m.pairs), len(m.singletons)) for m in sset]
    print(f"{spec.label:4s} edges={report.covered_edges:3d} ok={report.ok}  (pairs, singletons) per matching: {sizes}")

# The Klein bottle twists the horizontal seam: (i, 1) is glued to (d+1-i, d).
kb = build_staggered_set(LatticeSpec(d, "klein"))
seam = [(int(a), int(b)) for a, b in kb[1].pairs if (a - 1) % d == 0 or (b - 1) % d == 0]
print("\nKlein bottle seam couplings in M2:", seam)

# On the projective plane both seams join the two corner pairs, so those
# lattice edges are doubled.
rp2 = adjacency(LatticeSpec(d, "rp2"))
print("doubled RP2 edges:", {e: k for e, k in rp2.edges.items() if k > 1})

# Sphere corners: (1,1) and (d,d) have degree 2, (1,d) and (d,1) degree 3.
s2 = adjacency(LatticeSpec(d, "sphere"))
for i, j in [(1, 1), (1, d), (d, 1), (d, d)]:
    print(f"sphere degree at ({i},{j}):", s2.degree(site_of(i, j, d)))

# Edge-list dump used by the golden files in tests/data.
print("\n" + dump_edge_list(build_staggered_set(LatticeSpec(4, "torus", "interleaved"))))

# Sum of the interaction matrices recovers the lattice adjacency.
sset = build_staggered_set(LatticeSpec(d, "sphere"))
G = sum(m.interaction_matrix() for m in sset)
print("sum of G_j equals adjacency:", np.array_equal(G, adjacency(sset.spec).to_dense()))
