"""Search K_4 for an embedding with one face and one zigzag.

The candidate space (rotations times twists, first dart pinned) has
exactly (3-1)!^4 * 2^6 = 1024 members, so the sweep is exhaustive.  On
the found map the face operator and the complement of the zigzag operator
compose to the identity, the theorem-4 statement.
"""

from mapcalc import (
    candidate_count,
    check_theorem4,
    cozigzag_word,
    c_operator,
    dual,
    euler_connectivity,
    gon_counts,
    map_operators,
    parse_rotation,
    search_embedding,
    vertex_word,
)

K4 = """\
v 1: 1 2 3
v 2: 1 4 5
v 3: 2 4 6
v 4: 3 5 6
"""

g = parse_rotation(K4).graph
print(f"K4: {g.n} vertices, {g.edge_count} edges, candidate space {candidate_count(g)}")

outcome = search_embedding(g)
print(f"search: {outcome.status} after {outcome.candidates} candidates")
map_ = outcome.map
v, f, z = gon_counts(map_)
chi, xi = euler_connectivity(map_)
print(f"found map: v={v} f={f} z={z}, chi={chi}, xi={xi}")

print()
print("== face operator from the dual's vertex word ==")
face_word = vertex_word(dual(map_))
tokens = " ".join(f"{'-' if s < 0 else ''}{e + 1}" for e, s in face_word.entries)
print(f"face word: {tokens}")

ops = map_operators(map_)
composed = ops.zigzag_complement.compose(ops.face)
print("c_P~ o c_D columns (1-based):")
for x in range(map_.m):
    col = ", ".join(str(e + 1) for e in composed.column(x).edges())
    print(f"  {x + 1} -> {{{col}}}")

report = check_theorem4(map_)
print(f"theorem 4 holds: {report.holds}")

print()
print("== the complement operator really is the other zigzag reading ==")
alt = c_operator(cozigzag_word(map_))
print("c_operator(cozigzag word) == id + c_P:", alt.cols == ops.zigzag_complement.cols)
