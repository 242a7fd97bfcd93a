"""Rebuild an embedding of K_{3,3} from its single zigzag word.

One signed double-occurrence word determines the whole map: the induced
graph, the surface, and the GF(2) operator whose image and kernel are the
cycle and bond spaces (the theorem-2 statement, checked here directly).
"""

from mapcalc import (
    check_theorem2,
    check_theorem3,
    euler_connectivity,
    gon_counts,
    induced_graph,
    map_operators,
    orientable,
    parse_word,
    space_bundle,
    zigzag_map_from_word,
    zigzag_word,
)

WORD = "1 8 5 6 9 4 5 7 3 4 -8 2 3 -9 1 2 -7 6"

w = parse_word(WORD)
map_ = zigzag_map_from_word(w)

v, f, z = gon_counts(map_)
chi, xi = euler_connectivity(map_)
print(f"word: {WORD}")
print(f"map: m={map_.m} edges, v={v} f={f} z={z}, chi={chi}, xi={xi}")
print(f"orientable: {orientable(map_)}  (xi=1 means projective plane)")

g = induced_graph(map_, "v")
print(f"induced graph: {g.n} vertices, degrees {g.degrees()}, bipartite={g.is_bipartite()}")

print()
print("== zigzag operator from interlacement and balance ==")
ops = map_operators(map_)
for x in (0, 6):
    col = ", ".join(str(e + 1) for e in ops.zigzag.column(x).edges())
    print(f"c_P column {x + 1}: {{{col}}}")

bundle = space_bundle(map_)
print()
print("== image/kernel against cycle/bond spaces ==")
print(f"bond/cycle dims (v, f, z graphs): {bundle.dims()}")
for report in check_theorem2(map_) + check_theorem3(map_):
    dims = ", ".join(f"{k}={v}" for k, v in report.dims.items())
    print(f"theorem {report.theorem}: holds={report.holds} ({dims})")

print()
print("round trip:", zigzag_word(map_) == w)
