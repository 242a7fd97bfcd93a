"""Map enumeration and embedding search.

enumerate_maps walks every fixed-point-free pairing of 4m flags and keeps
the connected ones, which gives the full census of m-edge maps with
canonical roles.  search_embedding hunts for an embedding of a given
multigraph (after optional edge subdivision) whose map has one face and
one zigzag: small candidate spaces are swept exhaustively in a fixed
order, larger ones by seeded random restarts with local moves, so a fixed
seed and budget always reproduce the same outcome.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations, product
from math import factorial
from typing import Iterator

from .codec import RotationSystem, embedding_to_map
from .gem import FlagMap, MultiGraph, gons, validate

EXHAUSTIVE_LIMIT = 10**6
_RESTART_STALL = 200


def enumerate_maps(m: int) -> Iterator[FlagMap]:
    """Yield every connected map with m rectangles and canonical roles."""
    if m < 1:
        raise ValueError("need at least one rectangle")

    def matchings(avail: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
        if not avail:
            yield ()
            return
        x = avail[0]
        for i in range(1, len(avail)):
            rest = avail[1:i] + avail[i + 1 :]
            for tail in matchings(rest):
                yield ((x, avail[i]),) + tail

    for pairs in matchings(tuple(range(4 * m))):
        map_ = FlagMap.from_pairs(m, pairs)
        if validate(map_).ok:
            yield map_


def subdivide_graph(g: MultiGraph, counts: tuple[int, ...]) -> MultiGraph:
    """Insert counts[e] new degree-2 vertices into edge e.

    Edge e keeps its id for the segment at its first endpoint; the other
    segments get fresh ids in order of processing, so the id mapping is
    deterministic.
    """
    if len(counts) != g.edge_count:
        raise ValueError("need one subdivision count per edge")
    n = g.n
    edges = list(g.edges)
    for e, k in enumerate(counts):
        if k < 0:
            raise ValueError("subdivision counts must be nonnegative")
        if k == 0:
            continue
        u, v = edges[e]
        chain = [u] + list(range(n, n + k)) + [v]
        n += k
        edges[e] = (chain[0], chain[1])
        edges.extend((chain[i], chain[i + 1]) for i in range(1, k + 1))
    return MultiGraph(n, tuple(edges))


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one search: candidate count, subdivision depth, wall time.

    Outcomes are reproducible for a fixed seed and budget; a wall-time
    limit can only truncate the deterministic candidate stream early.
    """

    max_candidates: int = 100_000
    max_subdivisions: int = 0
    time_limit: float | None = None


@dataclass(frozen=True)
class SearchOutcome:
    """status is found, exhausted or budget_exceeded; subdivisions gives the
    per-original-edge counts used by the found map."""

    status: str
    map: FlagMap | None
    subdivisions: tuple[int, ...] | None
    candidates: int
    seed: int


def _dart_lists(g: MultiGraph) -> list[list[tuple[int, int]]]:
    darts: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        darts[u].append((e, 0))
        darts[v].append((e, 1))
    return [sorted(d) for d in darts]


def candidate_count(g: MultiGraph) -> int:
    """Size of the rotation-times-twist space with first darts pinned."""
    total = 1 << g.edge_count
    for darts in _dart_lists(g):
        total *= factorial(max(len(darts) - 1, 0))
    return total


def _is_single_face_single_zigzag(map_: FlagMap) -> bool:
    return gons(map_, "f").count == 1 and gons(map_, "z").count == 1


class _Stop(Exception):
    pass


class _Counter:
    """Shared candidate budget across subdivision levels."""

    def __init__(self, limit: int, deadline: float | None):
        self.limit = limit
        self.deadline = deadline
        self.used = 0
        self.out_of_budget = False

    def tick(self) -> None:
        if self.used >= self.limit or (
            self.deadline is not None and time.monotonic() > self.deadline
        ):
            self.out_of_budget = True
            raise _Stop
        self.used += 1


def _exhaustive(g: MultiGraph, counter: _Counter) -> FlagMap | None:
    per_vertex = []
    for darts in _dart_lists(g):
        head, rest = darts[0], darts[1:]
        per_vertex.append([(head, *p) for p in permutations(rest)])
    n_edges = g.edge_count
    for rots in product(*per_vertex):
        for mask in range(1 << n_edges):
            counter.tick()
            twists = frozenset(e for e in range(n_edges) if (mask >> e) & 1)
            map_ = embedding_to_map(RotationSystem(g, rots, twists))
            if _is_single_face_single_zigzag(map_):
                return map_
    return None


def _random_rotations(g: MultiGraph, rng: random.Random) -> list[tuple[tuple[int, int], ...]]:
    rots = []
    for darts in _dart_lists(g):
        rest = darts[1:]
        rng.shuffle(rest)
        rots.append((darts[0], *rest))
    return rots


def _randomized(g: MultiGraph, counter: _Counter, rng: random.Random) -> FlagMap | None:
    """Random restarts plus local moves (swap two rotation entries or
    toggle one twist), accepting moves that do not increase f + z."""
    n_edges = g.edge_count
    swappable = [v for v, darts in enumerate(_dart_lists(g)) if len(darts) >= 3]

    def score(rots, mask) -> tuple[int, FlagMap]:
        counter.tick()
        twists = frozenset(e for e in range(n_edges) if (mask >> e) & 1)
        map_ = embedding_to_map(RotationSystem(g, tuple(rots), twists))
        return gons(map_, "f").count + gons(map_, "z").count, map_

    rots: list[tuple[tuple[int, int], ...]] | None = None
    mask = 0
    best = 0
    stall = _RESTART_STALL + 1
    while True:
        if stall > _RESTART_STALL:
            rots = _random_rotations(g, rng)
            mask = rng.getrandbits(n_edges)
            best, map_ = score(rots, mask)
            if best == 2:
                return map_
            stall = 0
            continue
        new_rots, new_mask = list(rots), mask
        if swappable and (not n_edges or rng.random() < 0.5):
            v = rng.choice(swappable)
            rot = list(new_rots[v])
            i, j = rng.sample(range(1, len(rot)), 2)
            rot[i], rot[j] = rot[j], rot[i]
            new_rots[v] = tuple(rot)
        else:
            new_mask ^= 1 << rng.randrange(n_edges)
        value, map_ = score(new_rots, new_mask)
        if value == 2:
            return map_
        if value <= best:
            stall = stall + 1 if value == best else 0
            rots, mask, best = new_rots, new_mask, value
        else:
            stall += 1


def search_embedding(
    g: MultiGraph,
    budget: SearchBudget = SearchBudget(),
    seed: int = 0,
    jobs: int = 1,
) -> SearchOutcome:
    """Look for a single-face-single-zigzag embedding of g or a subdivision.

    Subdivision patterns are explored in nondecreasing total count; each
    level is swept exhaustively when its candidate space is at most
    EXHAUSTIVE_LIMIT and sampled randomly otherwise (a randomized level
    consumes the remaining candidate budget).  jobs only shapes how a
    caller may shard the stream; evaluation here is sequential.
    """
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    if not g.is_connected():
        raise ValueError("search needs a connected graph")
    if g.edge_count == 0:
        raise ValueError("search needs at least one edge")
    deadline = time.monotonic() + budget.time_limit if budget.time_limit else None
    counter = _Counter(budget.max_candidates, deadline)
    rng = random.Random(seed)
    fully_swept = True
    try:
        for total in range(budget.max_subdivisions + 1):
            for combo in combinations_with_replacement(range(g.edge_count), total):
                counts = [0] * g.edge_count
                for e in combo:
                    counts[e] += 1
                sub = subdivide_graph(g, tuple(counts))
                if candidate_count(sub) <= EXHAUSTIVE_LIMIT:
                    found = _exhaustive(sub, counter)
                else:
                    fully_swept = False
                    found = _randomized(sub, counter, rng)
                if found is not None:
                    return SearchOutcome("found", found, tuple(counts), counter.used, seed)
    except _Stop:
        return SearchOutcome("budget_exceeded", None, None, counter.used, seed)
    status = "exhausted" if fully_swept else "budget_exceeded"
    return SearchOutcome(status, None, None, counter.used, seed)
