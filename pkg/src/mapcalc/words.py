"""Signed traversal words and the linear operators they induce.

A single-vertex map is written down by walking its one v-gon and recording
each rectangle as it is crossed: every edge id shows up twice, the first
occurrence is positive by convention and the second is positive exactly
when the edge is a balanced loop.  Single-zigzag maps get their word from
the phial, whose lone v-gon is the original zigzag.  The interlacement and
same-direction indicators of such a word combine into a symmetric GF(2)
operator on the edge universe.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gem import FlagMap, antimap, dual, gon_counts, gons, normalize, phial
from .gf2 import Gf2Vec, LinearOp


class NotApplicableError(ValueError):
    """The map does not meet the gon-count hypothesis of the request."""


@dataclass(frozen=True)
class SignedWord:
    """Cyclic double-occurrence word of signed edge ids.

    Entries are (edge, sign) with 0-based edges and sign +1 or -1; each
    edge occurs exactly twice and its first stored occurrence is positive.
    """

    m: int
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple((int(e), int(s)) for e, s in self.entries))
        if len(self.entries) != 2 * self.m:
            raise ValueError(f"word must have {2 * self.m} entries")
        seen: dict[int, int] = {}
        for e, s in self.entries:
            if not 0 <= e < self.m:
                raise ValueError(f"edge {e} out of range")
            if s not in (1, -1):
                raise ValueError(f"bad sign {s} on edge {e}")
            seen[e] = seen.get(e, 0) + 1
            if seen[e] > 2:
                raise ValueError(f"edge {e} occurs more than twice")
            if seen[e] == 1 and s != 1:
                raise ValueError(f"first occurrence of edge {e} must be positive")
        if len(seen) != self.m:
            raise ValueError("every edge must occur twice")

    def occurrences(self, x: int) -> tuple[int, int]:
        """Positions of the two occurrences of edge x, in stored order."""
        pos = [i for i, (e, _) in enumerate(self.entries) if e == x]
        return pos[0], pos[1]

    def same_direction(self, x: int) -> bool:
        """True when both occurrences of x carry the same sign."""
        _, p2 = self.occurrences(x)
        return self.entries[p2][1] == 1

    def canonical(self) -> SignedWord:
        """Least linearization over all rotations and both directions.

        Signs are recomputed for each candidate so its first occurrences
        are positive; edge ids are never relabeled.
        """
        same = [self.same_direction(x) for x in range(self.m)]
        ids = [e for e, _ in self.entries]
        best = None
        for seq in (ids, ids[::-1]):
            for r in range(len(seq)):
                rotated = seq[r:] + seq[:r]
                used: set[int] = set()
                cand = []
                for e in rotated:
                    if e not in used:
                        used.add(e)
                        cand.append((e, 1))
                    else:
                        cand.append((e, 1 if same[e] else -1))
                if best is None or cand < best:
                    best = cand
        return SignedWord(self.m, tuple(best))


def vertex_word(map_: FlagMap, which: int = 0) -> SignedWord:
    """Signed word of one v-gon traversal; needs every edge on that gon twice.

    The map is normalized first, so gon indices and the traversal refer to
    the canonical relabeling; word identity is meant up to canonical form.
    """
    nm = normalize(map_)
    dec = gons(nm, "v")
    if not 0 <= which < dec.count:
        raise ValueError(f"v-gon index {which} out of range (map has {dec.count})")
    seq = dec.gons[which]
    edges_seq = [seq[i] // 4 for i in range(0, len(seq), 2)]
    if sorted(edges_seq) != sorted(list(range(nm.m)) * 2):
        raise NotApplicableError(
            f"v-gon word needs a single v-gon covering every edge twice; map has {dec.count} v-gons"
        )
    pos = {flag: i for i, flag in enumerate(seq)}
    entries = []
    first_seen: set[int] = set()
    for e in edges_seq:
        if e not in first_seen:
            first_seen.add(e)
            entries.append((e, 1))
        else:
            balanced = pos[4 * e] % 2 == pos[4 * e + 2] % 2
            entries.append((e, 1 if balanced else -1))
    return SignedWord(nm.m, tuple(entries))


def zigzag_word(map_: FlagMap) -> SignedWord:
    """Signed word of the unique zigzag, read off the phial's single v-gon."""
    z = gons(map_, "z").count
    if z != 1:
        raise NotApplicableError(f"zigzag word needs a single zigzag; map has {z}")
    return vertex_word(phial(map_), 0)


def interlacement(w: SignedWord, x: int) -> Gf2Vec:
    """Edges occurring exactly once strictly between the occurrences of x."""
    p1, p2 = w.occurrences(x)
    counts: dict[int, int] = {}
    for i in range(p1 + 1, p2):
        e = w.entries[i][0]
        counts[e] = counts.get(e, 0) + 1
    return Gf2Vec.from_edges(w.m, (e for e, c in counts.items() if c == 1))


def kappa(w: SignedWord, x: int) -> Gf2Vec:
    """The singleton {x} when x is traversed twice the same way, else zero."""
    if not 0 <= x < w.m:
        raise ValueError(f"edge {x} out of range")
    return Gf2Vec(w.m, (1 << x) if w.same_direction(x) else 0)


def c_operator(w: SignedWord) -> LinearOp:
    """Column x is kappa(w, x) + interlacement(w, x), extended linearly."""
    return LinearOp(w.m, tuple((kappa(w, x) + interlacement(w, x)).bits for x in range(w.m)))


@dataclass(frozen=True)
class MapOperators:
    """The word operators a map admits; None marks a failed hypothesis.

    zigzag needs a single z-gon and comes from the zigzag word; its
    complement is identity + zigzag; face needs a single f-gon and comes
    from the vertex word of the dual.
    """

    m: int
    zigzag: LinearOp | None
    zigzag_complement: LinearOp | None
    face: LinearOp | None


def map_operators(map_: FlagMap) -> MapOperators:
    """Build whichever of the three word operators the map supports."""
    _, f, z = gon_counts(map_)
    zig = comp = face = None
    if z == 1:
        zig = c_operator(zigzag_word(map_))
        comp = LinearOp.identity(map_.m) + zig
    if f == 1:
        face = c_operator(vertex_word(dual(map_), 0))
    return MapOperators(map_.m, zig, comp, face)


def cozigzag_word(map_: FlagMap) -> SignedWord:
    """Vertex word of the phial's antimap; same edge cycle as the zigzag
    word with every balance flipped, so its operator is identity + zigzag
    (checked in the tests rather than assumed)."""
    z = gons(map_, "z").count
    if z != 1:
        raise NotApplicableError(f"cozigzag word needs a single zigzag; map has {z}")
    return vertex_word(antimap(phial(map_)), 0)
