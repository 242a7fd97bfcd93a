"""File formats and map constructions.

Three line-oriented ASCII formats, all with '#' comments and 1-based edge
ids on disk (0-based internally):

  .gem   header "gem m", then 2m lines "a f1 f2" listing the alpha pairs
         of a canonical-role map over flags 0..4m-1.
  .szw   whitespace-separated signed edge tokens of a cyclic
         double-occurrence word, e.g. "1 2 -1 2".
  .rot   vertex lines "v k: e1 e2 ..." giving the cyclic order of edge
         ends around each vertex, plus an optional "twist: e1 e2 ..."
         line marking orientation-reversing edges.

Reconstruction goes both ways: a signed word rebuilds the one-vertex map
it narrates (and from that the single-zigzag map it encodes), and a signed
rotation system expands into flags one dart at a time.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gem import FlagMap, MultiGraph, normalize, phial, validate
from .words import SignedWord


class MapFormatError(ValueError):
    """Malformed input text; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class ValidationFailure(ValueError):
    """Text parsed fine but the resulting map breaks a structural invariant."""


def _content_lines(text: str) -> list[tuple[int, str]]:
    """(1-based line number, stripped content) with comments and blanks gone."""
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((i, line))
    return out


def parse_gem(text: str, strict: bool = True) -> FlagMap:
    """Read a .gem file; strict mode raises ValidationFailure on bad maps."""
    lines = _content_lines(text)
    if not lines:
        raise MapFormatError("empty input")
    ln, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "gem":
        raise MapFormatError(f"expected header 'gem m', got {header!r}", ln)
    try:
        m = int(parts[1])
    except ValueError:
        raise MapFormatError(f"bad rectangle count {parts[1]!r}", ln) from None
    if m < 1:
        raise MapFormatError(f"bad rectangle count {m}", ln)
    if len(lines) - 1 != 2 * m:
        raise MapFormatError(f"expected {2 * m} pair lines, found {len(lines) - 1}")
    alpha = [-1] * (4 * m)
    for ln, line in lines[1:]:
        parts = line.split()
        if len(parts) != 3 or parts[0] != "a":
            raise MapFormatError(f"expected 'a f1 f2', got {line!r}", ln)
        try:
            x, y = int(parts[1]), int(parts[2])
        except ValueError:
            raise MapFormatError(f"bad flag ids in {line!r}", ln) from None
        for z in (x, y):
            if not 0 <= z < 4 * m:
                raise MapFormatError(f"flag {z} out of range 0..{4 * m - 1}", ln)
        if alpha[x] != -1 or alpha[y] != -1:
            raise MapFormatError(f"pair ({x}, {y}) reuses an already paired flag", ln)
        alpha[x], alpha[y] = y, x
    if -1 in alpha:
        raise MapFormatError(f"flag {alpha.index(-1)} left unpaired")
    map_ = FlagMap(m, tuple(alpha))
    if strict:
        report = validate(map_)
        if not report.ok:
            raise ValidationFailure("map invalid: " + ", ".join(report.failures()))
    return map_


def write_gem(map_: FlagMap) -> str:
    """Serialize normalize(map_) with pairs sorted by smaller flag."""
    nm = normalize(map_)
    pairs = sorted({(min(x, y), max(x, y)) for x, y in enumerate(nm.alpha)})
    lines = [f"gem {nm.m}"]
    lines.extend(f"a {x} {y}" for x, y in pairs)
    return "\n".join(lines) + "\n"


def parse_word(text: str) -> SignedWord:
    """Read a .szw word: signed 1-based edge tokens in traversal order."""
    tokens: list[tuple[int, int]] = []
    for ln, line in _content_lines(text):
        for tok in line.split():
            body = tok.lstrip("-")
            sign = -1 if tok.startswith("-") else 1
            if not body.isdigit() or int(body) < 1:
                raise MapFormatError(f"bad edge token {tok!r}", ln)
            tokens.append((int(body) - 1, sign))
    if not tokens:
        raise MapFormatError("empty word")
    if len(tokens) % 2:
        raise MapFormatError(f"word length {len(tokens)} is odd")
    m = len(tokens) // 2
    ids = sorted(e for e, _ in tokens)
    if ids != sorted(list(range(m)) * 2):
        raise MapFormatError(f"word must use each of the edge ids 1..{m} exactly twice")
    try:
        return SignedWord(m, tuple(tokens))
    except ValueError as exc:
        raise MapFormatError(str(exc)) from None


def format_word(w: SignedWord) -> str:
    """One line of signed 1-based edge tokens."""
    return " ".join(f"{'-' if s < 0 else ''}{e + 1}" for e, s in w.entries) + "\n"


def from_signed_word(w: SignedWord) -> FlagMap:
    """Rebuild the one-vertex map whose v-gon narrates the word.

    Occurrence one of edge e enters flag 4e and leaves 4e+1; occurrence
    two uses the opposite short pair, entering 4e+2 when positive and
    4e+3 when negative; alpha joins each exit to the next entry around
    the cycle.  The round trip back through vertex_word is a tested
    property, not an assumption.
    """
    entries = []
    seen: set[int] = set()
    for e, s in w.entries:
        if e not in seen:
            seen.add(e)
            entries.append((4 * e, 4 * e + 1))
        elif s == 1:
            entries.append((4 * e + 2, 4 * e + 3))
        else:
            entries.append((4 * e + 3, 4 * e + 2))
    n = len(entries)
    pairs = [(entries[i][1], entries[(i + 1) % n][0]) for i in range(n)]
    return FlagMap.from_pairs(w.m, pairs)


def zigzag_map_from_word(w: SignedWord) -> FlagMap:
    """The single-zigzag map whose zigzag word is w (phial of the above)."""
    return phial(from_signed_word(w))


@dataclass(frozen=True)
class RotationSystem:
    """A multigraph with a cyclic dart order per vertex and twisted edges.

    Darts are (edge, end) with end 0 at the first parsed endpoint; each
    dart appears exactly once across all rotations.
    """

    graph: MultiGraph
    rotations: tuple[tuple[tuple[int, int], ...], ...]
    twists: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "twists", frozenset(self.twists))
        need = {(e, end) for e in range(self.graph.edge_count) for end in (0, 1)}
        got = [d for rot in self.rotations for d in rot]
        if len(self.rotations) != self.graph.n:
            raise ValueError("need one rotation per vertex")
        if len(got) != len(need) or set(got) != need:
            raise ValueError("rotations must cover every edge end exactly once")
        for e in self.twists:
            if not 0 <= e < self.graph.edge_count:
                raise ValueError(f"twisted edge {e} out of range")


def parse_rotation(text: str) -> RotationSystem:
    """Read a .rot file into a graph plus rotation and twist data."""
    vertex_lines: dict[int, list[int]] = {}
    twist_tokens: list[int] | None = None
    for ln, line in _content_lines(text):
        head, _, rest = line.partition(":")
        head_parts = head.split()
        if head_parts and head_parts[0] == "twist":
            if len(head_parts) != 1 or twist_tokens is not None:
                raise MapFormatError("malformed or repeated twist line", ln)
            twist_tokens = []
            for tok in rest.split():
                if not tok.isdigit() or int(tok) < 1:
                    raise MapFormatError(f"bad twist token {tok!r}", ln)
                twist_tokens.append(int(tok) - 1)
            continue
        if len(head_parts) != 2 or head_parts[0] != "v" or not head_parts[1].isdigit():
            raise MapFormatError(f"expected 'v k: ...' or 'twist: ...', got {line!r}", ln)
        vid = int(head_parts[1]) - 1
        if vid in vertex_lines:
            raise MapFormatError(f"vertex {vid + 1} listed twice", ln)
        tokens = []
        for tok in rest.split():
            if not tok.isdigit() or int(tok) < 1:
                raise MapFormatError(f"bad edge token {tok!r}", ln)
            tokens.append(int(tok) - 1)
        vertex_lines[vid] = tokens
    if not vertex_lines:
        raise MapFormatError("no vertex lines")
    n = len(vertex_lines)
    if sorted(vertex_lines) != list(range(n)):
        raise MapFormatError(f"vertex ids must be 1..{n} without gaps")
    counts: dict[int, int] = {}
    for vid in range(n):
        for e in vertex_lines[vid]:
            counts[e] = counts.get(e, 0) + 1
    edge_ids = sorted(counts)
    if edge_ids != list(range(len(edge_ids))):
        raise MapFormatError(f"edge ids must be 1..{len(edge_ids)} without gaps")
    bad = [e + 1 for e, c in counts.items() if c != 2]
    if bad:
        raise MapFormatError(f"edge ids {bad} do not occur exactly twice")
    for e in twist_tokens or ():
        if e not in counts:
            raise MapFormatError(f"twist names unknown edge {e + 1}")
    ends: dict[int, list[int]] = {e: [] for e in edge_ids}
    rotations = []
    seen_end: dict[int, int] = {e: 0 for e in edge_ids}
    for vid in range(n):
        rot = []
        for e in vertex_lines[vid]:
            end = seen_end[e]
            seen_end[e] += 1
            ends[e].append(vid)
            rot.append((e, end))
        rotations.append(tuple(rot))
    edges = tuple((ends[e][0], ends[e][1]) for e in edge_ids)
    graph = MultiGraph(n, edges)
    return RotationSystem(graph, tuple(rotations), frozenset(twist_tokens or ()))


def write_rotation(rs: RotationSystem) -> str:
    """Serialize a rotation system back to .rot text."""
    lines = []
    for vid, rot in enumerate(rs.rotations):
        lines.append(f"v {vid + 1}: " + " ".join(str(e + 1) for e, _ in rot))
    if rs.twists:
        lines.append("twist: " + " ".join(str(e + 1) for e in sorted(rs.twists)))
    return "\n".join(lines) + "\n"


def embedding_to_map(rs: RotationSystem) -> FlagMap:
    """Expand a signed rotation system into flags.

    Dart (e, 0) enters flag 4e and leaves 4e+1; dart (e, 1) enters 4e+2
    and leaves 4e+3, or the reverse when e is twisted; alpha joins each
    dart's exit to the next dart's entry around its vertex.
    """
    pairs = []
    for rot in rs.rotations:
        k = len(rot)
        for i, (e, end) in enumerate(rot):
            if end == 0:
                exit_flag = 4 * e + 1
            else:
                exit_flag = 4 * e + 2 if e in rs.twists else 4 * e + 3
            e2, end2 = rot[(i + 1) % k]
            if end2 == 0:
                entry_flag = 4 * e2
            else:
                entry_flag = 4 * e2 + 3 if e2 in rs.twists else 4 * e2 + 2
            pairs.append((exit_flag, entry_flag))
    return FlagMap.from_pairs(rs.graph.edge_count, pairs)
