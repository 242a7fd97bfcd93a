"""Unit tests for the .gem/.szw/.rot codecs and map reconstruction."""

from __future__ import annotations

import random

import pytest

from conftest import K4_ROT, k33_word, random_signed_word
from mapcalc import (
    MapFormatError,
    MultiGraph,
    RotationSystem,
    ValidationFailure,
    embedding_to_map,
    format_word,
    from_signed_word,
    gon_counts,
    induced_graph,
    normalize,
    parse_gem,
    parse_rotation,
    parse_word,
    projective_loop_map,
    sphere_loop_map,
    validate,
    write_gem,
    write_rotation,
    zigzag_map_from_word,
)

S1_TEXT = "gem 1\na 0 3\na 1 2\n"


def test_write_gem_text():
    assert write_gem(sphere_loop_map()) == S1_TEXT


def test_gem_round_trip():
    for map_ in (sphere_loop_map(), projective_loop_map(), zigzag_map_from_word(k33_word())):
        again = parse_gem(write_gem(map_))
        assert again == normalize(map_)
        assert gon_counts(again) == gon_counts(map_)


def test_gem_comments_and_blanks():
    text = "# a loop\n\ngem 1  # header\n a 0 3\na 1 2\n\n"
    assert parse_gem(text) == sphere_loop_map()


def test_gem_header_errors():
    with pytest.raises(MapFormatError):
        parse_gem("")
    with pytest.raises(MapFormatError):
        parse_gem("map 1\na 0 3\na 1 2\n")
    with pytest.raises(MapFormatError):
        parse_gem("gem x\n")
    with pytest.raises(MapFormatError):
        parse_gem("gem 0\n")


def test_gem_pair_errors():
    with pytest.raises(MapFormatError):
        parse_gem("gem 1\na 0 3\n")
    err = None
    try:
        parse_gem("gem 1\na 0 3\nb 1 2\n")
    except MapFormatError as exc:
        err = exc
    assert err is not None and err.line == 3
    with pytest.raises(MapFormatError):
        parse_gem("gem 1\na 0 4\na 1 2\n")
    with pytest.raises(MapFormatError):
        parse_gem("gem 1\na 0 3\na 0 2\n")
    with pytest.raises(MapFormatError):
        parse_gem("gem 1\na 0 0\na 1 2\n")


def test_gem_strict_validation():
    two_spheres = "gem 2\na 1 2\na 3 0\na 5 6\na 7 4\n"
    with pytest.raises(ValidationFailure, match="connected"):
        parse_gem(two_spheres)
    map_ = parse_gem(two_spheres, strict=False)
    assert not validate(map_).ok


def test_parse_word():
    w = parse_word("1 2 -1 2")
    assert w.m == 2
    assert w.entries == ((0, 1), (1, 1), (0, -1), (1, 1))
    assert parse_word("# intro\n1 1\n") == parse_word("1 1")


def test_parse_word_errors():
    for bad in ("", "1", "1 1 2", "1 1 3 3", "-1 1", "1 x", "0 0"):
        with pytest.raises(MapFormatError):
            parse_word(bad)


def test_format_word_round_trip():
    rng = random.Random(53)
    for _ in range(20):
        w = random_signed_word(rng, rng.randint(1, 6))
        assert parse_word(format_word(w)) == w
    assert format_word(parse_word("1 2 -1 2")) == "1 2 -1 2\n"


def test_from_signed_word_loops():
    assert from_signed_word(parse_word("1 1")) == sphere_loop_map()
    assert from_signed_word(parse_word("1 -1")) == projective_loop_map()


def test_zigzag_map_from_single_loop_word():
    map_ = zigzag_map_from_word(parse_word("1 1"))
    v, f, z = gon_counts(map_)
    assert z == 1 and map_.m == 1


def test_from_signed_word_always_one_vertex():
    rng = random.Random(59)
    for _ in range(20):
        w = random_signed_word(rng, rng.randint(1, 6))
        map_ = from_signed_word(w)
        assert validate(map_).ok
        assert gon_counts(map_)[0] == 1


def test_parse_rotation_k4():
    rs = parse_rotation(K4_ROT)
    assert rs.graph.n == 4
    assert rs.graph.edge_count == 6
    assert rs.graph.degrees() == (3, 3, 3, 3)
    assert rs.twists == frozenset()
    assert rs.rotations[0] == ((0, 0), (1, 0), (2, 0))


def test_parse_rotation_vertex_order_and_twists():
    text = "v 2: 2\ntwist: 1\nv 1: 1 1 2\n"
    rs = parse_rotation(text)
    assert rs.graph.edges == ((0, 0), (0, 1))
    assert rs.twists == frozenset({0})


def test_rotation_round_trip():
    rs = parse_rotation("v 1: 1 1 2\nv 2: 2\ntwist: 1\n")
    assert parse_rotation(write_rotation(rs)) == rs
    assert parse_rotation(write_rotation(parse_rotation(K4_ROT))) == parse_rotation(K4_ROT)


def test_parse_rotation_errors():
    for bad in (
        "",
        "v 1: 1\n",
        "v 1: 1 1\nv 1: 2 2\n",
        "v 1: 1 1\nv 3: 2 2\n",
        "v 1: 1 1 2\n",
        "v 1: 1 1 3 3\n",
        "v 1: 1 1\ntwist: 2\n",
        "v 1: 1 1\ntwist: 1\ntwist: 1\n",
        "v 1: 1 x\n",
        "w 1: 1 1\n",
    ):
        with pytest.raises(MapFormatError):
            parse_rotation(bad)


def test_rotation_system_validation():
    g = parse_rotation(K4_ROT).graph
    with pytest.raises(ValueError):
        RotationSystem(g, (((0, 0),),) * 4, frozenset())
    with pytest.raises(ValueError):
        RotationSystem(g, parse_rotation(K4_ROT).rotations, frozenset({9}))


def test_embedding_to_map_loop_conventions():
    assert embedding_to_map(parse_rotation("v 1: 1 1\n")) == sphere_loop_map()
    assert embedding_to_map(parse_rotation("v 1: 1 1\ntwist: 1\n")) == projective_loop_map()


def test_embedding_to_map_recovers_the_graph():
    rs = parse_rotation(K4_ROT)
    map_ = embedding_to_map(rs)
    assert validate(map_).ok
    assert gon_counts(map_)[0] == 4
    g = induced_graph(map_, "v")
    assert g.edges == rs.graph.edges


def test_embedding_to_map_valid_on_random_rotations():
    g = MultiGraph(2, ((0, 1), (0, 1), (0, 1)))
    rng = random.Random(61)
    for _ in range(15):
        darts0 = [(e, 0) for e in range(3)]
        darts1 = [(e, 1) for e in range(3)]
        rng.shuffle(darts0)
        rng.shuffle(darts1)
        twists = frozenset(e for e in range(3) if rng.random() < 0.5)
        rs = RotationSystem(g, (tuple(darts0), tuple(darts1)), twists)
        map_ = embedding_to_map(rs)
        assert validate(map_).ok
        assert gon_counts(map_)[0] == 2
