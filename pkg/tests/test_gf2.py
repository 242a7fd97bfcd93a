"""Unit tests for GF(2) vectors, subspaces, and linear operators."""

from __future__ import annotations

import random

import pytest

from conftest import members, random_subspace
from mapcalc import Gf2Subspace, Gf2Vec, LinearOp


def test_vec_basics():
    v = Gf2Vec.from_edges(5, [0, 3])
    assert v.edges() == (0, 3)
    assert 0 in v and 3 in v and 1 not in v
    assert not v.is_zero()
    assert Gf2Vec(5, 0).is_zero()
    assert Gf2Vec.singleton(5, 2).edges() == (2,)


def test_vec_add_and_dot():
    a = Gf2Vec.from_edges(4, [0, 1])
    b = Gf2Vec.from_edges(4, [1, 2])
    assert (a + b).edges() == (0, 2)
    assert a.dot(b) == 1
    assert a.dot(a + b) == 1
    assert Gf2Vec.from_edges(4, [0, 1]).dot(Gf2Vec.from_edges(4, [2, 3])) == 0


def test_vec_universe_mismatch():
    with pytest.raises(ValueError):
        Gf2Vec(3, 0) + Gf2Vec(4, 0)
    with pytest.raises(ValueError):
        Gf2Vec(3, 0).dot(Gf2Vec(4, 0))
    with pytest.raises(ValueError):
        Gf2Vec(2, 0b100)


def test_span_reduces_to_rref():
    s = Gf2Subspace.span(3, [0b011, 0b110, 0b101])
    assert s.dim == 2
    assert s.contains(0b101)
    assert not s.contains(0b001)
    assert members(s) == {0, 0b011, 0b110, 0b101}


def test_zero_and_full():
    z = Gf2Subspace.zero(4)
    f = Gf2Subspace.full(4)
    assert z.dim == 0 and f.dim == 4
    assert z.is_subspace_of(f)
    assert f.contains(0b1011)
    assert list(z.vectors()) == [Gf2Vec(4, 0)]


def test_subspace_vectors_enumeration():
    s = Gf2Subspace.span(4, [0b0011, 0b1100])
    got = {v.bits for v in s.vectors()}
    assert got == members(s)
    assert len(got) == 4


def test_sum_and_intersect_against_brute_force():
    rng = random.Random(7)
    for _ in range(50):
        m = rng.randint(1, 6)
        a, b = random_subspace(rng, m), random_subspace(rng, m)
        should_sum = set()
        for x in members(a):
            should_sum |= {x ^ y for y in members(b)}
        assert members(a.sum(b)) == should_sum
        assert members(a.intersect(b)) == members(a) & members(b)


def test_perp_is_orthogonal_complement():
    rng = random.Random(11)
    for _ in range(50):
        m = rng.randint(1, 6)
        s = random_subspace(rng, m)
        p = s.perp()
        assert s.dim + p.dim == m
        every = {x for x in range(1 << m) if all(bin(x & r).count("1") % 2 == 0 for r in s.rows)}
        assert members(p) == every


def test_operator_apply_and_compose():
    op = LinearOp.from_columns(3, [0b011, 0b110, 0b101])
    v = Gf2Vec.from_edges(3, [0, 2])
    assert op.apply(v).bits == 0b011 ^ 0b101
    two = op.compose(op)
    for x in range(3):
        assert two.column(x).bits == op.apply(op.column(x)).bits


def test_operator_identity_add_transpose():
    ident = LinearOp.identity(3)
    op = LinearOp.from_columns(3, [0b010, 0b001, 0b100])
    assert ident.compose(op).cols == op.cols
    assert (op + op).cols == LinearOp.zero(3).cols
    t = op.transpose()
    for i in range(3):
        for j in range(3):
            assert ((op.cols[j] >> i) & 1) == ((t.cols[i] >> j) & 1)


def test_operator_symmetry():
    assert LinearOp.from_columns(2, [0b10, 0b01]).is_symmetric()
    assert not LinearOp.from_columns(2, [0b10, 0b00]).is_symmetric()


def test_image_and_kernel():
    op = LinearOp.from_columns(3, [0b011, 0b011, 0b100])
    im, ker = op.image(), op.kernel()
    assert im.dim == 2 and ker.dim == 1
    assert ker.contains(0b011)
    for v in ker.vectors():
        assert op.apply(v).is_zero()


def test_rank_nullity_random():
    rng = random.Random(13)
    for _ in range(100):
        m = rng.randint(1, 8)
        op = LinearOp.from_columns(m, [rng.getrandbits(m) for _ in range(m)])
        assert op.image().dim + op.kernel().dim == m


def test_operator_universe_mismatch():
    with pytest.raises(ValueError):
        LinearOp.identity(3).apply(Gf2Vec(4, 0))
    with pytest.raises(ValueError):
        LinearOp.identity(3).compose(LinearOp.identity(4))
    with pytest.raises(ValueError):
        Gf2Subspace.span(3, [0]).sum(Gf2Subspace.span(4, [0]))
