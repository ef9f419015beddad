import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import corpus_model
from polyslcs.core import KripkeModel, reflexive_transitive_closure
from polyslcs.errors import BadIndex, PathKindError, ReflexivityRequired, SeqMismatch
from polyslcs.gen import FIGURE1_VERTICES, cell_id
from polyslcs.paths import (Path, PathKind, Reindexing, classify, down_to_pm, down_to_updown,
                            insert_dup, pm_to_updown, prefix, sequentialize, shift)


@pytest.fixture(scope="module")
def chain():
    return KripkeModel(tuple("abcd"), reflexive_transitive_closure("abcd", [("a", "b"), ("b", "c"), ("c", "d")]),
                       poset=True)


def fpath(k, *labels):
    return Path(k, [cell_id(x, FIGURE1_VERTICES) for x in labels])


def test_classify_examples(figure1_poset):
    k = figure1_poset
    p = fpath(k, "AB", "ABC", "BC", "BCD", "D")
    # alternating up/down of even length: the strongest kind, and hence also pm
    assert classify(p) == PathKind.UPDOWN
    assert classify(p) >= PathKind.PM
    assert classify(fpath(k, "ABC", "AB")) == PathKind.DOWN
    assert classify(fpath(k, "A", "AB", "B", "BC")) == PathKind.UNDIRECTED
    assert classify(fpath(k, "AB", "ABC", "AC", "A")) == PathKind.PM
    assert classify(fpath(k, "A")) == PathKind.UNDIRECTED


def test_path_rejects_non_steps(figure1_poset):
    with pytest.raises(PathKindError):
        fpath(figure1_poset, "A", "D")
    with pytest.raises(PathKindError):
        Path(figure1_poset, [])


def test_algebra(chain):
    abc = Path(chain, "abc")
    assert sequentialize(abc, Path(chain, "cd")).elements == tuple("abcd")
    assert shift(abc, 1).elements == tuple("bc")
    assert insert_dup(abc, 1).elements == tuple("abbc")
    assert prefix(abc, 1).elements == tuple("ab")
    with pytest.raises(SeqMismatch):
        sequentialize(abc, Path(chain, "ab"))
    with pytest.raises(BadIndex):
        shift(abc, 3)
    with pytest.raises(BadIndex):
        insert_dup(abc, 0)


def test_insert_dup_needs_reflexive_step():
    k = KripkeModel(("a", "b"), {("a", "b"), ("a", "a")})
    with pytest.raises(ReflexivityRequired):
        insert_dup(Path(k, "ab"), 1)


def test_reindexing_problems():
    assert Reindexing(2, 1, (0, 0, 1)).is_valid()
    assert "not monotone" in Reindexing(3, 2, (0, 2, 1, 2)).problems()
    assert "not surjective" in Reindexing(2, 2, (0, 0, 2)).problems()
    assert "f(0) != 0" in Reindexing(1, 1, (1, 1)).problems()
    assert "not total" in Reindexing(2, 1, (0, 1)).problems()


def test_down_to_pm_base(figure1_poset):
    p = fpath(figure1_poset, "ABC", "AB")
    q, f = down_to_pm(p)
    assert q.elements == fpath(figure1_poset, "ABC", "ABC", "AB").elements
    assert f.mapping == (0, 0, 1)


def test_down_to_pm_keeps_pm_input(figure1_poset):
    p = fpath(figure1_poset, "A", "AB", "B")
    q, f = down_to_pm(p)
    assert (q[0], q[-1]) == (p[0], p[-1])
    assert f.witnesses(q, p)
    assert [x for i, x in enumerate(q) if i == 0 or x != q[i - 1]] == list(p)


def test_pm_to_updown_figure_path(figure1_poset):
    p = fpath(figure1_poset, "AB", "ABC", "BC", "BCD", "D")
    q, f = pm_to_updown(p)
    assert classify(q) == PathKind.UPDOWN and f.witnesses(q, p)
    # frozen from the construction: case B twice, then the length-2 base
    assert f.mapping == (0, 1, 2, 2, 2, 3, 4)


def test_conversions_reject_wrong_kind(figure1_poset):
    up = fpath(figure1_poset, "A", "AB")
    with pytest.raises(PathKindError):
        down_to_updown(up)
    with pytest.raises(PathKindError):
        pm_to_updown(fpath(figure1_poset, "ABC", "AB"))


def test_conversions_need_reflexive_frame():
    k = KripkeModel(("a", "b"), {("a", "b"), ("a", "a")})
    with pytest.raises(ReflexivityRequired):
        down_to_updown(Path(k, "ba"))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 10))
def test_conversion_properties(seed, length):
    k = corpus_model(seed % 200)
    rng = random.Random(seed)
    cur = rng.randrange(len(k.elements))
    seq = [cur]
    for _ in range(length - 1):
        cur = rng.choice(k.sym[cur])
        seq.append(cur)
    seq.append(rng.choice(k.pred[cur]))
    p = Path(k, [k.elements[i] for i in seq])
    q, f = down_to_updown(p)
    assert classify(q) == PathKind.UPDOWN and f.witnesses(q, p)
    if classify(p) >= PathKind.PM:
        q, f = pm_to_updown(p)
        assert classify(q) == PathKind.UPDOWN and f.witnesses(q, p)
        assert q.length <= 2 * p.length
