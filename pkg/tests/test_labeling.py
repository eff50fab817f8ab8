"""Overlap semantics, verifiers, extraction, binary reduction."""

import pytest

from ovlab import (
    BipartiteGraph,
    Digraph,
    Labeling,
    LabelingError,
    build_biclique,
    check_hub_rule,
    check_p4_rule,
    encode_binary,
    extract_decomposition,
    ov,
    verify_bipartite,
    verify_digraph,
)
from conftest import random_words


def test_ov_examples():
    assert ov("ab", "ba") == 1
    assert ov("abc", "xyz") == 0
    assert ov("ab", "ab") == 2
    assert ov("", "") == 0
    assert ov("a", "") == 0


def test_ov_bounds():
    for seed in range(80):
        _, length, _, words = random_words(seed)
        for x in words:
            for y in words:
                o = ov(x, y)
                assert 0 <= o <= min(len(x), len(y))
            if length > 0:
                assert ov(x, x) >= 1


def all_a(g: BipartiteGraph) -> Labeling:
    return Labeling(1, ("a",), {v: (0,) for v in g.vertices()})


def test_verify_bipartite_examples():
    biclique = build_biclique(3, 2)
    assert verify_bipartite(biclique, all_a(biclique)).ok

    single = BipartiteGraph(1, 1, [(1, 1)])
    l = Labeling.from_strings({("s", 1): "ab", ("p", 1): "ba"}, "ab")
    assert verify_bipartite(single, l).ok

    # corrupt one first character of a K22 prefix label: the two edges into
    # that vertex lose their overlaps
    k22 = build_biclique(2, 2)
    bad = Labeling.from_strings(
        {("s", 1): "a", ("s", 2): "a", ("p", 1): "a", ("p", 2): "z"}, "az"
    )
    result = verify_bipartite(k22, bad)
    assert not result.ok
    assert sorted((v.u, v.v) for v in result.violations) == [
        (("s", 1), ("p", 2)),
        (("s", 2), ("p", 2)),
    ]
    assert all(v.kind == "missing_overlap" for v in result.violations)


def test_verify_bipartite_ignores_other_directions():
    # p-suffix matches an s-prefix and two s-labels overlap each other;
    # the model only looks at s-suffix against p-prefix
    g = BipartiteGraph(2, 1, [(1, 1)])
    l = Labeling.from_strings(
        {("s", 1): "ba", ("s", 2): "xb", ("p", 1): "ax"}, "abx"
    )
    assert ov(l.word(("s", 2)), l.word(("s", 1))) > 0  # ignored s-s overlap
    assert ov(l.word(("p", 1)), l.word(("s", 2))) > 0  # ignored p-to-s overlap
    assert verify_bipartite(g, l).ok


def test_verify_bipartite_duplicate_labels_warn_only():
    g = BipartiteGraph(2, 1, [(1, 1), (2, 1)])
    l = Labeling.from_strings({("s", 1): "a", ("s", 2): "a", ("p", 1): "a"}, "a")
    result = verify_bipartite(g, l)
    assert result.ok
    assert result.warnings


def test_verify_bipartite_missing_assignment():
    g = build_biclique(2, 2)
    l = Labeling(1, ("a",), {("s", 1): (0,)})
    with pytest.raises(LabelingError):
        verify_bipartite(g, l)


def test_verify_digraph_examples():
    loop = Digraph(1, [(1, 1)])
    assert verify_digraph(loop, Labeling.from_strings({1: "aa"}, "a")).ok

    arc = Digraph(2, [(1, 2)])
    assert verify_digraph(arc, Labeling.from_strings({1: "ab", 2: "bc"}, "abc")).ok

    dup = Labeling.from_strings({1: "ab", 2: "ab"}, "ab")
    result = verify_digraph(arc, dup)
    assert not result.ok
    assert any(v.kind == "duplicate_label" for v in result.violations)


def test_verify_digraph_properness():
    # full-length overlap is not proper: no self-loop needed for "ab"
    d = Digraph(1, [])
    assert verify_digraph(d, Labeling.from_strings({1: "ab"}, "ab")).ok
    # but a borderd label forces a self-loop
    result = verify_digraph(d, Labeling.from_strings({1: "aa"}, "a"))
    assert not result.ok
    assert result.violations[0].kind == "unexpected_overlap"


def test_verify_length_zero():
    g = BipartiteGraph(1, 1, [])
    l = Labeling(0, (), {("s", 1): (), ("p", 1): ()})
    assert verify_bipartite(g, l).ok
    withedge = BipartiteGraph(1, 1, [(1, 1)])
    assert not verify_bipartite(withedge, l).ok
    # length-0 digraph labels are all equal, hence injective only for n = 1
    assert verify_digraph(Digraph(1, []), Labeling(0, (), {1: ()})).ok
    assert not verify_digraph(Digraph(2, []), Labeling(0, (), {1: (), 2: ()})).ok


def test_labeling_validation():
    with pytest.raises(LabelingError):
        Labeling(2, ("a",), {("s", 1): (0,)})  # wrong length
    with pytest.raises(LabelingError):
        Labeling(1, ("a",), {("s", 1): (1,)})  # char outside alphabet
    with pytest.raises(LabelingError):
        Labeling(1, ("a", "a"), {})  # duplicate alphabet entry
    with pytest.raises(LabelingError):
        Labeling.from_strings({("s", 1): "q"}, "ab")


def test_extract_decomposition_examples():
    biclique = build_biclique(2, 2)
    w = extract_decomposition(biclique, all_a(biclique))
    assert set(w.weights.values()) == {1}

    single = BipartiteGraph(1, 1, [(1, 1)])
    l = Labeling.from_strings({("s", 1): "ab", ("p", 1): "ba"}, "ab")
    assert extract_decomposition(single, l).weights == {(1, 1): 1}

    bad = Labeling.from_strings(
        {("s", 1): "x", ("s", 2): "x", ("p", 1): "x", ("p", 2): "q"}, "xq"
    )
    with pytest.raises(LabelingError):
        extract_decomposition(biclique, bad)


def relation_bipartite(words_s, words_p) -> BipartiteGraph:
    edges = [
        (i + 1, j + 1)
        for i, x in enumerate(words_s)
        for j, y in enumerate(words_p)
        if ov(x, y) > 0
    ]
    return BipartiteGraph(len(words_s), len(words_p), edges)


def test_extracted_decomposition_obeys_both_rules():
    # build the graph from the overlap relation itself, so the labeling is
    # valid by construction; its weight function must pass both rules
    for seed in range(120):
        n, length, sigma, words = random_words(seed, max_n=4, max_len=3, max_sigma=4)
        if length == 0 or n < 2:
            continue
        words_s, words_p = words[: n // 2], words[n // 2 :]
        if not words_s or not words_p:
            continue
        g = relation_bipartite(words_s, words_p)
        labels = {("s", i + 1): w for i, w in enumerate(words_s)}
        labels |= {("p", j + 1): w for j, w in enumerate(words_p)}
        l = Labeling(length, tuple("abcdef"[:sigma]), labels)
        assert verify_bipartite(g, l).ok
        w = extract_decomposition(g, l)
        if g.edges:
            assert check_p4_rule(g, w).ok
            assert check_hub_rule(g, w).ok


def test_encode_binary_examples():
    biclique = build_biclique(2, 2)
    enc = encode_binary(all_a(biclique))
    assert all(enc.string(v) == "110" for v in biclique.vertices())
    assert verify_bipartite(biclique, enc).ok

    two = Labeling.from_strings({("s", 1): "ab"}, "ab")
    assert encode_binary(two).string(("s", 1)) == "1100011010"

    empty = Labeling(0, (), {("s", 1): ()})
    assert encode_binary(empty).length == 0


def test_encode_binary_preserves_overlap_relations():
    for seed in range(80):
        n, length, sigma, words = random_words(seed)
        alphabet = tuple("abcdef"[:sigma])
        l = Labeling(length, alphabet, {i + 1: w for i, w in enumerate(words)})
        enc = encode_binary(l)
        width = max(1, (sigma - 1).bit_length()) if sigma > 1 else 0
        block = 2 * width + 3
        assert enc.length == block * length
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                before = ov(l.word(i), l.word(j))
                after = ov(enc.word(i), enc.word(j))
                assert (before > 0) == (after > 0)
                assert (0 < before < l.length) == (0 < after < enc.length)
                if before:
                    assert after == block * before
        # the 11 marker appears only at block starts
        for i in range(1, n + 1):
            text = enc.string(i)
            for pos in range(len(text) - 1):
                if text[pos] == text[pos + 1] == "1":
                    assert pos % block == 0
