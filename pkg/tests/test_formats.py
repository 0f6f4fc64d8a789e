import pathlib

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypergraphic import (
    Hypergraph,
    ParseError,
    TripartiteDegreeSequence,
    TripartiteHypergraph,
    emit_hypergraph,
    gen_random_sequence,
    parse_degree_file,
    parse_degree_text,
    parse_hypergraph_text,
    read_hypergraph,
    realize_tripartite,
    write_hypergraph,
)
from hypergraphic.formats import SplitMix64, format_degree_sequence, format_trace

GOLDEN = pathlib.Path(__file__).parent / "golden"
T = TripartiteDegreeSequence


def test_parse_tripartite():
    assert parse_degree_text("A: 2 2\nB: 2 2\nC: 2 2") == T((2, 2), (2, 2), (2, 2))


def test_parse_general():
    assert parse_degree_text("3 3 3 3") == (3, 3, 3, 3)


def test_parse_comments_and_blank_lines():
    text = "# header\n\nC: 1 # tail\nA: 1\n  B:1\n"
    assert parse_degree_text(text) == T((1,), (1,), (1,))


def error_of(text):
    with pytest.raises(ParseError) as info:
        parse_degree_text(text)
    return info.value


def test_bad_token_position():
    err = error_of("A: 2 x\nB: 2 2\nC: 2 2")
    assert (err.line, err.column) == (1, 6)
    assert "'x'" in str(err) and "<input>:1:6" in str(err)


def test_bad_token_before_line_count():
    err = error_of("A: 2 x")
    assert (err.line, err.column) == (1, 6)


def test_negative_value():
    err = error_of("1 -2 3")
    assert (err.line, err.column) == (1, 3)
    assert "negative" in str(err)


def test_wrong_line_counts():
    assert error_of("1 2\n3 4").line == 2
    assert "B missing" in str(error_of("A: 1\nC: 1"))
    assert error_of("A: 1\nA: 1\nB: 1").line == 2
    assert error_of("A: 1\n2 2\nB: 1").line == 2
    assert error_of("A: 1\nB: 1\nD: 1").line == 3
    assert error_of("").line == 1
    assert error_of("A:\nB: 1\nC: 1").line == 1


def test_parse_file_reports_path(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("7 8 q\n")
    with pytest.raises(ParseError) as info:
        parse_degree_file(p)
    assert str(info.value).startswith(f"{p}:1:5:")


def test_emit_empty():
    assert emit_hypergraph(Hypergraph(3)) == "hypergraph 3 0\n"


def test_emit_single_edge():
    assert emit_hypergraph(Hypergraph(3, [(2, 0, 1)])) == "hypergraph 3 1\nv0 v1 v2\n"


def test_emit_complete_golden():
    golden = (GOLDEN / "complete_222.txt").read_text()
    assert emit_hypergraph(TripartiteHypergraph.complete(2, 2, 2)) == golden
    assert parse_hypergraph_text(golden) == TripartiteHypergraph.complete(2, 2, 2)


def test_emit_sorted_lexicographically():
    h = Hypergraph(12, [(10, 11, 2), (1, 3, 9), (1, 3, 10)])
    lines = emit_hypergraph(h).splitlines()[1:]
    assert lines == ["v1 v3 v9", "v1 v3 v10", "v2 v10 v11"]


def test_file_round_trip(tmp_path):
    seq = gen_random_sequence("tripartite", 6, 11)
    h, _ = realize_tripartite(seq)
    path = tmp_path / "h.txt"
    write_hypergraph(h, path)
    back = read_hypergraph(path)
    assert back == h
    assert emit_hypergraph(back) == path.read_text()


@settings(max_examples=50, deadline=None)
@given(st.sets(st.tuples(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8)).filter(lambda t: len(set(t)) == 3)))
def test_general_round_trip(edges):
    canonical = {tuple(sorted(e)) for e in edges}
    h = Hypergraph(9, canonical)
    assert parse_hypergraph_text(emit_hypergraph(h)) == h


@settings(max_examples=50, deadline=None)
@given(st.sets(st.tuples(st.integers(0, 2), st.integers(0, 3), st.integers(0, 1))))
def test_tripartite_round_trip(edges):
    h = TripartiteHypergraph((3, 4, 2), edges)
    text = emit_hypergraph(h)
    assert parse_hypergraph_text(text) == h
    assert emit_hypergraph(parse_hypergraph_text(text)) == text


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 500), min_size=1, max_size=20))
def test_degree_round_trip(values):
    assert parse_degree_text(format_degree_sequence(tuple(values))) == tuple(values)
    seq = T(tuple(values), tuple(values[::-1]), tuple(values))
    assert parse_degree_text(format_degree_sequence(seq)) == seq


def test_hypergraph_parse_errors():
    with pytest.raises(ParseError):
        parse_hypergraph_text("graph 3 0")
    with pytest.raises(ParseError) as info:
        parse_hypergraph_text("hypergraph 3 2\nv0 v1 v2\n")
    assert info.value.line == 1
    with pytest.raises(ParseError) as info:
        parse_hypergraph_text("tripartite 1 1 1 1\nA0 C0 B0\n")
    assert (info.value.line, info.value.column) == (2, 4)
    with pytest.raises(ParseError):
        parse_hypergraph_text("hypergraph 3 1\nv0 v1 v3\n")
    with pytest.raises(ParseError):
        parse_hypergraph_text("hypergraph 3 2\nv0 v1 v2\nv2 v1 v0\n")


def test_trace_format():
    seq = T((34, 15) + (14,) * 5, (35,) + (14,) * 6, (35,) + (14,) * 6)
    _, trace = realize_tripartite(seq)
    lines = format_trace(trace).splitlines()
    assert [l.split(":")[0] for l in lines[:3]] == ["# relabel A", "# relabel B", "# relabel C"]
    steps = lines[3:]
    assert len(steps) == 1
    cls, src, dst, removed, added = steps[0].split()
    assert cls == "A" and src == "A0" and dst == "A1"
    assert removed.split(",")[1:] == added.split(",")[1:]


# --- generator --------------------------------------------------------------


def test_splitmix_reference_values():
    # published reference outputs for seed 1234567
    rng = SplitMix64(1234567)
    assert [rng.next() for _ in range(3)] == [6457827717110365317, 3203168211198807973, 9817491932198370423]
    assert SplitMix64(0).next() == 0xE220A8397B1DCDAF


def test_splitmix_below_is_in_range():
    rng = SplitMix64(5)
    draws = [rng.below(7) for _ in range(2000)]
    assert set(draws) == set(range(7))


def test_gen_deterministic():
    assert gen_random_sequence("tripartite", 7, 42) == gen_random_sequence("tripartite", 7, 42)
    assert gen_random_sequence("general", 45, 42) == gen_random_sequence("general", 45, 42)
    assert gen_random_sequence("tripartite", 7, 42) != gen_random_sequence("tripartite", 7, 43)


@pytest.mark.parametrize("seed", range(20))
def test_gen_tripartite_postconditions(seed):
    seq = gen_random_sequence("tripartite", 7, seed)
    assert seq.sizes == (7, 7, 7)
    assert len(set(seq.sums)) == 1
    assert all(14 <= v <= 35 for cls in seq for v in cls)


@pytest.mark.parametrize("seed", range(20))
def test_gen_general_postconditions(seed):
    seq = gen_random_sequence("general", 45, seed)
    assert len(seq) == 45
    assert sum(seq) % 3 == 0
    assert all(102 <= v <= 160 for v in seq)


def test_gen_rejects_bad_input():
    with pytest.raises(ValueError):
        gen_random_sequence("general", 44, 0)
    with pytest.raises(ValueError):
        gen_random_sequence("bogus", 7, 0)
