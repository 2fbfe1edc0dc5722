import json
import random

import pytest

from wcdim.constructions import g7, g8, g10
from wcdim.core import wcdim_profile
from wcdim.graph import canonical_form, parse_graph6, to_graph6
from wcdim.search import (
    KNOWN_COUNTS,
    ScanRecord,
    generate_all_graphs,
    min_order_report,
    read_records,
    scan_stream,
    write_records,
)


@pytest.mark.parametrize("order", range(1, 9))
def test_generation_counts(order):
    graphs = list(generate_all_graphs(order))
    assert len(graphs) == KNOWN_COUNTS[order]
    assert len({canonical_form(g) for g in graphs}) == len(graphs)
    assert all(g.order == order for g in graphs)


def test_generation_limits():
    with pytest.raises(ValueError):
        list(generate_all_graphs(9))
    with pytest.raises(ValueError):
        list(generate_all_graphs(0))


@pytest.mark.parametrize("order", range(1, 7))
def test_nothing_below_order_7(order):
    records, summary = scan_stream(generate_all_graphs(order))
    assert records == []
    assert summary.graphs_scanned == KNOWN_COUNTS[order]
    assert summary.dependent_found == 0


def test_order_7():
    records, summary = scan_stream(generate_all_graphs(7))
    assert summary.dependent_found == len(records) == 1
    (rec,) = records
    assert rec.critical_primes() == [2]
    assert canonical_form(parse_graph6(rec.graph6)) == canonical_form(g7().graph)
    assert summary.min_order_per_prime == {2: 7}


def test_single_line_g10():
    records, summary = scan_stream([to_graph6(g10().graph) + "\n"])
    assert len(records) == 1
    assert records[0].critical == [{"p": 5, "wcdim": 1}]
    assert records[0].source_index == 0


def test_records_recompute_from_graph6():
    records, _ = scan_stream(generate_all_graphs(7))
    for rec in records:
        prof = wcdim_profile(parse_graph6(rec.graph6))
        assert rec.invariant_factors == list(prof.invariant_factors)
        assert rec.wcdim_generic == prof.wcdim_generic
        assert rec.mis_count == prof.mis_count
        assert rec.critical == [{"p": p, "wcdim": prof.wcdim_at[p]} for p in prof.critical_primes]


def test_malformed_lines_are_counted():
    lines = [">>header", "A_", "", "not graph6!", to_graph6(g7().graph)]
    records, summary = scan_stream(lines)
    assert summary.graphs_scanned == 2
    assert [m["line"] for m in summary.malformed] == [1, 4]
    assert [r.source_index for r in records] == [4]


def test_witnesses_surface_in_any_stream():
    rng = random.Random(4)
    stream = [to_graph6(g) for g in generate_all_graphs(5)]
    for w in (g7(), g8(), g10()):
        stream.insert(rng.randrange(len(stream) + 1), to_graph6(w.graph))
    records, _ = scan_stream(stream)
    report = min_order_report(records, [2, 3, 5])
    assert report[2][0] <= 7 and report[3][0] <= 8 and report[5][0] <= 10
    assert report[5] == (10, to_graph6(g10().graph))


def test_min_order_report():
    assert min_order_report([], [2, 3, 5]) == {2: None, 3: None, 5: None}
    recs = [
        ScanRecord("b", 8, 1, 1, [2], [{"p": 2, "wcdim": 2}], 0),
        ScanRecord("a", 8, 1, 1, [6], [{"p": 2, "wcdim": 2}, {"p": 3, "wcdim": 2}], 1),
        ScanRecord("z", 7, 1, 1, [2], [{"p": 2, "wcdim": 2}], 2),
    ]
    assert min_order_report(recs, [2, 3, 5]) == {2: (7, "z"), 3: (8, "a"), 5: None}


def test_full_report_through_order_8():
    records = []
    for n in range(1, 9):
        records += scan_stream(generate_all_graphs(n))[0]
    report = min_order_report(records, [2, 3, 5])
    assert report[2][0] == 7 and report[3][0] == 8 and report[5] is None
    assert canonical_form(parse_graph6(report[3][1])) == canonical_form(g8().graph)


def test_parallel_scan_is_deterministic(tmp_path):
    graphs = [to_graph6(g) for g in generate_all_graphs(7)]
    one, s1 = scan_stream(graphs, jobs=1)
    three, s3 = scan_stream(graphs, jobs=3)
    assert one == three
    assert (s1.graphs_scanned, s1.dependent_found, s1.min_order_per_prime) == (
        s3.graphs_scanned, s3.dependent_found, s3.min_order_per_prime)
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    write_records(one, a)
    write_records(three, b)
    assert a.read_bytes() == b.read_bytes()
    assert read_records(a) == one


def test_write_is_atomic(tmp_path):
    path = tmp_path / "out.jsonl"
    path.write_text("old\n")

    def broken():
        yield ScanRecord("A_", 2, 1, 1, [2], [{"p": 2, "wcdim": 2}], 0)
        raise RuntimeError("interrupted")

    with pytest.raises(RuntimeError):
        write_records(broken(), path)
    assert path.read_text() == "old\n"
    assert [p.name for p in tmp_path.iterdir()] == ["out.jsonl"]


def test_record_json_round_trip():
    rec = ScanRecord("FQ~@g", 7, 6, 2, [1, 1, 1, 1, 2], [{"p": 2, "wcdim": 3}], 5)
    assert ScanRecord.from_json(rec.to_json()) == rec
    assert json.loads(rec.to_json())["source_index"] == 5
