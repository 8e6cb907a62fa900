"""Instance document round trips, validation diagnostics, generators."""

import json

import pytest

from floodgraph import (
    InputError,
    Variant,
    solve_exact,
    vc_bruteforce,
    vc_to_caterpillar,
)
from floodgraph.instances import InstanceDocument, emit, gen_random, parse
from floodgraph.recognition import interval_or_witness, split_or_witness
from floodgraph.reductions import VcInstance


def test_minimal_one_vertex_instance():
    doc = parse('{"variant": "free", "k": 1, "colors": [1], "edges": []}')
    assert doc.n == 1 and doc.pivot is None
    graph, var = doc.to_game()
    assert solve_exact(graph, var).value == 0


def test_emit_parse_identity():
    doc = InstanceDocument(
        "fixed",
        2,
        3,
        (1, 2, 3, 1),
        ((0, 1), (1, 2), (2, 3)),
        ((0, 2), (2, 4), (4, 6), (6, 8)),
        {"note": "hand-made", "nested": {"x": [1, 2]}},
    )
    assert parse(emit(doc)) == doc
    bare = InstanceDocument("free", None, 2, (1, 2), ((0, 1),))
    assert parse(emit(bare)) == bare


def test_emitted_keys_are_ordered_and_optional_keys_omitted():
    bare = InstanceDocument("free", None, 2, (1, 2), ((0, 1),))
    obj = json.loads(emit(bare))
    assert list(obj) == ["variant", "k", "colors", "edges"]
    assert emit(bare) == emit(bare)


def test_parse_rejects_bad_documents():
    good = {"variant": "free", "k": 2, "colors": [1, 2], "edges": [[0, 1]]}

    def fails(field, **changes):
        obj = {**good, **changes}
        with pytest.raises(InputError) as info:
            parse(json.dumps(obj))
        assert info.value.field == field

    fails("variant", variant="both")
    fails("pivot", pivot=0)  # free variant takes no pivot
    fails("k", k="three")
    fails("colors", colors=[1, 5])
    fails("edges", edges=[[0, 1], [0, 1]])
    fails("edges", edges=[])  # disconnected
    fails("zing", zing=1)
    with pytest.raises(InputError):
        parse("not json at all {")
    with pytest.raises(InputError) as info:
        parse(json.dumps({**good, "variant": "fixed"}))
    assert info.value.field == "pivot"


def test_fixed_pivot_out_of_range():
    obj = {"variant": "fixed", "pivot": 9, "k": 2, "colors": [1, 2], "edges": [[0, 1]]}
    with pytest.raises(InputError) as info:
        parse(json.dumps(obj))
    assert info.value.field == "pivot"


def test_intervals_must_match_edges():
    obj = {
        "variant": "free",
        "k": 2,
        "colors": [1, 2, 1],
        "edges": [[0, 1], [1, 2]],
        "intervals": [[0, 1], [1, 2], [1, 9]],  # 0 and 2 would also touch
    }
    with pytest.raises(InputError) as info:
        parse(json.dumps(obj))
    assert info.value.field == "intervals"
    obj["intervals"] = [[0, 1], [1, 2], [2, 3]]
    assert parse(json.dumps(obj)).intervals == ((0, 1), (1, 2), (2, 3))


def test_generation_is_deterministic():
    a = emit(gen_random("path", 5, 2, 1))
    b = emit(gen_random("path", 5, 2, 1))
    assert a == b
    assert a != emit(gen_random("path", 5, 2, 2))


def test_generated_documents_reparse_and_validate():
    for kind in ("proper_interval", "interval", "caterpillar", "split", "path"):
        for seed in (0, 7):
            doc = gen_random(kind, 9, 4, seed)
            assert parse(emit(doc)) == doc
            assert doc.meta["generator"] == kind
            assert doc.meta["prng"] == "splitmix64"
            assert set(doc.colors) == {1, 2, 3, 4}


def test_generated_classes_pass_their_recognizers():
    g, _ = gen_random("proper_interval", 8, 3, 5).to_game()
    assert interval_or_witness(g.n, g.adj)[0]
    g, _ = gen_random("split", 9, 4, 5).to_game()
    assert split_or_witness(g.n, g.adj)[0]
    g, _ = gen_random("interval", 9, 4, 5).to_game()
    assert interval_or_witness(g.n, g.adj)[0]


def test_interval_kinds_carry_consistent_intervals():
    doc = gen_random("interval", 7, 3, 3)
    assert doc.intervals is not None and len(doc.intervals) == 7
    # parse re-derives the intersection graph, so identity is the check
    assert parse(emit(doc)) == doc


def test_single_vertex_generation():
    for kind in ("path", "caterpillar", "split", "interval"):
        doc = gen_random(kind, 1, 1, 0)
        assert doc.n == 1 and doc.edges == ()


def test_more_colors_than_vertices_is_an_error():
    with pytest.raises(InputError) as info:
        gen_random("path", 3, 4, 0)
    assert info.value.field == "k"
    with pytest.raises(InputError):
        gen_random("lattice", 3, 2, 0)


def test_reduction_instance_embeds_certificate_and_round_trips():
    vc = VcInstance(3, [(0, 1), (0, 2), (1, 2)])
    graph, cert = vc_to_caterpillar(vc)
    meta = {"generator": "vc_to_caterpillar", "certificate": cert.as_record()}
    doc = InstanceDocument.from_graph(graph, Variant.free(), meta=meta)
    again = parse(emit(doc))
    assert again == doc
    record = again.meta["certificate"]
    assert record["offset"] == 9
    assert record["offset"] + vc_bruteforce(vc).tau == 11
    assert record["color_legend"]["1"] == "backbone"
