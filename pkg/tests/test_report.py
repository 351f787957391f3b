import json

import jsonschema

import sbgraph as sg
from helpers import bidirected_complete, c3, one_based, single_arc, two_triangles

SCHEMA = sg.report_schema()


def _validated(g, **kwargs):
    data = json.loads(sg.emit_report(g, **kwargs))
    jsonschema.validate(data, SCHEMA)
    return data


def test_report_cycle():
    data = _validated(c3())
    assert data["n"] == 3
    assert data["m"] == 3
    assert data["strongly_biconnected"] is True
    assert len(data["b_bridges"]) == 3
    assert data["blocks_2eb"] == []
    assert data["sbc"] == [[0, 1, 2]]


def test_report_complete():
    data = _validated(bidirected_complete(4))
    assert data["blocks_2eb"] == [[0, 1, 2, 3]]
    assert data["b_bridges"] == []
    assert data["b_articulation_points"] == []


def test_report_fig1(fig1):
    data = _validated(fig1)
    assert data["blocks_2eb"] == [
        list(one_based(4, 15)),
        list(one_based(4, 9, 10, 11, 12, 13, 14)),
    ]
    assert list(one_based(4, 9, 10, 11, 12, 13, 14, 15)) in data["blocks_2e"]


def test_report_fig2(fig2):
    data = _validated(fig2)
    assert data["blocks_2sb"] == [
        list(one_based(1, 2, 3, 4)),
        list(one_based(3, 4, 5, 6)),
    ]


def test_report_key_order():
    data = json.loads(sg.emit_report(c3()))
    assert list(data.keys()) == [
        "n",
        "m",
        "strongly_biconnected",
        "b_bridges",
        "b_articulation_points",
        "sbc",
        "blocks_2eb",
        "blocks_2sb",
        "blocks_2e",
        "blocks_2s",
    ]


def test_report_skips_when_not_strongly_biconnected():
    data = _validated(two_triangles())  # strongly connected, not biconnected
    assert data["strongly_biconnected"] is False
    assert data["b_bridges"] == {"skipped": "input not strongly biconnected"}
    assert data["blocks_2eb"] == {"skipped": "input not strongly biconnected"}
    assert isinstance(data["blocks_2e"], list)  # strongly connected: computed
    assert data["sbc"] == [[0, 1, 2], [2, 3, 4]]


def test_report_skips_when_not_strongly_connected():
    data = _validated(single_arc())
    assert data["blocks_2e"] == {"skipped": "input not strongly connected"}
    assert data["blocks_2s"] == {"skipped": "input not strongly connected"}
    assert data["sbc"] == [[0], [1]]


def test_report_bytes_stable(fig1):
    assert sg.emit_report(fig1) == sg.emit_report(fig1)


def test_report_parallel_identical(fig2):
    assert sg.emit_report(fig2, parallel=True) == sg.emit_report(fig2)


def test_analyze_returns_dataclass(fig1):
    report = sg.analyze(fig1)
    assert isinstance(report, sg.AnalysisReport)
    assert report.n == 16
    assert report.as_dict()["m"] == 29
