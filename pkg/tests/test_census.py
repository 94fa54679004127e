import json
from importlib import resources

import pytest

from pocfrob.census import (
    COMPLETENESS_NOTE,
    CensusRow,
    crosscheck,
    enumerate_rows,
    render,
)
from pocfrob.classifier import Justification, theorem_a_check
from pocfrob.errors import DomainError
from pocfrob.specs import Cyclic, HomocyclicKernel

import expected_tables as tables

ROWS = enumerate_rows(15000)


def golden(name):
    return resources.files("pocfrob").joinpath("data", "v1", name).read_text()


def test_small_bounds():
    assert enumerate_rows(5) == []
    assert [row.order for row in enumerate_rows(100)] == [6, 18, 20, 42, 54, 72, 100]


def test_tables_reproduced():
    triples = [row.triple() for row in ROWS]
    assert len(triples) == 39 == len(set(triples))
    assert set(triples) == tables.ALL
    by_section = {
        "2": {r.triple() for r in ROWS if isinstance(r.complement, Cyclic) and r.complement.n & (r.complement.n - 1) == 0},
        "23": {r.triple() for r in ROWS if isinstance(r.complement, Cyclic) and r.complement.n & (r.complement.n - 1)},
        "na": {r.triple() for r in ROWS if not isinstance(r.complement, Cyclic)},
    }
    assert by_section == {"2": tables.CYCLIC_2_GROUP, "23": tables.CYCLIC_23_GROUP, "na": tables.NON_ABELIAN}


def test_repeated_orders():
    orders = [row.order for row in ROWS]
    assert orders.count(600) == 3
    assert orders.count(15000) == 3
    assert not {3072, 11264, 12288} & set(orders)


def test_sorted_and_monotone():
    keys = [(r.order, r.structure_string) for r in ROWS]
    assert keys == sorted(keys)
    previous = set()
    for bound in (6, 100, 600, 1000, 5000, 14519, 14520, 15000, 30000):
        current = {r.triple() for r in enumerate_rows(bound)}
        assert previous <= current
        assert all(order <= bound for order, _, _ in current)
        previous = current


def test_rows_pass_reduction():
    for row in ROWS:
        assert theorem_a_check(row.spec).poc, row.structure_string


def test_row_invariants():
    row = ROWS[0]
    assert (row.order, row.family, row.structure_string) == (6, Justification.THM_C, "C3:C2")
    with pytest.raises(DomainError):
        CensusRow(12, HomocyclicKernel(3, 1, 1), Cyclic(4), Justification.THM_C, "C3:C4")


def test_render_tsv():
    assert render(ROWS[:1], "tsv") == "6\tC3\tC2\tThmC\tC3:C2"
    assert render([], "tsv") == ""
    with pytest.raises(DomainError):
        render(ROWS, "csv")


def test_render_json_and_markdown():
    objs = json.loads(render(ROWS, "json"))
    assert len(objs) == 39
    assert list(objs[0]) == ["order", "kernel", "complement", "family", "structure_string"]
    md = render(ROWS, "markdown")
    assert md.count("\n## ") == 3
    assert COMPLETENESS_NOTE in md
    assert md.count("| ThmC |") == 33


@pytest.mark.parametrize("fmt,name", [("tsv", "census_15000.tsv"), ("json", "census_15000.json"), ("markdown", "census_15000.md")])
def test_golden_files(fmt, name):
    assert render(ROWS, fmt) + "\n" == golden(name)
    assert render(enumerate_rows(15000), fmt) == render(ROWS, fmt)


def test_crosscheck_small():
    assert crosscheck([], 1000) == []
    report = crosscheck(ROWS, 1000)
    assert [r.row.order for r in report] == [r.order for r in ROWS if r.order <= 1000]
    assert all(r.passed for r in report), [r.message for r in report if not r.passed]


@pytest.mark.slow
def test_crosscheck_full():
    report = crosscheck(ROWS, 15000)
    assert len(report) == 39
    assert all(r.passed for r in report), [(r.row.structure_string, r.message) for r in report if not r.passed]
