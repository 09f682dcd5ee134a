import pytest

from conftest import SUM_LHS, SUM_RHS
from morphweave.errors import CpatFormatError
from morphweave.patterns import pattern_from_dict, pattern_to_dict


def minimal(**overrides):
    data = {
        "id": "demo",
        "lhs": SUM_LHS,
        "rhs": SUM_RHS,
        "input_vars": [{"name": "elements", "type": "List[int]"}],
        "output_vars": ["result"],
        "imports": ["numpy"],
        "miner_guards": {"elements": [{"kind": "type", "value": "List[int]"}]},
    }
    data.update(overrides)
    return data


def test_round_trips_through_dict():
    cpat = pattern_from_dict(minimal())
    assert pattern_from_dict(pattern_to_dict(cpat)) == cpat


def test_input_must_be_free_in_lhs():
    with pytest.raises(CpatFormatError):
        pattern_from_dict(minimal(input_vars=[{"name": "ghost", "type": "int"}]))


def test_output_must_be_assigned_on_both_sides():
    with pytest.raises(CpatFormatError):
        pattern_from_dict(minimal(output_vars=["elements"]))
    with pytest.raises(CpatFormatError):
        pattern_from_dict(minimal(rhs="other = numpy.sum(elements)"))


def test_malformed_record():
    with pytest.raises(CpatFormatError):
        pattern_from_dict({"id": "x"})


def test_mutating_call_counts_as_assignment():
    data = minimal(
        lhs="for k, v in add_dict.items():\n    d[k] = v",
        rhs="d.update(add_dict)",
        input_vars=[{"name": "add_dict", "type": "Dict[int, int]"},
                    {"name": "d", "type": "Dict[int, int]"}],
        output_vars=["d"],
        imports=[],
        miner_guards={},
    )
    cpat = pattern_from_dict(data)
    assert cpat.output_vars == ("d",)


def test_fixture_patterns_all_load(patterns):
    assert len(patterns) == 10
    for cpat in patterns.values():
        assert cpat.lhs_ast.children and cpat.rhs_ast.children
