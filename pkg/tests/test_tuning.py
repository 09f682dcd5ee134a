import json

import pytest

from morphweave.errors import GridIncomplete, InsufficientCpats, MissingProvenance
from morphweave.sandbox import InlineSandbox
from morphweave.tuning import (
    KIND_FEEDBACK,
    KIND_PROMPT,
    GridCell,
    OracleVariant,
    build_grid,
    cross_validate,
    curve_value,
    iteration_curves,
    mean_curve,
    oracle_from_dict,
    select_params,
    successive_hl_differences,
)


def grid_from(f_by_t_i):
    return [GridCell(t, i, f, f, f) for (t, i), f in f_by_t_i.items()]


def test_flat_grid_selects_first_iteration_smallest_t():
    grid = grid_from({(t, i): 0.5 for t in (0.0, 0.6, 1.2) for i in (1, 2, 3)})
    assert select_params(grid) == (0.0, 1)


def test_strictly_improving_grid_runs_to_the_end():
    grid = grid_from({(t, i): 0.1 * i + (0.01 if t == 1.2 else 0.0)
                      for t in (0.6, 1.2) for i in (1, 2, 3, 4)})
    assert select_params(grid) == (1.2, 4)


def test_selection_stops_when_improvement_stalls():
    values = {1: 0.60, 2: 0.70, 3: 0.80, 4: 0.84}
    grid = grid_from({(t, i): values[i] - (0.05 if t < 1.0 else 0.0)
                      for t in (0.5, 1.0) for i in values})
    assert select_params(grid, delta=0.05) == (1.0, 3)


def test_selection_invariant_to_row_order():
    values = {(0.5, 1): 0.3, (1.0, 1): 0.4, (0.5, 2): 0.6, (1.0, 2): 0.7,
              (0.5, 3): 0.72, (1.0, 3): 0.73}
    grid = grid_from(values)
    assert select_params(grid) == select_params(list(reversed(grid)))


def test_incomplete_grid_rejected():
    grid = grid_from({(0.5, 1): 0.3, (1.0, 1): 0.4, (0.5, 2): 0.5})
    with pytest.raises(GridIncomplete):
        select_params(grid)
    gappy = grid_from({(0.5, 1): 0.3, (0.5, 3): 0.5})
    with pytest.raises(GridIncomplete):
        select_params(gappy)


def test_oracle_label_chain_enforced():
    with pytest.raises(ValueError):
        OracleVariant("x = 1", correct=False, useful=True, applicable=False,
                      temperature=0.5)
    with pytest.raises(ValueError):
        OracleVariant("x = 1", correct=True, useful=False, applicable=True,
                      temperature=0.5)


def test_bundled_grid_selects_high_temperature(fixtures_dir, patterns,
                                               replay_gateway):
    oracle = oracle_from_dict(json.loads(
        (fixtures_dir / "oracle_tuning.json").read_text()))
    grid = build_grid(patterns["cpat-01"], oracle, replay_gateway, InlineSandbox())
    assert select_params(grid) == (1.2, 5)
    cell = next(c for c in grid if (c.t, c.i) == (1.2, 5))
    assert cell.f == pytest.approx(0.9667, abs=0.005)
    assert cell.precision == pytest.approx(29 / 30)
    assert cell.recall == pytest.approx(29 / 30)


def test_cross_validation_shape(fixtures_dir, patterns, replay_gateway):
    oracle = oracle_from_dict(json.loads(
        (fixtures_dir / "oracle_tuning.json").read_text()))
    grids = {}
    for cpat_id in list(oracle.cpat_ids())[:3]:
        grids[cpat_id] = build_grid(patterns[cpat_id], oracle,
                                    replay_gateway, InlineSandbox())
    small = oracle_from_dict({"format_version": 1, "cpats": [
        {"cpat_id": cid, "variants": [
            {"code": v.code, "correct": v.correct, "useful": v.useful,
             "applicable": v.applicable, "temperature": v.temperature,
             "prompt_iteration": v.prompt_iteration,
             "feedback_iteration": v.feedback_iteration}
            for v in oracle.variants(cid)]}
        for cid in list(oracle.cpat_ids())[:3]]})
    folds = cross_validate(small, grids, k=3)
    assert len(folds) == 3
    for fold in folds:
        assert fold.selected == (1.2, 5)
        assert len(fold.evaluations) == 2
        assert fold.held not in fold.evaluations


def test_cross_validation_needs_enough_patterns():
    oracle = oracle_from_dict({"format_version": 1, "cpats": [
        {"cpat_id": "only", "variants": []}]})
    with pytest.raises(InsufficientCpats):
        cross_validate(oracle, {}, k=10)


# iteration curves -------------------------------------------------------------


def toy_curves_oracle():
    variants = []
    for i, count in enumerate([2, 1, 1], start=1):  # cumulative 2, 3, 4
        for _ in range(count):
            variants.append({"code": "x = 1", "correct": True, "useful": True,
                             "applicable": False, "temperature": 0.5,
                             "prompt_iteration": i, "feedback_iteration": None})
    for i, count in enumerate([1, 3], start=1):
        for _ in range(count):
            variants.append({"code": "y = 1", "correct": True, "useful": False,
                             "applicable": False, "temperature": 0.5,
                             "prompt_iteration": 1, "feedback_iteration": i})
    return oracle_from_dict({"format_version": 1, "cpats": [
        {"cpat_id": "toy", "variants": variants}]})


def test_prompt_curve_shape():
    curves = iteration_curves(toy_curves_oracle(), KIND_PROMPT)
    assert curves[(0.5, "toy")] == [0.5, 0.75, 1.0]


def test_feedback_curve_counts_only_non_useful():
    curves = iteration_curves(toy_curves_oracle(), KIND_FEEDBACK)
    assert curves[(0.5, "toy")] == [0.25, 1.0]


def test_curves_monotone_and_terminal(fixtures_dir):
    oracle = oracle_from_dict(json.loads(
        (fixtures_dir / "oracle_curves.json").read_text()))
    for kind in (KIND_PROMPT, KIND_FEEDBACK):
        for series in iteration_curves(oracle, kind).values():
            assert all(b >= a for a, b in zip(series, series[1:]))
            assert series[-1] == pytest.approx(1.0)


def test_missing_provenance_detected():
    oracle = oracle_from_dict({"format_version": 1, "cpats": [
        {"cpat_id": "bad", "variants": [
            {"code": "x = 1", "correct": True, "useful": True,
             "applicable": False, "temperature": 0.5}]}]})
    with pytest.raises(MissingProvenance):
        iteration_curves(oracle, KIND_PROMPT)


def test_curve_value_clamps():
    assert curve_value([0.5, 1.0], 1) == 0.5
    assert curve_value([0.5, 1.0], 9) == 1.0
    assert curve_value([0.5, 1.0], 0) == 0.0


def test_bundled_curve_targets(fixtures_dir):
    oracle = oracle_from_dict(json.loads(
        (fixtures_dir / "oracle_curves.json").read_text()))
    prompt = iteration_curves(oracle, KIND_PROMPT)
    assert mean_curve(prompt, 0.0, [1, 2, 3]) == pytest.approx(
        [0.70, 0.83, 0.95], abs=0.005)
    assert successive_hl_differences(prompt, 0.5, [1, 2, 3, 4]) == pytest.approx(
        [0.25, 0.16, 0.0, 0.0], abs=0.001)
    feedback = iteration_curves(oracle, KIND_FEEDBACK)
    assert successive_hl_differences(feedback, 0.5, [2, 3, 4, 5]) == pytest.approx(
        [0.01, 0.025, 0.036, 0.051], abs=0.001)
