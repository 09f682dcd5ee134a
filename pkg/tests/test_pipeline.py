import json

import pytest

from conftest import SORTED_SUM
from morphweave.errors import StoreVersionError
from morphweave.pipeline import (
    APPLICABLE,
    CORRECT,
    NOT_USEFUL,
    RAW,
    SEMANTIC_FAIL,
    SYNTAX_FAIL,
    USEFUL,
    ExpansionConfig,
    Variant,
    _Ladder,
    apply_usefulness,
    expand,
    norm_hash,
    read_event_log,
    read_variant_store,
    summarize,
    write_event_log,
    write_variant_store,
)
from morphweave.syntax import SourceFragment


def make_variant(code, status=RAW, n=0):
    return Variant(id=f"v{n}", code=SourceFragment(code), cpat_id="cpat-01",
                   temperature=0.5, prompt_iteration=1, norm_hash=norm_hash(code),
                   status=status)


def test_norm_hash_ignores_formatting():
    assert norm_hash("x=1") == norm_hash("x = 1") == norm_hash("x  =  1\n")
    assert norm_hash("x = 1") != norm_hash("y = 1")


def test_norm_hash_copes_with_broken_code():
    assert norm_hash("for x in\n    y +") == norm_hash("for x in\n    y +  ")


def test_ladder_is_forward_only():
    ladder = _Ladder()
    variant = make_variant("x = 1")
    ladder.advance(variant, CORRECT)
    ladder.advance(variant, USEFUL)
    with pytest.raises(ValueError):
        ladder.advance(variant, CORRECT)
    with pytest.raises(ValueError):
        ladder.advance(variant, SYNTAX_FAIL)
    assert [e["to"] for e in ladder.events] == [CORRECT, USEFUL]


def test_usefulness_with_labels():
    useful = make_variant("a = 1", status=CORRECT, n=0)
    tiresome = make_variant(SORTED_SUM, status=CORRECT, n=1)
    labels = {useful.norm_hash: True, tiresome.norm_hash: False}
    apply_usefulness([useful, tiresome], labels)
    assert useful.status == USEFUL
    assert tiresome.status == NOT_USEFUL


def test_usefulness_without_labels_promotes_everything():
    variants = [make_variant(f"a = {k}", status=CORRECT, n=k) for k in range(3)]
    apply_usefulness(variants, None)
    assert all(v.status == USEFUL for v in variants)


def test_usefulness_skips_failed_variants():
    failed = make_variant("x = ", status=SYNTAX_FAIL)
    apply_usefulness([failed], None)
    assert failed.status == SYNTAX_FAIL


def test_summarize_counts_and_chain():
    variants = (
        [make_variant(f"a = {k}", status=APPLICABLE, n=k) for k in range(3)]
        + [make_variant(f"b = {k}", status=NOT_USEFUL, n=10 + k) for k in range(2)]
        + [make_variant(f"c = {k}", status=SEMANTIC_FAIL, n=20 + k) for k in range(4)]
    )
    report = summarize(variants, cpat_id="demo")
    assert (report.total, report.correct, report.useful, report.applicable) == (9, 5, 3, 3)
    assert report.total >= report.correct >= report.useful >= report.applicable
    assert report.expansion_factor == 3.0


def test_summarize_empty():
    report = summarize([], cpat_id="none")
    assert (report.total, report.correct, report.useful, report.applicable) == (0, 0, 0, 0)


def test_expansion_config_validation():
    with pytest.raises(ValueError):
        ExpansionConfig(prompt_iterations=0)
    with pytest.raises(ValueError):
        ExpansionConfig(temperatures=(2.5,))


def test_store_round_trip(tmp_path):
    variants = [make_variant("x = 1", status=APPLICABLE), make_variant("y = 2", n=1)]
    path = tmp_path / "variants.jsonl"
    write_variant_store(path, variants)
    loaded = read_variant_store(path)
    assert [v.to_dict() for v in loaded] == [v.to_dict() for v in variants]


def test_store_version_gate(tmp_path):
    path = tmp_path / "variants.jsonl"
    path.write_text(json.dumps({"format_version": 99, "kind": "variant-store"}) + "\n")
    with pytest.raises(StoreVersionError):
        read_variant_store(path)


def test_event_log_round_trip(tmp_path):
    events = [{"seq": 0, "variant": "v0", "from": RAW, "to": CORRECT}]
    path = tmp_path / "events.jsonl"
    write_event_log(path, events)
    assert read_event_log(path) == events


# full expansion over the recorded fixture ------------------------------------


@pytest.fixture(scope="module")
def sum_expansion(patterns, replay_gateway, labels):
    from morphweave.sandbox import InlineSandbox

    return expand(patterns["cpat-01"], ExpansionConfig(), replay_gateway,
                  InlineSandbox(), labels)


def test_expansion_matches_reported_counts(sum_expansion, table_rows):
    report = sum_expansion.report
    assert (report.total, report.correct, report.useful,
            report.applicable) == table_rows["cpat-01"][:4]


def test_expansion_includes_the_indexed_sum_variant(sum_expansion):
    from conftest import INDEXED_SUM

    digests = {v.norm_hash for v in sum_expansion.variants}
    assert norm_hash(INDEXED_SUM) in digests


def test_no_duplicate_hashes_survive(sum_expansion):
    digests = [v.norm_hash for v in sum_expansion.variants]
    assert len(digests) == len(set(digests))


def test_every_variant_is_terminal(sum_expansion):
    terminal = {SYNTAX_FAIL, "TypeFail", "ImportFail", SEMANTIC_FAIL,
                NOT_USEFUL, "NotApplicable", APPLICABLE}
    assert all(v.status in terminal for v in sum_expansion.variants)


def test_event_log_respects_the_ladder(sum_expansion):
    from morphweave.pipeline import LADDER_RANK

    last_rank = {}
    for event in sum_expansion.events:
        rank_from = LADDER_RANK[event["from"]]
        rank_to = LADDER_RANK[event["to"]]
        assert rank_to > rank_from
        if event["variant"] in last_rank:
            assert rank_from >= last_rank[event["variant"]]
        last_rank[event["variant"]] = rank_to
    seqs = [e["seq"] for e in sum_expansion.events]
    assert seqs == sorted(seqs)


def test_feedback_parents_reference_applicable_variants(sum_expansion):
    by_id = {v.id: v for v in sum_expansion.variants}
    fed = [v for v in sum_expansion.variants if v.feedback_parent]
    assert fed, "fixture expansion should exercise feedback rounds"
    for variant in fed:
        assert by_id[variant.feedback_parent].status == APPLICABLE


def test_cumulative_prompt_counts_monotone(sum_expansion):
    per_iteration = {}
    for variant in sum_expansion.variants:
        if variant.feedback_parent is None:
            per_iteration.setdefault(variant.prompt_iteration, 0)
            per_iteration[variant.prompt_iteration] += 1
    cumulative = 0
    previous = 0
    for i in sorted(per_iteration):
        cumulative += per_iteration[i]
        assert cumulative >= previous
        previous = cumulative


def test_zero_feedback_iterations_leaves_no_parents(patterns, replay_gateway, labels):
    from morphweave.sandbox import InlineSandbox

    cfg = ExpansionConfig(feedback_iterations=0)
    result = expand(patterns["cpat-09"], cfg, replay_gateway, InlineSandbox(), labels)
    assert all(v.feedback_parent is None for v in result.variants)
