from pathlib import Path

from conftest import INDEXED_SUM_RULE_TEXT, SUM_RULE_TEXT
from morphweave.applier import (
    ensure_import_lines,
    load_rules,
    rhs_modules,
    scan,
    write_patches,
)
from morphweave.rewrite import parse_rule
from morphweave.syntax import parse_fragment

TARGET = """\
def warmup(values):
    total = 0
    for item in values:
        total = item + total
    return total


def other(values):
    limit = 3
    return limit
"""


def write_corpus(root: Path, files: dict[str, str]) -> Path:
    for name, text in files.items():
        (root / name).write_text(text)
    return root


def test_scan_rewrites_matching_site(tmp_path):
    write_corpus(tmp_path, {"mod.py": TARGET})
    rule = parse_rule(SUM_RULE_TEXT, rule_id="sum-loop")
    patches = scan([rule], tmp_path)
    assert patches.counts == {"sum-loop": 1}
    patched = patches.patched_files["mod.py"]
    assert "total = numpy.sum(values)" in patched
    assert "import numpy" in patched
    parse_fragment(patched)


def test_scan_zero_matches(tmp_path):
    write_corpus(tmp_path, {"mod.py": "x = 1\n"})
    patches = scan([parse_rule(SUM_RULE_TEXT, rule_id="r")], tmp_path)
    assert patches.total == 0 and patches.entries == []


def test_site_diffs_apply_to_the_snapshot(tmp_path):
    write_corpus(tmp_path, {"mod.py": TARGET})
    rule = parse_rule(SUM_RULE_TEXT, rule_id="sum-loop")
    patches = scan([rule], tmp_path)
    diff = patches.entries[0].diff
    assert diff.startswith("--- a/mod.py")
    assert "+    total = numpy.sum(values)" in diff


def test_unparseable_files_skipped_not_fatal(tmp_path):
    write_corpus(tmp_path, {"bad.py": "def broken(:\n", "ok.py": TARGET})
    patches = scan([parse_rule(SUM_RULE_TEXT, rule_id="r")], tmp_path)
    assert patches.total == 1
    assert [name for name, _ in patches.skipped_files] == ["bad.py"]


def test_first_rule_wins_on_overlap(tmp_path):
    write_corpus(tmp_path, {"mod.py": "x = 0\nfor v in xs:\n    x = v + x\n"})
    general = parse_rule(":[[v0]] = 0\n=>\n:[[v0]] = 1", rule_id="b-late")
    specific = parse_rule(SUM_RULE_TEXT, rule_id="a-early")
    patches = scan([specific, general], tmp_path)
    assert patches.counts == {"a-early": 1, "b-late": 0}
    flipped = scan([general, specific], tmp_path)
    assert flipped.counts == {"b-late": 1, "a-early": 0}


def test_counts_add_up(tmp_path):
    target = "a = 0\nfor v in xs:\n    a = v + a\nb = 0\nc = 0\n"
    write_corpus(tmp_path, {"mod.py": target})
    sum_rule = parse_rule(SUM_RULE_TEXT, rule_id="sum")
    zero_rule = parse_rule(":[[v0]] = 0\n=>\n:[[v0]] = 1", rule_id="zero")
    patches = scan([sum_rule, zero_rule], tmp_path)
    assert patches.total == sum(patches.counts.values()) == 3


def test_determinism_byte_identical(tmp_path):
    files = {f"m{k}.py": TARGET.replace("total", f"tot{k}") for k in range(4)}
    write_corpus(tmp_path, files)
    rule = parse_rule(SUM_RULE_TEXT, rule_id="sum")
    first = scan([rule], tmp_path)
    second = scan([rule], tmp_path)
    assert [e.diff for e in first.entries] == [e.diff for e in second.entries]
    assert first.patched_files == second.patched_files


def test_guarded_site_skipped_without_type_info(tmp_path):
    write_corpus(tmp_path, {"mod.py": "s = 0\nfor i in range(len(data)):\n    s += data[i]\n"})
    rule = parse_rule(INDEXED_SUM_RULE_TEXT, rule_id="guarded")
    bare = scan([rule], tmp_path)
    assert bare.total == 0  # no type stub: skip, never guess
    typed = scan([rule], tmp_path, type_stubs={"*": {"data": "List[int]"}})
    assert typed.total == 1
    wrong = scan([rule], tmp_path, type_stubs={"*": {"data": "str"}})
    assert wrong.total == 0


def test_ensure_import_lines_idempotent():
    src = "import os\n\nx = numpy.sum(data)\n"
    once = ensure_import_lines(src, {"numpy"})
    assert once.split("\n")[1] == "import numpy"
    assert ensure_import_lines(once, {"numpy"}) == once


def test_ensure_import_lines_no_modules():
    assert ensure_import_lines("x = 1\n", set()) == "x = 1\n"


def test_rhs_modules_found():
    rule = parse_rule(SUM_RULE_TEXT)
    assert rhs_modules(rule) == {"numpy"}
    plain = parse_rule(":[[v0]] = 0\n=>\n:[[v0]] = 1")
    assert rhs_modules(plain) == set()


def test_write_patches(tmp_path):
    write_corpus(tmp_path, {"mod.py": TARGET})
    rule = parse_rule(SUM_RULE_TEXT, rule_id="sum")
    patches = scan([rule], tmp_path)
    write_patches(patches, tmp_path)
    assert "numpy.sum" in (tmp_path / "mod.py").read_text()


def test_load_rules_sorted(tmp_path):
    (tmp_path / "b.rule").write_text(SUM_RULE_TEXT)
    (tmp_path / "a.rule").write_text(INDEXED_SUM_RULE_TEXT)
    rules = load_rules(tmp_path)
    assert [r.rule_id for r in rules] == ["a", "b"]


def test_fixture_corpus_counts(fixtures_dir, patterns, type_stubs, table_rows):
    from morphweave.synthesis import synthesize_baseline

    cpat = patterns["cpat-01"]
    baseline = synthesize_baseline(cpat)
    patches = scan([baseline], fixtures_dir / "corpus" / "cpat-01", type_stubs=type_stubs)
    assert patches.total == table_rows["cpat-01"][4]
