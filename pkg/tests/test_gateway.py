import hashlib
import json

import pytest

from morphweave.errors import CacheMiss, FormatError, RecordExists
from morphweave.gateway import (
    Gateway,
    PromptSpec,
    ReplayCache,
    cache_key,
    extract_blocks,
    extract_json_payload,
    render_prompt,
)


class ScriptedProvider:
    provider_id = "scripted"

    def __init__(self, text):
        self.text = text
        self.calls = 0

    def __call__(self, prompt, temperature, iteration=1):
        self.calls += 1
        return self.text


def test_cache_key_is_the_documented_hash():
    key = cache_key("hello", 0.5, 2)
    expected = hashlib.sha256(b"hello\x000.5\x002").hexdigest()
    assert key == expected


def test_cache_key_normalizes_integer_temperatures():
    assert cache_key("p", 0, 1) == cache_key("p", 0.0, 1)


def test_prompt_spec_validation():
    with pytest.raises(ValueError):
        PromptSpec("VariantGen", "c", "x = 1", (), temperature=3.0)
    with pytest.raises(ValueError):
        PromptSpec("VariantGen", "c", "x = 1", (("a", "b"),), temperature=0.5)
    with pytest.raises(ValueError):
        PromptSpec("TypeInfer", "c", "x = 1", (), iteration_index=0)


def test_variant_prompts_carry_two_examples(sum_pattern, replay_gateway):
    spec = replay_gateway.variant_spec(sum_pattern, 0.5, 1)
    text = render_prompt(spec)
    assert text.count("Example 1 input:") == 1 and text.count("Example 2 input:") == 1
    assert sum_pattern.lhs.text in text


def test_extract_blocks():
    text = "noise\n```VARIANT\nx = 1\n```\nmore\n```VARIANT\ny = 2\n```"
    assert extract_blocks(text, "VARIANT") == ["x = 1", "y = 2"]


def test_extract_json_payload_takes_last_block():
    text = "thinking...\n```json\n{\"types\": {}}\n```\n```json\n{\"types\": {\"a\": \"int\"}}\n```"
    assert extract_json_payload(text) == {"types": {"a": "int"}}


def test_extract_json_payload_errors():
    with pytest.raises(FormatError):
        extract_json_payload("no blocks here")
    with pytest.raises(FormatError):
        extract_json_payload("```json\nnot json\n```")


def test_replay_miss_raises(tmp_path, sum_pattern):
    gateway = Gateway(ReplayCache(tmp_path / "cache.json"), mode="replay")
    with pytest.raises(CacheMiss):
        gateway.generate_variants(sum_pattern, 0.5, 1)


def test_record_then_replay_round_trip(tmp_path, sum_pattern):
    path = tmp_path / "cache.json"
    provider = ScriptedProvider("```VARIANT\nx = 1\n```")
    recording = Gateway(ReplayCache(path), provider, mode="record")
    first = recording.generate_variants(sum_pattern, 0.5, 1)
    again = recording.generate_variants(sum_pattern, 0.5, 1)
    assert provider.calls == 1  # second call served from the cache
    recording.cache.save()
    replay = Gateway(ReplayCache(path), mode="replay")
    replayed = replay.generate_variants(sum_pattern, 0.5, 1)
    assert [f.text for f in replayed] == [f.text for f in first] == ["x = 1"]
    assert [f.text for f in again] == ["x = 1"]


def test_iterations_are_distinct_cache_entries(tmp_path, sum_pattern):
    provider = ScriptedProvider("```VARIANT\nx = 1\n```")
    gateway = Gateway(ReplayCache(tmp_path / "c.json"), provider, mode="record")
    gateway.generate_variants(sum_pattern, 0.5, 1)
    gateway.generate_variants(sum_pattern, 0.5, 2)
    assert len(gateway.cache) == 2


def test_re_recording_requires_overwrite(tmp_path):
    cache = ReplayCache(tmp_path / "c.json")
    cache.put("k", {"raw_text": "a"})
    with pytest.raises(RecordExists):
        cache.put("k", {"raw_text": "b"})
    cache.put("k", {"raw_text": "b"}, overwrite=True)
    assert cache.get("k")["raw_text"] == "b"


def test_variant_completion_without_blocks_is_format_error(tmp_path, sum_pattern):
    provider = ScriptedProvider("sorry, no code")
    gateway = Gateway(ReplayCache(tmp_path / "c.json"), provider, mode="record")
    with pytest.raises(FormatError):
        gateway.generate_variants(sum_pattern, 0.5, 1)


def test_empty_test_completion_is_empty_list(tmp_path, sum_pattern):
    provider = ScriptedProvider("   \n")
    gateway = Gateway(ReplayCache(tmp_path / "c.json"), provider, mode="record")
    assert gateway.generate_tests(sum_pattern, 1.2, 1) == []


def test_infer_types_from_fixture(replay_gateway, patterns):
    cpat = patterns["cpat-01"]
    variant = "loss = 0\nfor i in range(len(losses)):\n    loss += losses[i]"
    # the recorded response covers the variables paired with pattern roles
    types = replay_gateway.infer_types(variant, cpat)
    assert types.get("losses") == "List[int]"


def test_infer_imports_dotted_use(tmp_path, sum_pattern):
    provider = ScriptedProvider('```json\n{"imports": ["numpy"]}\n```')
    gateway = Gateway(ReplayCache(tmp_path / "c.json"), provider, mode="record")
    assert gateway.infer_imports("x = numpy.sum(xs)", sum_pattern) == {"numpy"}


def test_replay_determinism_across_instances(fixtures_dir, sum_pattern):
    a = Gateway(ReplayCache(fixtures_dir / "replay_cache.json"), mode="replay")
    b = Gateway(ReplayCache(fixtures_dir / "replay_cache.json"), mode="replay")
    va = a.generate_variants(sum_pattern, 0.5, 1)
    vb = b.generate_variants(sum_pattern, 0.5, 1)
    assert [f.text for f in va] == [f.text for f in vb]


def test_cache_version_gate(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"format_version": 99, "records": {}}))
    from morphweave.errors import StoreVersionError

    with pytest.raises(StoreVersionError):
        ReplayCache(path)
