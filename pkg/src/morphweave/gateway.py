"""Provider-abstracted completion client with a record/replay cache.

Prompts are rendered from versioned template files; the cache key is the
SHA-256 of ``prompt \\x00 temperature \\x00 iteration``, so identical
requests replay byte-identically on any platform.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import threading
import time
import urllib.request
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import CacheMiss, FormatError, ProviderError, RecordExists, StoreVersionError
from .patterns import ChangePattern
from .syntax import SourceFragment

KIND_VARIANT = "VariantGen"
KIND_VARIANT_FEEDBACK = "VariantFeedback"
KIND_TEST = "TestGen"
KIND_TYPE = "TypeInfer"
KIND_IMPORT = "ImportInfer"

API_KEY_ENV = "MORPHWEAVE_LLM_KEY"
CACHE_FORMAT_VERSION = 1

# Few-shot pairs shown for variant and test generation: one syntax
# rewrite and one data-flow rewrite of the same summation idiom.
SYNTAX_EXEMPLAR = (
    "result = 0\nfor elem in elements:\n    result = elem + result",
    "loss = 0\nfor i in range(len(losses)):\n    loss += losses[i]",
)
FLOW_EXEMPLAR = (
    "result = 0\nfor elem in elements:\n    result = elem + result",
    "temp_list = [0] + int_list\nfor i in range(1, len(temp_list)):\n"
    "    temp_list[i] += temp_list[i - 1]\ncount = temp_list[-1]",
)
TEST_EXEMPLARS = (
    ("result = 0\nfor elem in elements:\n    result = elem + result",
     "elements = [1, 2, 3]\nassert snippet(elements) == 6"),
    ("result = 0\nfor elem in elements:\n    result = elem + result",
     "elements = []\nassert snippet(elements) == 0"),
)

_BLOCK_RE = {
    tag: re.compile(r"```" + tag + r"\n(.*?)```", re.DOTALL)
    for tag in ("VARIANT", "TEST", "json")
}


@dataclass(frozen=True)
class PromptSpec:
    kind: str
    cpat_id: str
    payload: str
    few_shot: tuple[tuple[str, str], ...] = ()
    temperature: float = 0.0
    iteration_index: int = 1
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if not 0.0 <= self.temperature <= 2.0:
            raise ValueError(f"temperature {self.temperature} outside [0, 2]")
        if self.iteration_index < 1:
            raise ValueError("iteration_index starts at 1")
        if self.kind in (KIND_VARIANT, KIND_TEST) and len(self.few_shot) != 2:
            raise ValueError(f"{self.kind} prompts carry exactly two few-shot pairs")


def _template(name: str) -> str:
    return resources.files("morphweave.prompts").joinpath(f"{name}.txt").read_text()


def _format_few_shot(pairs, tag: str) -> str:
    parts = []
    for i, (shown, produced) in enumerate(pairs, 1):
        parts.append(f"Example {i} input:\n{shown}\nExample {i} output:\n```{tag}\n{produced}\n```")
    return "\n\n".join(parts)


def _fill(template: str, **values: str) -> str:
    # plain substitution; template bodies and payloads may contain braces
    for key, value in values.items():
        template = template.replace("{" + key + "}", value)
    return template


def render_prompt(spec: PromptSpec) -> str:
    if spec.kind == KIND_VARIANT:
        return _fill(_template("variant_gen"),
                     few_shot=_format_few_shot(spec.few_shot, "VARIANT"),
                     payload=spec.payload)
    if spec.kind == KIND_VARIANT_FEEDBACK:
        return _fill(_template("variant_feedback"),
                     few_shot=_format_few_shot(spec.few_shot, "VARIANT"),
                     payload=spec.payload,
                     seed=spec.extra["seed"])
    if spec.kind == KIND_TEST:
        return _fill(_template("test_gen"),
                     few_shot=_format_few_shot(spec.few_shot, "TEST"),
                     payload=spec.payload,
                     inputs=spec.extra.get("inputs", ""),
                     outputs=spec.extra.get("outputs", ""))
    if spec.kind == KIND_TYPE:
        return _fill(_template("type_infer"), payload=spec.payload,
                     context=spec.extra.get("context", ""))
    if spec.kind == KIND_IMPORT:
        return _fill(_template("import_infer"), payload=spec.payload,
                     context=spec.extra.get("context", ""))
    raise ValueError(f"unknown prompt kind {spec.kind}")


def cache_key(prompt: str, temperature: float, iteration_index: int) -> str:
    payload = (
        prompt.encode("utf-8")
        + b"\x00" + str(float(temperature)).encode("ascii")
        + b"\x00" + str(int(iteration_index)).encode("ascii")
    )
    return hashlib.sha256(payload).hexdigest()


class ReplayCache:
    """JSON map cache_key -> completion record.  Reads are lock-free once
    loaded; writes are serialized and flushed atomically."""

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path else None
        self._records: dict[str, dict] = {}
        self._lock = threading.Lock()
        if self.path and self.path.exists():
            data = json.loads(self.path.read_text())
            version = data.get("format_version", 0)
            if version > CACHE_FORMAT_VERSION:
                raise StoreVersionError(
                    f"cache {self.path} has format version {version}, newer than supported"
                )
            self._records = data.get("records", {})

    def __contains__(self, key: str) -> bool:
        return key in self._records

    def __len__(self) -> int:
        return len(self._records)

    def get(self, key: str) -> dict | None:
        return self._records.get(key)

    def put(self, key: str, record: dict, overwrite: bool = False) -> None:
        with self._lock:
            if key in self._records and not overwrite:
                raise RecordExists(f"completion already recorded for key {key}")
            self._records[key] = record

    def save(self) -> None:
        if self.path is None:
            raise ValueError("cache has no backing file")
        with self._lock:
            payload = {"format_version": CACHE_FORMAT_VERSION, "records": self._records}
            tmp = self.path.with_suffix(".tmp")
            tmp.write_text(json.dumps(payload, indent=0, sort_keys=True))
            tmp.replace(self.path)


class HttpChatProvider:
    """Minimal chat-completion client: POST {base_url}/chat/completions."""

    def __init__(self, base_url: str, model: str, api_key: str | None = None, timeout: float = 60.0):
        self.base_url = base_url.rstrip("/")
        self.model = model
        self.api_key = api_key or os.environ.get(API_KEY_ENV, "")
        self.timeout = timeout
        self.provider_id = f"http:{model}"

    def __call__(self, prompt: str, temperature: float, iteration: int = 1) -> str:
        body = json.dumps({
            "model": self.model,
            "messages": [{"role": "user", "content": prompt}],
            "temperature": temperature,
        }).encode("utf-8")
        request = urllib.request.Request(
            f"{self.base_url}/chat/completions",
            data=body,
            headers={
                "Content-Type": "application/json",
                "Authorization": f"Bearer {self.api_key}",
            },
        )
        try:
            with urllib.request.urlopen(request, timeout=self.timeout) as reply:
                data = json.loads(reply.read().decode("utf-8"))
            return data["choices"][0]["message"]["content"]
        except Exception as exc:
            raise ProviderError(str(exc)) from exc


def extract_blocks(text: str, tag: str) -> list[str]:
    return [m.strip("\n") for m in _BLOCK_RE[tag].findall(text)]


def extract_json_payload(text: str) -> dict:
    blocks = extract_blocks(text, "json")
    if not blocks:
        raise FormatError("completion carries no json block")
    try:
        data = json.loads(blocks[-1])
    except json.JSONDecodeError as exc:
        raise FormatError(f"bad json payload: {exc}") from None
    if not isinstance(data, dict):
        raise FormatError("json payload must be an object")
    return data


class Gateway:
    """Completion front end for variant, test, and inference prompts.

    mode: "replay" serves only recorded completions (CacheMiss otherwise);
    "record" fills the cache through the provider; "live" bypasses the
    cache entirely.
    """

    def __init__(self, cache: ReplayCache | None = None, provider=None,
                 mode: str = "replay", overwrite: bool = False):
        if mode not in ("replay", "record", "live"):
            raise ValueError(f"unknown gateway mode {mode}")
        if mode == "replay" and cache is None:
            raise ValueError("replay mode needs a cache")
        if mode in ("record", "live") and provider is None:
            raise ValueError(f"{mode} mode needs a provider")
        self.cache = cache
        self.provider = provider
        self.mode = mode
        self.overwrite = overwrite

    def complete(self, spec: PromptSpec) -> str:
        prompt = render_prompt(spec)
        key = cache_key(prompt, spec.temperature, spec.iteration_index)
        if self.mode == "live":
            return self.provider(prompt, spec.temperature, spec.iteration_index)
        record = self.cache.get(key) if self.cache else None
        if record is not None and not (self.mode == "record" and self.overwrite):
            return record["raw_text"]
        if self.mode == "replay":
            raise CacheMiss(key)
        text = self.provider(prompt, spec.temperature, spec.iteration_index)
        self.cache.put(key, {
            "cache_key": key,
            "raw_text": text,
            "provider_id": getattr(self.provider, "provider_id", "callable"),
            "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        }, overwrite=self.overwrite)
        return text

    # -- prompt builders ----------------------------------------------------

    def variant_spec(self, cpat: ChangePattern, temperature: float, iteration: int,
                     seed_code: str | None = None) -> PromptSpec:
        if seed_code is None:
            return PromptSpec(KIND_VARIANT, cpat.id, cpat.lhs.text,
                              (SYNTAX_EXEMPLAR, FLOW_EXEMPLAR), temperature, iteration)
        return PromptSpec(KIND_VARIANT_FEEDBACK, cpat.id, cpat.lhs.text,
                          (SYNTAX_EXEMPLAR, FLOW_EXEMPLAR), temperature, iteration,
                          extra={"seed": seed_code})

    def test_spec(self, cpat: ChangePattern, temperature: float, iteration: int) -> PromptSpec:
        return PromptSpec(KIND_TEST, cpat.id, cpat.lhs.text, TEST_EXEMPLARS,
                          temperature, iteration,
                          extra={"inputs": ", ".join(cpat.input_names),
                                 "outputs": ", ".join(cpat.output_vars)})

    # -- operations ----------------------------------------------------------

    def generate_variants(self, cpat: ChangePattern, temperature: float, iteration: int,
                          seed_code: str | None = None) -> list[SourceFragment]:
        text = self.complete(self.variant_spec(cpat, temperature, iteration, seed_code))
        blocks = extract_blocks(text, "VARIANT")
        if not blocks:
            raise FormatError("completion carries no VARIANT block")
        return [SourceFragment(b, origin="variant") for b in blocks]

    def generate_tests(self, cpat: ChangePattern, temperature: float, iteration: int) -> list[SourceFragment]:
        text = self.complete(self.test_spec(cpat, temperature, iteration))
        if not text.strip():
            return []
        blocks = extract_blocks(text, "TEST")
        if not blocks:
            raise FormatError("completion carries no TEST block")
        return [SourceFragment(b, origin="test") for b in blocks]

    def infer_types(self, variant: SourceFragment | str, cpat: ChangePattern) -> dict[str, str]:
        code = variant.text if isinstance(variant, SourceFragment) else variant
        spec = PromptSpec(KIND_TYPE, cpat.id, code, (), 0.0, 1,
                          extra={"context": cpat.lhs.text})
        data = extract_json_payload(self.complete(spec))
        types = data.get("types")
        if not isinstance(types, dict):
            raise FormatError("type inference payload lacks a 'types' object")
        return {str(k): str(v) for k, v in types.items()}

    def infer_imports(self, variant: SourceFragment | str, cpat: ChangePattern) -> set[str]:
        code = variant.text if isinstance(variant, SourceFragment) else variant
        spec = PromptSpec(KIND_IMPORT, cpat.id, code, (), 0.0, 1,
                          extra={"context": cpat.lhs.text})
        data = extract_json_payload(self.complete(spec))
        imports = data.get("imports")
        if not isinstance(imports, list):
            raise FormatError("import inference payload lacks an 'imports' list")
        return {str(m) for m in imports}
