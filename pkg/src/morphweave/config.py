"""Run configuration: TOML file, overridable by CLI flags.

Defaults are the selected generation parameters: variant temperatures
0.5/0.7 with three prompt and five feedback iterations, and test
generation at temperature 1.2 with five iterations.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field, replace
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .pipeline import ExpansionConfig


@dataclass(frozen=True)
class RunConfig:
    cpat_dir: str = "fixtures/cpats"
    replay_cache: str = "fixtures/replay_cache.json"
    labels: str | None = None
    oracle: str | None = None
    curves_oracle: str | None = None
    out_dir: str = "out"
    type_stubs: str | None = None

    expansion: ExpansionConfig = field(default_factory=ExpansionConfig)

    tuning_temperatures: tuple[float, ...] = (0.0, 0.2, 0.4, 0.6, 0.8, 1.0, 1.2)
    tuning_max_iterations: int = 6
    tuning_delta: float = 0.05

    provider_base_url: str = ""
    provider_model: str = ""

    workers: int = 1
    sandbox: str = "inline"  # inline | fork | a runner command line
    seed: int | None = None

    def resolve(self, base: Path) -> "RunConfig":
        """Anchor relative paths at the config file's directory."""
        def anchor(value):
            if value is None:
                return None
            path = Path(value)
            return str(path if path.is_absolute() else base / path)

        return replace(
            self,
            cpat_dir=anchor(self.cpat_dir),
            replay_cache=anchor(self.replay_cache),
            labels=anchor(self.labels),
            oracle=anchor(self.oracle),
            curves_oracle=anchor(self.curves_oracle),
            out_dir=anchor(self.out_dir),
            type_stubs=anchor(self.type_stubs),
        )


def load_config(path: str | Path) -> RunConfig:
    data = tomllib.loads(Path(path).read_text())
    paths = data.get("paths", {})
    expansion = data.get("expansion", {})
    tests = data.get("tests", {})
    tuning = data.get("tuning", {})
    provider = data.get("provider", {})
    run = data.get("run", {})
    cfg = RunConfig(
        cpat_dir=paths.get("cpat_dir", RunConfig.cpat_dir),
        replay_cache=paths.get("replay_cache", RunConfig.replay_cache),
        labels=paths.get("labels"),
        oracle=paths.get("oracle"),
        curves_oracle=paths.get("curves_oracle"),
        out_dir=paths.get("out_dir", RunConfig.out_dir),
        type_stubs=paths.get("type_stubs"),
        expansion=ExpansionConfig(
            temperatures=tuple(expansion.get("temperatures", (0.5, 0.7))),
            prompt_iterations=expansion.get("prompt_iterations", 3),
            feedback_iterations=expansion.get("feedback_iterations", 5),
            test_temperature=tests.get("temperature", 1.2),
            test_iterations=tests.get("iterations", 5),
        ),
        tuning_temperatures=tuple(tuning.get("temperatures", RunConfig.tuning_temperatures)),
        tuning_max_iterations=tuning.get("max_iterations", RunConfig.tuning_max_iterations),
        tuning_delta=tuning.get("delta", RunConfig.tuning_delta),
        provider_base_url=provider.get("base_url", ""),
        provider_model=provider.get("model", ""),
        workers=run.get("workers", 1),
        sandbox=run.get("sandbox", "inline"),
    )
    return cfg.resolve(Path(path).resolve().parent)
