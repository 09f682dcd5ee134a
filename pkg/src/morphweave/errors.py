"""Exception hierarchy shared across the package."""

from __future__ import annotations


class MorphweaveError(Exception):
    """Base class for all errors raised by this package."""


class FragmentSyntaxError(MorphweaveError):
    """Source text does not parse under the supported grammar."""

    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line
        self.message = message


class UnsupportedConstruct(MorphweaveError):
    """Source parses as Python but uses a construct outside the grammar."""

    def __init__(self, kind: str, line: int = 0):
        super().__init__(f"unsupported construct {kind!r}" + (f" at line {line}" if line else ""))
        self.kind = kind
        self.line = line


class RuleParseError(MorphweaveError):
    """Rewrite-rule text is malformed."""


class UnboundRhsVar(RuleParseError):
    """A template variable appears on the RHS but not on the LHS."""

    def __init__(self, var_id: str):
        super().__init__(f"RHS variable :[[{var_id}]] does not appear in the LHS")
        self.var_id = var_id


class MissingTypeInfo(MorphweaveError):
    """A type guard references a variable with no known type; skip the site."""

    def __init__(self, var_id: str, name: str = ""):
        super().__init__(f"no type information for {name or var_id}")
        self.var_id = var_id
        self.name = name


class SynthesisError(MorphweaveError):
    """A rule could not be inferred from the given before/after pair."""


class WrapError(MorphweaveError):
    """A fragment could not be wrapped into a callable function."""


class ProviderError(MorphweaveError):
    """The completion provider failed (network, auth, malformed reply)."""


class CacheMiss(MorphweaveError):
    """Replay-only mode was asked for a completion that was never recorded."""

    def __init__(self, cache_key: str):
        super().__init__(f"no recorded completion for key {cache_key}")
        self.cache_key = cache_key


class RecordExists(MorphweaveError):
    """Recording would overwrite an existing completion record."""


class FormatError(MorphweaveError):
    """A completion violates the output contract; discard it."""


class InsufficientTests(MorphweaveError):
    """Semantic classification was requested with zero valid test cases."""


class SandboxUnavailable(MorphweaveError):
    """The execution backend cannot be reached."""


class DomainError(MorphweaveError):
    """A numeric argument is outside its documented domain."""


class TooFewPairs(MorphweaveError):
    """Not enough nonzero paired differences for the signed-rank test."""


class EmptySample(MorphweaveError):
    """An estimator was invoked on an empty sample."""


class GridIncomplete(MorphweaveError):
    """The F-measure grid is missing cells needed for selection."""


class InsufficientCpats(MorphweaveError):
    """Cross-validation needs at least as many patterns as folds."""


class MissingProvenance(MorphweaveError):
    """Oracle variants lack the iteration provenance needed for curves."""


class StoreVersionError(MorphweaveError):
    """A persisted store was written by a newer format version."""


class StoreFormatError(MorphweaveError):
    """A persisted store or oracle file is corrupt or malformed."""


class CpatFormatError(MorphweaveError):
    """A change-pattern file violates its schema or invariants."""
