"""morphweave: expand code-change patterns into validated variants,
synthesize template rewrite rules, and apply them across codebases."""

__version__ = "0.1.0"

from .patterns import ChangePattern, load_pattern, load_pattern_dir
from .pipeline import ExpansionConfig, ExpansionReport, Variant, expand, summarize
from .rewrite import Guard, MatchBinding, RewriteRule, find_matches, parse_rule, rewrite
from .synthesis import antiunify, synthesize_baseline, synthesize_from_variant
from .syntax import Node, SourceFragment, parse_fragment, print_canonical

__all__ = [
    "ChangePattern", "ExpansionConfig", "ExpansionReport", "Guard",
    "MatchBinding", "Node", "RewriteRule", "SourceFragment", "Variant",
    "antiunify", "expand", "find_matches", "load_pattern", "load_pattern_dir",
    "parse_fragment", "parse_rule", "print_canonical", "rewrite", "summarize",
    "synthesize_baseline", "synthesize_from_variant",
]
