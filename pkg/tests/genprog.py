"""Seeded random programs over the supported grammar, for property tests."""

from __future__ import annotations

import random
import re

NAMES = [f"n{k}" for k in range(8)]
BINOPS = ["+", "-", "*"]
CMPS = ["==", "!=", "<", "in"]


def gen_expr(rng: random.Random, depth: int = 0) -> str:
    choices = ["name", "literal"]
    if depth < 2:
        choices += ["binop", "call", "subscript", "attr_call", "listlit", "compare"]
    kind = rng.choice(choices)
    if kind == "name":
        return rng.choice(NAMES)
    if kind == "literal":
        return str(rng.randrange(0, 10))
    if kind == "binop":
        return f"{gen_expr(rng, depth + 1)} {rng.choice(BINOPS)} {gen_expr(rng, depth + 1)}"
    if kind == "call":
        fn = rng.choice(["len", "sum", "sorted", "list"])
        return f"{fn}({gen_expr(rng, depth + 1)})"
    if kind == "subscript":
        return f"{rng.choice(NAMES)}[{gen_expr(rng, depth + 1)}]"
    if kind == "attr_call":
        return f"{rng.choice(NAMES)}.get({gen_expr(rng, depth + 1)})"
    if kind == "listlit":
        items = [gen_expr(rng, depth + 1) for _ in range(rng.randrange(0, 3))]
        return "[" + ", ".join(items) + "]"
    # parenthesized so nesting never forms a chained comparison
    return f"({gen_expr(rng, depth + 1)} {rng.choice(CMPS)} {gen_expr(rng, depth + 1)})"


def gen_stmt(rng: random.Random, depth: int = 0) -> str:
    choices = ["assign", "augassign", "expr"]
    if depth < 2:
        choices += ["for", "if", "while"]
    kind = rng.choice(choices)
    if kind == "assign":
        return f"{rng.choice(NAMES)} = {gen_expr(rng)}"
    if kind == "augassign":
        return f"{rng.choice(NAMES)} += {gen_expr(rng)}"
    if kind == "expr":
        return f"{rng.choice(NAMES)}.append({gen_expr(rng)})"
    body = gen_block(rng, rng.randrange(1, 3), depth + 1)
    indented = "\n".join("    " + ln for ln in body.split("\n"))
    if kind == "for":
        return f"for {rng.choice(NAMES)} in {rng.choice(NAMES)}:\n{indented}"
    if kind == "if":
        return f"if {gen_expr(rng)} {rng.choice(CMPS)} {gen_expr(rng)}:\n{indented}"
    return f"while {gen_expr(rng)} != {gen_expr(rng)}:\n{indented}"


def gen_block(rng: random.Random, n: int, depth: int = 0) -> str:
    return "\n".join(gen_stmt(rng, depth) for _ in range(n))


def gen_program(seed: int, statements: int = 5) -> str:
    rng = random.Random(seed)
    return gen_block(rng, statements)


def abstract_names(fragment: str, rng: random.Random) -> str:
    names = sorted(set(re.findall(r"\bn\d\b", fragment)))
    rng.shuffle(names)
    abstracted = names[: max(1, len(names) // 2)] if names else []
    for k, name in enumerate(abstracted):
        fragment = re.sub(rf"\b{name}\b", f":[[v{k}]]", fragment)
    return fragment


def gen_rule_text(seed: int) -> str:
    """A random template: a generated fragment with some names abstracted."""
    rng = random.Random(seed ^ 0x5EED)
    lhs = abstract_names(gen_block(rng, rng.randrange(1, 3)), rng)
    rhs = "out = :[[v0]]" if ":[[v0]]" in lhs else "out = 0"
    return f"{lhs}\n=>\n{rhs}\n"


def gen_rule_from_program(program: str, seed: int) -> str:
    """A template carved from a window of the program, so that matching the
    program back is guaranteed to succeed at least once."""
    from morphweave.syntax import parse_fragment

    rng = random.Random(seed ^ 0xCA5E)
    stmts = parse_fragment(program).children
    width = rng.randrange(1, min(3, len(stmts)) + 1)
    start = rng.randrange(0, len(stmts) - width + 1)
    lines = program.split("\n")
    first = stmts[start].lines[0]
    last = stmts[start + width - 1].lines[1]
    window = "\n".join(lines[first - 1:last])
    lhs = abstract_names(window, rng)
    rhs = "out = :[[v0]]" if ":[[v0]]" in lhs else "out = 0"
    return f"{lhs}\n=>\n{rhs}\n"
