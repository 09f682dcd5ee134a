"""Parse, print, and measure the Python subset used by change patterns.

The grammar covers plain statement sequences: assignments, augmented
assignments, for/while/if, with, function and class definitions, returns,
imports, asserts, and an expression language of calls, attributes,
subscripts (including slices), literals, unary/binary/boolean operators,
comparisons, list/dict/tuple displays and list comprehensions.  Everything
else raises UnsupportedConstruct.

Trees are immutable.  Statement nodes carry a 1-based inclusive source
line span; spans never participate in equality or hashing, so ``==`` is
structural equality.
"""

from __future__ import annotations

import ast as _pyast
from collections import Counter
from dataclasses import dataclass, field

from .errors import FragmentSyntaxError, UnsupportedConstruct

STATEMENT_KINDS = frozenset({
    "Assign", "AugAssign", "For", "While", "If", "With", "ExprStmt",
    "FunctionDef", "ClassDef", "Return", "Import", "Assert",
})

CONTROL_KINDS = ("For", "While", "If")

# Kinds that exist only to give children fixed positions; they are not
# counted by count_nodes.
_STRUCTURAL_KINDS = frozenset({"Module", "Params", "Else", "NoValue"})


@dataclass(frozen=True)
class SourceFragment:
    """A sequence of top-level statements plus a provenance tag."""

    text: str
    origin: str = "variant"

    def __post_init__(self):
        object.__setattr__(self, "text", self.text.replace("\r\n", "\n").replace("\r", "\n"))


@dataclass(frozen=True)
class Node:
    kind: str
    text: str = ""
    children: tuple["Node", ...] = ()
    lines: tuple[int, int] | None = field(default=None, compare=False)

    def walk(self):
        yield self
        for child in self.children:
            yield from child.walk()

    def is_statement(self) -> bool:
        return self.kind in STATEMENT_KINDS

    def __repr__(self):  # compact, for test failure output
        inner = ", ".join(repr(c) for c in self.children)
        label = f" {self.text!r}" if self.text else ""
        return f"{self.kind}{label}({inner})"


NO_VALUE = Node("NoValue")


def module(statements) -> Node:
    return Node("Module", children=tuple(statements))


# ---------------------------------------------------------------------------
# parsing


_BINOPS = {
    _pyast.Add: "+", _pyast.Sub: "-", _pyast.Mult: "*", _pyast.Div: "/",
    _pyast.FloorDiv: "//", _pyast.Mod: "%", _pyast.Pow: "**",
}
_CMPOPS = {
    _pyast.Eq: "==", _pyast.NotEq: "!=", _pyast.Lt: "<", _pyast.LtE: "<=",
    _pyast.Gt: ">", _pyast.GtE: ">=", _pyast.In: "in", _pyast.NotIn: "not in",
    _pyast.Is: "is", _pyast.IsNot: "is not",
}
_UNARYOPS = {_pyast.USub: "-", _pyast.UAdd: "+", _pyast.Not: "not"}


def parse_fragment(src: SourceFragment | str) -> Node:
    """Parse source text into a Module node.

    Raises FragmentSyntaxError for malformed or empty input and
    UnsupportedConstruct for grammar-external constructs.
    """
    text = src.text if isinstance(src, SourceFragment) else src
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    if not text.strip():
        raise FragmentSyntaxError("empty fragment", line=1)
    try:
        tree = _pyast.parse(text)
    except SyntaxError as exc:
        raise FragmentSyntaxError(exc.msg or "invalid syntax", line=exc.lineno or 0) from None
    return module(_stmt(s) for s in tree.body)


def _span(node: _pyast.stmt) -> tuple[int, int]:
    return (node.lineno, getattr(node, "end_lineno", node.lineno))


def _unsupported(node: _pyast.AST) -> UnsupportedConstruct:
    return UnsupportedConstruct(type(node).__name__, getattr(node, "lineno", 0))


def _stmt(node: _pyast.stmt) -> Node:
    span = _span(node)
    if isinstance(node, _pyast.Assign):
        if len(node.targets) != 1:
            raise _unsupported(node)
        return Node("Assign", children=(_expr(node.targets[0]), _expr(node.value)), lines=span)
    if isinstance(node, _pyast.AugAssign):
        op = _BINOPS.get(type(node.op))
        if op is None:
            raise _unsupported(node)
        return Node("AugAssign", op, (_expr(node.target), _expr(node.value)), lines=span)
    if isinstance(node, _pyast.For):
        if node.orelse:
            raise _unsupported(node)
        body = tuple(_stmt(s) for s in node.body)
        return Node("For", children=(_expr(node.target), _expr(node.iter)) + body, lines=span)
    if isinstance(node, _pyast.While):
        if node.orelse:
            raise _unsupported(node)
        body = tuple(_stmt(s) for s in node.body)
        return Node("While", children=(_expr(node.test),) + body, lines=span)
    if isinstance(node, _pyast.If):
        body = tuple(_stmt(s) for s in node.body)
        orelse = Node("Else", children=tuple(_stmt(s) for s in node.orelse))
        return Node("If", children=(_expr(node.test),) + body + (orelse,), lines=span)
    if isinstance(node, _pyast.With):
        if len(node.items) != 1:
            raise _unsupported(node)
        item = node.items[0]
        as_name = _expr(item.optional_vars) if item.optional_vars is not None else NO_VALUE
        body = tuple(_stmt(s) for s in node.body)
        return Node("With", children=(_expr(item.context_expr), as_name) + body, lines=span)
    if isinstance(node, _pyast.Expr):
        return Node("ExprStmt", children=(_expr(node.value),), lines=span)
    if isinstance(node, _pyast.FunctionDef):
        args = node.args
        if args.posonlyargs or args.kwonlyargs or args.vararg or args.kwarg or args.defaults:
            raise _unsupported(node)
        params = Node("Params", children=tuple(Node("Name", a.arg) for a in args.args))
        body = tuple(_stmt(s) for s in node.body)
        return Node("FunctionDef", node.name, (params,) + body, lines=span)
    if isinstance(node, _pyast.ClassDef):
        if node.keywords:
            raise _unsupported(node)
        params = Node("Params", children=tuple(_expr(b) for b in node.bases))
        body = tuple(_stmt(s) for s in node.body)
        return Node("ClassDef", node.name, (params,) + body, lines=span)
    if isinstance(node, _pyast.Return):
        value = _expr(node.value) if node.value is not None else NO_VALUE
        return Node("Return", children=(value,), lines=span)
    if isinstance(node, _pyast.Import):
        if len(node.names) != 1 or node.names[0].asname:
            raise _unsupported(node)
        return Node("Import", node.names[0].name, lines=span)
    if isinstance(node, _pyast.ImportFrom):
        if len(node.names) != 1 or node.names[0].asname or node.level:
            raise _unsupported(node)
        return Node("Import", f"{node.module}:{node.names[0].name}", lines=span)
    if isinstance(node, _pyast.Assert):
        msg = _expr(node.msg) if node.msg is not None else NO_VALUE
        return Node("Assert", children=(_expr(node.test), msg), lines=span)
    raise _unsupported(node)


def _expr(node: _pyast.expr) -> Node:
    if isinstance(node, _pyast.Name):
        return Node("Name", node.id)
    if isinstance(node, _pyast.Constant):
        if node.value is Ellipsis:
            raise _unsupported(node)
        return Node("Literal", repr(node.value))
    if isinstance(node, _pyast.Call):
        if node.keywords:
            raise _unsupported(node)
        return Node("Call", children=(_expr(node.func),) + tuple(_expr(a) for a in node.args))
    if isinstance(node, _pyast.Attribute):
        return Node("Attribute", node.attr, (_expr(node.value),))
    if isinstance(node, _pyast.Subscript):
        return Node("Subscript", children=(_expr(node.value), _index(node.slice)))
    if isinstance(node, _pyast.BinOp):
        op = _BINOPS.get(type(node.op))
        if op is None:
            raise _unsupported(node)
        return Node("BinOp", op, (_expr(node.left), _expr(node.right)))
    if isinstance(node, _pyast.UnaryOp):
        op = _UNARYOPS.get(type(node.op))
        if op is None:
            raise _unsupported(node)
        return Node("UnaryOp", op, (_expr(node.operand),))
    if isinstance(node, _pyast.BoolOp):
        op = "and" if isinstance(node.op, _pyast.And) else "or"
        return Node("BoolOp", op, tuple(_expr(v) for v in node.values))
    if isinstance(node, _pyast.Compare):
        if len(node.ops) != 1:
            raise _unsupported(node)
        op = _CMPOPS.get(type(node.ops[0]))
        if op is None:
            raise _unsupported(node)
        return Node("Compare", op, (_expr(node.left), _expr(node.comparators[0])))
    if isinstance(node, _pyast.List):
        return Node("ListLiteral", children=tuple(_expr(e) for e in node.elts))
    if isinstance(node, _pyast.Tuple):
        return Node("TupleLiteral", children=tuple(_expr(e) for e in node.elts))
    if isinstance(node, _pyast.Dict):
        if any(k is None for k in node.keys):
            raise _unsupported(node)
        pairs: list[Node] = []
        for k, v in zip(node.keys, node.values):
            pairs.append(_expr(k))
            pairs.append(_expr(v))
        return Node("DictLiteral", children=tuple(pairs))
    if isinstance(node, _pyast.ListComp):
        if len(node.generators) != 1:
            raise _unsupported(node)
        gen = node.generators[0]
        if gen.is_async:
            raise _unsupported(node)
        conds = tuple(_expr(c) for c in gen.ifs)
        return Node(
            "Comprehension",
            children=(_expr(node.elt), _expr(gen.target), _expr(gen.iter)) + conds,
        )
    raise _unsupported(node)


def _index(node: _pyast.expr) -> Node:
    if isinstance(node, _pyast.Slice):
        parts = tuple(
            _expr(p) if p is not None else NO_VALUE
            for p in (node.lower, node.upper, node.step)
        )
        return Node("Slice", children=parts)
    return _expr(node)


# ---------------------------------------------------------------------------
# canonical printing

_PREC_OR = 1
_PREC_AND = 2
_PREC_NOT = 3
_PREC_CMP = 4
_PREC_ADD = 5
_PREC_MUL = 6
_PREC_UNARY = 7
_PREC_POW = 8
_PREC_POSTFIX = 9
_PREC_ATOM = 10

_BINOP_PREC = {"+": _PREC_ADD, "-": _PREC_ADD, "*": _PREC_MUL, "/": _PREC_MUL,
               "//": _PREC_MUL, "%": _PREC_MUL, "**": _PREC_POW}


def print_canonical(ast: Node) -> str:
    """Deterministic text: 4-space indents, spaced operators, LF endings.

    parse_fragment(print_canonical(a)) is structurally equal to a.
    """
    if ast.kind != "Module":
        ast = module([ast]) if ast.is_statement() else ast
    if ast.kind != "Module":
        return _print_expr(ast, 0)
    out: list[str] = []
    for stmt in ast.children:
        _print_stmt(stmt, 0, out)
    return "\n".join(out) + ("\n" if out else "")


def _print_block(stmts, indent: int, out: list[str]) -> None:
    for stmt in stmts:
        _print_stmt(stmt, indent, out)


def _print_stmt(node: Node, indent: int, out: list[str]) -> None:
    pad = "    " * indent
    k = node.kind
    if k == "Assign":
        out.append(f"{pad}{_print_expr(node.children[0], -1)} = {_print_expr(node.children[1], 0)}")
    elif k == "AugAssign":
        out.append(f"{pad}{_print_expr(node.children[0], 0)} {node.text}= {_print_expr(node.children[1], 0)}")
    elif k == "For":
        target, it = node.children[0], node.children[1]
        out.append(f"{pad}for {_print_expr(target, -1)} in {_print_expr(it, 0)}:")
        _print_block(node.children[2:], indent + 1, out)
    elif k == "While":
        out.append(f"{pad}while {_print_expr(node.children[0], 0)}:")
        _print_block(node.children[1:], indent + 1, out)
    elif k == "If":
        out.append(f"{pad}if {_print_expr(node.children[0], 0)}:")
        _print_block(node.children[1:-1], indent + 1, out)
        orelse = node.children[-1]
        if orelse.children:
            out.append(f"{pad}else:")
            _print_block(orelse.children, indent + 1, out)
    elif k == "With":
        ctx = _print_expr(node.children[0], 0)
        head = f"{pad}with {ctx}:"
        if node.children[1] is not NO_VALUE and node.children[1].kind != "NoValue":
            head = f"{pad}with {ctx} as {_print_expr(node.children[1], 0)}:"
        out.append(head)
        _print_block(node.children[2:], indent + 1, out)
    elif k == "ExprStmt":
        out.append(f"{pad}{_print_expr(node.children[0], 0)}")
    elif k == "FunctionDef":
        params = ", ".join(_print_expr(p, 0) for p in node.children[0].children)
        out.append(f"{pad}def {node.text}({params}):")
        _print_block(node.children[1:], indent + 1, out)
    elif k == "ClassDef":
        bases = ", ".join(_print_expr(b, 0) for b in node.children[0].children)
        out.append(f"{pad}class {node.text}({bases}):" if bases else f"{pad}class {node.text}:")
        _print_block(node.children[1:], indent + 1, out)
    elif k == "Return":
        value = node.children[0]
        if value.kind == "NoValue":
            out.append(f"{pad}return")
        else:
            out.append(f"{pad}return {_print_expr(value, 0)}")
    elif k == "Import":
        if ":" in node.text:
            mod, name = node.text.split(":", 1)
            out.append(f"{pad}from {mod} import {name}")
        else:
            out.append(f"{pad}import {node.text}")
    elif k == "Assert":
        test = _print_expr(node.children[0], 0)
        if node.children[1].kind == "NoValue":
            out.append(f"{pad}assert {test}")
        else:
            out.append(f"{pad}assert {test}, {_print_expr(node.children[1], 0)}")
    else:
        raise ValueError(f"not a statement kind: {k}")


def _print_expr(node: Node, context_prec: int) -> str:
    k = node.kind
    if k == "Name":
        return node.text
    if k == "TemplateVar":
        return f":[[{node.text}]]"
    if k == "Literal":
        return node.text
    if k == "Call":
        func = _print_expr(node.children[0], _PREC_POSTFIX)
        args = ", ".join(_print_expr(a, 0) for a in node.children[1:])
        return f"{func}({args})"
    if k == "Attribute":
        return f"{_print_expr(node.children[0], _PREC_POSTFIX)}.{node.text}"
    if k == "Subscript":
        base = _print_expr(node.children[0], _PREC_POSTFIX)
        return f"{base}[{_print_expr(node.children[1], 0)}]"
    if k == "Slice":
        lower, upper, step = node.children
        parts = ["" if p.kind == "NoValue" else _print_expr(p, 0) for p in (lower, upper)]
        text = ":".join(parts)
        if step.kind != "NoValue":
            text += f":{_print_expr(step, 0)}"
        return text
    if k == "BinOp":
        prec = _BINOP_PREC[node.text]
        if node.text == "**":
            left = _print_expr(node.children[0], prec + 1)
            right = _print_expr(node.children[1], prec)
        else:
            left = _print_expr(node.children[0], prec)
            right = _print_expr(node.children[1], prec + 1)
        return _paren(f"{left} {node.text} {right}", prec, context_prec)
    if k == "UnaryOp":
        prec = _PREC_NOT if node.text == "not" else _PREC_UNARY
        sep = " " if node.text == "not" else ""
        return _paren(f"{node.text}{sep}{_print_expr(node.children[0], prec)}", prec, context_prec)
    if k == "BoolOp":
        prec = _PREC_AND if node.text == "and" else _PREC_OR
        joined = f" {node.text} ".join(_print_expr(c, prec + 1) for c in node.children)
        return _paren(joined, prec, context_prec)
    if k == "Compare":
        left = _print_expr(node.children[0], _PREC_CMP + 1)
        right = _print_expr(node.children[1], _PREC_CMP + 1)
        return _paren(f"{left} {node.text} {right}", _PREC_CMP, context_prec)
    if k == "ListLiteral":
        return "[" + ", ".join(_print_expr(e, 0) for e in node.children) + "]"
    if k == "TupleLiteral":
        items = [_print_expr(e, 0) for e in node.children]
        if len(items) == 1:
            return f"({items[0]},)"
        joined = ", ".join(items)
        # bare only where Python's grammar guarantees it (loop/assign targets)
        return joined if context_prec < 0 else f"({joined})"
    if k == "DictLiteral":
        pairs = node.children
        items = [
            f"{_print_expr(pairs[i], 0)}: {_print_expr(pairs[i + 1], 0)}"
            for i in range(0, len(pairs), 2)
        ]
        return "{" + ", ".join(items) + "}"
    if k == "Comprehension":
        elt = _print_expr(node.children[0], 0)
        target = _print_expr(node.children[1], 0)
        it = _print_expr(node.children[2], 0)
        text = f"[{elt} for {target} in {it}"
        for cond in node.children[3:]:
            text += f" if {_print_expr(cond, _PREC_OR)}"
        return text + "]"
    raise ValueError(f"not an expression kind: {k}")


def _paren(text: str, prec: int, context_prec: int) -> str:
    return f"({text})" if prec < context_prec else text


# ---------------------------------------------------------------------------
# measures


def count_nodes(ast: Node) -> int:
    """Count every node including leaves; structural wrappers are free."""
    total = 0
    for node in ast.walk():
        if node.kind not in _STRUCTURAL_KINDS:
            total += 1
    return total


def control_nodes(ast: Node) -> Counter:
    """Multiset of control-statement kinds (For, While, If), nested included."""
    counts: Counter = Counter()
    for node in ast.walk():
        if node.kind in CONTROL_KINDS:
            counts[node.kind] += 1
    return counts


def collect_declarations(ast: Node) -> set[tuple[str, str, int]]:
    """Function and class declaration descriptors: (kind, name, arity).

    Plain variable assignments are deliberately not declarations.
    """
    found: set[tuple[str, str, int]] = set()
    for node in ast.walk():
        if node.kind in ("FunctionDef", "ClassDef"):
            found.add((node.kind, node.text, len(node.children[0].children)))
    return found


def strip_spans(node: Node) -> Node:
    """Copy of the tree with all line spans dropped."""
    return Node(node.kind, node.text, tuple(strip_spans(c) for c in node.children))
