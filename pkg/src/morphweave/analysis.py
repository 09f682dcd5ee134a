"""Name usage analysis over fragments: free names, established names, binders.

Fragments are partial code, so this is a sequential approximation, not a
real scope analysis: a name is free when it is read before any binding
statement has been seen, and established when the fragment writes to it
(plain or augmented assignment, subscript store, or a mutating method
call on it).
"""

from __future__ import annotations

from .syntax import Node

BUILTIN_NAMES = frozenset({
    "range", "len", "sum", "sorted", "enumerate", "list", "set", "dict",
    "tuple", "min", "max", "abs", "print", "str", "int", "float", "bool",
    "zip", "map", "filter", "reversed", "round", "any", "all", "isinstance",
    "True", "False", "None", "open",
})

# method calls that count as writing to their receiver
MUTATING_METHODS = frozenset({
    "append", "extend", "insert", "update", "setdefault", "add", "remove",
    "discard", "pop", "popitem", "clear", "sort", "reverse",
})


class NameUsage:
    def __init__(self, free: list[str], established: list[str], binders: list[str]):
        self.free = free                # read before bound, first-use order
        self.established = established  # written/mutated, first-write order
        self.binders = binders          # loop/comprehension targets, in order


def analyze_names(root: Node, module_names=frozenset()) -> NameUsage:
    skip = BUILTIN_NAMES | set(module_names)
    bound: set[str] = set()
    free: list[str] = []
    established: list[str] = []
    binders: list[str] = []

    def read(name: str) -> None:
        if name in skip or name in bound or name in free:
            return
        free.append(name)

    def establish(name: str) -> None:
        if name not in established:
            established.append(name)

    def bind_target(node: Node) -> None:
        if node.kind == "Name":
            if node.text not in bound:
                bound.add(node.text)
        elif node.kind in ("TupleLiteral", "ListLiteral"):
            for child in node.children:
                bind_target(child)
        else:
            visit_expr(node)

    def visit_expr(node: Node) -> None:
        k = node.kind
        if k == "Name":
            read(node.text)
            return
        if k == "Call":
            func = node.children[0]
            if func.kind == "Name":
                read(func.text)
            elif func.kind == "Attribute" and func.children[0].kind == "Name":
                receiver = func.children[0].text
                read(receiver)
                if receiver not in skip and func.text in MUTATING_METHODS:
                    establish(receiver)
            else:
                visit_expr(func)
            for arg in node.children[1:]:
                visit_expr(arg)
            return
        if k == "Comprehension":
            visit_expr(node.children[2])
            bind_target(node.children[1])
            if node.children[1].kind == "Name":
                if node.children[1].text not in binders:
                    binders.append(node.children[1].text)
            for cond in node.children[3:]:
                visit_expr(cond)
            visit_expr(node.children[0])
            return
        for child in node.children:
            visit_expr(child)

    def write_target(node: Node) -> None:
        if node.kind == "Name":
            establish(node.text)
            bound.add(node.text)
        elif node.kind in ("TupleLiteral", "ListLiteral"):
            for child in node.children:
                write_target(child)
        elif node.kind == "Subscript":
            base = node.children[0]
            if base.kind == "Name":
                read(base.text)
                establish(base.text)
                bound.add(base.text)
            else:
                visit_expr(base)
            visit_expr(node.children[1])
        elif node.kind == "Attribute":
            base = node.children[0]
            if base.kind == "Name":
                read(base.text)
                establish(base.text)
            else:
                visit_expr(base)
        else:
            visit_expr(node)

    def visit_stmt(node: Node) -> None:
        k = node.kind
        if k == "Assign":
            visit_expr(node.children[1])
            write_target(node.children[0])
        elif k == "AugAssign":
            target = node.children[0]
            if target.kind == "Name":
                read(target.text)
            visit_expr(node.children[1])
            write_target(target)
        elif k == "For":
            visit_expr(node.children[1])
            target = node.children[0]
            bind_target(target)
            for name_node in target.walk():
                if name_node.kind == "Name" and name_node.text not in binders:
                    binders.append(name_node.text)
            for body_stmt in node.children[2:]:
                visit_stmt(body_stmt)
        elif k == "While":
            visit_expr(node.children[0])
            for body_stmt in node.children[1:]:
                visit_stmt(body_stmt)
        elif k == "If":
            visit_expr(node.children[0])
            for body_stmt in node.children[1:-1]:
                visit_stmt(body_stmt)
            for body_stmt in node.children[-1].children:
                visit_stmt(body_stmt)
        elif k == "With":
            visit_expr(node.children[0])
            if node.children[1].kind != "NoValue":
                bind_target(node.children[1])
            for body_stmt in node.children[2:]:
                visit_stmt(body_stmt)
        elif k == "ExprStmt":
            visit_expr(node.children[0])
        elif k == "Return":
            if node.children[0].kind != "NoValue":
                visit_expr(node.children[0])
        elif k == "Assert":
            visit_expr(node.children[0])
            if node.children[1].kind != "NoValue":
                visit_expr(node.children[1])
        elif k in ("FunctionDef", "ClassDef"):
            bound.add(node.text)
            establish(node.text)
        elif k == "Import":
            pass

    stmts = root.children if root.kind == "Module" else (root,)
    for stmt in stmts:
        visit_stmt(stmt)
    return NameUsage(free, established, binders)


def imported_modules(root: Node) -> set[str]:
    """Top-level module names imported by the fragment."""
    mods: set[str] = set()
    for node in root.walk():
        if node.kind == "Import":
            mods.add(node.text.split(":", 1)[0].split(".", 1)[0])
    return mods


def dotted_module_uses(root: Node) -> set[str]:
    """Names used as attribute bases, e.g. numpy in numpy.sum(...)."""
    uses: set[str] = set()
    for node in root.walk():
        if node.kind == "Attribute" and node.children[0].kind == "Name":
            uses.add(node.children[0].text)
    return uses
