"""Structure-based traversals of the parse tree.

``sbt`` emits the fully reconstructible bracketed form; ``xsbt`` emits the
compressed XML-like form that keeps expression-level-and-above nodes only.
"""
from __future__ import annotations

from .cst import AstNode

# Node kinds dropped from the X-SBT stream; their subtrees are skipped.
XSBT_EXCLUDED = frozenset(
    ("identifier", "literal", "argument_list", "parameter_list",
     "preprocessor_directive", "other")
)


def _label(node):
    if node.kind in ("identifier", "literal"):
        return f"{node.kind}_{node.leaf_text}"
    return node.kind


def sbt(ast):
    """Structure-based traversal token sequence; the tree is recoverable."""
    out = []

    def walk(node):
        label = _label(node)
        out.append("(")
        out.append(label)
        for child in node.children:
            walk(child)
        out.append(")")
        out.append(label)

    walk(ast)
    return out


def sbt_parse(tokens):
    """Inverse reader for sbt(); returns a (label, children) nested tuple.

    Used as the unambiguity oracle: sbt output must rebuild the input tree.
    """
    pos = 0

    def read():
        nonlocal pos
        if tokens[pos] != "(":
            raise ValueError(f"expected '(' at {pos}")
        pos += 1
        label = tokens[pos]
        pos += 1
        children = []
        while tokens[pos] == "(":
            children.append(read())
        if tokens[pos] != ")":
            raise ValueError(f"expected ')' at {pos}")
        pos += 1
        if tokens[pos] != label:
            raise ValueError(f"mismatched close label at {pos}")
        pos += 1
        return (label, children)

    tree = read()
    if pos != len(tokens):
        raise ValueError("trailing tokens")
    return tree


def tree_labels(ast):
    """The (label, children) shape of a parse tree, for oracle comparison."""
    return (_label(ast), [tree_labels(c) for c in ast.children])


def xsbt(ast):
    """Compressed XML-like traversal over the included node kinds."""
    out = []

    def walk(node):
        kids = [c for c in node.children if c.kind not in XSBT_EXCLUDED]
        if not kids:
            out.append(f"<{node.kind}/>")
            return
        out.append(f"<{node.kind}>")
        for child in kids:
            walk(child)
        out.append(f"</{node.kind}>")

    if ast.kind in XSBT_EXCLUDED:
        return out
    walk(ast)
    return out


def xsbt_text(ast):
    """X-SBT serialized as a single space-joined line (dataset format)."""
    return " ".join(xsbt(ast))


def check_well_nested(tokens):
    """Stack-scan that every <k> has a matching </k>; raises on violation."""
    stack = []
    for tok in tokens:
        if tok.startswith("</"):
            kind = tok[2:-1]
            if not stack or stack[-1] != kind:
                raise ValueError(f"unbalanced close tag {tok}")
            stack.pop()
        elif tok.endswith("/>"):
            continue
        elif tok.startswith("<"):
            stack.append(tok[1:-1])
        else:
            raise ValueError(f"not a tag: {tok}")
    if stack:
        raise ValueError(f"unclosed tags: {stack}")
