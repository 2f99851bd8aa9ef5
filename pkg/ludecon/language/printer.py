"""
Pretty printer for ludeme trees.

The output reparses to a tree equal to the input. Short expressions, and
expressions whose children are all literals, stay on one line; longer ones put
each child on its own indented line, the way the `.lud` corpus is laid out.
"""
from decimal import Decimal

from .nodes import LudemeNode, NodeKind


def format_number(value) -> str:
    if isinstance(value, bool):
        value = int(value)
    if isinstance(value, int):
        return str(value)
    text = repr(float(value))
    if "e" in text or "E" in text:
        # The lexer has no exponent syntax; every digit of the shortest repr is kept.
        text = format(Decimal(text), "f")
        if "." not in text:
            text += ".0"
    return text


def _flat(node: LudemeNode) -> str:
    kind = node.kind
    if kind is NodeKind.SYMBOL:
        return str(node.value)
    if kind is NodeKind.STRING:
        return f'"{node.value}"'
    if kind is NodeKind.NUMBER:
        return format_number(node.value)
    inner = " ".join(_flat(child) for child in node.children)
    if kind is NodeKind.SET:
        return "{" + inner + "}"
    return f"({node.head} {inner})" if inner else f"({node.head})"


def print_ludeme(node: LudemeNode, indent: int = 4, width: int = 80) -> str:
    """
    Render a node as description text.

    Args:
        node: any ludeme node.
        indent: spaces per nesting level.
        width: line width under which a compound node is kept on one line.

    Returns:
        str: text such that `parse(tokenize(text)) == node`.
    """

    def render(current: LudemeNode, depth: int) -> str:
        flat = _flat(current)
        if (
            current.is_literal
            or not current.children
            or all(child.is_literal for child in current.children)
            or depth * indent + len(flat) <= width
        ):
            return flat
        pad = " " * (indent * (depth + 1))
        opener = "{" if current.is_set else f"({current.head}"
        closer = "}" if current.is_set else ")"
        lines = [opener]
        lines.extend(pad + render(child, depth + 1) for child in current.children)
        lines.append(" " * (indent * depth) + closer)
        return "\n".join(lines)

    return render(node, 0)
