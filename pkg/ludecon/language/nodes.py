"""
Ludeme tree nodes.

The tree is constructor-agnostic: any head symbol is accepted, deciding what a
constructor means is the compiler's job. Node equality ignores source spans so
that trees parsed from differently formatted texts compare equal.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional, Tuple, Union

from .tokens import SourceSpan


class NodeKind(Enum):
    CONSTRUCTOR = "Constructor"
    SET = "Set"
    SYMBOL = "SymbolLit"
    STRING = "StringLit"
    NUMBER = "NumberLit"


LITERAL_KINDS = frozenset({NodeKind.SYMBOL, NodeKind.STRING, NodeKind.NUMBER})


@dataclass(frozen=True)
class LudemeNode:
    """
    A node of a parsed description.

    Attributes:
        kind: node kind.
        head: constructor name (Constructor only, else None).
        children: ordered children (Constructor and Set only, else empty).
        value: literal payload (symbol name, unquoted string, int or float).
        span: source span; not part of equality.
    """

    kind: NodeKind
    head: Optional[str] = None
    children: Tuple["LudemeNode", ...] = ()
    value: Union[str, int, float, None] = None
    span: Optional[SourceSpan] = field(default=None, compare=False, repr=False)

    @property
    def is_constructor(self) -> bool:
        return self.kind is NodeKind.CONSTRUCTOR

    @property
    def is_set(self) -> bool:
        return self.kind is NodeKind.SET

    @property
    def is_literal(self) -> bool:
        return self.kind in LITERAL_KINDS

    def is_symbol(self, name: Optional[str] = None) -> bool:
        return self.kind is NodeKind.SYMBOL and (name is None or self.value == name)

    def is_head(self, head: str, qualifier: Optional[str] = None) -> bool:
        """True for `(head ...)`, or `(head qualifier ...)` when a qualifier is given."""
        if self.kind is not NodeKind.CONSTRUCTOR or self.head != head:
            return False
        return qualifier is None or self.qualifier == qualifier

    @property
    def qualifier(self) -> Optional[str]:
        """First child when it is a symbol, as in `(move Slide ...)` or `(is Connected ...)`."""
        if self.children and self.children[0].kind is NodeKind.SYMBOL:
            return self.children[0].value
        return None

    @property
    def label(self) -> str:
        """Head plus qualifier, the name used in reports: `move Slide`, `is Checkmate`."""
        if self.kind is not NodeKind.CONSTRUCTOR:
            return str(self.value) if self.is_literal else "{...}"
        qualifier = self.qualifier
        return f"{self.head} {qualifier}" if qualifier else self.head

    def walk(self) -> Iterator["LudemeNode"]:
        """Pre-order traversal, the node itself first."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def constructors(self, head: Optional[str] = None) -> Iterator["LudemeNode"]:
        for node in self.walk():
            if node.kind is NodeKind.CONSTRUCTOR and (head is None or node.head == head):
                yield node

    def contains(self, head: str, qualifier: Optional[str] = None) -> bool:
        return any(node.is_head(head, qualifier) for node in self.walk())

    def child(self, head: str) -> Optional["LudemeNode"]:
        """First direct child constructor with the given head."""
        for node in self.children:
            if node.is_head(head):
                return node
        return None

    def literals(self) -> Tuple[Union[str, int, float], ...]:
        return tuple(node.value for node in self.children if node.is_literal)

    # Convenience constructors, mostly for tests and programmatic trees.

    @classmethod
    def constructor(cls, head: str, *children: "LudemeNode", span=None) -> "LudemeNode":
        return cls(NodeKind.CONSTRUCTOR, head=head, children=tuple(children), span=span)

    @classmethod
    def set_of(cls, *children: "LudemeNode", span=None) -> "LudemeNode":
        return cls(NodeKind.SET, children=tuple(children), span=span)

    @classmethod
    def symbol(cls, name: str, span=None) -> "LudemeNode":
        return cls(NodeKind.SYMBOL, value=name, span=span)

    @classmethod
    def string(cls, text: str, span=None) -> "LudemeNode":
        return cls(NodeKind.STRING, value=text, span=span)

    @classmethod
    def number(cls, value: Union[int, float], span=None) -> "LudemeNode":
        return cls(NodeKind.NUMBER, value=value, span=span)
