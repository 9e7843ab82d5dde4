"""The binary tree of first-occurrence end values.

Every parity vector ``p`` sits at node ``(p, first_occurrence_end(p), span(p))``.
Appending ``d`` halves the residue at the current level; appending ``l``
applies the odd step and climbs one level.  Nodes are computed on demand.
"""

from collections import deque
from dataclasses import dataclass

from .collatz import DOWN, LEFT, ParityVector, first_occurrence_end
from .mod3k import group_order, t0k, t1k


@dataclass(frozen=True)
class TreeNode:
    p: ParityVector
    x: int
    k: int

    def __str__(self):
        return f"({self.p}, {self.x}, {self.k})"


def root() -> TreeNode:
    return TreeNode(ParityVector(), 0, 0)


def right_child(n: TreeNode) -> TreeNode:
    return TreeNode(n.p + DOWN, t0k(n.x, n.k), n.k)


def left_child(n: TreeNode) -> TreeNode:
    return TreeNode(n.p + LEFT, t1k(n.x, n.k), n.k + 1)


def node_of(p: ParityVector) -> TreeNode:
    n = root()
    for a in p:
        n = right_child(n) if a == DOWN else left_child(n)
    return n


def kspan_equivalent(p1: ParityVector, p2: ParityVector) -> bool:
    return p1.span == p2.span and first_occurrence_end(p1) == first_occurrence_end(p2)


def extend_downs(p: ParityVector, n: int) -> ParityVector:
    """Append ``n`` full turns of the unit group (``n * group_order(span)`` downs)."""
    if p.span == 0:
        raise ValueError("extend_downs needs a parity vector with at least one odd step")
    return p + DOWN * (n * group_order(p.span))


def breadth_first(depth: int):
    """Yield ``(level, parent, node)`` for all nodes at most ``depth`` steps from the root."""
    queue = deque([(0, None, root())])
    while queue:
        level, parent, node = queue.popleft()
        yield level, parent, node
        if level < depth:
            queue.append((level + 1, node, left_child(node)))
            queue.append((level + 1, node, right_child(node)))


def render_text(depth: int):
    for _, _, node in breadth_first(depth):
        yield str(node)


def render_dot(depth: int):
    yield "digraph alpha_tree {"
    for _, parent, node in breadth_first(depth):
        name = f'"{node.p}"'
        yield f'  {name} [label="{node}"];'
        if parent is not None:
            style = "solid" if node.p.arrows[-1] == LEFT else "dashed"
            yield f'  "{parent.p}" -> {name} [style={style}];'
    yield "}"
