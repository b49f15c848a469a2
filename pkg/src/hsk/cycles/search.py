"""Bounded depth-first search for a cycle of prescribed length through an edge."""

from __future__ import annotations

from typing import Callable, Iterable

from ..errors import ConstructionError

DEFAULT_BUDGET = 200_000


def search_cycle(
    neighbors: Callable[[int], Iterable[int]],
    u: int,
    v: int,
    length: int,
    budget: int = DEFAULT_BUDGET,
) -> list[int]:
    """Simple cycle u, v, ..., of ``length`` vertices using edge uv.

    Raises ConstructionError when nothing is found within ``budget`` expansions.
    """
    path = [u, v]
    on_path = {u, v}
    expansions = 0
    stack = [iter(neighbors(v))]
    while stack:
        expansions += 1
        if expansions > budget:
            break
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            on_path.discard(path.pop())
            continue
        if len(path) == length:
            if nxt == u:
                return list(path)
            continue
        if nxt in on_path:
            continue
        path.append(nxt)
        on_path.add(nxt)
        stack.append(iter(neighbors(nxt)))
    raise ConstructionError(f"no cycle of length {length} through ({u}, {v}) found within budget")
