import logging
from typing import Iterable

from pancakes.group_core.context import GroupContext
from pancakes.group_core.operations import flip_function, identity
from pancakes.group_core.symbols import GeneratorSymbol
from pancakes.utils.errors import Overflow
from pancakes.utils.log_utils import log_with_context, group_context

logger = logging.getLogger(__name__)


class CayleyClosure:
    """Every element reachable from the identity, in breadth-first visit order."""

    def __init__(self, ctx: GroupContext, generators: tuple[GeneratorSymbol, ...]):
        self.context = ctx
        self.generators = generators
        self.visit_order: list[tuple] = []
        self.layers: list[int] = []
        self.edge_count = 0
        self._seen: set[tuple] = set()

    @property
    def elements(self) -> set[tuple]:
        return self._seen

    @property
    def order(self) -> int:
        return len(self.visit_order)

    @property
    def diameter(self) -> int:
        return len(self.layers) - 1

    def __contains__(self, element):
        return tuple(element) in self._seen

    def __len__(self):
        return self.order


def bfs_order(generators: Iterable[GeneratorSymbol], ctx: GroupContext, cap: int) -> CayleyClosure:
    """
    Breadth-first closure of the identity under right-application of ``generators``.

    Each layer is visited in lexicographic order of windows, so the visit order only depends
    on the generator set.  Raises ``Overflow`` as soon as more than ``cap`` elements are found.
    """
    if cap < 1:
        raise ValueError(f"cap must be at least 1, got {cap}")
    closure = CayleyClosure(ctx, tuple(generators))
    flips = [flip_function(g, ctx) for g in closure.generators]
    log_context = group_context(ctx)

    start = tuple(identity(ctx))
    frontier = [start]
    closure._seen.add(start)
    while frontier:
        closure.layers.append(len(frontier))
        closure.visit_order.extend(frontier)
        next_layer = []
        for element in frontier:
            for flip in flips:
                closure.edge_count += 1
                image = flip(element)
                if image in closure._seen:
                    continue
                if len(closure._seen) >= cap:
                    log_with_context(f"closure passed {cap} elements", context=log_context, log_level='warning')
                    raise Overflow(cap)
                closure._seen.add(image)
                next_layer.append(image)
        next_layer.sort()
        frontier = next_layer
        logger.debug("%s layer %d: %d new, %d total", ctx, len(closure.layers), len(frontier), len(closure._seen))
    return closure
