"""Coset table over involutions, kept symmetric: ``table[c][x] == d`` implies ``table[d][x] == c``."""
from collections import deque
from enum import Enum
from typing import Optional

from pancakes.group_core.symbols import GeneratorSymbol
from pancakes.group_core.words import Word
from pancakes.utils.errors import Overflow


class CosetStatus(str, Enum):
    IN_PROGRESS = "InProgress"
    CLOSED = "Closed"
    OVERFLOWED = "Overflowed"


class CosetTable:

    def __init__(self, generators: tuple[GeneratorSymbol, ...], max_cosets: int):
        if max_cosets < 1:
            raise ValueError(f"max_cosets must be at least 1, got {max_cosets}")
        self.generators = generators
        self.column = {g: x for x, g in enumerate(generators)}
        self.max_cosets = max_cosets
        self.table: list[list[Optional[int]]] = [[None] * len(generators)]
        self.parent: list[int] = [0]
        self.status = CosetStatus.IN_PROGRESS
        self.defined_total = 1
        self.coincidences = 0
        self.live_count = 1

    @property
    def dead_count(self) -> int:
        return len(self.table) - self.live_count

    def is_live(self, coset: int) -> bool:
        return self.parent[coset] == coset

    def live_cosets(self) -> list[int]:
        return [c for c in range(len(self.table)) if self.parent[c] == c]

    def columns_of(self, w: Word) -> tuple[int, ...]:
        return tuple(self.column[g] for g in w.symbols)

    def define(self, alpha: int, x: int):
        if len(self.table) >= self.max_cosets:
            raise Overflow(self.max_cosets, "cosets")
        beta = len(self.table)
        self.table.append([None] * len(self.generators))
        self.parent.append(beta)
        self.table[alpha][x] = beta
        self.table[beta][x] = alpha
        self.defined_total += 1
        self.live_count += 1

    def rep(self, k: int) -> int:
        root = k
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[k] != root:
            self.parent[k], k = root, self.parent[k]
        return root

    def _merge(self, k: int, lam: int, queue: deque):
        phi, psi = self.rep(k), self.rep(lam)
        if phi != psi:
            keep, drop = min(phi, psi), max(phi, psi)
            self.parent[drop] = keep
            self.live_count -= 1
            self.coincidences += 1
            queue.append(drop)

    def coincidence(self, alpha: int, beta: int):
        table = self.table
        queue = deque()
        self._merge(alpha, beta, queue)
        while queue:
            gamma = queue.popleft()
            for x in range(len(self.generators)):
                delta = table[gamma][x]
                if delta is None:
                    continue
                table[delta][x] = None
                mu, nu = self.rep(gamma), self.rep(delta)
                if table[mu][x] is not None:
                    self._merge(nu, table[mu][x], queue)
                elif table[nu][x] is not None:
                    self._merge(mu, table[nu][x], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x] = mu

    def scan_and_fill(self, alpha: int, word: tuple[int, ...]):
        """Trace ``word`` from ``alpha`` in both directions, defining cosets until the trace closes."""
        table = self.table
        f = b = alpha
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][word[j]] is not None:
                b = table[b][word[j]]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                table[f][word[i]] = b
                table[b][word[i]] = f
                return
            self.define(f, word[i])

    def trace(self, coset: int, word: tuple[int, ...]) -> Optional[int]:
        for x in word:
            coset = self.table[coset][x]
            if coset is None:
                return None
        return coset

    def compress(self) -> list[int]:
        """
        Drop dead rows and renumber live cosets in increasing order.

        Returns the old-to-new id map (``-1`` for dead cosets).  Only valid while no
        coincidence is being processed.
        """
        renumber = [-1] * len(self.table)
        live = self.live_cosets()
        for new, old in enumerate(live):
            renumber[old] = new
        self.table = [[None if d is None else renumber[self.rep(d)] for d in self.table[old]] for old in live]
        self.parent = list(range(len(live)))
        return renumber

    def standardize(self):
        """Renumber a compressed, closed table so cosets first appear in row-then-column order."""
        order = [0]
        position = {0: 0}
        for coset in order:
            for d in self.table[coset]:
                if d is not None and d not in position:
                    position[d] = len(order)
                    order.append(d)
        self.table = [[None if d is None else position[d] for d in self.table[old]] for old in order]
        self.parent = list(range(len(order)))

    def coset_representatives(self) -> list[tuple[GeneratorSymbol, ...]]:
        """Shortest generator sequence reaching each coset of a compressed table from coset 0."""
        reps: dict[int, tuple[GeneratorSymbol, ...]] = {0: ()}
        frontier = deque([0])
        while frontier:
            coset = frontier.popleft()
            for x, d in enumerate(self.table[coset]):
                if d is not None and d not in reps:
                    reps[d] = reps[coset] + (self.generators[x],)
                    frontier.append(d)
        return [reps.get(c, ()) for c in range(len(self.table))]

    def to_json_dict(self) -> dict:
        return {
            "status": self.status.value,
            "cosets": self.live_count,
            "defined_total": self.defined_total,
            "coincidences": self.coincidences,
        }

    def rows(self) -> dict:
        """Compressed table keyed by coset id, with generator tokens as columns."""
        return {c: {g.token: self.table[c][x] for x, g in enumerate(self.generators)} for c in self.live_cosets()}
