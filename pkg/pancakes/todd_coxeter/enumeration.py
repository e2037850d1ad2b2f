import logging
from typing import Iterable

from pancakes.group_core.words import Word
from pancakes.presentations.presentation import Presentation
from pancakes.todd_coxeter.coset_table import CosetTable, CosetStatus
from pancakes.utils.errors import Overflow
from pancakes.utils.log_utils import log_with_context, group_context

logger = logging.getLogger(__name__)

PROGRESS_EVERY = 100000


class SubgroupWordError(ValueError):
    pass


def enumerate_cosets(p: Presentation, subgroup_words: Iterable[Word] = (), max_cosets: int = 5000000) -> CosetTable:
    """
    Relator-based (HLT) enumeration of the cosets of ``<subgroup_words>`` in the group ``p`` presents.

    The returned table is ``Closed`` and compressed, or ``Overflowed`` when more than
    ``max_cosets`` rows would be needed; an overflow is inconclusive, not a refutation.
    """
    subgroup_words = list(subgroup_words)
    _check_subgroup_words(p, subgroup_words)
    table = CosetTable(p.generators, max_cosets)
    relators = [table.columns_of(entry.word) for entry in p.relators if entry.word.symbols]
    subgroup = [table.columns_of(w) for w in subgroup_words]
    log_context = group_context(p.context, p.family)

    try:
        for w in subgroup:
            table.scan_and_fill(0, w)
        alpha = 0
        next_report = PROGRESS_EVERY
        while alpha < len(table.table):
            if table.dead_count > max(table.live_count, 1024):
                renumber = table.compress()
                alpha = _first_live_at_or_after(renumber, alpha)
                continue
            if table.is_live(alpha):
                for w in relators:
                    table.scan_and_fill(alpha, w)
                    if not table.is_live(alpha):
                        break
                if table.is_live(alpha):
                    for x, d in enumerate(table.table[alpha]):
                        if d is None:
                            table.define(alpha, x)
            if table.defined_total >= next_report:
                next_report += PROGRESS_EVERY
                logger.debug("%s: %d cosets defined, %d live", p.context, table.defined_total, table.live_count)
            alpha += 1
    except Overflow:
        table.status = CosetStatus.OVERFLOWED
        log_with_context(f"coset enumeration overflowed at {max_cosets} cosets", context=log_context,
                         log_level='warning')
        return table

    table.compress()
    table.status = CosetStatus.CLOSED
    log_with_context(f"coset enumeration closed with {table.live_count} cosets "
                     f"({table.defined_total} defined, {table.coincidences} coincidences)", context=log_context)
    return table


def validate_table(table: CosetTable, p: Presentation) -> bool:
    """Every entry defined and symmetric, and every relator traces a closed loop from every live coset."""
    live = table.live_cosets()
    for c in live:
        for x, d in enumerate(table.table[c]):
            if d is None or not table.is_live(d) or table.table[d][x] != c:
                return False
    relators = [table.columns_of(entry.word) for entry in p.relators]
    return all(table.trace(c, w) == c for c in live for w in relators)


def _check_subgroup_words(p: Presentation, subgroup_words: list[Word]):
    allowed = set(p.generators)
    for w in subgroup_words:
        if w.context != p.context:
            raise SubgroupWordError(f"subgroup word {w} belongs to {w.context}, not {p.context}")
        foreign = sorted({g.token for g in w.symbols if g not in allowed})
        if foreign:
            raise SubgroupWordError(f"subgroup word {w} uses {foreign}, which are not generators of {p}")


def _first_live_at_or_after(renumber, alpha):
    for old in range(alpha, len(renumber)):
        if renumber[old] >= 0:
            return renumber[old]
    return len(renumber)
