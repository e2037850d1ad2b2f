import logging
from collections import deque
from typing import Optional

from pancakes.presentations.presentation import Presentation
from pancakes.rewriting.ordering import SymbolOrder, shortlex_key
from pancakes.rewriting.rewrite_system import RewriteSystem, critical_pairs
from pancakes.utils.log_utils import log_with_context, group_context

logger = logging.getLogger(__name__)

PROGRESS_EVERY = 1000


def kb_complete(p: Presentation, order: Optional[SymbolOrder] = None, max_rules: int = 20000,
                max_len: int = 64) -> RewriteSystem:
    """
    Shortlex Knuth-Bendix completion of ``p``.

    Seeds the system with every relator rewriting to the empty word and with ``gg -> e`` for
    every generator, then resolves overlaps in first-in first-out order.  Equations whose
    larger side is longer than ``max_len`` are dropped and more than ``max_rules`` rules
    stops the run; either way the result is flagged ``rule_cap_hit`` and is not confluent.
    """
    if max_rules < 1 or max_len < 1:
        raise ValueError(f"max_rules and max_len must be positive, got {max_rules} and {max_len}")
    order = order or SymbolOrder.canonical(p)
    rs = RewriteSystem(order)
    log_context = group_context(p.context, p.family)

    equations = deque((order.encode(entry.word), "") for entry in p.relators)
    equations.extend((letter * 2, "") for letter in order.letters())
    next_report = PROGRESS_EVERY
    while equations:
        left, right = equations.popleft()
        left, right = rs.reduce_encoded(left), rs.reduce_encoded(right)
        if left == right:
            continue
        lhs, rhs = (left, right) if shortlex_key(left) > shortlex_key(right) else (right, left)
        if len(lhs) > max_len:
            rs.rule_cap_hit = True
            continue
        _add_and_interreduce(rs, lhs, rhs, equations)
        if len(rs) > max_rules:
            rs.rule_cap_hit = True
            log_with_context(f"stopped at {len(rs)} rules (limit {max_rules})", context=log_context,
                             log_level='warning')
            return rs
        for other_lhs, other_rhs in rs.items():
            equations.extend(critical_pairs(lhs, rhs, other_lhs, other_rhs))
            if other_lhs != lhs:
                equations.extend(critical_pairs(other_lhs, other_rhs, lhs, rhs))
        if len(rs) >= next_report:
            next_report += PROGRESS_EVERY
            logger.debug("%s: %d rules, %d pending equations", p.context, len(rs), len(equations))

    rs.confluent = not rs.rule_cap_hit
    log_with_context(f"completion finished with {len(rs)} rules, confluent: {rs.confluent}", context=log_context)
    return rs


def _add_and_interreduce(rs: RewriteSystem, lhs: str, rhs: str, equations: deque):
    for other_lhs, _ in rs.items():
        if lhs in other_lhs:
            equations.append((other_lhs, rs.remove_rule(other_lhs)))
    rs.add_rule(lhs, rhs)
    for other_lhs, other_rhs in rs.items():
        if other_lhs != lhs and lhs in other_rhs:
            rs.set_rhs(other_lhs, rs.reduce_encoded(other_rhs))
