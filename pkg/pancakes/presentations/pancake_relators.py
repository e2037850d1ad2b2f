"""Prefix-reversal presentations of types A, B and D, stated for degree n > 3."""

from pancakes.group_core.context import GroupContext, GroupType
from pancakes.group_core.symbols import GeneratorSymbol, r, rb2
from pancakes.group_core.words import Word
from pancakes.presentations.presentation import Presentation, PresentationFamily, RelatorEntry
from pancakes.utils.log_utils import log_with_context, group_context
from pancakes.utils.utils import int_range



def pancake_generators(ctx: GroupContext) -> tuple[GeneratorSymbol, ...]:
    n = ctx.degree
    if ctx.group_type == GroupType.TYPE_A:
        return tuple(r(k) for k in int_range(2, n))
    if ctx.group_type == GroupType.TYPE_B:
        return tuple(r(k) for k in int_range(1, n))
    return (rb2(),) + tuple(r(k) for k in int_range(2, n))


def pancake_presentation(ctx: GroupContext) -> Presentation:
    ctx.require_presentation_degree()
    builder = {
        GroupType.TYPE_A: _type_a_relators,
        GroupType.TYPE_B: _type_b_relators,
        GroupType.TYPE_D: _type_d_relators,
    }[ctx.group_type]
    relators = tuple(builder(ctx))
    log_with_context(f"built pancake presentation with {len(relators)} relators",
                     context=group_context(ctx, PresentationFamily.PANCAKE),
                     log_level='debug')
    return Presentation(context=ctx, family=PresentationFamily.PANCAKE,
                        generators=pancake_generators(ctx), relators=relators)


def _flips(ctx, *parts, power=1) -> Word:
    """Word of flips; integers are r_k, the string ``'b'`` is rb2."""
    symbols = tuple(rb2() if part == 'b' else r(part) for part in parts)
    return Word.of(ctx, symbols).power(power)


def _entry(label, indices, relator) -> RelatorEntry:
    return RelatorEntry(label=label, indices=tuple(indices), word=relator)


def _swap_chain_relator(ctx, label, k):
    # r_k r_{k-1} r_{k+1} r2 r_{k+1} r_k r_{k+1}
    return _entry(label, (k,), _flips(ctx, k, k - 1, k + 1, 2, k + 1, k, k + 1))


def _braid_chain_relator(ctx, label, k):
    # (r_k r_{k-1})^2 r_{k+1} r3 r_{k+1} r_{k-1} r_{k+1}
    return _entry(label, (k,), _flips(ctx, k, k - 1, k, k - 1, k + 1, 3, k + 1, k - 1, k + 1))


def _conjugate_swap_relator(ctx, label, ell, k):
    # r_l r_{l-k+2} r2 r_{l-k+2} r_l r_k r2 r_k
    inner = ell - k + 2
    return _entry(label, (ell, k), _flips(ctx, ell, inner, 2, inner, ell, k, 2, k))


def _type_a_relators(ctx):
    n = ctx.degree
    for k in int_range(2, n):
        yield _entry("R1", (k,), _flips(ctx, k, power=2))
    yield _entry("R2", (), _flips(ctx, 2, 3, power=3))
    for k in int_range(4, n):
        yield _entry("R3", (k,), _flips(ctx, 2, k, power=4))
    for ell in int_range(4, n):
        for k in int_range(3, ell - 1):
            yield _conjugate_swap_relator(ctx, "R4", ell, k)
    for k in int_range(3, n - 1):
        yield _swap_chain_relator(ctx, "R5", k)
    for k in int_range(3, n - 1):
        yield _braid_chain_relator(ctx, "R6", k)


def _type_b_relators(ctx):
    n = ctx.degree
    for k in int_range(1, n):
        yield _entry("Rb1", (k,), _flips(ctx, k, power=2))
    yield _entry("Rb2", (), _flips(ctx, 2, 3, power=6))
    for k in int_range(2, n):
        yield _entry("Rb3", (k,), _flips(ctx, 1, k, power=4))
    for k in int_range(4, n):
        yield _entry("Rb4", (k,), _flips(ctx, 1, 2, 1, k, power=4))
    for k in int_range(3, n):
        yield _entry("Rb5", (k,), _flips(ctx, k, 1, k, 2, power=2))
    for k in int_range(2, n - 1):
        yield _entry("Rb6", (k,), _flips(ctx, k, 1, 2, 1, k, k + 1, 2, 3, 2, 1, k + 1))
    for k in int_range(2, n - 1):
        yield _entry("Rb7", (k,), _flips(ctx, k + 1, 1, 2, 1, k + 1, k - 1, k, k + 1, k))
    for k in int_range(2, n - 2):
        for ell in int_range(k + 2, n):
            inner = ell - k + 2
            yield _entry("Rb8", (k, ell), _flips(ctx, k, 1, 2, 1, k, ell, inner, 1, 2, 1, inner, ell))


def _type_d_relators(ctx):
    n = ctx.degree
    yield _entry("Rd1", (), _flips(ctx, 'b', power=2))
    for k in int_range(2, n):
        yield _entry("Rd2", (k,), _flips(ctx, k, power=2))
    yield _entry("Rd3", (), _flips(ctx, 'b', 2, power=2))
    yield _entry("Rd4", (), _flips(ctx, 2, 3, power=3))
    for k in int_range(4, n):
        yield _entry("Rd5", (k,), _flips(ctx, 2, k, power=4))
    yield _entry("Rd6", (), _flips(ctx, 'b', 3, 2, 3, power=3))
    for k in int_range(4, n):
        yield _entry("Rd7", (k,), _flips(ctx, 'b', k, 2, k, power=2))
    for k in int_range(3, n - 1):
        yield _swap_chain_relator(ctx, "Rd8", k)
    for k in int_range(3, n - 1):
        yield _braid_chain_relator(ctx, "Rd9", k)
    for ell in int_range(4, n):
        for k in int_range(3, ell - 2):
            yield _conjugate_swap_relator(ctx, "Rd10", ell, k)
