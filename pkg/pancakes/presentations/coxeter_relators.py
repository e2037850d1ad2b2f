
from pancakes.group_core.context import GroupContext, GroupType
from pancakes.group_core.symbols import GeneratorSymbol, s, s0p
from pancakes.group_core.words import Word
from pancakes.presentations.presentation import Presentation, PresentationFamily, RelatorEntry
from pancakes.utils.log_utils import log_with_context, group_context
from pancakes.utils.utils import int_range


MINIMUM_DEGREE = {
    GroupType.TYPE_A: 2,
    GroupType.TYPE_B: 2,
    GroupType.TYPE_D: 4,
}


def coxeter_generators(ctx: GroupContext) -> tuple[GeneratorSymbol, ...]:
    n = ctx.degree
    swaps = tuple(s(i) for i in int_range(1, n - 1))
    if ctx.group_type == GroupType.TYPE_A:
        return swaps
    if ctx.group_type == GroupType.TYPE_B:
        return (s(0),) + swaps
    return (s0p(),) + swaps


def coxeter_presentation(ctx: GroupContext) -> Presentation:
    """Standard Coxeter presentation over the adjacent transpositions (and s0 or s0p)."""
    ctx.require_degree(MINIMUM_DEGREE[ctx.group_type])
    builder = {
        GroupType.TYPE_A: _type_a_relators,
        GroupType.TYPE_B: _type_b_relators,
        GroupType.TYPE_D: _type_d_relators,
    }[ctx.group_type]
    relators = tuple(builder(ctx))
    log_with_context(f"built coxeter presentation with {len(relators)} relators",
                     context=group_context(ctx, PresentationFamily.COXETER),
                     log_level='debug')
    return Presentation(context=ctx, family=PresentationFamily.COXETER,
                        generators=coxeter_generators(ctx), relators=relators)


def _swaps(ctx, *parts, power=1) -> Word:
    """Word of swaps; integers are s_i (s0 for 0), the string ``'p'`` is s0p."""
    symbols = tuple(s0p() if part == 'p' else s(part) for part in parts)
    return Word.of(ctx, symbols).power(power)


def _entry(label, indices, relator) -> RelatorEntry:
    return RelatorEntry(label=label, indices=tuple(indices), word=relator)


def _type_a_relators(ctx):
    n = ctx.degree
    for i in int_range(1, n - 1):
        yield _entry("Ca1", (i,), _swaps(ctx, i, power=2))
    for i in int_range(1, n - 2):
        yield _entry("Ca2", (i,), _swaps(ctx, i, i + 1, power=3))
    for i in int_range(1, n - 3):
        for j in int_range(i + 2, n - 1):
            yield _entry("Ca3", (i, j), _swaps(ctx, i, j, power=2))


def _type_b_relators(ctx):
    n = ctx.degree
    for i in int_range(0, n - 1):
        yield _entry("Cb1", (i,), _swaps(ctx, i, power=2))
    yield _entry("Cb2", (), _swaps(ctx, 0, 1, power=4))
    for i in int_range(1, n - 2):
        yield _entry("Cb3", (i,), _swaps(ctx, i, i + 1, power=3))
    for i in int_range(0, n - 3):
        for j in int_range(i + 2, n - 1):
            yield _entry("Cb4", (i, j), _swaps(ctx, i, j, power=2))


def _type_d_relators(ctx):
    n = ctx.degree
    for i in int_range(1, n - 1):
        yield _entry("Cd1", (i,), _swaps(ctx, i, power=2))
    yield _entry("Cd2", (), _swaps(ctx, 'p', power=2))
    yield _entry("Cd3", (), _swaps(ctx, 'p', 2, power=3))
    for i in int_range(1, n - 2):
        yield _entry("Cd4", (i,), _swaps(ctx, i, i + 1, power=3))
    for i in [1, *int_range(3, n - 1)]:
        yield _entry("Cd5", (i,), _swaps(ctx, 'p', i, power=2))
    for i in int_range(1, n - 1):
        for j in int_range(i + 2, n - 1):
            yield _entry("Cd6", (i, j), _swaps(ctx, i, j, power=2))
