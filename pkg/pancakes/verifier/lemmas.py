from typing import Iterator, NamedTuple

from pancakes.group_core.context import GroupContext, GroupType
from pancakes.group_core.symbols import r, rb2, s, s0p
from pancakes.group_core.words import Word
from pancakes.utils.utils import int_range


class LemmaInstance(NamedTuple):
    name: str
    indices: tuple[int, ...]
    left: Word
    right: Word


def lemma_instances(ctx: GroupContext) -> Iterator[LemmaInstance]:
    ctx.require_presentation_degree()
    if ctx.group_type == GroupType.TYPE_A:
        yield from _type_a(ctx)
    elif ctx.group_type == GroupType.TYPE_B:
        yield from _type_b(ctx)
    else:
        yield from _type_d(ctx)


def _w(ctx, symbols) -> Word:
    return Word.of(ctx, symbols)


def _ascending(top, low=1):
    return [s(i) for i in int_range(low, top)]


def _descending_runs(k, low):
    # s_low (s_{low+1} s_low) ... (s_{k-1} ... s_low)
    symbols = []
    for top in int_range(low, k - 1):
        symbols.extend(s(i) for i in range(top, low - 1, -1))
    return symbols


def _type_a(ctx):
    n = ctx.degree
    for k in int_range(2, n):
        yield LemmaInstance("rewrite", (k,), _w(ctx, [r(k)]), _w(ctx, _descending_runs(k, 1)))
    for k in int_range(2, n - 1):
        yield LemmaInstance("oneapart", (k,), _w(ctx, [r(k + 1), r(k)]), _w(ctx, _ascending(k)))
    for k in int_range(2, n - 2):
        yield LemmaInstance("twoapart", (k,), _w(ctx, [r(k + 2), r(k)]),
                            _w(ctx, _ascending(k + 1) + _ascending(k)))
    for k in int_range(3, n):
        yield LemmaInstance("ktwok", (k,), _w(ctx, [r(k), r(3), r(k)]),
                            _w(ctx, [s(k - 2), s(k - 1), s(k - 2)]))
    # r1 does not exist in type A, so the commuting range starts at i = 2
    for j in int_range(2, n - 1):
        for i in int_range(2, j - 1):
            yield LemmaInstance("sjri", (j, i), _w(ctx, [s(j), r(i)]), _w(ctx, [r(i), s(j)]))
    yield from _swap_through_flip(ctx, "skrl")
    yield from _swap_as_r2_conjugate(ctx)


def _type_b(ctx):
    n = ctx.degree
    yield LemmaInstance("generator-change-s0", (), _w(ctx, [s(0)]), _w(ctx, [r(1)]))
    for i in int_range(2, n):
        yield LemmaInstance("generator-change", (i,), _w(ctx, [s(i - 1)]),
                            _w(ctx, [r(i), r(1), r(2), r(1), r(i)]))
    yield LemmaInstance("r2r3r1-cubed", (), _w(ctx, [r(2), r(3), r(1)] * 3), _w(ctx, []))
    for k in int_range(1, n):
        yield LemmaInstance("rk-expansion", (k,), _w(ctx, [r(k)]), _w(ctx, _descending_runs(k, 0)))
    for i in int_range(1, n - 2):
        for j in int_range(i + 2, n - 1):
            yield LemmaInstance("sjrib", (i, j), _w(ctx, [s(j), r(i)]), _w(ctx, [r(i), s(j)]))
    yield from _swap_through_flip(ctx, "skrlb")


def _type_d(ctx):
    yield LemmaInstance("generator-change-s0p", (), _w(ctx, [s0p()]), _w(ctx, [rb2()]))
    yield from _swap_as_r2_conjugate(ctx)


def _swap_through_flip(ctx, name):
    for ell in int_range(2, ctx.degree):
        for k in int_range(1, ell - 1):
            yield LemmaInstance(name, (ell, k), _w(ctx, [s(k), r(ell)]), _w(ctx, [r(ell), s(ell - k)]))


def _swap_as_r2_conjugate(ctx):
    for i in int_range(2, ctx.degree):
        yield LemmaInstance("generator-change", (i,), _w(ctx, [s(i - 1)]), _w(ctx, [r(i), r(2), r(i)]))
