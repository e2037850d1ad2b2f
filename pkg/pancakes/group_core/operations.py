"""Words act left to right, so ``eval_word(u * v) == compose(eval_word(u), eval_word(v))``."""
from typing import Callable

from pancakes.group_core.context import GroupContext, GroupType
from pancakes.group_core.permutation import SignedPermutation, DegreeMismatch, compose, inverse, negative_count
from pancakes.group_core.symbols import GeneratorSymbol, SymbolFamily
from pancakes.group_core.words import Word

Flip = Callable[[tuple], tuple]

__all__ = ["identity", "eval_symbol", "apply_flip", "eval_word", "compose", "inverse", "negative_count",
           "flip_function"]


def identity(ctx: GroupContext) -> SignedPermutation:
    return SignedPermutation.identity(ctx.degree)


def flip_function(g: GeneratorSymbol, ctx: GroupContext) -> Flip:
    """Window-to-window function performing ``g``'s flip; used directly by the engines."""
    g.check_context(ctx)
    if g.family == SymbolFamily.R:
        k = g.index
        if ctx.group_type == GroupType.TYPE_B:
            return lambda w: tuple(-v for v in w[k - 1::-1]) + w[k:]
        return lambda w: w[k - 1::-1] + w[k:]
    if g.family == SymbolFamily.S:
        i = g.index
        return lambda w: w[:i - 1] + (w[i], w[i - 1]) + w[i + 1:]
    if g.family == SymbolFamily.S0:
        return lambda w: (-w[0],) + w[1:]
    # RBar2 and S0Prime: swap the first two entries and negate both
    return lambda w: (-w[1], -w[0]) + w[2:]


def apply_flip(g: GeneratorSymbol, p: SignedPermutation, ctx: GroupContext) -> SignedPermutation:
    if len(p) != ctx.degree:
        raise DegreeMismatch(f"arrangement of degree {len(p)} used in context {ctx}")
    return SignedPermutation.trusted(flip_function(g, ctx)(tuple(p)))


def eval_symbol(g: GeneratorSymbol, ctx: GroupContext) -> SignedPermutation:
    return apply_flip(g, identity(ctx), ctx)


def eval_word(w: Word) -> SignedPermutation:
    ctx = w.context
    window = tuple(identity(ctx))
    for symbol in w.symbols:
        window = flip_function(symbol, ctx)(window)
    return SignedPermutation.trusted(window)
