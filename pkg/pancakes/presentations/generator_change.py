from pancakes.group_core.context import GroupContext, GroupType
from pancakes.group_core.symbols import GeneratorSymbol, SymbolFamily, r, rb2, s, s0p
from pancakes.group_core.words import Word
from pancakes.presentations.presentation import PresentationFamily
from pancakes.utils.utils import int_range


def coxeter_in_pancake(g: GeneratorSymbol, ctx: GroupContext) -> Word:
    g.check_context(ctx)
    if g.family == SymbolFamily.S0:
        symbols = (r(1),)
    elif g.family == SymbolFamily.S0_PRIME:
        symbols = (rb2(),)
    elif g.family == SymbolFamily.S:
        k = g.index + 1
        if ctx.group_type == GroupType.TYPE_B:
            symbols = (r(k), r(1), r(2), r(1), r(k))
        elif k == 2:
            symbols = (r(2),)
        else:
            symbols = (r(k), r(2), r(k))
    else:
        raise ValueError(f"{g.token} is not a coxeter generator")
    return Word.of(ctx, symbols)


def pancake_in_coxeter(g: GeneratorSymbol, ctx: GroupContext) -> Word:
    g.check_context(ctx)
    if g.family == SymbolFamily.RBAR2:
        return Word.of(ctx, (s0p(),))
    if g.family != SymbolFamily.R:
        raise ValueError(f"{g.token} is not a prefix reversal")
    # descending runs s_j ... s_low for j = low .. k-1, with s0 in type B
    low = 0 if ctx.group_type == GroupType.TYPE_B else 1
    symbols = []
    for top in int_range(low, g.index - 1):
        symbols.extend(s(i) for i in range(top, low - 1, -1))
    return Word.of(ctx, symbols)


def translate(w: Word, target) -> Word:
    """Replace every generator of the other family by its expression in ``target``'s generators."""
    target = PresentationFamily(target)
    ctx = w.context
    symbols = []
    for symbol in w.symbols:
        if symbol.is_pancake == (target == PresentationFamily.PANCAKE):
            symbols.append(symbol)
        elif target == PresentationFamily.PANCAKE:
            symbols.extend(coxeter_in_pancake(symbol, ctx).symbols)
        else:
            symbols.extend(pancake_in_coxeter(symbol, ctx).symbols)
    return Word.of(ctx, symbols)
