from pancakes.group_core.context import GroupContext, GroupType
from pancakes.presentations.coxeter_relators import coxeter_presentation
from pancakes.presentations.pancake_relators import pancake_presentation
from pancakes.presentations.presentation import Presentation, PresentationFamily


def build_presentation(ctx: GroupContext, family) -> Presentation:
    family = PresentationFamily(family)
    if family == PresentationFamily.PANCAKE:
        return pancake_presentation(ctx)
    return coxeter_presentation(ctx)


def relator_count(ctx: GroupContext, family) -> int:
    """Number of relators ``build_presentation(ctx, family)`` emits, from the index ranges alone."""
    family = PresentationFamily(family)
    n = ctx.degree
    pairs_below = (n - 3) * (n - 2) // 2
    if family == PresentationFamily.PANCAKE:
        ctx.require_presentation_degree()
        if ctx.group_type == GroupType.TYPE_A:
            return (n - 1) + 1 + 3 * (n - 3) + pairs_below
        if ctx.group_type == GroupType.TYPE_B:
            return n + 1 + (n - 1) + (n - 3) + 3 * (n - 2) + pairs_below
        return 4 + (n - 1) + 4 * (n - 3) + (n - 4) * (n - 3) // 2
    if ctx.group_type == GroupType.TYPE_A:
        ctx.require_degree(2)
        return (n - 1) + (n - 2) + pairs_below
    if ctx.group_type == GroupType.TYPE_B:
        ctx.require_degree(2)
        return n + 1 + (n - 2) + (n - 2) * (n - 1) // 2
    ctx.require_degree(4)
    return (n - 1) + 2 + 2 * (n - 2) + pairs_below
