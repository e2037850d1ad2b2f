from pancakes.group_core.context import GroupContext
from pancakes.group_core.operations import eval_word
from pancakes.presentations.generator_change import translate
from pancakes.presentations.presentation import Presentation, PresentationFamily, expected_order
from pancakes.utils.log_utils import log_with_context, group_context
from pancakes.verifier.closure import bfs_order
from pancakes.verifier.lemmas import lemma_instances
from pancakes.verifier.report import VerificationReport, RelatorFailure, IdentityFailure


def check_relators(p: Presentation) -> VerificationReport:
    """Evaluate every relator; all failures are collected, not only the first."""
    ctx = p.context
    failures = []
    for entry in p.relators:
        element = eval_word(entry.word)
        if not element.is_identity():
            log_with_context(f"relator {entry.describe()} evaluates to {element}",
                             context=group_context(p.context, p.family), log_level='warning')
            failures.append(RelatorFailure(label=entry.label, indices=list(entry.indices),
                                           word=entry.word.tokens(), element=str(element)))
    log_with_context(f"{len(p.relators) - len(failures)} of {len(p.relators)} relators hold",
                     context=group_context(p.context, p.family))
    return VerificationReport(context=ctx, family=p.family, relators_checked=len(p.relators),
                              relators_failed=failures)


def check_order(p: Presentation, cap: int) -> VerificationReport:
    """Compare the size of the closure of ``p.generators`` with the known group order; raises ``Overflow``."""
    closure = bfs_order(p.generators, p.context, cap)
    expected = expected_order(p.context).value
    log_with_context(f"closure has {closure.order} elements (expected {expected}), diameter {closure.diameter}",
                     context=group_context(p.context, p.family))
    return VerificationReport(context=p.context, family=p.family, order_found=closure.order,
                              order_expected=expected)


def check_lemma_identities(ctx: GroupContext) -> VerificationReport:
    failures = []
    checked = 0
    for instance in lemma_instances(ctx):
        checked += 1
        if eval_word(instance.left) != eval_word(instance.right):
            log_with_context(f"identity {instance.name}{instance.indices} fails: {instance.left} != {instance.right}",
                             context=group_context(ctx), log_level='warning')
            failures.append(IdentityFailure(name=instance.name, indices=list(instance.indices)))
    log_with_context(f"{checked - len(failures)} of {checked} identities hold", context=group_context(ctx))
    return VerificationReport(context=ctx, identities_checked=checked, identities_failed=failures)


def check_translated_relators(pancake: Presentation, coxeter: Presentation) -> VerificationReport:
    """Rewrite each family's relators in the other family's generators; every image must be trivial."""
    ctx = pancake.context
    checked = 0
    failures = []
    for source, target in ((coxeter, PresentationFamily.PANCAKE), (pancake, PresentationFamily.COXETER)):
        for entry in source.relators:
            checked += 1
            image = translate(entry.word, target)
            element = eval_word(image)
            if not element.is_identity():
                log_with_context(f"relator {entry.describe()} rewritten as {image} evaluates to {element}",
                                 context=group_context(ctx, target), log_level='warning')
                failures.append(RelatorFailure(label=entry.label, indices=list(entry.indices),
                                               word=image.tokens(), element=str(element)))
    log_with_context(f"{checked - len(failures)} of {checked} rewritten relators hold", context=group_context(ctx))
    return VerificationReport(context=ctx, relators_checked=checked, relators_failed=failures)


def check_closure_agreement(pancake: Presentation, coxeter: Presentation, cap: int) -> VerificationReport:
    """Both generating sets must reach exactly the same elements; raises ``Overflow``."""
    ctx = pancake.context
    pancake_closure = bfs_order(pancake.generators, ctx, cap)
    coxeter_closure = bfs_order(coxeter.generators, ctx, cap)
    agree = pancake_closure.elements == coxeter_closure.elements
    log_with_context(f"closures of {pancake_closure.order} and {coxeter_closure.order} elements "
                     f"{'agree' if agree else 'differ'}", context=group_context(ctx),
                     log_level='info' if agree else 'warning')
    return VerificationReport(context=ctx, order_found=pancake_closure.order,
                              order_expected=expected_order(ctx).value, closures_agree=agree)
