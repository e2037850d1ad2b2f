"""Batch verification across group types and degrees."""
import asyncio
from functools import partial
from typing import Callable, Iterable, Optional

from pancakes.cli.sweep_task import SweepItem, CheckKind, CheckResult
from pancakes.cli.sweep_worker import SweepWorker
from pancakes.group_core.context import GroupContext, GroupType
from pancakes.presentations.catalog import build_presentation
from pancakes.presentations.presentation import Presentation, PresentationFamily, expected_order
from pancakes.todd_coxeter.coset_table import CosetStatus
from pancakes.todd_coxeter.enumeration import enumerate_cosets
from pancakes.utils.errors import Overflow
from pancakes.verifier.checks import (check_relators, check_order, check_lemma_identities, check_closure_agreement,
                                      check_translated_relators)

DEFAULT_RANGES = {
    GroupType.TYPE_A: range(4, 9),
    GroupType.TYPE_B: range(4, 7),
    GroupType.TYPE_D: range(4, 7),
}
COSET_RANGES = {
    GroupType.TYPE_A: range(4, 8),
    GroupType.TYPE_B: range(4, 6),
    GroupType.TYPE_D: range(4, 6),
}

PresentationBuilder = Callable[[GroupContext, PresentationFamily], Presentation]

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_OVERFLOW = 2
EXIT_USAGE = 3


def sweep_items(ranges=None, coset_ranges=None) -> list[SweepItem]:
    ranges = DEFAULT_RANGES if ranges is None else ranges
    coset_ranges = COSET_RANGES if coset_ranges is None else coset_ranges
    items = []
    for group_type, degrees in ranges.items():
        for n in degrees:
            ctx = GroupContext(group_type=group_type, degree=n)
            for family in PresentationFamily:
                items.append(SweepItem(ctx, CheckKind.RELATORS, family))
                items.append(SweepItem(ctx, CheckKind.ORDER, family))
            items.append(SweepItem(ctx, CheckKind.LEMMAS))
            items.append(SweepItem(ctx, CheckKind.CLOSURES))
            items.append(SweepItem(ctx, CheckKind.TRANSLATION))
            if n in coset_ranges.get(group_type, ()):
                items.append(SweepItem(ctx, CheckKind.COSETS, PresentationFamily.PANCAKE))
    return items


def run_sweep_item(item: SweepItem, caps: dict, presentation_builder: PresentationBuilder = build_presentation
                   ) -> CheckResult:
    if item.check == CheckKind.LEMMAS:
        report = check_lemma_identities(item.context)
        if report.passed:
            return item.passed(report, f"{report.identities_checked} identities")
        names = ", ".join(f"{f.name}{tuple(f.indices)}" for f in report.identities_failed)
        return item.failed(f"identities failed: {names}", report)
    if item.check in (CheckKind.CLOSURES, CheckKind.TRANSLATION):
        return _run_pair_check(item, caps, presentation_builder)

    p = presentation_builder(item.context, item.family)
    if item.check == CheckKind.RELATORS:
        report = check_relators(p)
        if report.passed:
            return item.passed(report, f"{report.relators_checked} relators")
        labels = ", ".join(f"{f.label}{tuple(f.indices)}" for f in report.relators_failed)
        return item.failed(f"relators failed: {labels}", report)
    if item.check == CheckKind.ORDER:
        report = check_order(p, caps["bfsCap"])
        if report.passed:
            return item.passed(report, f"order {report.order_found}")
        return item.failed(f"order {report.order_found}, expected {report.order_expected}", report)

    table = enumerate_cosets(p, max_cosets=caps["maxCosets"])
    if table.status == CosetStatus.OVERFLOWED:
        raise Overflow(caps["maxCosets"], "cosets")
    expected = expected_order(item.context).value
    if table.live_count != expected:
        return item.failed(f"{table.live_count} cosets, expected {expected}")
    return item.passed(detail=f"{table.live_count} cosets")


def _run_pair_check(item: SweepItem, caps: dict, presentation_builder: PresentationBuilder) -> CheckResult:
    pancake = presentation_builder(item.context, PresentationFamily.PANCAKE)
    coxeter = presentation_builder(item.context, PresentationFamily.COXETER)
    if item.check == CheckKind.CLOSURES:
        report = check_closure_agreement(pancake, coxeter, caps["bfsCap"])
        if report.passed:
            return item.passed(report, f"{report.order_found} elements")
        return item.failed("pancake and coxeter generators reach different elements", report)
    report = check_translated_relators(pancake, coxeter)
    if report.passed:
        return item.passed(report, f"{report.relators_checked} rewritten relators")
    labels = ", ".join(f"{f.label}{tuple(f.indices)}" for f in report.relators_failed)
    return item.failed(f"rewritten relators failed: {labels}", report)


def aggregate_exit_code(results: Iterable[CheckResult]) -> int:
    results = list(results)
    if any(not r.is_passed() and not r.is_overflowed() for r in results):
        return EXIT_FAILURE
    if any(r.is_overflowed() for r in results):
        return EXIT_OVERFLOW
    return EXIT_OK


async def run_all_async(caps: dict, presentation_builder: PresentationBuilder = build_presentation,
                        ranges=None, coset_ranges=None) -> list[CheckResult]:
    worker = SweepWorker("sweep", {"workers": caps.get("workers", SweepWorker.DEFAULT_WORKERS)})
    action = partial(run_sweep_item, caps=caps, presentation_builder=presentation_builder)
    return await worker.run(sweep_items(ranges, coset_ranges), action)


def run_all(caps: dict, presentation_builder: Optional[PresentationBuilder] = None, ranges=None,
            coset_ranges=None) -> tuple[int, list[CheckResult]]:
    """Run the whole sweep; the exit code reflects the worst result (failure over overflow)."""
    results = asyncio.run(run_all_async(caps, presentation_builder or build_presentation, ranges, coset_ranges))
    return aggregate_exit_code(results), results
