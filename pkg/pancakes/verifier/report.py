from typing import Optional

from pydantic import BaseModel

from pancakes.group_core.context import GroupContext
from pancakes.presentations.presentation import PresentationFamily


class RelatorFailure(BaseModel):
    label: str
    indices: list[int] = []
    word: list[str]
    element: str


class IdentityFailure(BaseModel):
    name: str
    indices: list[int] = []


class VerificationReport(BaseModel):
    context: GroupContext
    family: Optional[PresentationFamily] = None
    relators_checked: int = 0
    relators_failed: list[RelatorFailure] = []
    order_found: Optional[int] = None
    order_expected: Optional[int] = None
    identities_checked: int = 0
    identities_failed: list[IdentityFailure] = []
    closures_agree: Optional[bool] = None

    @property
    def order_matches(self) -> bool:
        return self.order_expected is None or self.order_found == self.order_expected

    @property
    def passed(self) -> bool:
        return (not self.relators_failed and not self.identities_failed and self.order_matches
                and self.closures_agree is not False)

    def merged_with(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(
            context=self.context,
            family=self.family or other.family,
            relators_checked=self.relators_checked + other.relators_checked,
            relators_failed=self.relators_failed + other.relators_failed,
            order_found=other.order_found if other.order_found is not None else self.order_found,
            order_expected=other.order_expected if other.order_expected is not None else self.order_expected,
            identities_checked=self.identities_checked + other.identities_checked,
            identities_failed=self.identities_failed + other.identities_failed,
            closures_agree=other.closures_agree if other.closures_agree is not None else self.closures_agree,
        )

    def summary_lines(self) -> list[str]:
        family = f" {self.family.value}" if self.family else ""
        lines = [f"{self.context}{family}: {'PASS' if self.passed else 'FAIL'}"]
        if self.relators_checked:
            lines.append(f"  relators checked: {self.relators_checked}, failed: {len(self.relators_failed)}")
        for failure in self.relators_failed:
            lines.append(f"    {failure.label}{tuple(failure.indices)}: {' '.join(failure.word)} -> {failure.element}")
        if self.order_found is not None:
            lines.append(f"  order found: {self.order_found}, expected: {self.order_expected}")
        if self.closures_agree is not None:
            lines.append(f"  pancake and coxeter closures agree: {'yes' if self.closures_agree else 'no'}")
        if self.identities_checked:
            lines.append(f"  identities checked: {self.identities_checked}, failed: {len(self.identities_failed)}")
        for failure in self.identities_failed:
            lines.append(f"    {failure.name}{tuple(failure.indices)}")
        return lines
