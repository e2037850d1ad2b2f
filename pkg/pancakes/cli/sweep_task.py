from enum import Enum
from typing import Optional

from pancakes.group_core.context import GroupContext
from pancakes.presentations.presentation import PresentationFamily
from pancakes.verifier.report import VerificationReport


class CheckKind(str, Enum):
    RELATORS = "relators"
    LEMMAS = "lemmas"
    ORDER = "order"
    COSETS = "cosets"
    CLOSURES = "closures"
    TRANSLATION = "translation"


class SweepItem:
    """One check of one presentation (or of one context, for the identity catalog) in a sweep."""

    def __init__(self, context: GroupContext, check: CheckKind, family: Optional[PresentationFamily] = None):
        self.context = context
        self.check = check
        self.family = family
        self._result = CheckResult.empty_result(item=self)

    @property
    def key(self) -> str:
        family = f"/{self.family.value}" if self.family else ""
        return f"{self.context}/{self.check.value}{family}"

    def sort_key(self):
        return (self.context.group_type.value, self.context.degree, self.check.value,
                self.family.value if self.family else "")

    def get_result(self):
        return self._result

    def set_result(self, result):
        self._result = result

    def passed(self, report=None, detail=""):
        self._result = CheckResult.passed(self, report=report, detail=detail)
        return self._result

    def failed(self, error_message, report=None):
        self._result = CheckResult.failed(self, error_message=error_message, report=report)
        return self._result

    def overflowed(self, error_message):
        self._result = CheckResult.overflowed(self, error_message=error_message)
        return self._result

    def __str__(self):
        return self.key


class CheckResult:
    def __init__(
        self,
        item,
        success=False,
        overflow=False,
        error_message=None,
        report: Optional[VerificationReport] = None,
        detail="",
    ):
        self.item = item
        self.success_state = success
        self.overflow = overflow
        self.error_message = error_message
        self.report = report
        self.detail = detail

    @classmethod
    def passed(cls, item, report=None, detail=""):
        return CheckResult(item, success=True, report=report, detail=detail)

    @classmethod
    def failed(cls, item, error_message, report=None):
        return CheckResult(item, success=False, error_message=error_message, report=report)

    @classmethod
    def overflowed(cls, item, error_message):
        return CheckResult(item, success=False, overflow=True, error_message=error_message)

    @classmethod
    def empty_result(cls, item):
        return CheckResult(item, success=False)

    def is_passed(self):
        return self.success_state and self.error_message is None

    def is_failed(self):
        return not self.success_state and not self.overflow and self.error_message is not None

    def is_overflowed(self):
        return not self.success_state and self.overflow

    def get_item(self):
        return self.item

    def verdict(self) -> str:
        if self.is_passed():
            return "pass"
        if self.is_overflowed():
            return "overflow"
        if self.is_failed():
            return "fail"
        return "empty"

    def to_json_dict(self) -> dict:
        return {
            "item": self.item.key,
            "verdict": self.verdict(),
            "message": self.error_message or self.detail,
            "report": self.report.model_dump(mode="json") if self.report else None,
        }

    def __str__(self):
        if self.is_passed():
            return f"pass: {self.item.key} {self.detail}".rstrip()
        if self.is_overflowed():
            return f"overflow: {self.item.key}, {self.error_message}"
        if self.is_failed():
            return f"fail: {self.item.key}, {self.error_message}"
        return "empty_result"
