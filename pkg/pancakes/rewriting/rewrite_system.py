from collections import Counter
from typing import Optional

from pydantic import BaseModel, ConfigDict, ValidationError

from pancakes.group_core.context import GroupContext
from pancakes.group_core.words import Word
from pancakes.rewriting.ordering import SymbolOrder, shortlex_key
from pancakes.utils.errors import Overflow


class NotConfluent(Exception):
    pass


class RewriteRule(BaseModel):
    model_config = ConfigDict(frozen=True)

    lhs: Word
    rhs: Word

    def __str__(self):
        return f"{self.lhs} -> {self.rhs}"


class RuleDocument(BaseModel):
    lhs: list[str]
    rhs: list[str]


class RewriteSystemDocument(BaseModel):
    order: list[str]
    confluent: bool
    rules: list[RuleDocument]
    # written by to_json; files without them take the context from the caller
    group_type: Optional[str] = None
    degree: Optional[int] = None
    rule_cap_hit: bool = False


class RewriteSystem:
    """
    Length-reducing rules over an ordered alphabet, stored on encoded words.

    Each left-hand side is strictly greater than its right-hand side in shortlex, so
    rewriting always terminates.
    """

    def __init__(self, order: SymbolOrder):
        self.order = order
        self.confluent = False
        self.rule_cap_hit = False
        self._rules: dict[str, str] = {}
        self._lengths: Counter = Counter()

    @property
    def context(self) -> GroupContext:
        return self.order.context

    @property
    def rules(self) -> list[RewriteRule]:
        return [RewriteRule(lhs=self.order.decode(lhs), rhs=self.order.decode(rhs))
                for lhs, rhs in self.encoded_rules()]

    def encoded_rules(self) -> list[tuple[str, str]]:
        return sorted(self._rules.items(), key=lambda rule: shortlex_key(rule[0]))

    def items(self) -> list[tuple[str, str]]:
        """Rules in insertion order."""
        return list(self._rules.items())

    def __len__(self):
        return len(self._rules)

    def __contains__(self, lhs: str):
        return lhs in self._rules

    def add_rule(self, lhs: str, rhs: str):
        if shortlex_key(lhs) <= shortlex_key(rhs):
            raise ValueError(f"rule {lhs!r} -> {rhs!r} does not decrease in shortlex")
        self._rules[lhs] = rhs
        self._lengths[len(lhs)] += 1

    def remove_rule(self, lhs: str) -> str:
        rhs = self._rules.pop(lhs)
        self._lengths[len(lhs)] -= 1
        if not self._lengths[len(lhs)]:
            del self._lengths[len(lhs)]
        return rhs

    def set_rhs(self, lhs: str, rhs: str):
        self._rules[lhs] = rhs

    def rhs_of(self, lhs: str) -> Optional[str]:
        return self._rules.get(lhs)

    def suffix_match(self, text: str) -> Optional[str]:
        """Left-hand side that is a suffix of ``text``, if any."""
        for length in self._lengths:
            if length <= len(text) and text[-length:] in self._rules:
                return text[-length:]
        return None

    def reduce_encoded(self, text: str) -> str:
        # the output stack is always irreducible, so only its suffixes can match
        out: list[str] = []
        pending = list(reversed(text))
        lengths = sorted(self._lengths)
        rules = self._rules
        while pending:
            out.append(pending.pop())
            for length in lengths:
                if length > len(out):
                    break
                rhs = rules.get("".join(out[-length:]))
                if rhs is not None:
                    del out[-length:]
                    pending.extend(reversed(rhs))
                    break
        return "".join(out)

    def to_json(self) -> str:
        document = RewriteSystemDocument(
            group_type=self.context.group_type.value,
            degree=self.context.degree,
            order=self.order.tokens(),
            confluent=self.confluent,
            rule_cap_hit=self.rule_cap_hit,
            rules=[RuleDocument(lhs=rule.lhs.tokens(), rhs=rule.rhs.tokens()) for rule in self.rules],
        )
        return document.model_dump_json(indent=2)

    @classmethod
    def from_json(cls, text: str, ctx: Optional[GroupContext] = None) -> "RewriteSystem":
        """Load a rules file; ``ctx`` is required when the file does not name its group."""
        try:
            document = RewriteSystemDocument.model_validate_json(text)
        except ValidationError as exception:
            raise ValueError(f"not a rewrite system document: {exception}") from exception
        if document.group_type is not None and document.degree is not None:
            named = GroupContext.of(document.group_type, document.degree)
            if ctx is not None and named != ctx:
                raise ValueError(f"rules file is for {named}, not {ctx}")
            ctx = named
        elif ctx is None:
            raise ValueError("rules file does not name its group; pass the context")
        order = SymbolOrder.from_tokens(ctx, document.order)
        rs = cls(order)
        for rule in document.rules:
            rs.add_rule(order.encode(Word.from_tokens(ctx, rule.lhs)), order.encode(Word.from_tokens(ctx, rule.rhs)))
        rs.confluent = document.confluent
        rs.rule_cap_hit = document.rule_cap_hit
        return rs


def reduce(w: Word, rs: RewriteSystem) -> Word:
    return rs.order.decode(rs.reduce_encoded(rs.order.encode(w)))


def critical_pairs(lhs: str, rhs: str, other_lhs: str, other_rhs: str):
    """Both one-step rewrites of every word where ``lhs`` ends with a prefix of ``other_lhs``."""
    for k in range(1, min(len(lhs), len(other_lhs))):
        if lhs[-k:] == other_lhs[:k]:
            yield rhs + other_lhs[k:], lhs[:-k] + other_rhs


def check_confluence(rs: RewriteSystem) -> bool:
    """Re-resolve every overlap and containment between left-hand sides."""
    rules = rs.encoded_rules()
    for lhs, rhs in rules:
        for other_lhs, other_rhs in rules:
            for left, right in critical_pairs(lhs, rhs, other_lhs, other_rhs):
                if rs.reduce_encoded(left) != rs.reduce_encoded(right):
                    return False
            if other_lhs != lhs and other_lhs in lhs:
                start = lhs.index(other_lhs)
                replaced = lhs[:start] + other_rhs + lhs[start + len(other_lhs):]
                if rs.reduce_encoded(rhs) != rs.reduce_encoded(replaced):
                    return False
    return True


def enumerate_normal_forms(rs: RewriteSystem, cap: int) -> int:
    """Count irreducible words, extending irreducible words one letter at a time."""
    if not rs.confluent:
        raise NotConfluent("normal forms are only unique for a confluent system")
    letters = rs.order.letters()
    layer = [""]
    count = 1
    while layer:
        next_layer = []
        for prefix in layer:
            for letter in letters:
                candidate = prefix + letter
                if rs.suffix_match(candidate) is None:
                    count += 1
                    if count > cap:
                        raise Overflow(cap, "normal forms")
                    next_layer.append(candidate)
        layer = next_layer
    return count
