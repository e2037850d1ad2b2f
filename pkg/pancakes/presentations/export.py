from enum import Enum

from pydantic import BaseModel, ValidationError

from pancakes.group_core.context import GroupContext
from pancakes.group_core.words import Word
from pancakes.presentations.presentation import (Presentation, PresentationFamily, PresentationFormatError,
                                                 RelatorEntry, minimal_period)


class ExportFormat(str, Enum):
    JSON = "json"
    GAP = "gap"


class RelatorDocument(BaseModel):
    label: str
    word: list[str]
    indices: list[int] = []


class PresentationDocument(BaseModel):
    group_type: str
    degree: int
    family: str
    generators: list[str]
    relators: list[RelatorDocument]


def export(p: Presentation, export_format=ExportFormat.JSON) -> str:
    export_format = ExportFormat(export_format)
    if export_format == ExportFormat.GAP:
        return to_gap_script(p)
    return to_json(p)


def to_document(p: Presentation) -> PresentationDocument:
    return PresentationDocument(
        group_type=p.context.group_type.value,
        degree=p.context.degree,
        family=p.family.value,
        generators=p.generator_tokens(),
        relators=[RelatorDocument(label=e.label, word=e.word.tokens(), indices=list(e.indices))
                  for e in p.relators],
    )


def to_json(p: Presentation) -> str:
    return to_document(p).model_dump_json(indent=2)


def from_json(text: str) -> Presentation:
    try:
        document = PresentationDocument.model_validate_json(text)
        ctx = GroupContext.of(document.group_type, document.degree)
        family = PresentationFamily(document.family)
    except (ValidationError, ValueError) as exception:
        raise PresentationFormatError(f"not a presentation document: {exception}") from exception
    relators = tuple(RelatorEntry(label=r.label, indices=tuple(r.indices), word=Word.from_tokens(ctx, r.word))
                     for r in document.relators)
    return Presentation(context=ctx, family=family,
                        generators=tuple(Word.from_tokens(ctx, document.generators).symbols),
                        relators=relators)


def to_gap_script(p: Presentation) -> str:
    """Free-group quotient text for an external computer algebra system."""
    names = p.generator_tokens()
    quoted = ",".join(f'"{name}"' for name in names)
    bindings = " ".join(f"{name} := F.{number};;" for number, name in enumerate(names, start=1))
    products = ", ".join(_gap_product(entry.word) for entry in p.relators)
    return "\n".join([
        f"F := FreeGroup({quoted});;",
        bindings,
        f"rels := [ {products} ];;",
        "G := F / rels;;",
    ]) + "\n"


def _gap_product(w: Word) -> str:
    if w.is_empty():
        return "One(F)"
    period = minimal_period(w)
    exponent = len(w) // period
    base = "*".join(w[:period].tokens())
    if exponent == 1:
        return base
    if period == 1:
        return f"{base}^{exponent}"
    return f"({base})^{exponent}"
