from __future__ import annotations

from pathlib import Path

from pydantic import BaseModel, Field, ValidationError

from powermatch.graphs.graph import GraphKind
from powermatch.utils.exceptions import ContractError, DocumentParseError
from powermatch.utils.logger import get_logger

from .matching import Matching, deficiency

log = get_logger()


class MatchingDocument(BaseModel):
    graph_kind: GraphKind = GraphKind.GENERIC
    n: int = Field(ge=0)
    size: int = Field(ge=0)
    deficiency: int = Field(ge=0)
    pairs: list[tuple[int, int]]
    unmatched: list[int]


def to_document(m: Matching) -> MatchingDocument:
    return MatchingDocument(
        graph_kind=m.kind,
        n=m.n,
        size=m.size,
        deficiency=deficiency(m),
        pairs=m.pairs(),
        unmatched=m.unmatched(),
    )


def dumps_matching(m: Matching) -> str:
    return to_document(m).model_dump_json() + "\n"


def dump_matching(m: Matching, path: str | Path) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(dumps_matching(m), encoding="utf-8")
    log.info("Matching of size %d written to %s", m.size, target)


def parse_matching(text: str | bytes) -> Matching:
    """Parses a matching document; size, deficiency and exposed list must agree with the pairs."""

    try:
        doc = MatchingDocument.model_validate_json(text)
        m = Matching.from_pairs(doc.n, doc.pairs, kind=doc.graph_kind)
    except ValidationError as error:
        raise DocumentParseError(f"Malformed matching document: {error}") from error
    except ContractError as error:
        raise DocumentParseError(f"Malformed matching document: {error.message}") from error

    if doc.size != m.size or doc.deficiency != deficiency(m) or sorted(doc.unmatched) != m.unmatched():
        raise DocumentParseError("Matching document totals disagree with its pairs")
    return m


def load_matching(path: str | Path) -> Matching:
    return parse_matching(Path(path).read_text(encoding="utf-8"))
