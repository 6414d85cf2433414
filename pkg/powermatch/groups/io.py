from __future__ import annotations

from collections.abc import Mapping
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, ValidationError

from powermatch.config import config
from powermatch.utils.exceptions import DocumentParseError, GroupSizeError
from powermatch.utils.logger import get_logger

from .table import GroupTable

log = get_logger()


class GroupDocument(BaseModel):
    """Canonical group file: order, row-major Cayley table, optional labels."""

    order: int = Field(ge=1)
    mul: list[list[int]]
    labels: list[str] | None = None


def to_document(g: GroupTable) -> GroupDocument:
    return GroupDocument(
        order=g.order,
        mul=g.mul.tolist(),
        labels=list(g.labels) if g.labels is not None else None,
    )


def dumps_group(g: GroupTable) -> str:
    return to_document(g).model_dump_json(exclude_none=True) + "\n"


def dump_group(g: GroupTable, path: str | Path) -> None:
    """Write the group file; parent directories are created on demand."""

    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(dumps_group(g), encoding="utf-8")
    log.info("Group of order %d written to %s", g.order, target)


def _parse(document: GroupDocument | Mapping[str, Any] | str | bytes) -> GroupDocument:
    if isinstance(document, GroupDocument):
        return document
    try:
        if isinstance(document, (str, bytes)):
            return GroupDocument.model_validate_json(document)
        return GroupDocument.model_validate(document)
    except ValidationError as error:
        raise DocumentParseError(f"Malformed group document: {error}") from error


def from_cayley_table(
    document: GroupDocument | Mapping[str, Any] | str | bytes,
    *,
    cap: int | None = None,
) -> GroupTable:
    """Parses a group document and validates every group axiom."""

    doc = _parse(document)
    cap = config.GROUP_ORDER_CAP if cap is None else cap
    if doc.order > cap:
        raise GroupSizeError(f"Group file has order {doc.order}, exceeding the cap {cap}")

    if len(doc.mul) != doc.order or any(len(row) != doc.order for row in doc.mul):
        raise DocumentParseError(
            f"Cayley table must be {doc.order}x{doc.order} to match the declared order"
        )
    if doc.labels is not None and len(doc.labels) != doc.order:
        raise DocumentParseError(
            f"Expected {doc.order} labels, got {len(doc.labels)}"
        )

    return GroupTable(doc.mul, doc.labels, validate=True)


def load_group(path: str | Path, *, cap: int | None = None) -> GroupTable:
    text = Path(path).read_text(encoding="utf-8")
    group = from_cayley_table(text, cap=cap)
    log.debug("Loaded group of order %d from %s", group.order, path)
    return group
