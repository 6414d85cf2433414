from __future__ import annotations

from pathlib import Path

from pydantic import BaseModel, Field, ValidationError

from powermatch.utils.exceptions import ContractError, DocumentParseError
from powermatch.utils.logger import get_logger

from .graph import GraphKind, SimpleGraph

log = get_logger()


class GraphDocument(BaseModel):
    """Edge-list export: edges are sorted pairs [i, j] with i < j."""

    n: int = Field(ge=0)
    kind: GraphKind = GraphKind.GENERIC
    edges: list[tuple[int, int]]


def to_edge_document(graph: SimpleGraph) -> GraphDocument:
    return GraphDocument(n=graph.n, kind=graph.kind, edges=list(graph.edges()))


def dumps_graph(graph: SimpleGraph) -> str:
    return to_edge_document(graph).model_dump_json() + "\n"


def to_dot(graph: SimpleGraph, name: str = "G") -> str:
    """DOT text with one `i -- j;` line per edge in sorted order."""

    lines = [f"graph {name} {{"]
    lines += [f"    {u} -- {v};" for u, v in graph.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str | bytes) -> SimpleGraph:
    try:
        doc = GraphDocument.model_validate_json(text)
    except ValidationError as error:
        raise DocumentParseError(f"Malformed graph document: {error}") from error

    try:
        return SimpleGraph.from_edges(doc.n, doc.edges, kind=doc.kind)
    except ContractError as error:
        raise DocumentParseError(f"Malformed graph document: {error.message}") from error


def dump_graph(graph: SimpleGraph, path: str | Path, *, fmt: str = "edges") -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    text = to_dot(graph, name=graph.kind.value) if fmt == "dot" else dumps_graph(graph)
    target.write_text(text, encoding="utf-8")
    log.info("Graph with %d edges written to %s", graph.edge_count, target)


def load_graph(path: str | Path) -> SimpleGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))
