"""HTTP service exposing datasets, conjecture runs, counterexamples, theorems.

State is an in-memory index of immutable table snapshots, one list per
dataset id, optionally mirrored to CSV/JSON files under a data directory.
Appends bump a dataset's version; runs always execute against an explicit
snapshot, so a run against version v is reproducible regardless of later
appends.  All rationals cross the wire as "p/q" strings.
"""

from __future__ import annotations

import json
import os
import threading
from pathlib import Path
from typing import Any

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .conjectures import (
    ConjectureRun,
    LinearConjecture,
    conjecture_from_dict,
    conjecture_to_dict,
    equality_to_dict,
    filter_known,
    render_conjecture,
    write_on_the_wall,
)
from .datasets import resolve_builtin
from .graphs import Graph, GraphError, compute_invariant_vector, parse_edge_list
from .integers import IntegerDomainError, build_integer_dataset
from .rationals import format_rational
from .table import (
    GRAPH_DOMAIN,
    INTEGER_DOMAIN,
    Hypothesis,
    KnowledgeTable,
    TableError,
    build_graph_table,
    build_integer_table,
    save_table,
)

DATA_DIR_ENV = "TIGHTBOUNDS_DATA_DIR"
FRONTEND_DIR_ENV = "TIGHTBOUNDS_FRONTEND_DIR"


class ApiError(Exception):
    def __init__(
        self, status: int, code: str, message: str, extra: dict | None = None
    ) -> None:
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.extra = extra or {}


class DatasetStore:
    """Versioned table snapshots plus the known-theorem pattern list."""

    def __init__(self, data_dir: Path | None = None) -> None:
        self._lock = threading.Lock()
        self._tables: dict[str, list[KnowledgeTable]] = {}
        self._runs: dict[str, dict] = {}
        self._known: list[LinearConjecture] = []
        self._counters: dict[str, int] = {}
        self.data_dir = data_dir

    def _next_id(self, prefix: str) -> str:
        self._counters[prefix] = self._counters.get(prefix, 0) + 1
        return f"{prefix}-{self._counters[prefix]}"

    def create(self, table: KnowledgeTable) -> tuple[str, int]:
        with self._lock:
            dataset_id = self._next_id("ds")
            self._tables[dataset_id] = [table]
        self._persist_table(dataset_id, 1, table)
        return dataset_id, 1

    def get(self, dataset_id: str, version: int | None = None) -> tuple[KnowledgeTable, int]:
        with self._lock:
            versions = self._tables.get(dataset_id)
            if versions is None:
                raise ApiError(404, "dataset_not_found", f"unknown dataset {dataset_id}")
            if version is None:
                version = len(versions)
            if not 1 <= version <= len(versions):
                raise ApiError(404, "version_not_found", f"no version {version}")
            return versions[version - 1], version

    def append(self, dataset_id: str, obj: Graph) -> tuple[KnowledgeTable, int]:
        """Single-writer append: one new version per dataset at a time."""
        with self._lock:
            versions = self._tables.get(dataset_id)
            if versions is None:
                raise ApiError(404, "dataset_not_found", f"unknown dataset {dataset_id}")
            try:
                new_table = versions[-1].append_object(obj)
            except (TableError, GraphError) as exc:
                raise ApiError(422, "invalid_object", str(exc)) from exc
            versions.append(new_table)
            version = len(versions)
        self._persist_table(dataset_id, version, new_table)
        return new_table, version

    def record_run(self, payload: dict) -> str:
        with self._lock:
            run_id = self._next_id("run")
        payload["run_id"] = run_id
        if self.data_dir is not None:
            path = self.data_dir / f"{run_id}.json"
            path.write_text(json.dumps(payload, indent=2))
        self._runs[run_id] = payload
        return run_id

    def known_patterns(self) -> list[LinearConjecture]:
        with self._lock:
            return list(self._known)

    def add_known(self, pattern: LinearConjecture) -> bool:
        """Idempotent insert; returns False when the pattern already exists."""
        with self._lock:
            if any(k.signature() == pattern.signature() for k in self._known):
                return False
            self._known.append(pattern)
            return True

    def remove_known(self, pattern: LinearConjecture) -> bool:
        with self._lock:
            before = len(self._known)
            self._known = [k for k in self._known if k.signature() != pattern.signature()]
            return len(self._known) < before

    def handles(self) -> list[tuple[str, KnowledgeTable, int]]:
        with self._lock:
            return [
                (dataset_id, versions[-1], len(versions))
                for dataset_id, versions in self._tables.items()
            ]

    def _persist_table(self, dataset_id: str, version: int, table: KnowledgeTable) -> None:
        if self.data_dir is not None:
            save_table(table, self.data_dir / f"{dataset_id}-v{version}.csv")


class DatasetRequest(BaseModel):
    builtin: str | None = None
    domain: str | None = None
    objects: list[dict] | None = None
    lo: int | None = None
    hi: int | None = None


class RunRequest(BaseModel):
    targets: list[str]
    hypotheses: list[list[str]] | None = None
    use_dalmatian: bool = True
    limit: int | None = None
    version: int | None = None


class CounterexampleRequest(BaseModel):
    edge_list: str
    id: str | None = None
    conjecture: dict | None = None


class KnownTheoremRequest(BaseModel):
    hypothesis: list[str]
    target: str
    direction: str = Field(pattern="^(upper|lower)$")
    rhs: dict


def _handle(store: DatasetStore, request: DatasetRequest) -> KnowledgeTable:
    if request.builtin:
        table = resolve_builtin(request.builtin)
        if table is None:
            raise ApiError(404, "dataset_not_found", f"unknown builtin {request.builtin}")
        return table
    if request.domain == GRAPH_DOMAIN:
        if not request.objects:
            raise ApiError(422, "invalid_request", "graph datasets need objects")
        graphs = []
        for k, spec in enumerate(request.objects, start=1):
            try:
                graphs.append(
                    parse_edge_list(spec["edge_list"], id=spec.get("id", f"g{k}"))
                )
            except (KeyError, GraphError) as exc:
                raise ApiError(422, "invalid_graph", str(exc)) from exc
        try:
            return build_graph_table(graphs)
        except TableError as exc:
            raise ApiError(422, "invalid_request", str(exc)) from exc
    if request.domain == INTEGER_DOMAIN:
        if request.lo is None or request.hi is None:
            raise ApiError(422, "invalid_request", "integer datasets need lo and hi")
        try:
            return build_integer_table(build_integer_dataset(request.lo, request.hi))
        except IntegerDomainError as exc:
            raise ApiError(422, "invalid_request", str(exc)) from exc
    raise ApiError(422, "invalid_request", "provide a builtin name or domain + objects")


def _handle_payload(dataset_id: str, table: KnowledgeTable, version: int) -> dict:
    return {
        "id": dataset_id,
        "domain": table.domain,
        "version": version,
        "rows": table.row_count,
    }


def _table_payload(table: KnowledgeTable) -> dict:
    rows = []
    for i, name in enumerate(table.ids):
        cells: dict[str, Any] = {
            col: format_rational(table.numeric_rows[i][j])
            for j, col in enumerate(table.numeric_columns)
        }
        cells.update(
            {col: table.boolean_rows[i][j] for j, col in enumerate(table.boolean_columns)}
        )
        rows.append({"name": name, "cells": cells})
    return {
        "numeric_columns": list(table.numeric_columns),
        "boolean_columns": list(table.boolean_columns),
        "rows": rows,
    }


def _run_payload(run: ConjectureRun) -> dict:
    table = run.table
    return {
        "conjectures": [
            dict(
                conjecture_to_dict(c),
                rendered=render_conjecture(c, k, table.boolean_columns, table.domain),
            )
            for k, c in enumerate(run.conjectures, start=1)
        ],
        "equalities": [equality_to_dict(e) for e in run.equalities],
    }


def create_app(
    data_dir: str | Path | None = None,
    frontend_dir: str | Path | None = None,
) -> FastAPI:
    """Build the service; ``data_dir`` (or the env var) enables file backing.

    When a built workbench is found (``frontend_dir`` argument, env var, or a
    ./frontend directory with an index.html), it is served at /workbench.
    """
    if data_dir is None:
        data_dir = os.environ.get(DATA_DIR_ENV)
    dir_path = Path(data_dir) if data_dir else None
    if dir_path is not None:
        dir_path.mkdir(parents=True, exist_ok=True)
    store = DatasetStore(dir_path)
    app = FastAPI(title="tightbounds", version="0.1.0")
    app.state.store = store

    if frontend_dir is None:
        frontend_dir = os.environ.get(FRONTEND_DIR_ENV, "frontend")
    frontend_path = Path(frontend_dir)
    if (frontend_path / "index.html").is_file():
        from fastapi.staticfiles import StaticFiles

        app.mount("/workbench", StaticFiles(directory=frontend_path, html=True))

    @app.exception_handler(ApiError)
    async def handle_api_error(_request: Request, exc: ApiError) -> JSONResponse:
        content = {"code": exc.code, "message": exc.message} | exc.extra
        return JSONResponse(status_code=exc.status, content=content)

    @app.get("/datasets")
    def list_datasets() -> list[dict]:
        return [
            _handle_payload(dataset_id, table, version)
            for dataset_id, table, version in store.handles()
        ]

    @app.post("/datasets")
    def create_dataset(request: DatasetRequest) -> dict:
        table = _handle(store, request)
        dataset_id, version = store.create(table)
        return _handle_payload(dataset_id, table, version)

    @app.get("/datasets/{dataset_id}/table")
    def get_table(dataset_id: str, version: int | None = None) -> dict:
        table, version = store.get(dataset_id, version)
        payload = _table_payload(table)
        payload.update({"id": dataset_id, "version": version, "domain": table.domain})
        return payload

    @app.post("/datasets/{dataset_id}/runs")
    def create_run(dataset_id: str, request: RunRequest) -> dict:
        table, version = store.get(dataset_id, request.version)
        if not request.targets:
            raise ApiError(422, "invalid_targets", "at least one target is required")
        for target in request.targets:
            if target not in table.numeric_columns:
                raise ApiError(422, "invalid_targets", f"unknown invariant name: {target}")
        hypotheses = None
        if request.hypotheses is not None:
            try:
                hypotheses = [Hypothesis(names) for names in request.hypotheses]
                for h in hypotheses:
                    h.validate(table)
            except TableError as exc:
                raise ApiError(422, "invalid_hypotheses", str(exc)) from exc
        try:
            run = write_on_the_wall(
                table,
                request.targets,
                hypotheses=hypotheses,
                use_dalmatian=request.use_dalmatian,
                limit=request.limit,
            )
        except ValueError as exc:
            raise ApiError(422, "invalid_request", str(exc)) from exc
        run = filter_known(run, store.known_patterns())
        payload = _run_payload(run)
        payload.update({"dataset_id": dataset_id, "dataset_version": version})
        run_id = store.record_run(payload)
        return payload | {"run_id": run_id}

    @app.post("/datasets/{dataset_id}/counterexamples")
    def submit_counterexample(dataset_id: str, request: CounterexampleRequest) -> dict:
        table, version = store.get(dataset_id)
        if table.domain != GRAPH_DOMAIN:
            raise ApiError(422, "invalid_request", "counterexamples are graphs")
        k = 1
        while f"ce-{k}" in table.ids:
            k += 1
        try:
            graph = parse_edge_list(request.edge_list, id=request.id or f"ce-{k}")
        except GraphError as exc:
            raise ApiError(422, "invalid_graph", str(exc)) from exc
        summary: dict[str, Any] = {}
        if request.conjecture is not None:
            try:
                conjecture = conjecture_from_dict(request.conjecture)
            except (KeyError, ValueError, TableError) as exc:
                raise ApiError(422, "invalid_conjecture", str(exc)) from exc
            vector = compute_invariant_vector(graph)
            if not all(
                vector.flags.get(name, False) for name in conjecture.hypothesis.conjuncts
            ):
                raise ApiError(
                    409,
                    "not_a_counterexample",
                    "the submitted graph does not satisfy the hypothesis",
                )
            lhs = vector.values[conjecture.target]
            rhs = conjecture.rhs.intercept
            for name, slope in conjecture.rhs.terms:
                rhs += slope * vector.values[name]
            violated = lhs > rhs if conjecture.direction == "upper" else lhs < rhs
            if not violated:
                raise ApiError(
                    409,
                    "not_a_counterexample",
                    "the submitted graph satisfies the conjecture",
                    extra={"lhs": format_rational(lhs), "rhs": format_rational(rhs)},
                )
            summary = {"lhs": format_rational(lhs), "rhs": format_rational(rhs)}
        new_table, version = store.append(dataset_id, graph)
        vector = compute_invariant_vector(graph)
        summary["appended"] = {
            "id": graph.id,
            "values": {k: format_rational(v) for k, v in vector.values.items()},
            "flags": vector.flags,
        }
        return _handle_payload(dataset_id, new_table, version) | {"recompute": summary}

    @app.get("/known-theorems")
    def list_known() -> list[dict]:
        return [conjecture_to_dict(k) for k in store.known_patterns()]

    @app.post("/known-theorems")
    def add_known(request: KnownTheoremRequest) -> dict:
        try:
            pattern = conjecture_from_dict(request.model_dump())
        except (KeyError, ValueError, TableError) as exc:
            raise ApiError(422, "invalid_pattern", str(exc)) from exc
        added = store.add_known(pattern)
        return {"added": added, "count": len(store.known_patterns())}

    @app.post("/known-theorems/remove")
    def remove_known(request: KnownTheoremRequest) -> dict:
        try:
            pattern = conjecture_from_dict(request.model_dump())
        except (KeyError, ValueError, TableError) as exc:
            raise ApiError(422, "invalid_pattern", str(exc)) from exc
        removed = store.remove_known(pattern)
        return {"removed": removed, "count": len(store.known_patterns())}

    return app


def main() -> None:  # pragma: no cover - manual entry point
    import uvicorn

    uvicorn.run(create_app(), host="127.0.0.1", port=8765)


if __name__ == "__main__":  # pragma: no cover
    main()
