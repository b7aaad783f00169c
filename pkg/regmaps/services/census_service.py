"""Level-by-level census of the 2-quotients of the extended triangle group."""

from __future__ import annotations

import csv
import json
import os
from io import BytesIO
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from ..core.coset_table import CanonicalTable
from ..core.descent import QuotientNode, children, is_proper, trivial_node
from ..core.map_analysis import analyze
from ..errors import CensusIncompleteError, CensusStateError
from ..models import CensusManifest, CensusMapRecord, LevelSummary
from ..settings import settings
from ..utils.logging import get_logger

logger = get_logger(__name__)

MANIFEST = "manifest.json"
SUMMARY = "summary.json"


def tower_file(order_exp: int) -> str:
    return f"tower_{order_exp:02d}.npz"


def maps_file(order_exp: int) -> str:
    return f"maps_{order_exp:02d}.jsonl"


def _write_atomic(path: Path, data: bytes) -> None:
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "wb") as fh:
        fh.write(data)
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


def _expand(key: bytes) -> List[Tuple[bytes, int, str]]:
    """Children of the node with canonical key ``key`` (process-pool entry point)."""
    table = CanonicalTable.from_key(key)
    node = QuotientNode(table=table, order_exp=table.size.bit_length() - 1)
    return [(c.key, int(c.central_flag), format(c.hyperplane, "x")) for c in children(node)]


def _record(key: bytes) -> Optional[dict]:
    table = CanonicalTable.from_key(key)
    if not is_proper(table):
        return None
    return analyze(table).model_dump()


@dataclass
class Census:
    """Nodes of every completed level plus the proper-map records."""

    manifest: CensusManifest
    levels: Dict[int, List[QuotientNode]] = field(default_factory=dict)
    records: Dict[int, List[CensusMapRecord]] = field(default_factory=dict)

    def proper_count(self, order_exp: int) -> int:
        return len(self.records.get(order_exp, []))

    def maps_of_type(self, order_exp: int, s_exp: int, t_exp: int) -> List[CensusMapRecord]:
        return [r for r in self.records.get(order_exp, []) if (r.s_exp, r.t_exp) == (s_exp, t_exp)]


class CensusService:
    """Runs, resumes and reads a census directory."""

    def __init__(
        self,
        out_dir: Optional[Path] = None,
        *,
        workers: Optional[int] = None,
        max_nodes: Optional[int] = None,
    ):
        self.out_dir = Path(out_dir or settings.census_dir)
        self.workers = workers or settings.workers
        self.max_nodes = max_nodes or settings.census_max_nodes

    # -- files ---------------------------------------------------------

    @property
    def manifest_path(self) -> Path:
        return self.out_dir / MANIFEST

    def exists(self) -> bool:
        return self.manifest_path.exists()

    def load_manifest(self) -> CensusManifest:
        if not self.exists():
            raise CensusStateError(f"no census manifest in {self.out_dir}")
        try:
            return CensusManifest.model_validate_json(self.manifest_path.read_text())
        except ValueError as e:
            raise CensusStateError(f"unreadable census manifest in {self.out_dir}: {str(e)}") from e

    def _save_level(self, order_exp: int, nodes: List[QuotientNode], parents: List[QuotientNode],
                    records: List[CensusMapRecord]) -> None:
        parent_index = {p.digest: k for k, p in enumerate(parents)}
        size = 1 << order_exp
        dtype = np.int32
        tables = np.stack([n.table.rows.astype(dtype) for n in nodes]) if nodes else np.zeros((0, size, 3), dtype)
        proper = np.array([is_proper(n.table) for n in nodes], dtype=bool)
        parent_ids = np.array([parent_index.get(n.parent_digest, -1) for n in nodes], dtype=np.int32)
        central = np.array([-1 if n.central_flag is None else n.central_flag for n in nodes], dtype=np.int32)
        hyperplanes = np.array([format(n.hyperplane or 0, "x") for n in nodes], dtype=str)

        buffer = BytesIO()
        np.savez_compressed(buffer, tables=tables, proper=proper, parents=parent_ids,
                            central=central, hyperplanes=hyperplanes)
        _write_atomic(self.out_dir / tower_file(order_exp), buffer.getvalue())

        lines = "".join(r.model_dump_json() + "\n" for r in records)
        _write_atomic(self.out_dir / maps_file(order_exp), lines.encode())

    def _save_manifest(self, manifest: CensusManifest) -> None:
        manifest.updated_at = datetime.now(timezone.utc)
        summary = {
            str(s.order_exp): {"nodes": s.nodes, "proper": s.proper, "types": s.types}
            for s in manifest.levels
        }
        _write_atomic(self.out_dir / SUMMARY, json.dumps(summary, indent=2).encode())
        # Manifest last: it marks the level as complete
        _write_atomic(self.manifest_path, manifest.model_dump_json(indent=2).encode())

    def load_level(self, order_exp: int, parents: Optional[List[QuotientNode]] = None) -> List[QuotientNode]:
        path = self.out_dir / tower_file(order_exp)
        if not path.exists():
            raise CensusIncompleteError(f"census level 2^{order_exp} missing in {self.out_dir}")
        with np.load(path, allow_pickle=False) as data:
            tables = data["tables"]
            central = data["central"]
            hyperplanes = data["hyperplanes"]
            parent_ids = data["parents"]
        if parents is None:
            parents = self.load_level(order_exp - 1) if order_exp > 0 else []
        nodes = []
        for k in range(tables.shape[0]):
            pid = int(parent_ids[k])
            nodes.append(QuotientNode(
                table=CanonicalTable(tables[k], regular=True, check=False),
                order_exp=order_exp,
                parent_digest=parents[pid].digest if pid >= 0 else None,
                central_flag=int(central[k]) if central[k] >= 0 else None,
                hyperplane=int(str(hyperplanes[k]), 16) if order_exp > 0 else None,
            ))
        return nodes

    def load_records(self, order_exp: int) -> List[CensusMapRecord]:
        path = self.out_dir / maps_file(order_exp)
        if not path.exists():
            raise CensusIncompleteError(f"census map records for 2^{order_exp} missing in {self.out_dir}")
        with open(path) as fh:
            return [CensusMapRecord.model_validate_json(line) for line in fh if line.strip()]

    def load(self, through: Optional[int] = None) -> Census:
        manifest = self.load_manifest()
        last = manifest.complete_through if through is None else through
        self.require(last, manifest)
        census = Census(manifest=manifest)
        for k in range(last + 1):
            census.levels[k] = self.load_level(k, census.levels.get(k - 1, []))
            census.records[k] = self.load_records(k)
        return census

    def require(self, order_exp: int, manifest: Optional[CensusManifest] = None) -> CensusManifest:
        """The manifest, provided the census is complete through ``order_exp``."""
        manifest = manifest or self.load_manifest()
        if manifest.complete_through < order_exp:
            raise CensusIncompleteError(
                f"census in {self.out_dir} is complete through 2^{manifest.complete_through}, "
                f"2^{order_exp} needed"
            )
        return manifest

    # -- descent -------------------------------------------------------

    def _records_for(self, nodes: List[QuotientNode], pool: Optional[Executor]) -> List[CensusMapRecord]:
        keys = [n.key for n in nodes]
        results = pool.map(_record, keys, chunksize=16) if pool else map(_record, keys)
        records = []
        for node, result in zip(nodes, results):
            if result is None:
                continue
            records.append(CensusMapRecord(**result, parent_digest=node.parent_digest))
        return records

    def _next_level(self, parents: List[QuotientNode], pool: Optional[Executor]) -> List[QuotientNode]:
        keys = [p.key for p in parents]
        results = pool.map(_expand, keys) if pool else map(_expand, keys)
        found: Dict[bytes, QuotientNode] = {}
        for parent, expansion in zip(parents, results):
            for key, central, hyperplane in expansion:
                if key in found:
                    continue
                found[key] = QuotientNode(
                    table=CanonicalTable.from_key(key),
                    order_exp=parent.order_exp + 1,
                    parent_digest=parent.digest,
                    central_flag=central,
                    hyperplane=int(hyperplane, 16),
                )
                if len(found) > self.max_nodes:
                    raise CensusIncompleteError(
                        f"level 2^{parent.order_exp + 1} exceeds the node limit {self.max_nodes}"
                    )
        return [found[k] for k in sorted(found)]

    @staticmethod
    def _summarize(order_exp: int, nodes: List[QuotientNode], records: Iterable[CensusMapRecord]) -> LevelSummary:
        types: Dict[Tuple[int, int], int] = {}
        proper = 0
        for r in records:
            proper += 1
            types[(r.s_exp, r.t_exp)] = types.get((r.s_exp, r.t_exp), 0) + 1
        return LevelSummary(order_exp=order_exp, nodes=len(nodes), proper=proper, types=dict(sorted(types.items())))

    def run(self, max_exp: Optional[int] = None, *, resume: Optional[bool] = None) -> Census:
        """Extend the census through order 2^max_exp, writing each level as it completes."""
        max_exp = max_exp or settings.census_max_exp
        resume = settings.resume if resume is None else resume
        if max_exp < 1:
            raise ValueError("max_exp must be at least 1")

        if resume:
            if not self.out_dir.is_dir():
                raise CensusStateError(f"cannot resume: {self.out_dir} does not exist")
            manifest = self.load_manifest()
            manifest.max_exp = max(max_exp, manifest.max_exp)
            start = manifest.complete_through + 1
            census = self.load(manifest.complete_through)
            census.manifest = manifest
            logger.warning(f"Resuming census in {self.out_dir} after level 2^{manifest.complete_through}")
        else:
            self.out_dir.mkdir(parents=True, exist_ok=True)
            if self.exists():
                logger.warning(f"Overwriting census in {self.out_dir}")
            manifest = CensusManifest(max_exp=max_exp)
            root = trivial_node()
            census = Census(manifest=manifest, levels={0: [root]}, records={0: []})
            self._save_level(0, [root], [], [])
            manifest.levels = [self._summarize(0, [root], [])]
            manifest.complete_through = 0
            self._save_manifest(manifest)
            start = 1

        pool = ProcessPoolExecutor(max_workers=self.workers) if self.workers > 1 else None
        try:
            for k in range(start, max_exp + 1):
                logger.info(f"Census level 2^{k}: expanding {len(census.levels[k - 1])} parents")
                try:
                    nodes = self._next_level(census.levels[k - 1], pool)
                except CensusIncompleteError as e:
                    manifest.incomplete_reason = str(e)
                    manifest.complete = False
                    self._save_manifest(manifest)
                    logger.warning(f"Census stopped: {str(e)}")
                    return census
                records = self._records_for(nodes, pool)
                self._save_level(k, nodes, census.levels[k - 1], records)
                census.levels[k] = nodes
                census.records[k] = records
                summary = self._summarize(k, nodes, records)
                manifest.levels = [s for s in manifest.levels if s.order_exp != k] + [summary]
                manifest.complete_through = k
                manifest.incomplete_reason = None
                self._save_manifest(manifest)
                logger.info(f"Census level 2^{k}: {len(nodes)} nodes, {summary.proper} proper maps")
        finally:
            if pool is not None:
                pool.shutdown()

        manifest.complete = manifest.complete_through >= manifest.max_exp
        self._save_manifest(manifest)
        census.manifest = manifest
        return census

    # -- cross-check ---------------------------------------------------

    def crosscheck(self, counts_file: Path) -> List[Tuple[int, int, int]]:
        """(order_exp, expected, found) for every order listed in the counts file and in the census."""
        manifest = self.load_manifest()
        found = manifest.proper_counts()
        rows = []
        with open(counts_file, newline="") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames is None or {"order_exp", "count"} - set(reader.fieldnames):
                raise CensusStateError(f"{counts_file} needs the header order_exp,count")
            for row in reader:
                k = int(row["order_exp"])
                if k > manifest.complete_through:
                    logger.info(f"Counts file lists 2^{k}, beyond the census")
                    continue
                rows.append((k, int(row["count"]), found.get(k, 0)))
        return sorted(rows)
