"""
Parameter sweeps over a family, streamed as CSV or JSON lines.
"""

import csv
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterable, List, TextIO

from circburn.core.config.settings import settings
from circburn.core.errors.exceptions import ExactCapExceededException
from circburn.features.reports.schemas import (
    CSV_HEADER,
    CampaignRequest,
    CampaignSummary,
    InstanceRequest,
    TableFormat,
    TableRow,
)
from circburn.features.reports.service.instances import run_instance

logger = logging.getLogger(__name__)


def _in_domain(family: str, n: int, m: int) -> bool:
    if family == "3reg":
        return n >= 4 and n % 2 == 0
    if family == "m2":
        return n >= 5
    if family == "m3":
        return n >= 7
    if family == "interval":
        return m >= 2 and n > 2 * m
    if family == "general":
        return m >= 2 and 2 * m < n
    # product: G = C(n;1,m), or C(n;1) without an m range
    return m == 1 or 2 * m <= n


def expand_instances(request: CampaignRequest) -> List[InstanceRequest]:
    """
    Instances ordered by n then m; pairs outside a family's domain are skipped.
    """
    n_low, n_high = request.n_range
    uses_m = request.family in ("general", "interval", "product")
    if uses_m and request.m_range is not None:
        m_values = list(range(request.m_range[0], request.m_range[1] + 1))
    elif request.family == "product":
        m_values = [1]
    else:
        m_values = [None]

    instances = []
    for n in range(n_low, n_high + 1):
        for m in m_values:
            if m is None and request.family in ("general", "interval"):
                continue
            if not _in_domain(request.family, n, m or 0):
                continue
            instances.append(
                InstanceRequest(
                    family=request.family,
                    n=n,
                    m=m,
                    distances=(1,) if request.family == "product" and m == 1 else None,
                    exact=request.exact,
                    exact_cap=request.exact_cap,
                )
            )
    return instances


def write_rows(rows: Iterable[TableRow], fmt: TableFormat, handle: TextIO) -> None:
    if fmt == "jsonl":
        for row in rows:
            handle.write(row.model_dump_json() + "\n")
        return
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.to_record())


def read_rows(path: Path, fmt: TableFormat) -> List[TableRow]:
    """Parse a table written by write_rows."""
    with Path(path).open(encoding="utf-8", newline="") as handle:
        if fmt == "jsonl":
            return [TableRow.model_validate_json(line) for line in handle if line.strip()]
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None:
            return []
        if tuple(header) != CSV_HEADER:
            raise ValueError(f"unexpected CSV header {header}")
        return [TableRow.from_record(record) for record in reader]


def run_campaign(request: CampaignRequest, handle: TextIO) -> CampaignSummary:
    """
    Compute every instance of the sweep and write the table to handle.

    Rows are computed in a process pool when workers > 1 and written in
    instance order either way.
    """
    instances = expand_instances(request)
    cap = settings.EXACT_CAP if request.exact_cap is None else request.exact_cap
    if request.exact:
        orders = [i.n * i.h_n if i.family == "product" else i.n for i in instances]
        too_big = [order for order in orders if order > cap]
        if too_big:
            raise ExactCapExceededException(
                detail=f"exact search limited to n <= {cap}, campaign reaches n = {max(too_big)}"
            )

    started = time.perf_counter()
    if request.workers > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=request.workers) as pool:
            rows = list(pool.map(run_instance, instances))
    else:
        rows = [run_instance(instance) for instance in instances]
    write_rows(rows, request.format, handle)

    summary = CampaignSummary(
        instances=len(rows),
        mismatches=sum(1 for row in rows if row.mismatch),
        seconds=time.perf_counter() - started,
    )
    logger.info(f"{request.family} campaign: {summary.line()}")
    return summary
