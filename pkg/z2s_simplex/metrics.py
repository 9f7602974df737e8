"""
Prometheus textfile export of Table 1 cells and verification check counts
"""

import logging
from typing import Dict, Iterable, Optional

from prometheus_client import CollectorRegistry, Gauge, write_to_textfile

logger = logging.getLogger(__name__)

CELL_STATUSES = ("MATCH", "MISMATCH", "SKIPPED(budget)", "SKIPPED-BY-PAPER")
CHECK_STATUSES = ("passed", "failed", "reported", "skipped")


def _build_metrics(registry: CollectorRegistry) -> Dict[str, Gauge]:
    return {
        'cell_kernel_dimension': Gauge(
            'z2s_cell_kernel_dimension',
            'Computed kernel dimension of the Gray image',
            ['ring', 'family', 'k'],
            registry=registry
        ),
        'cell_rank': Gauge(
            'z2s_cell_rank',
            'Computed rank of the Gray image',
            ['ring', 'family', 'k'],
            registry=registry
        ),
        'cell_status': Gauge(
            'z2s_cell_status',
            'Comparison status of a published cell (1 for the current status)',
            ['ring', 'family', 'k', 'status'],
            registry=registry
        ),
        'checks': Gauge(
            'z2s_verification_checks',
            'Number of verification checks by status',
            ['status'],
            registry=registry
        ),
    }


def write_metrics(path: str, cells: Optional[Iterable[Dict]] = None, checks: Optional[Iterable[Dict]] = None) -> None:
    """
    Write metrics in the Prometheus text format

    Args:
        path: Output file for the node-exporter textfile collector
        cells: Table 1 cell dicts as produced by reproduce_table1
        checks: Check dicts as produced by SuiteVerifier
    """
    registry = CollectorRegistry()
    metrics = _build_metrics(registry)

    for cell in cells or []:
        labels = {'ring': cell['ring'], 'family': cell['family'], 'k': str(cell['k'])}
        if cell.get('computed'):
            ker, rank = cell['computed']
            metrics['cell_kernel_dimension'].labels(**labels).set(ker)
            metrics['cell_rank'].labels(**labels).set(rank)
        for status in CELL_STATUSES:
            metrics['cell_status'].labels(status=status, **labels).set(1 if cell['status'] == status else 0)

    if checks is not None:
        checks = list(checks)
        for status in CHECK_STATUSES:
            metrics['checks'].labels(status=status).set(sum(1 for c in checks if c['status'] == status))

    write_to_textfile(path, registry)
    logger.info(f"Metrics written to: {path}")
