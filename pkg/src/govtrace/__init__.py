"""Governance-evidence toolkit.

Library and CLI for producing, verifying, and analyzing decision-trace
evidence: tiered decision-event records, tamper-evident hash-chained logs,
delegation DAGs with responsibility attribution, cross-architecture
coverage scoring, label-free drift monitoring, and a seeded fault-injection
pipeline simulator.
"""

__version__ = "0.1.0"

from .events import (
    DecisionEvent,
    EvidenceTier,
    LogicType,
    ValidationReport,
    canonical_bytes,
    event_hash,
    validate_event,
    validate_record,
)
from .chain import TraceLog, verify_chain

__all__ = [
    "DecisionEvent",
    "EvidenceTier",
    "LogicType",
    "ValidationReport",
    "TraceLog",
    "canonical_bytes",
    "event_hash",
    "validate_event",
    "validate_record",
    "verify_chain",
]
