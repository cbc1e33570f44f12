"""Append-only, hash-chained, sequence-numbered trace logs.

Each appended event is stamped with a dense sequence number and a SHA-256
hash chain: ``this_hash`` covers the event's canonical bytes (which exclude
the hash fields themselves) and ``prev_hash`` links to the previous entry,
with a genesis sentinel of 64 zero hex chars at the start.  Verification
recomputes every hash and link, so flipping any bit of a stored entry
surfaces as a reported violation.

A log maps 1:1 onto a JSON Lines trace file; a small sidecar head file
(``<trace>.head``) holds the entry count and head hash for fast resume.

Concurrency contract: at most one appender at a time per log.  Readers and
verifiers may run concurrently on an immutable snapshot.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, replace
from pathlib import Path

from .errors import InvalidEventError, MalformedEventError
from .events import (
    DecisionEvent,
    HashChain,
    canonical_record_bytes,
    event_from_dict,
    event_to_dict,
    validate_record,
)

GENESIS_HASH = "0" * 64

HASH_MISMATCH = "HASH_MISMATCH"
LINK_BROKEN = "LINK_BROKEN"
SEQUENCE_GAP = "SEQUENCE_GAP"
SEQUENCE_DUPLICATE = "SEQUENCE_DUPLICATE"


@dataclass(frozen=True)
class ChainViolation:
    index: int
    kind: str


@dataclass(frozen=True)
class ChainReport:
    valid: bool
    first_violation: ChainViolation | None
    checked_count: int

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "first_violation": None
            if self.first_violation is None
            else {"index": self.first_violation.index, "kind": self.first_violation.kind},
            "checked_count": self.checked_count,
        }


class TraceLog:
    """Ordered store of stamped decision events.

    ``append`` validates, stamps, and links; it never touches existing
    entries, and nothing here exposes mutation or deletion.
    """

    def __init__(self, entries: list[DecisionEvent] | tuple[DecisionEvent, ...] = ()):
        self._entries: list[DecisionEvent] = list(entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __getitem__(self, i: int) -> DecisionEvent:
        return self._entries[i]

    @property
    def entries(self) -> tuple[DecisionEvent, ...]:
        return tuple(self._entries)

    @property
    def head_hash(self) -> str:
        if not self._entries:
            return GENESIS_HASH
        hc = self._entries[-1].temporal.hash_chain
        return hc.this_hash if hc is not None else GENESIS_HASH

    def append(self, event: DecisionEvent) -> "TraceLog":
        """Validate, stamp, and append one event; rejection is atomic.

        The event's sequence number and hash chain may be unset; both are
        assigned here.  Raises :class:`InvalidEventError` (and leaves the
        log unchanged) if the event fails tier validation.
        """
        record = event_to_dict(event)
        report = validate_record(record, require_chain_fields=False)
        if not report.valid:
            raise InvalidEventError(
                f"event {event.event_id} failed validation: "
                + "; ".join(f"{v.field_path}:{v.code}" for v in report.violations),
                violations=report.violations,
            )
        seq = len(self._entries)
        record.setdefault("temporal", {})["sequence_number"] = seq
        this_hash = hashlib.sha256(canonical_record_bytes(record)).hexdigest()
        stamped = replace(
            event,
            temporal=replace(
                event.temporal,
                sequence_number=seq,
                hash_chain=HashChain(prev_hash=self.head_hash, this_hash=this_hash),
            ),
        )
        self._entries.append(stamped)
        return self


def verify_chain(log: TraceLog) -> ChainReport:
    """Recompute every hash and link; report the first violation found.

    Never raises: tampering, gaps, and broken links come back as a report.
    ``checked_count`` is the number of entries inspected before stopping
    (all of them when the chain is clean).
    """
    seen_seqs: set[int] = set()
    prev = GENESIS_HASH
    for i, event in enumerate(log):
        t = event.temporal
        if t.sequence_number != i:
            kind = (
                SEQUENCE_DUPLICATE
                if isinstance(t.sequence_number, int) and t.sequence_number in seen_seqs
                else SEQUENCE_GAP
            )
            return ChainReport(False, ChainViolation(i, kind), i + 1)
        seen_seqs.add(i)
        if t.hash_chain is None or t.hash_chain.prev_hash != prev:
            return ChainReport(False, ChainViolation(i, LINK_BROKEN), i + 1)
        recomputed = hashlib.sha256(canonical_record_bytes(event_to_dict(event))).hexdigest()
        if recomputed != t.hash_chain.this_hash:
            return ChainReport(False, ChainViolation(i, HASH_MISMATCH), i + 1)
        prev = t.hash_chain.this_hash
    return ChainReport(True, None, len(log))


# ---------------------------------------------------------------------------
# File persistence (JSON Lines + head sidecar)
# ---------------------------------------------------------------------------


def head_path(trace_path: str | Path) -> Path:
    return Path(str(trace_path) + ".head")


def write_trace_file(log: TraceLog, path: str | Path) -> None:
    """One event per line, plus the ``.head`` sidecar."""
    p = Path(path)
    with p.open("w", encoding="utf-8") as fh:
        for event in log:
            fh.write(
                json.dumps(event_to_dict(event), sort_keys=True, separators=(",", ":")) + "\n"
            )
    head_path(p).write_text(f"{len(log)}\n{log.head_hash}\n", encoding="utf-8")


def read_trace_file(path: str | Path) -> TraceLog:
    """Parse a trace file as stored — no re-stamping, no verification."""
    entries = []
    with Path(path).open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as e:
                raise MalformedEventError(f"{path}:{lineno}: not valid JSON: {e}") from e
            entries.append(event_from_dict(record))
    return TraceLog(entries)


def read_head_file(path: str | Path) -> tuple[int, str]:
    """(entry_count, head_hash) from a sidecar head file."""
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if len(lines) < 2:
        raise MalformedEventError(f"{path}: head file must have two lines")
    return int(lines[0]), lines[1].strip()
