"""Decision-event records: tiered schema, validation, canonical serialization.

A decision event is one per-decision evidence record carrying six property
groups (context, logic, boundary, quality, override, temporal) plus an
envelope (schema version, event id, tier, outcome).  Records travel as JSON
Lines, one event per line; the dict produced by :func:`event_to_dict` is the
interchange form consumed by every other module and by the CLI.

Completeness is tiered.  ``lightweight`` events carry only the required
core, ``sampled`` adds abbreviated logic and context, ``full`` populates
every group.  The required-field sets are nested, so an event valid at a
higher tier is valid at every lower one.
"""

from __future__ import annotations

import hashlib
import json
import math
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable

from .errors import MalformedEventError, NonFiniteNumberError

SCHEMA_VERSION = "0.3.0"

_EVENT_ID_RE = re.compile(r"^[0-9a-f]{32}$")


class EvidenceTier(Enum):
    LIGHTWEIGHT = "lightweight"
    SAMPLED = "sampled"
    FULL = "full"


class LogicType(Enum):
    RULE_BASED = "rule_based"
    ML_INFERENCE = "ml_inference"
    HYBRID = "hybrid"
    AGENTIC_DELEGATION = "agentic_delegation"


# ---------------------------------------------------------------------------
# Record types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConstraintCheck:
    constraint_id: str
    result: bool


@dataclass(frozen=True)
class RationaleRecord:
    """Structured decision rationale for delegating agents.

    Captures the mandate the agent operated under, the constraints it
    checked, and why it selected a tool or sub-agent.  ``anchor_refs`` point
    at deterministic execution proofs (constraint-check events, gate
    outcomes); a rationale with no anchors is admissible but counts as
    unanchored in sufficiency scoring.
    """

    mandate_ref: str
    constraints_evaluated: tuple[ConstraintCheck, ...] = ()
    selection_justification: str = ""
    anchor_refs: tuple[str, ...] = ()


@dataclass(frozen=True)
class RuleRef:
    rule_id: str
    rule_version: str
    evaluation_path: tuple[str, ...] = ()


@dataclass(frozen=True)
class ModelInference:
    model_id: str
    model_version: str
    feature_vector_hash: str
    confidence: float


@dataclass(frozen=True)
class DecisionContext:
    input_refs: tuple[str, ...] = ()
    feature_vector: dict[str, float] = field(default_factory=dict)
    provenance_refs: tuple[str, ...] = ()
    context_summary: str | None = None


@dataclass(frozen=True)
class DecisionLogic:
    logic_type: LogicType
    rule_refs: tuple[RuleRef, ...] = ()
    model_inference: ModelInference | None = None
    rationale: RationaleRecord | None = None


@dataclass(frozen=True)
class BoundaryContract:
    interface_id: str
    contract_descriptor: str


@dataclass(frozen=True)
class DecisionBoundary:
    thresholds: dict[str, float] = field(default_factory=dict)
    upstream_decisions: tuple[str, ...] = ()
    downstream_consumers: tuple[str, ...] = ()
    boundary_contracts: tuple[BoundaryContract, ...] = ()


@dataclass(frozen=True)
class QualityIndicators:
    score: float | None = None
    confidence: float | None = None
    uncertainty: float | None = None
    calibration_ref: str | None = None


@dataclass(frozen=True)
class OverrideTrigger:
    rule_id: str
    threshold_exceeded: float
    risk_category: str
    authority: str


@dataclass(frozen=True)
class OverrideRecord:
    """Authority-intervention record; ``override_occurred`` is mandatory in
    every tier and logic type."""

    override_occurred: bool
    trigger: OverrideTrigger | None = None
    note: str | None = None

    @property
    def classification(self) -> str | None:
        """"structured" / "discretionary" for overrides, None otherwise."""
        if not self.override_occurred:
            return None
        return "structured" if self.trigger is not None else "discretionary"


@dataclass(frozen=True)
class HashChain:
    prev_hash: str
    this_hash: str


@dataclass(frozen=True)
class TemporalMetadata:
    event_timestamp: int | None = None  # ns since Unix epoch, UTC
    sequence_number: int | None = None
    hash_chain: HashChain | None = None
    agent_clock: int | None = None


@dataclass(frozen=True)
class Outcome:
    decision_label: str
    decision_value: float | None = None


@dataclass(frozen=True)
class DecisionEvent:
    event_id: str
    tier: EvidenceTier
    logic: DecisionLogic
    outcome: Outcome
    override: OverrideRecord
    temporal: TemporalMetadata = TemporalMetadata()
    context: DecisionContext = DecisionContext()
    boundary: DecisionBoundary = DecisionBoundary()
    quality: QualityIndicators = QualityIndicators()
    schema_version: str = SCHEMA_VERSION


# ---------------------------------------------------------------------------
# Dict interchange form
# ---------------------------------------------------------------------------


def _prune(d: dict) -> dict:
    """Drop absent optionals so the serialized form omits them entirely."""
    return {k: v for k, v in d.items() if v is not None}


def event_to_dict(event: DecisionEvent) -> dict:
    """Interchange dict for one event (nested groups, snake_case keys)."""
    logic: dict[str, Any] = {"logic_type": event.logic.logic_type.value}
    if event.logic.rule_refs:
        logic["rule_refs"] = [
            {
                "rule_id": r.rule_id,
                "rule_version": r.rule_version,
                "evaluation_path": list(r.evaluation_path),
            }
            for r in event.logic.rule_refs
        ]
    if event.logic.model_inference is not None:
        mi = event.logic.model_inference
        logic["model_inference"] = {
            "model_id": mi.model_id,
            "model_version": mi.model_version,
            "feature_vector_hash": mi.feature_vector_hash,
            "confidence": float(mi.confidence),
        }
    if event.logic.rationale is not None:
        r = event.logic.rationale
        logic["rationale"] = {
            "mandate_ref": r.mandate_ref,
            "constraints_evaluated": [
                {"constraint_id": c.constraint_id, "result": c.result}
                for c in r.constraints_evaluated
            ],
            "selection_justification": r.selection_justification,
            "anchor_refs": list(r.anchor_refs),
        }

    context = _prune(
        {
            "input_refs": list(event.context.input_refs) or None,
            "feature_vector": {k: float(v) for k, v in event.context.feature_vector.items()}
            or None,
            "provenance_refs": list(event.context.provenance_refs) or None,
            "context_summary": event.context.context_summary,
        }
    )

    boundary = _prune(
        {
            "thresholds": {k: float(v) for k, v in event.boundary.thresholds.items()} or None,
            # upstream_decisions is kept even when empty: a first-in-chain
            # decision legitimately has none.
            "upstream_decisions": list(event.boundary.upstream_decisions),
            "downstream_consumers": list(event.boundary.downstream_consumers) or None,
            "boundary_contracts": [
                {"interface_id": c.interface_id, "contract_descriptor": c.contract_descriptor}
                for c in event.boundary.boundary_contracts
            ]
            or None,
        }
    )

    quality = _prune(
        {
            "score": None if event.quality.score is None else float(event.quality.score),
            "confidence": None
            if event.quality.confidence is None
            else float(event.quality.confidence),
            "uncertainty": None
            if event.quality.uncertainty is None
            else float(event.quality.uncertainty),
            "calibration_ref": event.quality.calibration_ref,
        }
    )

    override: dict[str, Any] = {"override_occurred": event.override.override_occurred}
    if event.override.trigger is not None:
        t = event.override.trigger
        override["trigger"] = {
            "rule_id": t.rule_id,
            "threshold_exceeded": float(t.threshold_exceeded),
            "risk_category": t.risk_category,
            "authority": t.authority,
        }
    if event.override.note is not None:
        override["note"] = event.override.note

    temporal = _prune(
        {
            "event_timestamp": event.temporal.event_timestamp,
            "sequence_number": event.temporal.sequence_number,
            "hash_chain": None
            if event.temporal.hash_chain is None
            else {
                "prev_hash": event.temporal.hash_chain.prev_hash,
                "this_hash": event.temporal.hash_chain.this_hash,
            },
            "agent_clock": event.temporal.agent_clock,
        }
    )

    outcome = _prune(
        {
            "decision_label": event.outcome.decision_label,
            "decision_value": None
            if event.outcome.decision_value is None
            else float(event.outcome.decision_value),
        }
    )

    d: dict[str, Any] = {
        "schema_version": event.schema_version,
        "event_id": event.event_id,
        "tier": event.tier.value,
        "logic": logic,
        "override": override,
        "temporal": temporal,
        "outcome": outcome,
    }
    if context:
        d["context"] = context
    if boundary:
        d["boundary"] = boundary
    if quality:
        d["quality"] = quality
    return d


def _expect(d: dict, key: str, types, where: str, optional: bool = False):
    v = d.get(key)
    if v is None:
        if optional:
            return None
        raise MalformedEventError(f"{where}.{key} missing")
    if types is float and isinstance(v, (int, float)) and not isinstance(v, bool):
        return float(v)
    if not isinstance(v, types) or (types is int and isinstance(v, bool)):
        raise MalformedEventError(f"{where}.{key} has wrong type {type(v).__name__}")
    return v


def event_from_dict(d: dict) -> DecisionEvent:
    """Parse one interchange dict into a typed event.

    Structural typing only — tier rules and invariants are the job of
    :func:`validate_record`.  Unknown keys are rejected: the canonical hash
    is defined over schema fields only, so extra keys would silently fall
    out of the integrity envelope.
    """
    if not isinstance(d, dict):
        raise MalformedEventError("event record must be an object")
    known = {
        "schema_version",
        "event_id",
        "tier",
        "context",
        "logic",
        "boundary",
        "quality",
        "override",
        "temporal",
        "outcome",
    }
    unknown = set(d) - known
    if unknown:
        raise MalformedEventError(f"unknown top-level keys: {sorted(unknown)}")

    try:
        tier = EvidenceTier(_expect(d, "tier", str, "event"))
    except ValueError as e:
        raise MalformedEventError(f"unknown tier: {d.get('tier')!r}") from e

    ld = _expect(d, "logic", dict, "event")
    try:
        logic_type = LogicType(_expect(ld, "logic_type", str, "logic"))
    except ValueError as e:
        raise MalformedEventError(f"unknown logic_type: {ld.get('logic_type')!r}") from e

    rule_refs = tuple(
        RuleRef(
            rule_id=_expect(r, "rule_id", str, "rule_refs"),
            rule_version=_expect(r, "rule_version", str, "rule_refs"),
            evaluation_path=tuple(_expect(r, "evaluation_path", list, "rule_refs")),
        )
        for r in ld.get("rule_refs", [])
    )
    mi = None
    if "model_inference" in ld:
        m = _expect(ld, "model_inference", dict, "logic")
        mi = ModelInference(
            model_id=_expect(m, "model_id", str, "model_inference"),
            model_version=_expect(m, "model_version", str, "model_inference"),
            feature_vector_hash=_expect(m, "feature_vector_hash", str, "model_inference"),
            confidence=_expect(m, "confidence", float, "model_inference"),
        )
    rationale = None
    if "rationale" in ld:
        r = _expect(ld, "rationale", dict, "logic")
        rationale = RationaleRecord(
            mandate_ref=_expect(r, "mandate_ref", str, "rationale"),
            constraints_evaluated=tuple(
                ConstraintCheck(
                    constraint_id=_expect(c, "constraint_id", str, "constraints_evaluated"),
                    result=_expect(c, "result", bool, "constraints_evaluated"),
                )
                for c in r.get("constraints_evaluated", [])
            ),
            selection_justification=r.get("selection_justification", ""),
            anchor_refs=tuple(r.get("anchor_refs", [])),
        )

    cd = d.get("context", {})
    context = DecisionContext(
        input_refs=tuple(cd.get("input_refs", [])),
        feature_vector={k: float(v) for k, v in cd.get("feature_vector", {}).items()},
        provenance_refs=tuple(cd.get("provenance_refs", [])),
        context_summary=cd.get("context_summary"),
    )

    bd = d.get("boundary", {})
    boundary = DecisionBoundary(
        thresholds={k: float(v) for k, v in bd.get("thresholds", {}).items()},
        upstream_decisions=tuple(bd.get("upstream_decisions", [])),
        downstream_consumers=tuple(bd.get("downstream_consumers", [])),
        boundary_contracts=tuple(
            BoundaryContract(
                interface_id=_expect(c, "interface_id", str, "boundary_contracts"),
                contract_descriptor=_expect(c, "contract_descriptor", str, "boundary_contracts"),
            )
            for c in bd.get("boundary_contracts", [])
        ),
    )

    qd = d.get("quality", {})
    quality = QualityIndicators(
        score=_expect(qd, "score", float, "quality", optional=True),
        confidence=_expect(qd, "confidence", float, "quality", optional=True),
        uncertainty=_expect(qd, "uncertainty", float, "quality", optional=True),
        calibration_ref=qd.get("calibration_ref"),
    )

    od = _expect(d, "override", dict, "event")
    trigger = None
    if "trigger" in od:
        t = _expect(od, "trigger", dict, "override")
        trigger = OverrideTrigger(
            rule_id=_expect(t, "rule_id", str, "trigger"),
            threshold_exceeded=_expect(t, "threshold_exceeded", float, "trigger"),
            risk_category=_expect(t, "risk_category", str, "trigger"),
            authority=_expect(t, "authority", str, "trigger"),
        )
    override = OverrideRecord(
        override_occurred=_expect(od, "override_occurred", bool, "override"),
        trigger=trigger,
        note=od.get("note"),
    )

    td = d.get("temporal", {})
    hc = None
    if "hash_chain" in td:
        h = _expect(td, "hash_chain", dict, "temporal")
        hc = HashChain(
            prev_hash=_expect(h, "prev_hash", str, "hash_chain"),
            this_hash=_expect(h, "this_hash", str, "hash_chain"),
        )
    temporal = TemporalMetadata(
        event_timestamp=_expect(td, "event_timestamp", int, "temporal", optional=True),
        sequence_number=_expect(td, "sequence_number", int, "temporal", optional=True),
        hash_chain=hc,
        agent_clock=_expect(td, "agent_clock", int, "temporal", optional=True),
    )

    ud = _expect(d, "outcome", dict, "event")
    outcome = Outcome(
        decision_label=_expect(ud, "decision_label", str, "outcome"),
        decision_value=_expect(ud, "decision_value", float, "outcome", optional=True),
    )

    return DecisionEvent(
        schema_version=_expect(d, "schema_version", str, "event"),
        event_id=_expect(d, "event_id", str, "event"),
        tier=tier,
        context=context,
        logic=DecisionLogic(
            logic_type=logic_type, rule_refs=rule_refs, model_inference=mi, rationale=rationale
        ),
        boundary=boundary,
        quality=quality,
        override=override,
        temporal=temporal,
        outcome=outcome,
    )


# ---------------------------------------------------------------------------
# Canonical serialization and hashing
# ---------------------------------------------------------------------------


def _check_finite(value, path: str) -> None:
    if isinstance(value, float) and not math.isfinite(value):
        raise NonFiniteNumberError(f"non-finite number at {path}: {value!r}")
    if isinstance(value, dict):
        for k, v in value.items():
            _check_finite(v, f"{path}.{k}")
    elif isinstance(value, list):
        for i, v in enumerate(value):
            _check_finite(v, f"{path}[{i}]")


def canonical_record_bytes(record: dict) -> bytes:
    """Canonical bytes of an interchange dict.

    Deterministic regardless of construction order: UTF-8, keys sorted
    bytewise, shortest round-trip numbers, absent optionals omitted.  The
    ``hash_chain`` fields are excluded — the hash cannot cover itself.
    """
    d = {k: v for k, v in record.items()}
    t = d.get("temporal")
    if isinstance(t, dict) and "hash_chain" in t:
        d["temporal"] = {k: v for k, v in t.items() if k != "hash_chain"}
    _check_finite(d, "event")
    return json.dumps(d, sort_keys=True, separators=(",", ":"), ensure_ascii=False).encode("utf-8")


def canonical_bytes(event: DecisionEvent) -> bytes:
    return canonical_record_bytes(event_to_dict(event))


def event_hash(event: DecisionEvent) -> str:
    """SHA-256 over canonical bytes, lowercase hex."""
    return hashlib.sha256(canonical_bytes(event)).hexdigest()


def feature_vector_hash(feature_vector: dict[str, float]) -> str:
    """Canonical digest of a feature map; what ``model_inference`` must carry."""
    payload = json.dumps(
        {k: float(v) for k, v in feature_vector.items()},
        sort_keys=True,
        separators=(",", ":"),
        ensure_ascii=False,
    ).encode("utf-8")
    return hashlib.sha256(payload).hexdigest()


# ---------------------------------------------------------------------------
# Tier-required field slots
# ---------------------------------------------------------------------------

# A slot is one required unit of evidence: a field path plus a populated-
# predicate over the interchange dict.  Sampled-tier slots may be
# disjunctive (any listed source satisfies the slot).  The per-tier slot
# sets are nested by construction, which is what makes tier validity
# monotone.


@dataclass(frozen=True)
class FieldSlot:
    path: str
    populated: Callable[[dict], bool]
    code: str = "MISSING_REQUIRED_FIELD"


def _get(d: dict, *keys):
    cur: Any = d
    for k in keys:
        if not isinstance(cur, dict):
            return None
        cur = cur.get(k)
    return cur


def _nonempty(v) -> bool:
    if v is None:
        return False
    if isinstance(v, str):
        return v != ""
    if isinstance(v, (list, dict)):
        return len(v) > 0
    return True


def _has(d: dict, *keys) -> bool:
    return _nonempty(_get(d, *keys))


def _has_chain(d: dict) -> bool:
    hc = _get(d, "temporal", "hash_chain")
    return isinstance(hc, dict) and _nonempty(hc.get("prev_hash")) and _nonempty(hc.get("this_hash"))


def _logic_detail_present(d: dict) -> bool:
    # Abbreviated logic: rule refs, a model-inference summary, or a
    # delegation rationale all qualify.
    return (
        _has(d, "logic", "rule_refs")
        or isinstance(_get(d, "logic", "model_inference"), dict)
        or isinstance(_get(d, "logic", "rationale"), dict)
    )


_LIGHTWEIGHT_SLOTS: tuple[FieldSlot, ...] = (
    FieldSlot("schema_version", lambda d: _has(d, "schema_version"), "MISSING_SCHEMA_VERSION"),
    FieldSlot("event_id", lambda d: _has(d, "event_id")),
    FieldSlot("tier", lambda d: _has(d, "tier")),
    FieldSlot("logic.logic_type", lambda d: _has(d, "logic", "logic_type")),
    FieldSlot("outcome.decision_label", lambda d: _has(d, "outcome", "decision_label")),
    FieldSlot(
        "override.override_occurred",
        lambda d: isinstance(_get(d, "override", "override_occurred"), bool),
        "MISSING_MANDATORY",
    ),
    FieldSlot(
        "temporal.event_timestamp",
        lambda d: isinstance(_get(d, "temporal", "event_timestamp"), int),
    ),
    FieldSlot(
        "temporal.sequence_number",
        lambda d: isinstance(_get(d, "temporal", "sequence_number"), int),
    ),
    FieldSlot("temporal.hash_chain", _has_chain),
)

_SAMPLED_EXTRA: tuple[FieldSlot, ...] = (
    FieldSlot(
        "feature_vector|feature_vector_hash",
        lambda d: _has(d, "context", "feature_vector")
        or _has(d, "logic", "model_inference", "feature_vector_hash"),
    ),
    FieldSlot("logic.rule_refs|model_inference|rationale", _logic_detail_present),
    FieldSlot("context.context_summary", lambda d: _has(d, "context", "context_summary")),
)

_FULL_COMMON: tuple[FieldSlot, ...] = (
    FieldSlot("context.input_refs", lambda d: _has(d, "context", "input_refs")),
    FieldSlot("context.feature_vector", lambda d: _has(d, "context", "feature_vector")),
    FieldSlot("context.provenance_refs", lambda d: _has(d, "context", "provenance_refs")),
    FieldSlot("context.context_summary", lambda d: _has(d, "context", "context_summary")),
    FieldSlot("boundary.thresholds", lambda d: _has(d, "boundary", "thresholds")),
    # Empty is legitimate for a first-in-chain decision; presence of the
    # field (the array) is what full tier requires.
    FieldSlot(
        "boundary.upstream_decisions",
        lambda d: isinstance(_get(d, "boundary", "upstream_decisions"), list),
    ),
    FieldSlot(
        "boundary.downstream_consumers", lambda d: _has(d, "boundary", "downstream_consumers")
    ),
    FieldSlot("boundary.boundary_contracts", lambda d: _has(d, "boundary", "boundary_contracts")),
    FieldSlot("quality.score", lambda d: _get(d, "quality", "score") is not None),
    FieldSlot("quality.confidence", lambda d: _get(d, "quality", "confidence") is not None),
    FieldSlot("quality.uncertainty", lambda d: _get(d, "quality", "uncertainty") is not None),
    FieldSlot("quality.calibration_ref", lambda d: _has(d, "quality", "calibration_ref")),
    FieldSlot("temporal.agent_clock", lambda d: isinstance(_get(d, "temporal", "agent_clock"), int)),
)

_RULE_REFS_SLOT = FieldSlot("logic.rule_refs", lambda d: _has(d, "logic", "rule_refs"))
_MODEL_INFERENCE_SLOT = FieldSlot(
    "logic.model_inference", lambda d: isinstance(_get(d, "logic", "model_inference"), dict)
)
_RATIONALE_SLOT = FieldSlot(
    "logic.rationale", lambda d: isinstance(_get(d, "logic", "rationale"), dict)
)


def required_slots(tier: EvidenceTier, logic_type: LogicType) -> tuple[FieldSlot, ...]:
    """The required evidence slots for one tier/logic-type combination.

    Lightweight is 9 slots; sampled adds 3; full adds the remaining group
    fields plus the logic detail the logic type demands (both rule refs and
    model inference for hybrid, hence 24 slots there).
    """
    slots = list(_LIGHTWEIGHT_SLOTS)
    if tier is EvidenceTier.LIGHTWEIGHT:
        return tuple(slots)
    slots += list(_SAMPLED_EXTRA)
    if tier is EvidenceTier.SAMPLED:
        return tuple(slots)
    # Full: replace the disjunctive sampled slots with the concrete fields.
    slots = list(_LIGHTWEIGHT_SLOTS) + list(_FULL_COMMON)
    if logic_type in (LogicType.RULE_BASED, LogicType.HYBRID):
        slots.append(_RULE_REFS_SLOT)
    if logic_type in (LogicType.ML_INFERENCE, LogicType.HYBRID):
        slots.append(_MODEL_INFERENCE_SLOT)
    if logic_type is LogicType.AGENTIC_DELEGATION:
        slots.append(_RATIONALE_SLOT)
    return tuple(slots)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    field_path: str
    code: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    violations: tuple[Violation, ...]

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [
                {"field_path": v.field_path, "code": v.code, "message": v.message}
                for v in self.violations
            ],
        }


def _real(
    record: dict, path: tuple[str, ...], out: list[Violation], lo: float | None, hi: float | None
) -> None:
    v = _get(record, *path)
    dotted = ".".join(path)
    if v is None:
        return
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        out.append(Violation(dotted, "TYPE_MISMATCH", f"{dotted} must be a number"))
        return
    if not math.isfinite(float(v)):
        out.append(Violation(dotted, "NON_FINITE_NUMBER", f"{dotted} is not finite"))
        return
    if lo is not None and v < lo:
        out.append(Violation(dotted, "OUT_OF_RANGE", f"{dotted}={v} below {lo}"))
    if hi is not None and v > hi:
        out.append(Violation(dotted, "OUT_OF_RANGE", f"{dotted}={v} above {hi}"))


def validate_record(record: dict, *, require_chain_fields: bool = True) -> ValidationReport:
    """Validate one interchange dict against its declared tier.

    Total: any dict yields a report listing every violation found, never an
    exception.  ``require_chain_fields=False`` relaxes the sequence-number /
    hash-chain slots for events that are about to be stamped by a log
    append.
    """
    out: list[Violation] = []
    if not isinstance(record, dict):
        return ValidationReport(
            False, (Violation("", "TYPE_MISMATCH", "event record must be an object"),)
        )

    sv = record.get("schema_version")
    if not isinstance(sv, str) or sv == "":
        out.append(
            Violation("schema_version", "MISSING_SCHEMA_VERSION", "schema_version must be set")
        )

    eid = record.get("event_id")
    if isinstance(eid, str) and eid and not _EVENT_ID_RE.match(eid):
        out.append(
            Violation("event_id", "BAD_IDENTIFIER", "event_id must be 32 lowercase hex chars")
        )

    tier_raw = record.get("tier")
    tier: EvidenceTier | None = None
    if isinstance(tier_raw, str):
        try:
            tier = EvidenceTier(tier_raw)
        except ValueError:
            out.append(Violation("tier", "BAD_ENUM", f"unknown tier {tier_raw!r}"))

    lt_raw = _get(record, "logic", "logic_type")
    logic_type: LogicType | None = None
    if isinstance(lt_raw, str):
        try:
            logic_type = LogicType(lt_raw)
        except ValueError:
            out.append(Violation("logic.logic_type", "BAD_ENUM", f"unknown logic_type {lt_raw!r}"))

    # The mandatory boolean: absence fails validation in every tier and
    # logic type, and a non-boolean value is just as absent.
    if not isinstance(_get(record, "override", "override_occurred"), bool):
        out.append(
            Violation(
                "override.override_occurred",
                "MISSING_MANDATORY",
                "override_occurred is mandatory in all tiers",
            )
        )

    # Tier-required slots.
    effective_tier = tier or EvidenceTier.LIGHTWEIGHT
    effective_logic = logic_type or LogicType.RULE_BASED
    relaxed = {"temporal.sequence_number", "temporal.hash_chain"} if not require_chain_fields else set()
    for slot in required_slots(effective_tier, effective_logic):
        if slot.path in relaxed:
            continue
        if slot.code == "MISSING_MANDATORY":
            continue  # reported above, once
        if slot.code == "MISSING_SCHEMA_VERSION" and out and out[0].code == "MISSING_SCHEMA_VERSION":
            continue
        if not slot.populated(record):
            out.append(
                Violation(slot.path, slot.code, f"{slot.path} required in {effective_tier.value} tier")
            )

    # Logic-type consistency.
    has_rules = _has(record, "logic", "rule_refs")
    has_mi = isinstance(_get(record, "logic", "model_inference"), dict)
    if logic_type is LogicType.RULE_BASED:
        if not has_rules:
            out.append(
                Violation("logic.rule_refs", "LOGIC_MISMATCH", "rule_based requires rule_refs")
            )
        if has_mi:
            out.append(
                Violation(
                    "logic.model_inference",
                    "LOGIC_MISMATCH",
                    "rule_based must not carry model_inference",
                )
            )
    elif logic_type is LogicType.ML_INFERENCE and not has_mi:
        out.append(
            Violation(
                "logic.model_inference", "LOGIC_MISMATCH", "ml_inference requires model_inference"
            )
        )
    elif logic_type is LogicType.HYBRID and not (has_rules and has_mi):
        out.append(
            Violation(
                "logic", "LOGIC_MISMATCH", "hybrid requires both rule_refs and model_inference"
            )
        )

    # Quality: a score backs every non-deterministic decision.
    if (
        logic_type is not None
        and logic_type is not LogicType.RULE_BASED
        and isinstance(record.get("quality"), dict)
        and record["quality"].get("score") is None
    ):
        out.append(
            Violation(
                "quality.score",
                "MISSING_REQUIRED_FIELD",
                f"score required when logic_type={logic_type.value}",
            )
        )

    _real(record, ("logic", "model_inference", "confidence"), out, 0.0, 1.0)
    _real(record, ("quality", "score"), out, None, None)
    _real(record, ("quality", "confidence"), out, 0.0, 1.0)
    _real(record, ("quality", "uncertainty"), out, 0.0, None)
    _real(record, ("outcome", "decision_value"), out, None, None)

    seq = _get(record, "temporal", "sequence_number")
    if isinstance(seq, int) and not isinstance(seq, bool) and seq < 0:
        out.append(
            Violation(
                "temporal.sequence_number", "OUT_OF_RANGE", "sequence_number must be non-negative"
            )
        )

    # Digest consistency between the archived features and the inference
    # record, when both are present.
    fv = _get(record, "context", "feature_vector")
    claimed = _get(record, "logic", "model_inference", "feature_vector_hash")
    if isinstance(fv, dict) and fv and isinstance(claimed, str) and claimed:
        try:
            actual = feature_vector_hash(fv)
        except (TypeError, ValueError):
            actual = None
        if actual is not None and actual != claimed:
            out.append(
                Violation(
                    "logic.model_inference.feature_vector_hash",
                    "HASH_INCONSISTENT",
                    "feature_vector_hash does not match context.feature_vector",
                )
            )

    # De-duplicate (path, code) pairs while preserving first-seen order.
    seen: set[tuple[str, str]] = set()
    unique = []
    for v in out:
        key = (v.field_path, v.code)
        if key not in seen:
            seen.add(key)
            unique.append(v)
    return ValidationReport(valid=not unique, violations=tuple(unique))


def validate_event(event: DecisionEvent, *, require_chain_fields: bool = True) -> ValidationReport:
    return validate_record(event_to_dict(event), require_chain_fields=require_chain_fields)
