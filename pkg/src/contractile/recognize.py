"""Membership tests for the classes A and A' with exclusion certificates.

A: no odd hole, no antihole of length >= 5, no prism.
A': the same with "odd prism" in place of "prism".
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import BudgetExceeded
from .graph import Graph
from .holes import find_long_antihole, is_berge_desk
from .parity import detect_odd_prism
from .prism_pyramid import detect_pyramid_or_prism_v2
from .structures import AntiholeWitness, Witness

CLASS_A = "A"
CLASS_A_PRIME = "A'"


@dataclass
class RecognitionReport:
    class_name: str
    member: bool
    certificate_kind: str | None = None
    certificate: Witness | None = None
    stage: int | None = None
    timings: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "class": self.class_name,
            "member": self.member,
            "stage": self.stage,
            "certificate_kind": self.certificate_kind,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "timings": dict(self.timings),
        }


def _berge_kind(cert) -> str:
    return "odd-antihole" if isinstance(cert, AntiholeWitness) else "odd-hole"


class _Stages:
    def __init__(self, name: str):
        self.report = RecognitionReport(name, True)

    def run(self, label: str, fn):
        t0 = time.perf_counter()
        try:
            return fn()
        except BudgetExceeded as exc:
            exc.stage = label
            raise
        finally:
            self.report.timings[label] = time.perf_counter() - t0

    def fail(self, stage: int, kind: str, cert) -> RecognitionReport:
        r = self.report
        r.member, r.stage, r.certificate_kind, r.certificate = False, stage, kind, cert
        return r


def recognize_class_a(g: Graph) -> RecognitionReport:
    """Long antihole, then pyramid or prism, then the Berge test; the first hit decides."""
    s = _Stages(CLASS_A)
    anti = s.run("long-antihole", lambda: find_long_antihole(g))
    if anti is not None:
        return s.fail(1, "long-antihole", anti)
    d = s.run("pyramid-or-prism", lambda: detect_pyramid_or_prism_v2(g))
    if d.found:
        return s.fail(2, d.witness.kind, d.witness)
    ok, cert = s.run("berge", lambda: is_berge_desk(g))
    if not ok:
        return s.fail(3, _berge_kind(cert), cert)
    return s.report


def recognize_class_a_prime(g: Graph) -> RecognitionReport:
    """Long antihole, then the Berge test, then odd prism detection (valid once Berge)."""
    s = _Stages(CLASS_A_PRIME)
    anti = s.run("long-antihole", lambda: find_long_antihole(g))
    if anti is not None:
        return s.fail(1, "long-antihole", anti)
    ok, cert = s.run("berge", lambda: is_berge_desk(g))
    if not ok:
        return s.fail(2, _berge_kind(cert), cert)
    w = s.run("odd-prism", lambda: detect_odd_prism(g, checked=False))
    if w is not None:
        return s.fail(3, "odd-prism", w)
    return s.report


def recognize(g: Graph, class_name: str) -> RecognitionReport:
    if class_name in (CLASS_A, "a"):
        return recognize_class_a(g)
    if class_name in (CLASS_A_PRIME, "a'", "A-prime", "a-prime", "Aprime"):
        return recognize_class_a_prime(g)
    raise ValueError(f"unknown class {class_name!r}")


def is_member_a(g: Graph) -> bool:
    return recognize_class_a(g).member


def is_member_a_prime(g: Graph) -> bool:
    return recognize_class_a_prime(g).member


def definitional_member(g: Graph, class_name: str) -> bool:
    """Straight from the class definitions, using only the exhaustive oracle."""
    from .oracle import oracle_has

    if oracle_has(g, "odd-hole") or oracle_has(g, "antihole-5"):
        return False
    kind = "prism-any" if class_name == CLASS_A else "prism-odd"
    return not oracle_has(g, kind)
