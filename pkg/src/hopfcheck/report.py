"""Check records shared by every verifier and the CLI report writer."""

from __future__ import annotations

from dataclasses import dataclass


PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"


@dataclass(frozen=True)
class Check:
    """Outcome of one named verification.

    identity is the law that was tested, rendered in plain ascii; detail is
    the failure location (first failing index tuple and the two sides) or
    the skip reason.  Skip reasons are single tokens so report lines stay
    machine-splittable.
    """

    name: str
    status: str
    identity: str = ""
    detail: str = ""

    def passed(self) -> bool:
        return self.status == PASS

    def line(self) -> str:
        status = self.status if self.status != SKIP else f"SKIP:{self.detail or 'skipped'}"
        out = f"CHECK {self.name} {status}"
        if self.identity:
            out += f" {self.identity}"
        if self.status == FAIL and self.detail:
            out += f" ! {self.detail}"
        return out


def ok(name: str, identity: str, detail: str = "") -> Check:
    return Check(name, PASS, identity, detail)


def fail(name: str, identity: str, detail: str) -> Check:
    return Check(name, FAIL, identity, detail)


def skip(name: str, identity: str, reason: str) -> Check:
    return Check(name, SKIP, identity, reason)
