"""Uniform result type for the check_* oracles."""

from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    detail: str = ""
    witnesses: Tuple = ()

    def __bool__(self):
        return self.ok


def passed(detail=""):
    return CheckReport(True, detail)


def failed(detail, witnesses=()):
    return CheckReport(False, detail, tuple(witnesses))
