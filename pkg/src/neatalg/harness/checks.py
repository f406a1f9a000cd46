"""Check bookkeeping for suites."""

from __future__ import annotations

from dataclasses import dataclass

PASS, FAIL, NOT_FOUND, SKIP = "pass", "fail", "not_found", "skip"


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""

    def to_doc(self):
        return {"check": self.name, "status": self.status, "detail": self.detail}


class Checker:
    """Collects check outcomes in the order they are produced."""

    def __init__(self):
        self.results: list[CheckResult] = []

    def check(self, name, ok, detail=""):
        self.results.append(CheckResult(name, PASS if ok else FAIL, "" if ok else str(detail)))
        return ok

    def fail(self, name, detail):
        self.results.append(CheckResult(name, FAIL, str(detail)))

    def not_found(self, name, detail=""):
        self.results.append(CheckResult(name, NOT_FOUND, str(detail)))

    def skip(self, name, reason):
        self.results.append(CheckResult(name, SKIP, reason))

    def summary(self):
        """Aggregate per check name: a name fails if any of its results failed."""
        out = {}
        for r in self.results:
            cur = out.get(r.name)
            rank = {FAIL: 3, NOT_FOUND: 2, PASS: 1, SKIP: 0}
            if cur is None or rank[r.status] > rank[cur.status]:
                out[r.name] = r
        return [out[k] for k in sorted(out)]


class _Guard:
    def __init__(self, checker, name):
        self.checker = checker
        self.name = name

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        from ..neat import NotFound

        if exc is None:
            return False
        if isinstance(exc, NotFound):
            self.checker.not_found(self.name, exc)
        elif isinstance(exc, Exception):
            self.checker.fail(self.name, f"{type(exc).__name__}: {exc}")
        else:
            return False
        return True


def guard(checker, name):
    """Record a budget miss as not_found and any other exception as a failure of ``name``."""
    return _Guard(checker, name)
