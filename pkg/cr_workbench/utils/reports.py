"""
Validity and verification reports.

A report is a named list of checks. Gated checks decide whether the report passes;
recorded checks are kept for the record (eg. a printed formula that the computation
does not reproduce) and never fail the report.
"""


class Check(object):
    def __init__(self, name, passed, gated=True, detail=None):
        self.name = name
        self.passed = bool(passed)
        self.gated = gated
        self.detail = detail

    def to_dict(self):
        out = {"name": self.name, "passed": self.passed, "gated": self.gated}
        if self.detail is not None:
            out["detail"] = self.detail
        return out

    def __repr__(self):
        mark = "✓" if self.passed else "✕"
        return f"{mark} {self.name}"


class Report(object):
    def __init__(self, name, checks=None, data=None):
        self.name = name
        self.checks = list(checks or [])
        # extra, check-independent results (dimensions, orders, ...)
        self.data = dict(data or {})

    def add(self, name, passed, gated=True, detail=None):
        check = Check(name, passed, gated=gated, detail=detail)
        self.checks.append(check)
        return check

    def record(self, name, passed, detail=None):
        return self.add(name, passed, gated=False, detail=detail)

    @property
    def passed(self):
        return all(c.passed for c in self.checks if c.gated)

    @property
    def failures(self):
        return [c for c in self.checks if c.gated and not c.passed]

    @property
    def discrepancies(self):
        return [c for c in self.checks if not c.gated and not c.passed]

    def to_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "n_checks": len(self.checks),
            "failures": [c.to_dict() for c in self.failures],
            "recorded": [c.to_dict() for c in self.checks if not c.gated],
            "data": self.data,
        }

    def __str__(self):
        if self.passed:
            return f"✓ {self.name}: {len(self.checks)} checks"
        lines = [f"✕ {self.name}: {len(self.failures)} of {len(self.checks)} checks failed"]
        lines += ["  " + c.name + (f" ({c.detail})" if c.detail else "") for c in self.failures]
        return "\n".join(lines)
