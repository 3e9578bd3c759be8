"""Verdicts: the pass/fail records every checker returns."""


PASS = "pass"
FAIL = "fail"
PARTIAL = "partial"


class Verdict:
    """Outcome of one check. `checked` counts the instances examined;
    `exhaustive` says whether the search covered the whole budget."""

    key = "check"

    def __init__(self, name, status, counterexample=None, checked=0, exhaustive=True, note=None):
        self.name = name
        self.status = status
        self.counterexample = counterexample
        self.checked = checked
        self.exhaustive = exhaustive
        self.note = note

    @property
    def passed(self):
        return self.status == PASS

    def __bool__(self):
        return self.passed

    def __repr__(self):
        return "<%s %s: %s (%d checked)>" % (type(self).__name__, self.name, self.status, self.checked)

    def to_json(self):
        out = {self.key: self.name, "status": self.status, "counterexample": self.counterexample,
               "checked": self.checked, "exhaustive": self.exhaustive}
        if self.note:
            out["note"] = self.note
        return out


class LawReport(Verdict):
    key = "law"


class Tally:
    """Accumulates instance checks for one named property; keeps the first
    counterexample."""

    def __init__(self, name, cls=Verdict):
        self.name = name
        self.cls = cls
        self.checked = 0
        self.counterexample = None
        self.exhaustive = True
        self.note = None

    def record(self, ok, witness=None):
        self.checked += 1
        if not ok and self.counterexample is None:
            self.counterexample = witness() if callable(witness) else (witness or {})
        return ok

    @property
    def failed(self):
        return self.counterexample is not None

    def verdict(self):
        if self.failed:
            status = FAIL
        elif not self.exhaustive:
            status = PARTIAL
        else:
            status = PASS
        return self.cls(self.name, status, self.counterexample, self.checked, self.exhaustive, self.note)


def all_pass(verdicts):
    return all(v.status == PASS for v in verdicts)


def summarize(name, verdicts, cls=Verdict):
    """Fold several verdicts into one: fails if any fails."""
    verdicts = list(verdicts)
    for v in verdicts:
        if v.status == FAIL:
            return cls(name, FAIL, {"failed": v.name, "counterexample": v.counterexample},
                       sum(x.checked for x in verdicts))
    status = PASS if all(v.status == PASS for v in verdicts) else PARTIAL
    return cls(name, status, None, sum(x.checked for x in verdicts),
               all(v.exhaustive for v in verdicts))
