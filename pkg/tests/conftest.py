import os
import sys

from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

# exact arithmetic with sympy oracles is slow per example; timing is not under test
settings.register_profile("fppkit", deadline=None)
settings.load_profile("fppkit")


ACCEPTANCE_RESULTS = []


def record_criterion(label: str, description: str, ok: bool, detail: str = "") -> bool:
    ACCEPTANCE_RESULTS.append((label, description, ok, detail))
    line = f"criterion {label}: {'PASS' if ok else 'FAIL'} - {description}"
    print(line + (f" [{detail}]" if detail and not ok else ""))
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, description, ok, detail in ACCEPTANCE_RESULTS:
        line = f"criterion {label}: {'PASS' if ok else 'FAIL'} - {description}"
        if detail and not ok:
            line += f" [{detail}]"
        terminalreporter.write_line(line)
