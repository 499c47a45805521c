"""Shared pytest hooks.

The terminal summary prints one PASS/FAIL line per acceptance criterion so a
plain ``pytest`` run shows the acceptance gate at a glance.
"""


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    reports = []
    for key in ("passed", "failed", "error"):
        reports.extend(terminalreporter.stats.get(key, []))
    acceptance = {}
    for rep in reports:
        if getattr(rep, "when", "call") != "call":
            continue
        if "test_acceptance.py" in rep.nodeid and "test_criterion_" in rep.nodeid:
            name = rep.nodeid.split("::")[-1]
            acceptance[name] = acceptance.get(name, True) and rep.passed
    if not acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(acceptance, key=lambda n: int(n.split("_")[2])):
        status = "PASS" if acceptance[name] else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
