from __future__ import annotations

# criterion number -> (verdict, description, seconds); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[str, str, float]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        verdict, desc, secs = ACCEPTANCE[num]
        terminalreporter.write_line(f"[{verdict}] criterion {num:>2}: {desc} ({secs:.1f} s)")
