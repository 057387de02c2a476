from hypothesis import settings

# derandomized so that repeated runs exercise the same examples
settings.register_profile("repro", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("repro")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import VERDICTS
    except ImportError:
        return
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(VERDICTS):
            terminalreporter.write_line(VERDICTS[number])
