from collections import Counter
from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

ALPHAS = [Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3)]


@st.composite
def partitions_st(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if n == 0:
        return ()
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    return tuple(sorted(Counter(bins).values(), reverse=True))


alphas_st = st.sampled_from(ALPHAS)


# one line per acceptance criterion, printed after the run
ACCEPTANCE: dict[int, str] = {}


def record(number: int, title: str, checks, verdict: bool | None = None) -> bool:
    """Print and remember one line; ``verdict`` overrides the all-checks-pass rule."""
    checks = list(checks)
    failed = [c for c in checks if not c.passed]
    ok = not failed if verdict is None else verdict
    status = "PASS" if ok else "FAIL"
    detail = f"{len(checks) - len(failed)}/{len(checks)} checks"
    if failed and not ok:
        detail += "; first failure: " + f"{failed[0].name} ({failed[0].detail})"
    line = f"criterion {number:2d} {status}  {title}  [{detail}]"
    ACCEPTANCE[number] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])
