import pytest
from hypothesis import HealthCheck, settings

from reeslift.field import QQ
from reeslift.mubasis import MuData, ParamCurve, SpaceCurve, compute_mudata
from reeslift.polyring import parse_poly, t_space

settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

# d = 17, alpha = T0^14, beta = T1^12, (mu1, mu2) = (3, 5): the extra
# generators of I as printed in the source example (sign and lift conventions
# may differ from ours).
LISTED_17 = [
    "Y0^2*Y1 - X3*Y5^2",
    "Y0^3 - X2*Y5^2",
    "X0^2*Y0*Y2 - X3^3*Y5",
    "X0^2*Y0*Y1 - X2*X3^2*Y5",
    "X0^2*Y0^2 - X1*X3^2*Y5",
    "X3^4 - X0^3*Y0",
    "T0*X0*Y0^2 - T1*X3^2*Y5",
    "T0^4*Y0^2 - T1^4*X0*Y5",
    "T1^3*X3^3 - T0^3*X0^2*Y0",
    "T1^6*X3^2 - T0^6*X0*Y0",
    "T1^9*X3 - T0^9*Y0",
]

STAIRCASE_17 = {(9, 0, 0): 0, (0, 3, 0): 0, (0, 0, 2): 1, (1, 1, 1): 0,
                (0, 2, 1): 2, (4, 0, 1): 0, (3, 2, 0): 0, (6, 1, 0): 0}


def curve17(field=QQ) -> SpaceCurve:
    return SpaceCurve.from_coeffs(17, 3, 5, [1] + [0] * 14, [0] * 12 + [1], field)


def conic(field=QQ) -> ParamCurve:
    return ParamCurve.from_coeffs([[1, 0, 0], [0, 1, 0], [0, 0, 1]], field)


def toy4(field=QQ) -> MuData:
    T = t_space(field)
    A = tuple(parse_poly(s, T) for s in ("T0", "T1", "0"))
    B = tuple(parse_poly(s, T) for s in ("0", "T0", "T1"))
    return MuData.from_split(A, B, parse_poly("T0^3", T), parse_poly("T1^3", T))


@pytest.fixture
def c17():
    return curve17()


@pytest.fixture
def conic_mu():
    return compute_mudata(conic())


@pytest.fixture
def toy4_mu():
    return toy4()


# -- acceptance summary -------------------------------------------------------

ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
