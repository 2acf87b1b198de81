import pytest
from hypothesis import HealthCheck, settings

from insdel.concat import ConcatParams, make_concat_params

from oracles import DESK

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def desk_params() -> ConcatParams:
    """The pinned small-scale concatenation instance used across the suite."""
    return make_concat_params(**DESK)
