import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def verify_report():
    """One full verification run shared by every test that inspects the report."""
    from histocond import verify_all

    return verify_all()
