import pytest
from hypothesis import HealthCheck, settings

from neatalg.exactalg import GF, QQ

settings.register_profile("neatalg", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile("neatalg")

FINITE = [GF(2), GF(3), GF(5), GF(4), GF(2, 3), GF(9)]
ALL_FIELDS = FINITE + [QQ]


@pytest.fixture(params=ALL_FIELDS, ids=lambda F: repr(F))
def field(request):
    return request.param
