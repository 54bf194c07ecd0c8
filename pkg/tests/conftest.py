import pytest

from censym.rings import (
    GroupRingC2,
    IntegerRing,
    ModularRing,
    RationalRing,
)

Z = IntegerRing()
Q = RationalRing()
GF2 = ModularRing(2)
GF3 = ModularRing(3)
GF5 = ModularRing(5)
Z4 = ModularRing(4)
Z9 = ModularRing(9)
C2Z = GroupRingC2(Z)


@pytest.fixture(params=[Z, Q, Z4, GF2, GF5, C2Z], ids=lambda r: r.literal())
def any_ring(request):
    return request.param


@pytest.fixture(params=[Q, GF2, GF3, GF5], ids=lambda r: r.literal())
def field(request):
    return request.param
