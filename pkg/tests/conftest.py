import pytest
from hypothesis import HealthCheck, settings

from surfgroup import (GluedTriangulation, build_dual, spanning_tree, split)

settings.register_profile(
    'suite', derandomize=True, deadline=None,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile('suite')

# two triangles, all three sides glued straight across: one cusp, genus 1
TORUS_TWIN = [3, 4, 5, 0, 1, 2]
# two triangles with one crossed pair: three cusps, genus 0
SPHERE_TWIN = [3, 5, 4, 0, 2, 1]
# each triangle glued to itself plus one connecting edge: co-tree loops
LOOPS_TWIN = [1, 0, 3, 2, 5, 4]


def make_pipeline(twin):
    tri = GluedTriangulation(len(twin) // 3, list(twin))
    dual = build_dual(tri)
    st = split(dual, spanning_tree(dual))
    return tri, dual, st


@pytest.fixture
def torus():
    return make_pipeline(TORUS_TWIN)


@pytest.fixture
def sphere():
    return make_pipeline(SPHERE_TWIN)


@pytest.fixture
def loops():
    return make_pipeline(LOOPS_TWIN)
