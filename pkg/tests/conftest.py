import pytest
from hypothesis import settings

from zigzagtwist.gradings.factory import create_grading

settings.register_profile("zigzagtwist", max_examples=25, deadline=None)
settings.load_profile("zigzagtwist")


@pytest.fixture
def tilde():
    return create_grading("tilde")


@pytest.fixture
def vec():
    return create_grading("vec")


@pytest.fixture
def path_grading():
    return create_grading("path")
