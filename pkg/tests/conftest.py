import pathlib

import pytest

INSTANCE_DIR = pathlib.Path(__file__).resolve().parent.parent / "instances"


@pytest.fixture
def instance_dir():
    return INSTANCE_DIR


def instance_path(name):
    return INSTANCE_DIR / name
