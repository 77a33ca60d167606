import pytest

from uhfk.group import build_group

SPECS = {
    "trivial": "cyclic 1",
    "Z2": "cyclic 2",
    "Z3": "cyclic 3",
    "Z4": "cyclic 4",
    "V4": "product (cyclic 2) (cyclic 2)",
    "S3": "symmetric 3",
    "D4": "dihedral 4",
    "A4": "perm 4 {(012),(01)(23)}",
    "Q8": "perm 8 {(0123)(4567),(0426)(1735)}",
    "S4": "symmetric 4",
}


@pytest.fixture(scope="session")
def groups():
    return {name: build_group(spec) for name, spec in SPECS.items()}
