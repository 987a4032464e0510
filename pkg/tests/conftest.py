import pytest

from dabimod.corpus import build


@pytest.fixture(scope="session")
def corpus():
    return {cid: build(cid) for cid in ("P", "N", "E1", "E2")}
