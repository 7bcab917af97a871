import pytest


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path_factory, monkeypatch):
    # keep character-table cache files out of the working tree during tests
    cache = tmp_path_factory.getbasetemp() / "chartab-cache"
    monkeypatch.setenv("DIAGRAM_OPS_CACHE_DIR", str(cache))
