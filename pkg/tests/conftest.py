import json

import pytest


@pytest.fixture
def write_spec(tmp_path):
    """Factory dropping a system description into a temp JSON file."""

    def _write(obj, name="system.json"):
        path = tmp_path / name
        path.write_text(json.dumps(obj), encoding="utf-8")
        return str(path)

    return _write
