import json

from superschur.bases import SchurType, schur
from superschur.cache import FORMAT_TAG, DiskBackedTable
from superschur.superpartitions import parse


def test_blocks_persist_and_reload(tmp_path):
    table = DiskBackedTable(tmp_path)
    block = table.block(SchurType.I, (3, 1))
    path = table.path(SchurType.I, (3, 1))
    data = json.loads(path.read_text())
    assert data["format"] == FORMAT_TAG and len(data["entries"]) == len(block)

    fresh = DiskBackedTable(tmp_path)
    assert fresh.get(SchurType.I, parse("1;2")) == schur("I", "1;2")
    assert (SchurType.I, (3, 1)) in fresh._loaded


def test_stale_format_is_ignored(tmp_path):
    table = DiskBackedTable(tmp_path)
    path = table.path(SchurType.II, (2, 1))
    path.write_text(json.dumps({"format": "old", "entries": []}))
    block = table.block(SchurType.II, (2, 1))
    assert block[parse("0;2")] == schur("II", "0;2")
    assert json.loads(path.read_text())["format"] == FORMAT_TAG
