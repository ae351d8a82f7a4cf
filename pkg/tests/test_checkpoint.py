import pytest

from nnrepr.checkpoint import JsonCheckpointStore
from nnrepr.core.errors import CheckpointError


class TestJsonCheckpointStore:
    def test_write_read_remove(self, tmp_path):
        store = JsonCheckpointStore(str(tmp_path))
        store.write("min-hnn-n=2:6", {"m": 4, "cursor": 0})
        assert store.read("min-hnn-n=2:6") == {"m": 4, "cursor": 0}
        assert store.path_for("min-hnn-n=2:6").name == "nnrepr-min-hnn-n=2_6.json"
        assert store.remove("min-hnn-n=2:6")
        assert store.read("min-hnn-n=2:6") is None
        assert not store.remove("min-hnn-n=2:6")

    def test_no_temp_files_left(self, tmp_path):
        store = JsonCheckpointStore(str(tmp_path))
        store.write("k", [1, 2, 3])
        assert [p.suffix for p in tmp_path.iterdir()] == [".json"]

    def test_corrupt_file(self, tmp_path):
        store = JsonCheckpointStore(str(tmp_path))
        store.path_for("bad").write_text("{not json")
        with pytest.raises(CheckpointError):
            store.read("bad")

    async def test_async_interface(self, tmp_path):
        store = JsonCheckpointStore(str(tmp_path / "nested"), prefix="run-")
        await store.store("a", {"x": 1}, metadata={"seed": 7})
        await store.store("b", {"x": 2})
        assert await store.retrieve("a") == {"x": 1}
        assert await store.delete("b")
        await store.clear()
        assert list((tmp_path / "nested").glob("run-*.json")) == []
