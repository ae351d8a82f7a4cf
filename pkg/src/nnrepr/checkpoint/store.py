from typing import Any, Dict, Optional, TypeVar
import json
import os
import re
from datetime import datetime, timezone
from pathlib import Path

from ..core.base import BaseCheckpointStore
from ..core.errors import CheckpointError

T = TypeVar('T')

_UNSAFE = re.compile(r"[^A-Za-z0-9._=-]")


class JsonCheckpointStore(BaseCheckpointStore[T]):
    """One JSON file per key under a directory"""

    def __init__(
        self,
        directory: str = ".nnrepr-checkpoints",
        prefix: str = "nnrepr-"
    ):
        self.directory = Path(directory)
        self.prefix = prefix

    def path_for(self, key: str) -> Path:
        return self.directory / f"{self.prefix}{_UNSAFE.sub('_', key)}.json"

    def write(
        self,
        key: str,
        data: T,
        metadata: Optional[Dict[str, Any]] = None
    ) -> None:
        """Write atomically: temp file, then rename"""
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            storage_data = {
                "data": data,
                "metadata": metadata or {},
                "timestamp": datetime.now(timezone.utc).isoformat()
            }
            path = self.path_for(key)
            tmp = path.with_suffix(".tmp")
            tmp.write_text(json.dumps(storage_data, default=str, sort_keys=True, indent=2))
            os.replace(tmp, path)
        except Exception as e:
            raise CheckpointError(f"Checkpoint storage error: {str(e)}")

    def read(self, key: str) -> Optional[T]:
        try:
            path = self.path_for(key)
            if not path.exists():
                return None
            storage_data = json.loads(path.read_text())
            return storage_data["data"]
        except Exception as e:
            raise CheckpointError(f"Checkpoint retrieval error: {str(e)}")

    def remove(self, key: str) -> bool:
        try:
            path = self.path_for(key)
            if not path.exists():
                return False
            path.unlink()
            return True
        except Exception as e:
            raise CheckpointError(f"Checkpoint deletion error: {str(e)}")

    async def store(
        self,
        key: str,
        data: T,
        metadata: Optional[Dict[str, Any]] = None
    ) -> None:
        """Store data as JSON"""
        self.write(key, data, metadata)

    async def retrieve(
        self,
        key: str,
        **kwargs: Any
    ) -> Optional[T]:
        """Retrieve data for a key, None if absent"""
        return self.read(key)

    async def delete(self, key: str) -> bool:
        """Delete the file for a key"""
        return self.remove(key)

    async def clear(self) -> None:
        """Remove every file with our prefix"""
        try:
            if not self.directory.exists():
                return
            for path in self.directory.glob(f"{self.prefix}*.json"):
                path.unlink()
        except Exception as e:
            raise CheckpointError(f"Checkpoint clear error: {str(e)}")


# Re-export
__all__ = ['JsonCheckpointStore']
