import hashlib
import json
import logging
from pathlib import Path
from typing import Dict, Optional, Tuple

from bigraded_groups import BigradedGroups
from link_diagram import LinkDiagram
from simple_graph import SimpleGraph, serialize_graph

logger = logging.getLogger(__name__)

Window = Optional[Tuple[int, int]]


def _window_key(window: Window) -> str:
    return "*" if window is None else f"{window[0]}..{window[1]}"


def graph_instance_key(graph: SimpleGraph, m: int, degrees: Window = None, quantum: Window = None) -> str:
    digest = hashlib.sha1(serialize_graph(graph).encode("utf-8")).hexdigest()
    return f"chromatic:{digest}:m={m}:i={_window_key(degrees)}:j={_window_key(quantum)}"


def diagram_instance_key(diagram: LinkDiagram, degrees: Window = None, quantum: Window = None) -> str:
    code = json.dumps({"crossings": diagram.to_json()["crossings"], "signs": list(diagram.signs),
                       "free": diagram.free_circles}, sort_keys=True)
    digest = hashlib.sha1(code.encode("utf-8")).hexdigest()
    return f"khovanov:{digest}:p={_window_key(degrees)}:q={_window_key(quantum)}"


class HomologyCacheManager:
    """
    Persists computed homology on disk, keyed by instance.

    Entries are only ever added, and every entry can be recomputed, so the
    file is written atomically with one backup of the previous generation.
    A corrupt cache file falls back to that backup.
    """
    CACHE_NAME = "homology_cache.json"

    def __init__(self, cache_dir: str):
        self.cache_dir = Path(cache_dir)
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        self.cache_file = self.cache_dir / self.CACHE_NAME
        self.backup_file = self.cache_file.with_suffix(".json.bak")
        self.cache: Dict[str, Dict[str, object]] = {}
        self.hits = 0
        self.misses = 0
        logger.info(f"Initialized HomologyCacheManager at {self.cache_dir}")

    @staticmethod
    def _read(path: Path) -> Optional[Dict[str, Dict[str, object]]]:
        try:
            return json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError:
            return None
        except (json.JSONDecodeError, OSError) as e:
            logger.error(f"Unreadable homology cache {path}: {e}")
            return None

    def load(self):
        for path in (self.cache_file, self.backup_file):
            entries = self._read(path)
            if entries is not None:
                self.cache = entries
                logger.info(f"Loaded {len(entries)} cached homologies from {path}")
                return
        logger.warning(f"No usable homology cache in {self.cache_dir}; starting empty.")
        self.cache = {}

    def save(self):
        """Writes next to the cache file, keeps the old file as backup, then renames into place."""
        staged = self.cache_file.with_suffix(".json.tmp")
        try:
            staged.write_text(json.dumps(self.cache, indent=2, sort_keys=True), encoding="utf-8")
            if self.cache_file.exists():
                self.cache_file.replace(self.backup_file)
            staged.replace(self.cache_file)
        except OSError as e:
            logger.error(f"Failed to save homology cache to {self.cache_file}: {e}")
            return
        logger.info(f"Saved {len(self.cache)} cached homologies to {self.cache_file}")

    # --- Lookup ---

    def get(self, key: str) -> Optional[BigradedGroups]:
        entry = self.cache.get(key)
        if entry is None:
            self.misses += 1
            return None
        self.hits += 1
        labels = entry.get("labels")
        return BigradedGroups.from_json(entry, tuple(labels) if labels else None)

    def put(self, key: str, groups: BigradedGroups):
        entry = groups.to_json()
        entry["labels"] = list(groups.labels)
        self.cache[key] = entry
