# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
# SPDX-License-Identifier: Apache-2.0

"""Persistent cache of expensive exact computations (cocycle solution modules).

Every entry is one JSON document ``<md5 of key>.json`` holding the key, the commit time and the
value, so the directory is the key table and nothing else has to be kept in sync with it.
"""
from collections import OrderedDict
from pathlib import Path
import hashlib
import json
import logging
import os
import time
from filelock import FileLock

from .. import env_vars

logger = logging.getLogger("Cache")  # pylint: disable=invalid-name

PERSIST_DIR = os.environ.get(env_vars.CACHE_DIR, Path.home() / ".rank3bd_cache")

SECONDS_PER_DAY = 24 * 3600


def normalize_key(key):
    """Turn lists (as read back from JSON) into tuples so keys stay hashable."""
    if isinstance(key, list):
        return tuple(normalize_key(x) for x in key)
    return key


class Cache:
    """An in-memory LRU in front of a directory of JSON entries. Entries on disk are never
    evicted automatically; call `prune_persist()` to free disk space.

    Parameters
    ----------
    persist_dir: str
        The directory of the persistent entries, created when missing.
        If empty, the cache is disabled.

    capacity: int
        Maximum number of in-memory entries; least recently used entries are evicted first.
        If None, the in-memory part is unbounded.
    """

    LOCK_FILE = ".lock"
    SUFFIX = ".json"

    def __init__(self, persist_dir, capacity=None):
        self.enable = str(persist_dir) != ""
        self.persist_path = Path(persist_dir) if self.enable else None
        if self.enable:
            self.persist_path.mkdir(parents=True, exist_ok=True)
            self.file_lock = FileLock(str(self.persist_path / self.LOCK_FILE))

        self.capacity = capacity if capacity is not None else float("inf")
        self.entries = OrderedDict()
        self.hits = 0
        self.misses = 0

    def entry_file(self, key):
        """The JSON document of a key. Keys are tuples of strings and integers."""
        digest = hashlib.md5(json.dumps(key).encode("utf-8")).hexdigest()
        return self.persist_path / (digest + self.SUFFIX)

    @staticmethod
    def _read(path):
        try:
            with open(path, "r", encoding="utf-8") as filep:
                doc = json.load(filep)
        except FileNotFoundError:
            return None
        except (OSError, ValueError) as err:
            logger.warning("Unreadable cache entry %s: %s", path.name, err)
            return None
        if not isinstance(doc, dict) or not {"key", "timestamp", "value"} <= doc.keys():
            logger.warning("Malformed cache entry %s", path.name)
            return None
        return doc

    def _remember(self, key, value):
        self.entries[key] = value
        self.entries.move_to_end(key)
        self.evict()

    def evict(self):
        """Evict in-memory entries exceeding the capacity."""
        while len(self.entries) > self.capacity:
            logger.debug("Evict an item from cache")
            self.entries.popitem(last=False)

    def evict_all(self):
        """Evict all in-memory entries."""
        self.entries = OrderedDict()

    def persisted_keys(self):
        """Keys of all readable entries on disk, in file-name order."""
        if not self.enable:
            return []
        with self.file_lock:
            docs = [self._read(path) for path in sorted(self.persist_path.glob("*" + self.SUFFIX))]
        return [normalize_key(doc["key"]) for doc in docs if doc is not None]

    def query(self, key):
        """Look a value up, first in memory, then on disk.

        Parameters
        ----------
        key: Hashable
            A tuple of strings and integers.

        Returns
        -------
        value: Optional[Any]
            The JSON-decoded value, or None on a miss.
        """
        if not self.enable:
            return None

        if key in self.entries:
            logger.debug("Cache hit: %s", str(key))
            self.entries.move_to_end(key)
            self.hits += 1
            return self.entries[key]

        with self.file_lock:
            doc = self._read(self.entry_file(key))
        if doc is None or normalize_key(doc["key"]) != key:
            logger.debug("Cache miss: %s", str(key))
            self.misses += 1
            return None

        logger.debug("Bring from persistent cache: %s", str(key))
        self.hits += 1
        self._remember(key, doc["value"])
        return doc["value"]

    def commit(self, key, value):
        """Store a JSON-serializable value, overwriting any previous one.

        The document is written to a temporary file and moved into place, so a concurrent
        reader sees either the old entry or the new one.

        Returns
        -------
        value: Any
            The cached value.
        """
        if not self.enable:
            return value

        path = self.entry_file(key)
        doc = {"key": key, "timestamp": time.time(), "value": value}
        with self.file_lock:
            logger.debug("Commit %s to persistent cache", str(key))
            tmp = path.with_suffix(".tmp")
            with open(tmp, "w", encoding="utf-8") as filep:
                json.dump(doc, filep)
            os.replace(tmp, path)
        self._remember(key, value)
        return value

    def prune_persist(self, days):
        """Remove entries committed more than ``days`` days ago, plus unreadable ones. All
        in-memory entries are dropped as well.

        Returns
        -------
        pruned_keys: List[Hashable]
            The keys of the removed readable entries.
        """
        if not self.enable:
            logger.warning("Cache is not enabled for pruning")
            return []

        pruned_keys = []
        now = time.time()
        with self.file_lock:
            logger.debug("Prune persistent cache entries older than %s days", days)
            self.evict_all()
            for path in sorted(self.persist_path.glob("*" + self.SUFFIX)):
                doc = self._read(path)
                if doc is not None:
                    try:
                        age = now - float(doc["timestamp"])
                    except (TypeError, ValueError):
                        logger.warning("Invalid timestamp in %s", path.name)
                        age = None
                    if age is not None and age <= days * SECONDS_PER_DAY:
                        continue
                    pruned_keys.append(normalize_key(doc["key"]))
                logger.debug("Remove %s from persistent cache", path.name)
                path.unlink()
        return pruned_keys


cache = Cache(PERSIST_DIR)  # pylint: disable=invalid-name
