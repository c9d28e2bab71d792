import os
import json
import hashlib

from canonical_bases.algebra.canonical import TransitionTable
from canonical_bases.utils.misc_utils import canonical_json, ensure_dir

CACHE_VERSION = 1


def sha256_hex(text):
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def table_key(rank, word, weight):
    # Input: rank - rank n
    #        word - reduced word for w0
    #        weight - weight tuple
    # Output: hex digest naming the cache file
    return sha256_hex(canonical_json([CACHE_VERSION, rank, list(word), list(weight)]))


class TableCache():
    """Content-addressed store of transition tables, one JSON file per (rank, word, weight)."""

    def __init__(self, cache_dir):
        self.cache_dir = ensure_dir(cache_dir)
        self.hits = 0
        self.misses = 0
        self.rejected = 0

    def path_for(self, word, weight):
        return os.path.join(self.cache_dir, "{}.json".format(table_key(len(weight), word, weight)))

    def load(self, word, weight):
        # Input: word, weight
        # Output: TransitionTable or None on a miss / corrupted file
        path = self.path_for(word, weight)
        if not os.path.exists(path):
            self.misses += 1
            return None
        try:
            with open(path, "r") as f:
                data = json.load(f)
            payload = data["payload"]
            if data.get("version") != CACHE_VERSION or data.get("digest") != sha256_hex(canonical_json(payload)):
                raise ValueError("digest mismatch")
            table = TransitionTable.from_json(payload)
        except (ValueError, KeyError, TypeError):
            # corrupted files are recomputed and overwritten
            self.rejected += 1
            self.misses += 1
            return None
        if tuple(table.word) != tuple(word) or tuple(table.weight) != tuple(weight):
            self.rejected += 1
            self.misses += 1
            return None
        self.hits += 1
        return table

    def store(self, table):
        payload = table.to_json()
        data = {
            "version": CACHE_VERSION,
            "digest": sha256_hex(canonical_json(payload)),
            "payload": payload,
        }
        path = self.path_for(table.word, table.weight)
        tmp_path = path + ".tmp"
        with open(tmp_path, "w") as f:
            json.dump(data, f, sort_keys=True)
        os.replace(tmp_path, path)
        return path

    def stats(self):
        return {"hits": self.hits, "misses": self.misses, "rejected": self.rejected}
