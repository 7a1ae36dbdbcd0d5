"""Line-oriented census file format, and a dedupe store that spills to disk.

A census file starts with a header ``dim=<d> n=<n> count=<k>`` followed by
one complex per line: facets separated by ``;``, vertices within a facet
separated by spaces, ascending, facets in lexicographic order under the
canonical labeling.  Optional annotations follow the facet list as
tab-separated ``key=value`` fields.  Files round-trip bitwise, so canonical
facet strings double as stable dedupe keys.  A file may hold several
sections (used for the link catalog, one section per vertex count).
"""

from __future__ import annotations

import os
import tempfile

ANNOTATION_KEYS = ("fvec", "type", "|G|", "transitive", "shellable", "vd")


def facets_to_str(facets) -> str:
    return ";".join(" ".join(map(str, f)) for f in facets)


def facets_from_str(s: str):
    return tuple(tuple(map(int, part.split())) for part in s.split(";"))


def format_record(facet_str, annotations=None) -> str:
    if not annotations:
        return facet_str
    parts = [facet_str]
    for key in ANNOTATION_KEYS:
        if key in annotations:
            value = annotations[key]
            if key == "fvec":
                value = ",".join(map(str, value))
            elif isinstance(value, bool):
                value = int(value)
            parts.append(f"{key}={value}")
    return "\t".join(parts)


def parse_record(line: str):
    parts = line.rstrip("\n").split("\t")
    annotations = {}
    for field in parts[1:]:
        key, _, value = field.partition("=")
        if key == "fvec":
            annotations[key] = tuple(int(x) for x in value.split(","))
        elif key in ("transitive", "shellable", "vd"):
            annotations[key] = bool(int(value))
        elif key == "|G|":
            annotations[key] = int(value)
        else:
            annotations[key] = value
    return parts[0], annotations


def write_census(path, sections):
    """Write one or more (dim, n, rows) sections; rows are
    (facet_str, annotations) pairs."""
    with open(path, "w") as fh:
        for dim, n, rows in sections:
            fh.write(f"dim={dim} n={n} count={len(rows)}\n")
            for facet_str, annotations in rows:
                fh.write(format_record(facet_str, annotations) + "\n")


def read_census(path):
    """Read all sections of a census file.

    Returns a list of (meta, rows) with ``meta`` a dict of the header fields
    and rows as (facet_str, annotations) pairs.
    """
    sections = []
    with open(path) as fh:
        line = fh.readline()
        while line:
            line = line.rstrip("\n")
            if not line:
                line = fh.readline()
                continue
            try:
                meta = dict(kv.split("=") for kv in line.split())
                meta = {k: int(v) for k, v in meta.items()}
                if set(meta) != {"dim", "n", "count"}:
                    raise ValueError
            except ValueError:
                raise ValueError(f"malformed census header: {line!r}") from None
            rows = []
            for _ in range(meta["count"]):
                body = fh.readline()
                if not body:
                    raise ValueError("census file truncated")
                rows.append(parse_record(body))
            sections.append((meta, rows))
            line = fh.readline()
    return sections


def read_single_census(path):
    sections = read_census(path)
    if len(sections) != 1:
        raise ValueError(f"expected a single census section in {path}")
    return sections[0]


MEM_CEILING_ENV = "CENSUS3D_MEM_CEILING"
_DEFAULT_CEILING = 4 << 30


class DedupeStore:
    """Insert-if-absent store over string keys with a memory ceiling.

    Keys are held in a set until their estimated footprint exceeds the
    ceiling (``CENSUS3D_MEM_CEILING`` bytes, default 4 GiB); full batches are
    then spilled as sorted runs to temporary files and merged at the end, so
    the result is independent of insertion order.
    """

    def __init__(self, mem_limit=None, tmpdir=None):
        if mem_limit is None:
            mem_limit = int(os.environ.get(MEM_CEILING_ENV, _DEFAULT_CEILING))
        self.mem_limit = mem_limit
        self.tmpdir = tmpdir
        self._mem = set()
        self._bytes = 0
        self._runs = []

    def add(self, key: str):
        if key not in self._mem:
            self._mem.add(key)
            # rough per-entry footprint: payload plus set/str overhead
            self._bytes += len(key) + 80
            if self._bytes > self.mem_limit:
                self._spill()

    def _spill(self):
        fh = tempfile.NamedTemporaryFile(
            "w+", dir=self.tmpdir, prefix="census3d-dedupe-", delete=False)
        for key in sorted(self._mem):
            fh.write(key + "\n")
        fh.close()
        self._runs.append(fh.name)
        self._mem.clear()
        self._bytes = 0

    def __iter__(self):
        """Yield unique keys in sorted order; consumes the store."""
        import heapq

        if not self._runs:
            yield from sorted(self._mem)
            self._mem.clear()
            return
        self._spill()
        files = [open(name) for name in self._runs]
        streams = [(line.rstrip("\n") for line in fh) for fh in files]
        last = None
        for key in heapq.merge(*streams):
            if key != last:
                yield key
                last = key
        for fh, name in zip(files, self._runs):
            fh.close()
            os.unlink(name)
        self._runs = []

    def __len__(self):
        if self._runs:
            raise RuntimeError("length unavailable after spilling; iterate instead")
        return len(self._mem)
