"""Opt-in OEIS b-file client with an on-disk cache.

Nothing in the test or experiment paths touches the network; fetching only
happens when the caller passes ``online=True``.
"""

from __future__ import annotations

import os
import urllib.error
import urllib.request
from pathlib import Path

from ..errors import NetworkDisabled, ParseError
from .fixtures import check_id

CACHE_ENV = "HANKELKIT_OEIS_CACHE"
DEFAULT_CACHE = ".oeis-cache"
BASE_URL = "https://oeis.org"


def cache_directory(cache_dir=None) -> Path:
    """The environment variable wins over the argument, which wins over the default."""
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path(cache_dir) if cache_dir else Path(DEFAULT_CACHE)


def bfile_url(seq_id: str) -> str:
    check_id(seq_id)
    return f"{BASE_URL}/{seq_id}/b{seq_id[1:]}.txt"


def parse_bfile(text: str) -> list:
    """Values of ``index value`` lines, in index order; comments are skipped."""
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ParseError(f"malformed b-file line {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(f"malformed b-file line {raw!r}") from exc
    rows.sort()
    for (i, _), (j, _) in zip(rows, rows[1:]):
        if j != i + 1:
            raise ParseError(f"b-file indices jump from {i} to {j}")
    return [v for _, v in rows]


def fetch_bfile(seq_id: str, *, cache_dir=None, online: bool = False, timeout: float = 20.0) -> list:
    """Terms of ``seq_id`` from the cache, or from the OEIS when ``online``."""
    check_id(seq_id)
    path = cache_directory(cache_dir) / f"b{seq_id[1:]}.txt"
    if path.exists():
        return parse_bfile(path.read_text())
    if not online:
        raise NetworkDisabled(f"{seq_id} is not cached and network access is off")
    try:
        with urllib.request.urlopen(bfile_url(seq_id), timeout=timeout) as resp:
            text = resp.read().decode("utf-8")
    except (urllib.error.URLError, OSError) as exc:
        raise NetworkDisabled(f"fetching {seq_id} failed: {exc}") from exc
    terms = parse_bfile(text)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    return terms
