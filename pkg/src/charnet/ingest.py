"""Episode interaction files, corpora, and temporal slices.

One file per episode, named ``sSSeEE.txt``. Each data line holds two
character names separated by a tab (overridable); ``#`` starts a comment and
each line is one interaction occurrence.
"""

from __future__ import annotations

import hashlib
import re
import warnings
from dataclasses import dataclass, field
from functools import total_ordering
from pathlib import Path
from typing import Iterable

from .graph import Interner, MultiGraph, SelfInteractionError, merge

__all__ = [
    "EpisodeKey",
    "InteractionRecord",
    "Corpus",
    "SliceSpec",
    "IngestError",
    "THE_SIX_EPISODES",
    "parse_records",
    "parse_file",
    "load_corpus",
    "read_slices_config",
    "slice_graph",
]

_FILE_RE = re.compile(r"^s(\d+)e(\d+)$", re.IGNORECASE)
_EP_RE = re.compile(r"^s(\d+)e(\d+)$", re.IGNORECASE)
_SEASON_RE = re.compile(r"^s(\d+)$", re.IGNORECASE)
_RANGE_RE = re.compile(r"^s(\d+)\s*(?:-|\.\.)\s*s(\d+)$", re.IGNORECASE)


class IngestError(ValueError):
    pass


@total_ordering
@dataclass(frozen=True)
class EpisodeKey:
    season: int
    episode: int

    def __post_init__(self) -> None:
        if not 1 <= self.season <= 10:
            raise IngestError(f"season out of range 1..10: {self.season}")
        if self.episode < 1:
            raise IngestError(f"episode must be >= 1: {self.episode}")

    @classmethod
    def parse(cls, text: str) -> "EpisodeKey":
        m = _EP_RE.match(text.strip())
        if not m:
            raise IngestError(f"not an episode key: {text!r}")
        return cls(int(m.group(1)), int(m.group(2)))

    def __lt__(self, other: "EpisodeKey") -> bool:
        return (self.season, self.episode) < (other.season, other.episode)

    def __str__(self) -> str:
        return f"s{self.season}e{self.episode}"

    @property
    def filename(self) -> str:
        return f"s{self.season:02d}e{self.episode:02d}.txt"


# episodes revolving (almost) only around the six friends
THE_SIX_EPISODES = tuple(
    EpisodeKey.parse(k)
    for k in (
        "s1e18 s2e3 s3e2 s3e9 s3e16 s3e17 s4e1 s4e12 s5e14 s6e6 "
        "s6e9 s7e1 s7e8 s7e14 s8e4 s8e9 s9e18 s10e4 s10e10 s10e16"
    ).split()
)


@dataclass(frozen=True)
class InteractionRecord:
    episode: EpisodeKey
    a: str
    b: str
    line: int = 0


def parse_records(path: str | Path, episode: EpisodeKey, sep: str = "\t") -> list[InteractionRecord]:
    path = Path(path)
    out = []
    with path.open(encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = [p.strip() for p in line.split(sep)]
            if len(parts) != 2 or not all(parts):
                raise IngestError(f"{path}:{lineno}: expected two names separated by {sep!r}, got {raw.rstrip()!r}")
            out.append(InteractionRecord(episode, parts[0], parts[1], lineno))
    return out


def parse_file(
    path: str | Path,
    episode: EpisodeKey,
    names: Interner | None = None,
    sep: str = "\t",
) -> MultiGraph:
    """Build one episode's multigraph from its interaction file."""
    path = Path(path)
    g = MultiGraph(names)
    records = parse_records(path, episode, sep)
    if not records:
        warnings.warn(f"{path}: no interactions", stacklevel=2)
    for r in records:
        try:
            g.add_interaction(r.a, r.b, source=f"{path}:{r.line}")
        except SelfInteractionError as e:
            raise IngestError(str(e)) from None
    return g


@dataclass
class Corpus:
    episodes: dict[EpisodeKey, MultiGraph] = field(default_factory=dict)
    slices: dict[str, frozenset[EpisodeKey]] = field(default_factory=dict)
    names: Interner = field(default_factory=Interner)

    def keys(self) -> list[EpisodeKey]:
        return sorted(self.episodes)

    def seasons(self) -> list[int]:
        return sorted({k.season for k in self.episodes})

    def add_slice(self, name: str, keys: Iterable[EpisodeKey]) -> None:
        keys = frozenset(keys)
        missing = sorted(k for k in keys if k not in self.episodes)
        if missing:
            raise IngestError(f"slice {name!r} references missing episodes: {', '.join(map(str, missing))}")
        if not keys:
            raise IngestError(f"slice {name!r} is empty")
        self.slices[name] = keys

    def slice(self, spec: "str | SliceSpec") -> MultiGraph:
        return slice_graph(self, spec)

    def content_hash(self) -> str:
        """SHA-256 over episode keys and (name, name, multiplicity) triples."""
        h = hashlib.sha256()
        for k in self.keys():
            g = self.episodes[k]
            h.update(f"{k}\n".encode())
            rows = sorted(tuple(sorted((g.label(u), g.label(v)))) + (m,) for u, v, m in g.edges())
            for a, b, m in rows:
                h.update(f"{a}\t{b}\t{m}\n".encode())
        return h.hexdigest()


def _builtin_slices(corpus: Corpus) -> None:
    if all(k in corpus.episodes for k in THE_SIX_EPISODES):
        corpus.add_slice("the6", THE_SIX_EPISODES)
    by_season: dict[int, list[EpisodeKey]] = {}
    for k in corpus.keys():
        by_season.setdefault(k.season, []).append(k)
    firsts = [ks[0] for ks in by_season.values() if ks[0].episode == 1]
    if firsts:
        corpus.add_slice("firsts", firsts)
    if by_season:
        corpus.add_slice("lasts", [ks[-1] for ks in by_season.values()])


def read_slices_config(path: str | Path) -> dict[str, list[str]]:
    """Read ``name = item, item, ...`` lines; items are slice tokens."""
    out: dict[str, list[str]] = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise IngestError(f"{path}:{lineno}: expected 'name = episodes'")
        name, _, rest = line.partition("=")
        name = name.strip()
        items = [t for t in re.split(r"[,\s]+", rest.strip().strip("[]")) if t]
        if not name or not items:
            raise IngestError(f"{path}:{lineno}: empty slice name or episode list")
        if name in out:
            raise IngestError(f"{path}:{lineno}: duplicate slice {name!r}")
        out[name] = items
    return out


def load_corpus(
    directory: str | Path,
    slices_file: str | Path | None = None,
    sep: str = "\t",
) -> Corpus:
    directory = Path(directory)
    if not directory.is_dir():
        raise IngestError(f"not a directory: {directory}")
    files: dict[EpisodeKey, Path] = {}
    for p in sorted(directory.glob("*.txt")):
        m = _FILE_RE.match(p.stem)
        if not m:
            raise IngestError(f"unparseable episode filename: {p.name}")
        key = EpisodeKey(int(m.group(1)), int(m.group(2)))
        if key in files:
            raise IngestError(f"duplicate episode {key}: {files[key].name} and {p.name}")
        files[key] = p
    corpus = Corpus()
    # ids are assigned in episode order, so they do not depend on directory listing order
    for key in sorted(files):
        corpus.episodes[key] = parse_file(files[key], key, corpus.names, sep)
    _builtin_slices(corpus)
    if slices_file is not None:
        for name, items in read_slices_config(slices_file).items():
            corpus.add_slice(name, SliceSpec.parse(",".join(items)).resolve(corpus))
    return corpus


@dataclass(frozen=True)
class SliceSpec:
    """A selection of episodes.

    ``text`` accepts ``AE`` (or ``all``), ``sS``, ``sSeE``, ``sA-sB``, a
    registered slice name, or a comma-separated list of any of those.
    """

    text: str

    @classmethod
    def parse(cls, text: str) -> "SliceSpec":
        if not text or not text.strip():
            raise IngestError("empty slice spec")
        return cls(text.strip())

    def resolve(self, corpus: Corpus) -> list[EpisodeKey]:
        keys: set[EpisodeKey] = set()
        for token in (t.strip() for t in self.text.split(",")):
            if token:
                keys |= _resolve_token(token, corpus)
        if not keys:
            raise IngestError(f"slice {self.text!r} selects no episodes")
        return sorted(keys)

    def __str__(self) -> str:
        return self.text


def _resolve_token(token: str, corpus: Corpus) -> set[EpisodeKey]:
    if token in corpus.slices:
        return set(corpus.slices[token])
    if token.lower() in ("ae", "all"):
        return set(corpus.episodes)
    if m := _EP_RE.match(token):
        key = EpisodeKey(int(m.group(1)), int(m.group(2)))
        if key not in corpus.episodes:
            raise IngestError(f"episode {key} not in corpus")
        return {key}
    if m := _SEASON_RE.match(token):
        lo = hi = int(m.group(1))
    elif m := _RANGE_RE.match(token):
        lo, hi = int(m.group(1)), int(m.group(2))
    else:
        raise IngestError(f"unknown slice {token!r}")
    if lo > hi:
        raise IngestError(f"empty season range {token!r}")
    found = {k for k in corpus.episodes if lo <= k.season <= hi}
    if not found:
        raise IngestError(f"slice {token!r} selects no episodes")
    return found


def slice_graph(corpus: Corpus, spec: "str | SliceSpec") -> MultiGraph:
    if isinstance(spec, str):
        spec = SliceSpec.parse(spec)
    return merge(corpus.episodes[k] for k in spec.resolve(corpus))
