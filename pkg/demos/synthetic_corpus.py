"""
A synthetic sitcom corpus
=========================

Writes a directory of ``sSSeEE.txt`` interaction files shaped like a ten-season
show: six central characters who share most scenes, recurring characters
attached to one of the six, a closed three-person side plot per season, and
one-off guests in every episode. The other demos read from it, and it is
handy for exercising the acceptance suite without the real dataset.

    python3 demos/synthetic_corpus.py /tmp/sitcom
"""

import sys
from itertools import combinations
from pathlib import Path

import numpy as np

CORE = ["Monica", "Chandler", "Ross", "Rachel", "Joey", "Phoebe"]
SEASON_LENGTHS = [24, 24, 25, 24, 24, 25, 24, 24, 24, 18]


def scenes(rng, cast_pool, side_plot, guests):
    """Yield the cast of each scene in one episode."""
    for _ in range(rng.integers(8, 15)):
        if rng.random() < 0.1:
            # the side plot never meets anyone else
            yield list(side_plot)
            continue
        if rng.random() < 0.3:
            # a recurring character with the friend they belong to
            i = rng.integers(len(cast_pool))
            yield [CORE[i % len(CORE)], cast_pool[i]]
            continue
        core = list(rng.choice(CORE, size=rng.integers(2, 6), replace=False))
        if guests and rng.random() < 0.35:
            core.append(guests[rng.integers(len(guests))])
        yield core


def episode_lines(rng, cast_pool, side_plot, guests):
    lines = []
    for cast in scenes(rng, cast_pool, side_plot, guests):
        pairs = list(combinations(cast, 2))
        for _ in range(rng.integers(3, 9)):
            a, b = pairs[rng.integers(len(pairs))]
            lines.append(f"{a}\t{b}")
    return lines


def write_corpus(root, seed=7):
    root = Path(root)
    root.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(seed)
    guest_id = 0
    for season, length in enumerate(SEASON_LENGTHS, start=1):
        # a few recurring characters carry over into the next season
        recurring = [f"Recurring{season}_{i}" for i in range(12)] + [f"Recurring{season - 1}_{i}" for i in range(3)]
        side_plot = [f"Side{season}_{i}" for i in range(3)]
        for episode in range(1, length + 1):
            guests = []
            for _ in range(rng.integers(1, 4)):
                guests.append(f"Guest{guest_id}")
                guest_id += 1
            text = "\n".join(episode_lines(rng, recurring, side_plot, guests)) + "\n"
            (root / f"s{season:02d}e{episode:02d}.txt").write_text(text, encoding="utf-8")
    (root / "slices.cfg").write_text(
        "# situations are arbitrary here; the real show would list specific episodes\n"
        "thanksgiving = s1e9, s2e8, s3e9, s4e8, s5e8, s6e9, s7e8, s8e9, s9e8, s10e8\n"
        "flashbacks = s2e11, s3e6, s4e11, s5e8, s6e15, s7e10, s8e9, s9e10\n",
        encoding="utf-8",
    )
    return root


if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else "sitcom"
    print("wrote", write_corpus(target))
