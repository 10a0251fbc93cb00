"""Fixed braid corpus shared by the oracle tests and the acceptance run."""
import random

from homflypt.hecke import BraidWord

SEED = 20240611


def braid_corpus(count: int = 60, max_strands: int = 4, max_letters: int = 7) -> list[BraidWord]:
    rng = random.Random(SEED)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_strands)
        k = 0 if n == 1 else rng.randint(0, max_letters)
        letters = tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(k))
        out.append(BraidWord(n, letters))
    return out
