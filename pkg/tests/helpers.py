"""Shared test utilities: independent oracles and instance generators."""

from functools import lru_cache

from alphatree import alpha_int_oracle


@lru_cache(maxsize=None)
def all_profiles(n: int):
    """Depth profiles of every ordered strictly-binary tree on n leaves.

    Pure shape enumeration, nothing shared with the package's DP: a
    tree is a root joining a left tree on k leaves and a right tree on
    the rest.  Catalan growth, so keep n small.
    """
    if n > 10:
        raise ValueError("profile enumeration is exponential; n=%d is too big" % n)
    if n == 1:
        return ((0,),)
    out = []
    for k in range(1, n):
        for left in all_profiles(k):
            for right in all_profiles(n - k):
                out.append(
                    tuple(d + 1 for d in left) + tuple(d + 1 for d in right)
                )
    return tuple(out)


def minimax_by_enumeration(weights):
    """Minimax cost by trying every tree shape."""
    best = None
    for prof in all_profiles(len(weights)):
        c = max(w + d for w, d in zip(weights, prof))
        if best is None or c < best:
            best = c
    return best


class CachedIntOracle:
    """Memoized wrapper around the interval-DP oracle, for test loops
    that revisit the same integer sequences many times."""

    def __init__(self, max_n: int = 16):
        self.max_n = max_n
        self._cache: dict = {}

    def __call__(self, levels) -> int:
        key = tuple(levels)
        got = self._cache.get(key)
        if got is None:
            got = alpha_int_oracle(key, max_n=self.max_n)
            self._cache[key] = got
        return got


def random_real_weights(rng, n, lo=-4, hi=4, integral_rate=0.3):
    """n random reals with ceilings in [lo, hi]; roughly integral_rate
    of them are exact integers (fractional part zero)."""
    out = []
    for _ in range(n):
        c = rng.randint(lo, hi)
        if rng.random() < integral_rate:
            out.append(float(c))
        else:
            f = rng.random()
            while f == 0.0:
                f = rng.random()
            out.append(c - 1 + f)
    return out


def random_tree_profile(rng, n):
    """Depth profile of one uniformly-split random ordered binary tree."""
    if n == 1:
        return [0]
    k = rng.randint(1, n - 1)
    left = random_tree_profile(rng, k)
    right = random_tree_profile(rng, n - k)
    return [d + 1 for d in left] + [d + 1 for d in right]
