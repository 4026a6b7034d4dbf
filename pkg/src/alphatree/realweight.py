"""Alphabetic minimax cost for real weights.

The cost of a real sequence equals (integer cost of ceil(w_i - b)) + b
for the right offset b, and the only offsets worth trying are the
fractional parts of the weights.  Lowering b past frac(w_i) bumps
ceil(w_i - b) at position i, so the integer cost is nonincreasing in b
and the answer is the smallest fractional part whose adjusted integer
cost equals the cost at the largest one.

Two search strategies share that skeleton:

* alpha_real_sorted sorts the fractional parts and binary-searches,
  building a fresh O(n) level tree per probe: O(n log n) always.
* alpha_real_new never sorts.  It keeps one level tree alive, walks a
  median-of-medians partition of the fractional parts, and moves
  between probe offsets by set/undo on the tree, touching each
  position O(1) times overall.
"""

from __future__ import annotations

import math
import random

from .leveltree import LevelTree, ceil_log2
from .core import minimax_cost_by_dp


class WeightSeq:
    """Real weight sequence with cached ceilings, fractional parts, and
    the distinct-ceiling count d."""

    def __init__(self, weights):
        ws = [float(w) for w in weights]
        if not ws:
            raise ValueError("need at least one weight")
        for w in ws:
            if not math.isfinite(w):
                raise ValueError("weights must be finite, got %r" % (w,))
        self.weights = ws
        self.n = len(ws)
        self.ceils = [math.ceil(w) for w in ws]
        self.fracs = [w - math.floor(w) for w in ws]
        self.d = len(set(self.ceils))

    def adjusted(self, b: float) -> list[int]:
        """ceil(w_i - b) for b in [0, 1): the ceiling drops by one
        exactly when 0 < frac(w_i) <= b."""
        return [
            c - 1 if 0.0 < f <= b else c
            for c, f in zip(self.ceils, self.fracs)
        ]

    def __len__(self):
        return self.n


def as_weight_seq(w) -> WeightSeq:
    return w if isinstance(w, WeightSeq) else WeightSeq(w)


class RealCostResult:
    """Outcome of a real-weight run: alpha = int_cost + b, plus the
    witness depth profile and the structure-operation counters."""

    def __init__(self, alpha, b, int_cost, depths, strategy, instrumentation):
        self.alpha = alpha
        self.b = b
        self.int_cost = int_cost
        self.depths = depths
        self.strategy = strategy
        self.instrumentation = instrumentation

    def __repr__(self):
        return "RealCostResult(alpha=%r, b=%r, strategy=%r)" % (
            self.alpha,
            self.b,
            self.strategy,
        )


def select_kth(values, k: int, randomized: bool = False, rng=None):
    """k-th smallest value (1-based), worst-case linear time.

    Deterministic median-of-medians by default; randomized=True swaps
    in random pivots (expected linear, simpler constants), drawing from
    rng or a fresh Random().
    """
    vals = list(values)
    n = len(vals)
    if n == 0:
        raise ValueError("select_kth on an empty sequence")
    if not 1 <= k <= n:
        raise ValueError("k=%d out of range for %d values" % (k, n))
    if randomized and rng is None:
        rng = random.Random()
    while True:
        if len(vals) <= 25:
            return sorted(vals)[k - 1]
        if randomized:
            pivot = vals[rng.randrange(len(vals))]
        else:
            meds = [
                sorted(vals[i : i + 5])[(min(5, len(vals) - i) - 1) // 2]
                for i in range(0, len(vals), 5)
            ]
            pivot = select_kth(meds, (len(meds) + 1) // 2)
        lo = [v for v in vals if v < pivot]
        if k <= len(lo):
            vals = lo
            continue
        neq = sum(1 for v in vals if v == pivot)
        if k <= len(lo) + neq:
            return pivot
        k -= len(lo) + neq
        vals = [v for v in vals if v > pivot]


def alpha_real_oracle(w, max_n: int = 16) -> float:
    """Reference value straight from the interval DP over the reals."""
    seq = as_weight_seq(w)
    return minimax_cost_by_dp(seq.weights, max_n=max_n)


def _zero_counters() -> dict:
    return {
        "sets": 0,
        "undos": 0,
        "finds": 0,
        "unions": 0,
        "deunions": 0,
        "partition_items": 0,
    }


def _accumulate(acc: dict, tree: LevelTree) -> None:
    for key, val in tree.counters().items():
        acc[key] += val


def alpha_real_sorted(w) -> RealCostResult:
    """Sorted-search strategy: O(n log n) regardless of d."""
    seq = as_weight_seq(w)
    acc = _zero_counters()
    order = sorted(seq.fracs)
    bmax = order[-1]
    ttree = LevelTree(seq.adjusted(bmax))
    target = ttree.cost()
    _accumulate(acc, ttree)
    # cost as a function of the offset is nonincreasing and reaches
    # target at bmax: binary search the first sorted frac that does
    lo, hi = 0, seq.n - 1
    while lo < hi:
        mid = (lo + hi) // 2
        probe = LevelTree(seq.adjusted(order[mid]))
        hit = probe.cost() == target
        _accumulate(acc, probe)
        if hit:
            hi = mid
        else:
            lo = mid + 1
    b = order[lo]
    return _finish(seq, b, target, "sorted", acc)


def alpha_real_new(w, randomized_select: bool = False, rng=None) -> RealCostResult:
    """Median-search strategy: one live tree, set/undo between probes.

    Runs in O(n log log n + n log d) tree operations; preferable to the
    sorted strategy when the weights take few distinct ceilings.
    """
    seq = as_weight_seq(w)
    acc = _zero_counters()
    fracs = seq.fracs
    bmax = max(fracs)
    ttree = LevelTree(seq.adjusted(bmax))
    target = ttree.cost()
    _accumulate(acc, ttree)

    tree = LevelTree(seq.weights)  # all bits clear: the state at offset 0
    if tree.cost() == target:
        # already optimal with no ceiling adjusted; some frac must be
        # zero (otherwise bmax would have improved the cost), so 0 is a
        # legal offset
        _accumulate(acc, tree)
        return _finish(seq, 0.0, target, "new", acc)

    items = list(range(seq.n))
    candidate = bmax
    while items:
        acc["partition_items"] += len(items)
        m = select_kth(
            [fracs[i] for i in items],
            (len(items) + 1) // 2,
            randomized=randomized_select,
            rng=rng,
        )
        below, at, above = [], [], []
        for i in items:
            f = fracs[i]
            if f < m:
                below.append(i)
            elif f == m:
                at.append(i)
            else:
                above.append(i)
        issued = 0
        for i in below + at:
            if fracs[i] > 0.0:
                tree.set(i)
                issued += 1
        if tree.cost() == target:
            # m is feasible: remember it, roll the probe back, and keep
            # hunting strictly below
            candidate = m
            for _ in range(issued):
                tree.undo()
            items = below
        else:
            # infeasible: the sets stay (every later probe includes
            # them) and the search moves strictly above m
            items = above
    _accumulate(acc, tree)
    return _finish(seq, candidate, target, "new", acc)


def _finish(seq, b, target, strategy, acc) -> RealCostResult:
    # witness depths come from a fresh integer run at the final offset
    wtree = LevelTree(seq.adjusted(b))
    if wtree.cost() != target:
        raise AssertionError("offset %r does not reproduce the integer cost" % (b,))
    depths = wtree.depth_profile()
    _accumulate(acc, wtree)
    return RealCostResult(target + b, b, target, depths, strategy, acc)


def strategy_for(n: int, d: int) -> str:
    """Pick the cheaper strategy from the instance shape alone."""
    if n < 1 or not 1 <= d <= n:
        raise ValueError("bad instance shape n=%d d=%d" % (n, d))
    m = max(n, 4)
    lg = ceil_log2(m)
    if d * ceil_log2(lg) < lg:
        return "new"
    return "sorted"


def choose_strategy(w) -> str:
    seq = as_weight_seq(w)
    return strategy_for(seq.n, seq.d)


def alpha_real(w, randomized_select: bool = False, rng=None) -> RealCostResult:
    """Run whichever strategy choose_strategy picks for this input."""
    seq = as_weight_seq(w)
    if strategy_for(seq.n, seq.d) == "new":
        return alpha_real_new(seq, randomized_select=randomized_select, rng=rng)
    return alpha_real_sorted(seq)
