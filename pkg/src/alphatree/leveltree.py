"""Dynamic level tree over a real-weight sequence.

Stores weights w_1..w_n plus a bit vector x_1..x_n and maintains the
alphabetic minimax cost of the integer sequence

    Y = ceil(w_1) - x_1, ..., ceil(w_n) - x_n

under three operations: set(i) (flip x_i from 0 to 1, allowed only when
w_i is not an integer), undo() (exact rollback of the last set), and
cost() (O(1) plus one find).

The tree has one leaf per weight and one internal node per level
interval.  Every internal node keeps its children at a single common
level strictly below its own, so the load of a node u with child level c
is

    load(u) = ceil(csum(u) / 2^min(cap, level(u) - c))

where csum(u) is the sum of the children's loads and cap = ceil(log2 n).
Parent pointers of internal nodes are resolved through a union-find with
deunion: merging two adjacent siblings is a single union instead of
re-parenting their children, and undo can reverse it exactly.
"""

from __future__ import annotations

import json
import math

NIL = -1

LEAF = 0
INTERNAL = 1
ROOT = 2

_KIND_NAMES = {LEAF: "leaf", INTERNAL: "internal", ROOT: "root"}

# journal marker tags (non-tuple entries)
_SEG = 0
_CREATE = 1
_UNION = 2


def ceil_log2(n: int) -> int:
    """Smallest k with 2^k >= n, for n >= 1."""
    if n < 1:
        raise ValueError("ceil_log2 needs n >= 1, got %r" % (n,))
    return (n - 1).bit_length()


def _ceil_shift(x: int, k: int) -> int:
    # ceil(x / 2^k) for nonnegative x
    return -((-x) >> k)


class LevelTreeError(ValueError):
    """Rejected level-tree operation (state is left unchanged)."""


class UnionFindDeunion:
    """Union-find with union by rank, no path compression, and exact
    LIFO deunion.

    Path compression is deliberately absent: deunion must restore the
    precise pre-union forest, so find may not mutate anything.  Finds
    are therefore O(log n) worst case.
    """

    def __init__(self):
        self.parent: list[int] = []
        self.rank: list[int] = []
        self.trail: list[tuple[int, int, bool]] = []
        self.finds = 0
        self.unions = 0
        self.deunions = 0

    def add(self) -> int:
        """Create a fresh singleton element and return its id."""
        x = len(self.parent)
        self.parent.append(x)
        self.rank.append(0)
        return x

    def pop(self) -> None:
        """Remove the most recently added element.

        Only valid when that element is a singleton root, which holds
        whenever unions issued after its creation have been deunioned
        (the level tree's journal guarantees this order).
        """
        x = self.parent.pop()
        self.rank.pop()
        if x != len(self.parent):
            raise LevelTreeError("union-find pop on a non-singleton element")

    def find(self, x: int) -> int:
        self.finds += 1
        parent = self.parent
        while parent[x] != x:
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> int:
        """Merge the classes of a and b; returns the new representative.

        Raises if a and b are already connected: the level tree only
        ever unions distinct adjacent siblings, so an equal-root union
        signals a logic bug upstream.
        """
        ra = self.find(a)
        rb = self.find(b)
        if ra == rb:
            raise LevelTreeError("union of already-connected elements %d, %d" % (a, b))
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        bumped = self.rank[ra] == self.rank[rb]
        if bumped:
            self.rank[ra] += 1
        self.parent[rb] = ra
        self.trail.append((rb, ra, bumped))
        self.unions += 1
        return ra

    def deunion(self) -> None:
        """Reverse the most recent un-reversed union."""
        if not self.trail:
            raise LevelTreeError("deunion with no live unions")
        rb, ra, bumped = self.trail.pop()
        self.parent[rb] = rb
        if bumped:
            self.rank[ra] -= 1
        self.deunions += 1


class LevelTree:
    """Level tree with set/undo/cost over Y = ceil(w_i) - x_i.

    Nodes live in parallel arrays indexed by an append-only arena id.
    Ids 0..n-1 are the leaves in weight order; internal nodes follow in
    creation order.  A pointer to an internal node may be stale after a
    union; every such read goes through _r(), which resolves it with a
    find.  Leaf ids are never unioned and always valid.
    """

    def __init__(self, weights):
        weights = list(weights)
        if not weights:
            raise LevelTreeError("need at least one weight")
        for w in weights:
            if not math.isfinite(w):
                raise LevelTreeError("weights must be finite, got %r" % (w,))
        self.weights = weights
        self.n = n = len(weights)
        self.ceils = [math.ceil(w) for w in weights]
        self.bits = [0] * n
        self.cap = ceil_log2(n)
        # strictly above every finite level the tree can reach
        self.sentinel = max(self.ceils) + self.cap + 2

        # arena (parallel arrays)
        self.kind: list[int] = []
        self.level: list[int] = []
        self.load: list[int] = []
        self.csum: list[int] = []
        self.parent: list[int] = []
        self.lsib: list[int] = []
        self.rsib: list[int] = []
        self.fch: list[int] = []
        self.lch: list[int] = []

        self.uf = UnionFindDeunion()
        self.journal: list = []
        self.segments = 0  # open (not yet undone) set segments
        self.sets = 0
        self.undos = 0

        self.root = self._build()

    # ------------------------------------------------------------------
    # construction

    def _append_node(self, kind: int, level: int) -> int:
        u = len(self.kind)
        self.kind.append(kind)
        self.level.append(level)
        self.load.append(1)
        self.csum.append(0)
        self.parent.append(NIL)
        self.lsib.append(NIL)
        self.rsib.append(NIL)
        self.fch.append(NIL)
        self.lch.append(NIL)
        self.uf.add()
        return u

    def _adopt(self, u: int, group: list[int]) -> None:
        # link group (left to right) as the children of u; direct writes,
        # only used at build time before any journaling
        prev = NIL
        for c in group:
            self.parent[c] = u
            self.lsib[c] = prev
            if prev != NIL:
                self.rsib[prev] = c
            prev = c
        self.rsib[prev] = NIL
        self.fch[u] = group[0]
        self.lch[u] = group[-1]
        cs = 0
        for c in group:
            cs += self.load[c]
        self.csum[u] = cs
        gap = self.level[u] - self.level[group[0]]
        self.load[u] = _ceil_shift(cs, min(self.cap, gap))

    def _build(self) -> int:
        # one left-to-right pass with a stack of subtree roots whose
        # levels are non-increasing from bottom to top; each maximal
        # equal-level run becomes the child list of one new node
        level = self.level
        for i in range(self.n):
            self._append_node(LEAF, self.ceils[i])
        stack: list[int] = []
        for i in range(self.n):
            self._reduce(stack, level[i])
            stack.append(i)
        self._reduce(stack, self.sentinel)
        root = stack[0]
        if len(stack) != 1 or self.kind[root] != ROOT:
            raise AssertionError("level-tree build left a malformed stack")
        return root

    def _reduce(self, stack: list[int], y: int) -> None:
        level = self.level
        while stack and level[stack[-1]] < y:
            run_level = level[stack[-1]]
            j = len(stack) - 1
            while j > 0 and level[stack[j - 1]] == run_level:
                j -= 1
            group = stack[j:]
            del stack[j:]
            if stack:
                new_level = min(level[stack[-1]], y)
            else:
                new_level = y
            kind = ROOT if new_level == self.sentinel else INTERNAL
            u = self._append_node(kind, new_level)
            self._adopt(u, group)
            stack.append(u)

    # ------------------------------------------------------------------
    # journaled primitives

    def _set(self, arr: list, idx: int, val) -> None:
        old = arr[idx]
        if old != val:
            self.journal.append((arr, idx, old))
            arr[idx] = val

    def _create(self, level: int) -> int:
        self.journal.append(_CREATE)
        return self._append_node(INTERNAL, level)

    def _union(self, a: int, b: int) -> int:
        self.journal.append(_UNION)
        return self.uf.union(a, b)

    def _r(self, x: int) -> int:
        # resolve a possibly-stale node pointer; leaf ids never go stale
        if x < 0 or self.kind[x] == LEAF:
            return x
        return self.uf.find(x)

    def _node_load(self, u: int, child_level: int) -> int:
        gap = self.level[u] - child_level
        return _ceil_shift(self.csum[u], min(self.cap, gap))

    def _refresh_up(self, u: int) -> None:
        # recompute load(u) and propagate the delta while it changes
        while u != NIL:
            fr = self._r(self.fch[u])
            new = self._node_load(u, self.level[fr])
            old = self.load[u]
            if new == old:
                break
            self._set(self.load, u, new)
            if self.kind[u] == ROOT:
                break
            pu = self.uf.find(self.parent[u])
            self._set(self.csum, pu, self.csum[pu] - old + new)
            u = pu

    # ------------------------------------------------------------------
    # operations

    def set(self, i: int) -> None:
        """Set x_i to 1, lowering leaf i from ceil(w_i) to ceil(w_i)-1.

        Rejected (state unchanged) when w_i is an integer or x_i is
        already 1.  All modifications are journaled as one undo segment.
        """
        if not 0 <= i < self.n:
            raise IndexError("leaf index %d out of range" % i)
        w = self.weights[i]
        if w == math.floor(w):
            raise LevelTreeError("set(%d): weight %r is an integer" % (i, w))
        if self.bits[i]:
            raise LevelTreeError("set(%d): bit is already 1" % i)
        self.journal.append(_SEG)
        self.segments += 1
        self.sets += 1
        self._set(self.bits, i, 1)
        self._lower_leaf(i)

    def undo(self) -> None:
        """Exactly reverse the modifications of the last set."""
        if self.segments == 0:
            raise LevelTreeError("undo with no set to reverse")
        self.undos += 1
        journal = self.journal
        while True:
            e = journal.pop()
            if type(e) is int:
                if e == _SEG:
                    break
                if e == _CREATE:
                    self.kind.pop()
                    self.level.pop()
                    self.load.pop()
                    self.csum.pop()
                    self.parent.pop()
                    self.lsib.pop()
                    self.rsib.pop()
                    self.fch.pop()
                    self.lch.pop()
                    self.uf.pop()
                else:  # _UNION
                    self.uf.deunion()
            else:
                arr, idx, old = e
                arr[idx] = old
        self.segments -= 1

    def cost(self) -> int:
        """Alphabetic minimax cost of the current integer sequence Y."""
        r = self._r(self.root)
        fr = self._r(self.fch[r])
        return self.level[fr] + ceil_log2(self.csum[r])

    def current_levels(self) -> list[int]:
        """Y as a list: ceil(w_i) - x_i per leaf."""
        return [self.ceils[i] - self.bits[i] for i in range(self.n)]

    # ------------------------------------------------------------------
    # the set(i) surgery
    #
    # v's parent keeps all children at one level y; v moves to y-1, so
    # the two pieces adjacent to v merge with it one level down.  The
    # case split is on which neighbours are internal and whether their
    # child level is already y-1 (absorb) or lower (re-level / wrap).

    def _lower_leaf(self, v: int) -> None:
        lv = self.level
        y = lv[v]
        ny = y - 1
        p = self.uf.find(self.parent[v])
        ul = self._r(self.lsib[v])
        ur = self._r(self.rsib[v])

        if ul == NIL and ur == NIL:
            # only child: the parent's child level simply drops
            self._set(lv, v, ny)
            self._refresh_up(p)
            return

        left_int = ul != NIL and self.kind[ul] == INTERNAL
        right_int = ur != NIL and self.kind[ur] == INTERNAL
        cl_l = lv[self._r(self.fch[ul])] if left_int else None
        cl_r = lv[self._r(self.fch[ur])] if right_int else None

        if left_int and right_int:
            if cl_l == ny and cl_r == ny:
                outer_l = self._r(self.lsib[ul])
                outer_r = self._r(self.rsib[ur])
                if outer_l == NIL and outer_r == NIL:
                    self._merge_into_parent(v, ul, ur, p, y, ny)
                else:
                    self._merge_siblings(v, ul, ur, p, y, ny, outer_l, outer_r)
            elif cl_l == ny:
                self._absorb_left_take_right(v, ul, ur, p, y, ny, cl_r)
            elif cl_r == ny:
                self._absorb_right_take_left(v, ul, ur, p, y, ny, cl_l)
            else:
                self._wrap(v, ul, ur, p, y, ny, cl_l, cl_r)
        elif left_int:
            if cl_l == ny:
                self._absorb_left(v, ul, ur, p, y, ny)
            else:
                self._wrap(v, ul, NIL, p, y, ny, cl_l, None)
        elif right_int:
            if cl_r == ny:
                self._absorb_right(v, ul, ur, p, y, ny)
            else:
                self._wrap(v, NIL, ur, p, y, ny, None, cl_r)
        else:
            # both neighbours are leaves (still level-y points): v alone
            # becomes a one-child piece at level y
            self._wrap(v, NIL, NIL, p, y, ny, None, None)

    def _merge_siblings(self, v, ul, ur, p, y, ny, outer_l, outer_r):
        # Both pieces already sit one level down: combine ul and ur into
        # one node by a single union and splice v between their child
        # lists.  v had at least one sibling besides ul and ur, so the
        # merged node stays a child of p.
        ld, cs = self.load, self.csum
        lov, lo1, lo2 = ld[v], ld[ul], ld[ur]
        l1 = self._r(self.lch[ul])
        f2 = self._r(self.fch[ur])
        f1 = self._r(self.fch[ul])
        l2 = self._r(self.lch[ur])
        cs1, cs2 = cs[ul], cs[ur]

        r = self._union(ul, ur)
        self._set(self.lsib, r, outer_l)
        self._set(self.rsib, r, outer_r)
        self._set(self.parent, r, p)
        self._set(self.level, r, y)
        self._set(self.fch, r, f1)
        self._set(self.lch, r, l2)
        self._set(cs, r, cs1 + cs2 + lov)
        # outer_l's rsib (or p's fch) still names ul and resolves to r;
        # same on the right, so no sibling rewrites are needed there.
        self._set(self.rsib, l1, v)
        self._set(self.lsib, v, l1)
        self._set(self.rsib, v, f2)
        self._set(self.lsib, f2, v)
        self._set(self.parent, v, r)
        self._set(self.level, v, ny)
        nlo = self._node_load(r, ny)
        self._set(ld, r, nlo)
        self._set(cs, p, cs[p] - lo1 - lo2 - lov + nlo)
        self._refresh_up(p)

    def _merge_into_parent(self, v, ul, ur, p, y, ny):
        # v's only siblings were ul and ur: no new node; the former
        # parent is reused.  Two unions fold ul, ur and p into one class
        # that keeps p's identity, level and outside links, and whose
        # children are ul's children, v, then ur's children.
        ld, cs = self.load, self.csum
        lov = ld[v]
        l1 = self._r(self.lch[ul])
        f2 = self._r(self.fch[ur])
        f1 = self._r(self.fch[ul])
        l2 = self._r(self.lch[ur])
        cs1, cs2 = cs[ul], cs[ur]
        pk = self.kind[p]
        plvl = self.level[p]
        pA = self._r(self.lsib[p])
        pB = self._r(self.rsib[p])
        lo_p = ld[p]
        pp = self.uf.find(self.parent[p]) if pk != ROOT else NIL

        r = self._union(ul, ur)
        r = self._union(r, p)
        self._set(self.kind, r, pk)
        self._set(self.level, r, plvl)
        self._set(self.parent, r, self.parent[p])
        self._set(self.lsib, r, pA)
        self._set(self.rsib, r, pB)
        self._set(self.fch, r, f1)
        self._set(self.lch, r, l2)
        self._set(cs, r, cs1 + cs2 + lov)
        self._set(self.rsib, l1, v)
        self._set(self.lsib, v, l1)
        self._set(self.rsib, v, f2)
        self._set(self.lsib, f2, v)
        self._set(self.parent, v, r)
        self._set(self.level, v, ny)
        nlo = self._node_load(r, ny)
        self._set(ld, r, nlo)
        if pp != NIL:
            self._set(cs, pp, cs[pp] - lo_p + nlo)
            self._refresh_up(pp)

    def _absorb_left_take_right(self, v, ul, ur, p, y, ny, cl_r):
        # ul's children are already at y-1: append v to ul, drop ur to
        # level y-1 and hang it after v as ul's new last child.
        ld, cs = self.load, self.csum
        lov, lo1, lo2 = ld[v], ld[ul], ld[ur]
        B = self._r(self.rsib[ur])
        l1 = self._r(self.lch[ul])

        self._set(self.rsib, ul, B)
        if B != NIL:
            self._set(self.lsib, B, ul)
        else:
            self._set(self.lch, p, ul)
        self._set(self.rsib, l1, v)
        self._set(self.lsib, v, l1)
        self._set(self.rsib, v, ur)
        self._set(self.lsib, ur, v)
        self._set(self.rsib, ur, NIL)
        self._set(self.lch, ul, ur)
        self._set(self.parent, v, ul)
        self._set(self.parent, ur, ul)
        self._set(self.level, v, ny)
        self._set(self.level, ur, ny)
        nlo2 = self._node_load(ur, cl_r)
        self._set(ld, ur, nlo2)
        self._set(cs, ul, cs[ul] + lov + nlo2)
        nlo1 = self._node_load(ul, ny)
        self._set(ld, ul, nlo1)
        self._set(cs, p, cs[p] - lo1 - lov - lo2 + nlo1)
        self._refresh_up(p)

    def _absorb_right_take_left(self, v, ul, ur, p, y, ny, cl_l):
        # mirror image: prepend ul (dropped to y-1) and v to ur
        ld, cs = self.load, self.csum
        lov, lo1, lo2 = ld[v], ld[ul], ld[ur]
        A = self._r(self.lsib[ul])
        f2 = self._r(self.fch[ur])

        self._set(self.lsib, ur, A)
        if A != NIL:
            self._set(self.rsib, A, ur)
        else:
            self._set(self.fch, p, ur)
        self._set(self.lsib, f2, v)
        self._set(self.rsib, v, f2)
        self._set(self.lsib, v, ul)
        self._set(self.rsib, ul, v)
        self._set(self.lsib, ul, NIL)
        self._set(self.fch, ur, ul)
        self._set(self.parent, v, ur)
        self._set(self.parent, ul, ur)
        self._set(self.level, v, ny)
        self._set(self.level, ul, ny)
        nlo1 = self._node_load(ul, cl_l)
        self._set(ld, ul, nlo1)
        self._set(cs, ur, cs[ur] + lov + nlo1)
        nlo2 = self._node_load(ur, ny)
        self._set(ld, ur, nlo2)
        self._set(cs, p, cs[p] - lo1 - lov - lo2 + nlo2)
        self._refresh_up(p)

    def _absorb_left(self, v, ul, ur, p, y, ny):
        # right neighbour is a leaf or absent: v just joins ul
        ld, cs = self.load, self.csum
        lov, lo1 = ld[v], ld[ul]
        l1 = self._r(self.lch[ul])

        self._set(self.rsib, ul, ur)
        if ur != NIL:
            self._set(self.lsib, ur, ul)
        else:
            self._set(self.lch, p, ul)
        self._set(self.rsib, l1, v)
        self._set(self.lsib, v, l1)
        self._set(self.rsib, v, NIL)
        self._set(self.lch, ul, v)
        self._set(self.parent, v, ul)
        self._set(self.level, v, ny)
        self._set(cs, ul, cs[ul] + lov)
        nlo1 = self._node_load(ul, ny)
        self._set(ld, ul, nlo1)
        self._set(cs, p, cs[p] - lo1 - lov + nlo1)
        self._refresh_up(p)

    def _absorb_right(self, v, ul, ur, p, y, ny):
        ld, cs = self.load, self.csum
        lov, lo2 = ld[v], ld[ur]
        f2 = self._r(self.fch[ur])

        self._set(self.lsib, ur, ul)
        if ul != NIL:
            self._set(self.rsib, ul, ur)
        else:
            self._set(self.fch, p, ur)
        self._set(self.lsib, f2, v)
        self._set(self.rsib, v, f2)
        self._set(self.lsib, v, NIL)
        self._set(self.fch, ur, v)
        self._set(self.parent, v, ur)
        self._set(self.level, v, ny)
        self._set(cs, ur, cs[ur] + lov)
        nlo2 = self._node_load(ur, ny)
        self._set(ld, ur, nlo2)
        self._set(cs, p, cs[p] - lo2 - lov + nlo2)
        self._refresh_up(p)

    def _wrap(self, v, ul, ur, p, y, ny, cl_l, cl_r):
        # No piece can take v at level y-1 directly: make a fresh node
        # at level y over [ul?, v, ur?], re-levelling the taken
        # neighbours to y-1.  With no internal neighbours this is the
        # degenerate one-child piece over v alone.
        ld, cs = self.load, self.csum
        lov = ld[v]
        first = ul if ul != NIL else v
        last = ur if ur != NIL else v
        A = self._r(self.lsib[first])
        B = self._r(self.rsib[last])
        removed = lov + (ld[ul] if ul != NIL else 0) + (ld[ur] if ur != NIL else 0)

        u = self._create(y)
        self.parent[u] = p
        self.lsib[u] = A
        self.rsib[u] = B
        self.fch[u] = first
        self.lch[u] = last
        if A != NIL:
            self._set(self.rsib, A, u)
        else:
            self._set(self.fch, p, u)
        if B != NIL:
            self._set(self.lsib, B, u)
        else:
            self._set(self.lch, p, u)

        csu = 0
        if ul != NIL:
            self._set(self.lsib, ul, NIL)
            self._set(self.rsib, ul, v)
            self._set(self.lsib, v, ul)
            self._set(self.parent, ul, u)
            self._set(self.level, ul, ny)
            nlo1 = self._node_load(ul, cl_l)
            self._set(ld, ul, nlo1)
            csu += nlo1
        else:
            self._set(self.lsib, v, NIL)
        if ur != NIL:
            self._set(self.rsib, ur, NIL)
            self._set(self.lsib, ur, v)
            self._set(self.rsib, v, ur)
            self._set(self.parent, ur, u)
            self._set(self.level, ur, ny)
            nlo2 = self._node_load(ur, cl_r)
            self._set(ld, ur, nlo2)
            csu += nlo2
        else:
            self._set(self.rsib, v, NIL)
        self._set(self.parent, v, u)
        self._set(self.level, v, ny)
        csu += lov
        self.csum[u] = csu
        self.load[u] = self._node_load(u, ny)
        self._set(cs, p, cs[p] - removed + self.load[u])
        self._refresh_up(p)

    # ------------------------------------------------------------------
    # inspection

    def _children(self, u: int) -> list[int]:
        out = []
        c = self._r(self.fch[u])
        while c != NIL:
            out.append(c)
            c = self._r(self.rsib[c])
        return out

    def serialize(self) -> str:
        """Deterministic JSON snapshot of the live structure.

        Lists every reachable node in preorder with its resolved links,
        plus the bit vector and the journal depth.  Two states behave
        identically iff their serializations are byte-identical, which
        is how the undo contract is tested.
        """
        r = self._r(self.root)
        nodes = []
        stack = [(r, NIL)]
        while stack:
            u, pu = stack.pop()
            ch = self._children(u)
            nodes.append(
                {
                    "id": u,
                    "kind": _KIND_NAMES[self.kind[u]],
                    "level": self.level[u],
                    "load": self.load[u],
                    "csum": self.csum[u],
                    "children": ch,
                    "parent": pu,
                }
            )
            for c in ch:
                if self.kind[c] == LEAF:
                    nodes.append(
                        {
                            "id": c,
                            "kind": "leaf",
                            "level": self.level[c],
                            "load": self.load[c],
                            "csum": 0,
                            "children": [],
                            "parent": u,
                        }
                    )
            for c in reversed(ch):
                if self.kind[c] != LEAF:
                    stack.append((c, u))
        payload = {
            "nodes": nodes,
            "bits": "".join(str(b) for b in self.bits),
            "journal_depth": self.segments,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    def counters(self) -> dict:
        return {
            "sets": self.sets,
            "undos": self.undos,
            "finds": self.uf.finds,
            "unions": self.uf.unions,
            "deunions": self.uf.deunions,
        }

    def audit(self) -> None:
        """Check every structural invariant; raises AssertionError.

        Test/debug only: walks the whole tree, so it is O(n) plus finds.
        """
        r = self._r(self.root)
        if self.kind[r] != ROOT:
            raise AssertionError("root class lost its root kind")
        if self.level[r] != self.sentinel:
            raise AssertionError("root level is not the sentinel")
        seen_leaves = []
        live = 0
        stack = [r]
        while stack:
            u = stack.pop()
            live += 1
            ch = self._children(u)
            if not ch:
                raise AssertionError("internal node %d has no children" % u)
            cl = self.level[ch[0]]
            prev = NIL
            cs = 0
            for c in ch:
                if self.level[c] != cl:
                    raise AssertionError("children of %d at mixed levels" % u)
                if self._r(self.lsib[c]) != prev:
                    raise AssertionError("bad lsib under %d" % u)
                if self.uf.find(self.parent[c]) != u:
                    raise AssertionError("child %d does not resolve to parent %d" % (c, u))
                cs += self.load[c]
                prev = c
            if self._r(self.lch[u]) != ch[-1]:
                raise AssertionError("bad lch on %d" % u)
            if cl >= self.level[u]:
                raise AssertionError("child level not below node %d" % u)
            if cs != self.csum[u]:
                raise AssertionError("csum mismatch on %d" % u)
            if self.load[u] != self._node_load(u, cl):
                raise AssertionError("load recurrence violated on %d" % u)
            for c in ch:
                if self.kind[c] == LEAF:
                    if self.load[c] != 1:
                        raise AssertionError("leaf %d has load != 1" % c)
                    if self.level[c] != self.ceils[c] - self.bits[c]:
                        raise AssertionError("leaf %d level out of sync with bits" % c)
                    seen_leaves.append(c)
                else:
                    stack.append(c)
        if sorted(seen_leaves) != list(range(self.n)):
            raise AssertionError("leaf set mangled")
        order = []
        self._collect_leaves_inorder(r, order)
        if order != list(range(self.n)):
            raise AssertionError("leaf order not preserved")
        live_internal = sum(
            1 for x in range(self.n, len(self.kind)) if self.uf.find(x) == x
        )
        if live != live_internal:
            raise AssertionError("unreachable live internal nodes exist")

    def _collect_leaves_inorder(self, r: int, order: list[int]) -> None:
        stack = [iter(self._children(r))]
        while stack:
            it = stack[-1]
            c = next(it, None)
            if c is None:
                stack.pop()
            elif self.kind[c] == LEAF:
                order.append(c)
            else:
                stack.append(iter(self._children(c)))

    # ------------------------------------------------------------------
    # witness extraction

    def depth_profile(self) -> list[int]:
        """Leaf depths of one optimal tree realizing cost().

        Per node, the children's tree fragments are concatenated in
        sibling order and paired from the left (odd fragment last, kept
        unpaired) once per level step up to the node's level, stopping
        early at a single fragment; the fragment count must then equal
        the node's load.  The root keeps pairing until one fragment is
        left, whose shape is the witness tree.
        """
        r = self._r(self.root)
        # preorder; reversed gives children before parents
        order = []
        kids: dict[int, list[int]] = {}
        stack = [r]
        while stack:
            u = stack.pop()
            order.append(u)
            ch = self._children(u)
            kids[u] = ch
            for c in ch:
                if self.kind[c] != LEAF:
                    stack.append(c)
        frags: dict[int, list] = {}
        for u in reversed(order):
            fl = []
            for c in kids[u]:
                if self.kind[c] == LEAF:
                    fl.append(c)
                else:
                    fl.extend(frags.pop(c))
            if self.kind[u] == ROOT:
                while len(fl) > 1:
                    fl = self._pair(fl)
            else:
                cl = self.level[kids[u][0]]
                for _ in range(self.level[u] - cl):
                    if len(fl) == 1:
                        break
                    fl = self._pair(fl)
                if len(fl) != self.load[u]:
                    raise AssertionError(
                        "fragment count %d != load %d at node %d" % (len(fl), self.load[u], u)
                    )
            frags[u] = fl
        top = frags[r][0]
        depths = [0] * self.n
        walk = [(top, 0)]
        while walk:
            f, d = walk.pop()
            if type(f) is int:
                depths[f] = d
            else:
                a, b = f
                walk.append((a, d + 1))
                walk.append((b, d + 1))
        return depths

    @staticmethod
    def _pair(fl: list) -> list:
        out = []
        m = len(fl)
        for i in range(0, m - 1, 2):
            out.append((fl[i], fl[i + 1]))
        if m % 2:
            out.append(fl[-1])
        return out
