"""Alphabetical prefix codes tuned to a sample distribution.

Running the real-weight minimax machinery on weights log2(q_i) yields
codeword lengths for an order-preserving prefix code, and the minimax
value itself bounds the code's excess cost: for any source P,

    avg_len(P) - H(P) - D(P || Q) = sum_i p_i (len_i + log2 q_i)
                                 <= max_i (len_i + log2 q_i)

and the right-hand side is exactly the cost the tree minimizes.
"""

from __future__ import annotations

import json
import math

from .realweight import WeightSeq, alpha_real


class CodingError(ValueError):
    """Invalid distribution, codebook, or encode/decode input."""


class UndefinedDivergenceError(CodingError):
    """D(P || Q) with q(s) = 0 while p(s) > 0 for some symbol s."""

    def __init__(self, label: str):
        super().__init__(
            "relative entropy undefined: q(%r) = 0 but p(%r) > 0" % (label, label)
        )
        self.label = label


class DecodeError(CodingError):
    """Bit string not decodable; .bit_offset points at the failure."""

    def __init__(self, bit_offset: int, message: str):
        super().__init__("%s (bit offset %d)" % (message, bit_offset))
        self.bit_offset = bit_offset


_SUM_TOL = 1e-9


class Distribution:
    """Probability vector over a strictly increasing label sequence."""

    def __init__(self, labels, probs):
        labels = list(labels)
        probs = [float(p) for p in probs]
        if not labels:
            raise CodingError("distribution needs at least one symbol")
        if len(labels) != len(probs):
            raise CodingError(
                "%d labels but %d probabilities" % (len(labels), len(probs))
            )
        for a, b in zip(labels, labels[1:]):
            if not a < b:
                raise CodingError("labels must be strictly increasing (%r >= %r)" % (a, b))
        for lab, p in zip(labels, probs):
            if not (p >= 0.0 and math.isfinite(p)):
                raise CodingError("bad probability %r for %r" % (p, lab))
        total = math.fsum(probs)
        if abs(total - 1.0) > _SUM_TOL:
            raise CodingError("probabilities sum to %r, not 1" % total)
        self.labels = tuple(labels)
        self.probs = tuple(probs)
        self._index = {lab: k for k, lab in enumerate(labels)}

    def __len__(self):
        return len(self.labels)

    def prob(self, label) -> float:
        try:
            return self.probs[self._index[label]]
        except KeyError:
            raise CodingError("symbol %r not in distribution" % (label,)) from None


def empirical_distribution(counts, smoothing: str = "none", alphabet=None) -> Distribution:
    """Distribution from symbol counts.

    counts is a mapping or an iterable of (label, count) pairs.  With
    smoothing="add_one" every symbol of the declared alphabet gets one
    phantom occurrence; that mode requires alphabet, since it exists to
    give unseen symbols mass.
    """
    if hasattr(counts, "items"):
        pairs = list(counts.items())
    else:
        pairs = [(lab, c) for lab, c in counts]
    cmap: dict = {}
    for lab, c in pairs:
        if lab in cmap:
            raise CodingError("duplicate count for symbol %r" % (lab,))
        if c != int(c) or c < 0:
            raise CodingError("bad count %r for symbol %r" % (c, lab))
        cmap[lab] = int(c)
    if alphabet is None:
        labels = sorted(cmap)
    else:
        labels = sorted(set(alphabet))
        extra = set(cmap) - set(labels)
        if extra:
            raise CodingError(
                "counted symbols missing from the alphabet: %r" % (sorted(extra),)
            )
    if not labels:
        raise CodingError("empty alphabet")

    if smoothing == "none":
        total = sum(cmap.get(lab, 0) for lab in labels)
        if total == 0:
            raise CodingError("all counts are zero")
        return Distribution(labels, [cmap.get(lab, 0) / total for lab in labels])
    if smoothing == "add_one":
        if alphabet is None:
            raise CodingError("add_one smoothing requires a declared alphabet")
        total = sum(cmap.get(lab, 0) for lab in labels) + len(labels)
        return Distribution(labels, [(cmap.get(lab, 0) + 1) / total for lab in labels])
    raise CodingError("unknown smoothing %r" % (smoothing,))


def entropy(p: Distribution) -> float:
    """Shannon entropy in bits; zero-probability terms contribute 0."""
    return -math.fsum(pi * math.log2(pi) for pi in p.probs if pi > 0.0)


def relative_entropy(p: Distribution, q: Distribution) -> float:
    """D(P || Q) in bits over a shared alphabet."""
    if p.labels != q.labels:
        raise CodingError("distributions are over different alphabets")
    acc = []
    for lab, pi, qi in zip(p.labels, p.probs, q.probs):
        if pi == 0.0:
            continue
        if qi == 0.0:
            raise UndefinedDivergenceError(lab)
        acc.append(pi * math.log2(pi / qi))
    return math.fsum(acc)


def codewords_from_depths(depths) -> list[str]:
    """Canonical order-preserving codewords for a valid depth profile.

    The k-th codeword is the previous one plus one, re-sized to the new
    length; a length decrease is only legal when the trailing subtree
    just completed, which a valid profile guarantees.
    """
    from .core import depths_to_tree

    depths_to_tree(depths)  # raises DepthProfileError when unrealizable
    out: list[str] = []
    code = 0
    prev = depths[0]
    out.append(format(code, "0%db" % prev) if prev else "")
    for length in depths[1:]:
        code += 1
        if length >= prev:
            code <<= length - prev
        else:
            shift = prev - length
            if code & ((1 << shift) - 1):
                raise AssertionError("length drop before the subtree completed")
            code >>= shift
        out.append(format(code, "0%db" % length) if length else "")
        prev = length
    if code + 1 != 1 << prev:
        raise AssertionError("codeword assignment did not exhaust the tree")
    return out


class CodeBook:
    """Alphabetical complete prefix code over an ordered alphabet.

    The constructor re-checks everything a codebook promises: labels
    strictly increasing, codewords strictly increasing with no prefix
    relations, and Kraft equality (the code tree is full).
    """

    def __init__(self, labels, codewords):
        labels = list(labels)
        codewords = [str(c) for c in codewords]
        if not labels or len(labels) != len(codewords):
            raise CodingError("label/codeword lists empty or mismatched")
        for a, b in zip(labels, labels[1:]):
            if not a < b:
                raise CodingError("labels must be strictly increasing (%r >= %r)" % (a, b))
        for cw in codewords:
            if cw.strip("01") != "":
                raise CodingError("codeword %r is not binary" % (cw,))
            if cw == "" and len(codewords) > 1:
                raise CodingError("empty codeword in a multi-symbol code")
        for a, b in zip(codewords, codewords[1:]):
            if not a < b:
                raise CodingError("codewords must be strictly increasing (%r >= %r)" % (a, b))
            if b.startswith(a):
                raise CodingError("codeword %r is a prefix of %r" % (a, b))
        maxlen = max(len(cw) for cw in codewords)
        kraft = sum(1 << (maxlen - len(cw)) for cw in codewords)
        if kraft != 1 << maxlen:
            raise CodingError("code is not complete (Kraft sum != 1)")
        self.labels = tuple(labels)
        self.codewords = tuple(codewords)
        self._by_label = dict(zip(self.labels, self.codewords))
        self._by_word = dict(zip(self.codewords, self.labels))
        self.max_len = maxlen

    def __len__(self):
        return len(self.labels)

    def lengths(self) -> list[int]:
        return [len(cw) for cw in self.codewords]

    def codeword_for(self, label) -> str:
        try:
            return self._by_label[label]
        except KeyError:
            raise CodingError("symbol %r not in code" % (label,)) from None

    def encode(self, symbols) -> str:
        return "".join(self.codeword_for(s) for s in symbols)

    def decode(self, bits: str) -> str:
        if bits.strip("01") != "":
            raise CodingError("bit string contains non-binary characters")
        if self.max_len == 0:
            # single symbol, empty codeword: only the empty string decodes
            if bits:
                raise DecodeError(0, "no bits are decodable with an empty-codeword code")
            return ""
        out = []
        i = 0
        n = len(bits)
        while i < n:
            for j in range(i + 1, min(i + self.max_len, n) + 1):
                lab = self._by_word.get(bits[i:j])
                if lab is not None:
                    out.append(lab)
                    i = j
                    break
            else:
                # the code is complete, so enough bits always match: we
                # must have run off the end of the string
                raise DecodeError(i, "bit string ends inside a codeword")
        return "".join(out)

    def to_json(self, q=None) -> str:
        payload: dict = {
            "code": [
                {"label": lab, "codeword": cw}
                for lab, cw in zip(self.labels, self.codewords)
            ]
        }
        if q is not None:
            if isinstance(q, Distribution):
                if q.labels != self.labels:
                    raise CodingError("sample distribution alphabet differs from the code")
                payload["q"] = list(q.probs)
            else:
                payload["q"] = [float(x) for x in q]
        return json.dumps(payload, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str):
        """Parse to_json output; returns (codebook, q distribution or None)."""
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise CodingError("codebook is not valid JSON: %s" % e) from None
        if not isinstance(doc, dict) or "code" not in doc:
            raise CodingError('codebook JSON must be an object with a "code" list')
        entries = doc["code"]
        if not isinstance(entries, list):
            raise CodingError('"code" must be a list')
        labels, codewords = [], []
        for e in entries:
            if not isinstance(e, dict) or "label" not in e or "codeword" not in e:
                raise CodingError("each code entry needs label and codeword")
            labels.append(e["label"])
            codewords.append(e["codeword"])
        book = cls(labels, codewords)
        q = None
        if "q" in doc:
            q = Distribution(labels, doc["q"])
        return book, q


def build_code(q: Distribution) -> CodeBook:
    """Order-preserving prefix code for sample distribution Q.

    Every q_i must be positive (a zero would demand an infinite
    codeword).  Codeword lengths are the witness depths of the minimax
    run on weights log2(q_i).
    """
    for lab, qi in zip(q.labels, q.probs):
        if qi <= 0.0:
            raise CodingError(
                "cannot build a code: q(%r) = 0 (smoothing would fix this)" % (lab,)
            )
    result = alpha_real(WeightSeq([math.log2(qi) for qi in q.probs]))
    return CodeBook(q.labels, codewords_from_depths(result.depths))


def redundancy_bound(q: Distribution) -> float:
    """max_i (len_i + log2 q_i) for the code build_code returns; bounds
    the excess avg_len - H - D for every source distribution."""
    for lab, qi in zip(q.labels, q.probs):
        if qi <= 0.0:
            raise CodingError("redundancy bound needs q(%r) > 0" % (lab,))
    return alpha_real(WeightSeq([math.log2(qi) for qi in q.probs])).alpha


class CodeReport:
    """Cost accounting for one code against one source distribution."""

    def __init__(self, avg_len, entropy, relative_entropy, excess, bound):
        self.avg_len = avg_len
        self.entropy = entropy
        self.relative_entropy = relative_entropy
        self.excess = excess
        self.bound = bound

    def to_json(self) -> str:
        return json.dumps(
            {
                "avg_len": self.avg_len,
                "entropy": self.entropy,
                "relative_entropy": self.relative_entropy,
                "excess": self.excess,
                "bound": self.bound,
            },
            indent=2,
            sort_keys=True,
        )


def evaluate(p: Distribution, code: CodeBook, q: Distribution, bound=None) -> CodeReport:
    """Report avg length, entropy, divergence, and the excess

        avg_len(P) - H(P) - D(P || Q)

    which redundancy_bound(q) caps.  Pass bound to skip recomputing it
    when evaluating many sources against one code.
    """
    if p.labels != code.labels:
        raise CodingError("source alphabet differs from the code")
    if q.labels != code.labels:
        raise CodingError("sample alphabet differs from the code")
    lens = code.lengths()
    avg = math.fsum(pi * li for pi, li in zip(p.probs, lens))
    h = entropy(p)
    d = relative_entropy(p, q)
    if bound is None:
        bound = redundancy_bound(q)
    return CodeReport(avg, h, d, avg - h - d, bound)


def encode(text, code: CodeBook) -> str:
    return code.encode(text)


def decode(bits: str, code: CodeBook) -> str:
    return code.decode(bits)
