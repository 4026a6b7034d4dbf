import json
import math
import random

import pytest

from alphatree import (
    CodeBook,
    CodingError,
    DecodeError,
    Distribution,
    UndefinedDivergenceError,
    build_code,
    codewords_from_depths,
    decode,
    empirical_distribution,
    encode,
    entropy,
    evaluate,
    redundancy_bound,
    relative_entropy,
)
from helpers import random_tree_profile


def dyadic_from_profile(profile):
    labels = [chr(ord("a") + i) if i < 26 else "z%03d" % i for i in range(len(profile))]
    return Distribution(labels, [2.0 ** -d for d in profile])


# ----------------------------------------------------------------------
# distributions


def test_distribution_validation():
    Distribution("ab", [0.5, 0.5])
    with pytest.raises(CodingError):
        Distribution("ba", [0.5, 0.5])  # labels out of order
    with pytest.raises(CodingError):
        Distribution("aa", [0.5, 0.5])  # duplicate labels
    with pytest.raises(CodingError):
        Distribution("ab", [0.6, 0.6])  # sums past tolerance
    with pytest.raises(CodingError):
        Distribution("ab", [-0.1, 1.1])
    with pytest.raises(CodingError):
        Distribution("", [])


def test_empirical_plain():
    d = empirical_distribution({"a": 2, "b": 1, "c": 1})
    assert d.labels == ("a", "b", "c")
    assert d.probs == (0.5, 0.25, 0.25)
    d = empirical_distribution([("b", 3), ("a", 1)])
    assert d.labels == ("a", "b")
    assert d.probs == (0.25, 0.75)


def test_empirical_add_one():
    d = empirical_distribution({"a": 1, "b": 0}, smoothing="add_one", alphabet="ab")
    assert d.probs == (2 / 3, 1 / 3)
    # unseen symbols of the declared alphabet get mass too
    d = empirical_distribution({"a": 1}, smoothing="add_one", alphabet="abc")
    assert d.probs == (0.5, 0.25, 0.25)


def test_empirical_errors():
    with pytest.raises(CodingError):
        empirical_distribution({"a": 0, "b": 0})
    with pytest.raises(CodingError):
        empirical_distribution({"a": 1}, smoothing="add_one")  # no alphabet
    with pytest.raises(CodingError):
        empirical_distribution({"z": 1}, alphabet="ab")  # symbol outside
    with pytest.raises(CodingError):
        empirical_distribution({"a": -1})
    with pytest.raises(CodingError):
        empirical_distribution({"a": 1}, smoothing="jeffreys")
    with pytest.raises(CodingError):
        empirical_distribution([("a", 1), ("a", 2)])


# ----------------------------------------------------------------------
# entropy and divergence


def test_entropy_examples():
    assert entropy(Distribution("abcd", [0.25] * 4)) == 2.0
    assert entropy(Distribution("ab", [1.0, 0.0])) == 0.0
    h = entropy(Distribution("ab", [0.5, 0.5]))
    assert abs(h - 1.0) < 1e-12


def test_relative_entropy_examples():
    p = Distribution("ab", [0.5, 0.5])
    assert relative_entropy(p, p) == 0.0
    q = Distribution("ab", [0.25, 0.75])
    assert abs(relative_entropy(p, q) - (1.0 - 0.5 * math.log2(3))) < 1e-12
    # p zero entries are fine even where q is zero
    assert relative_entropy(
        Distribution("ab", [1.0, 0.0]), Distribution("ab", [1.0, 0.0])
    ) == 0.0


def test_relative_entropy_undefined():
    p = Distribution("ab", [0.5, 0.5])
    q = Distribution("ab", [1.0, 0.0])
    with pytest.raises(UndefinedDivergenceError) as ei:
        relative_entropy(p, q)
    assert ei.value.label == "b"
    with pytest.raises(CodingError):
        relative_entropy(p, Distribution("ac", [0.5, 0.5]))


# ----------------------------------------------------------------------
# codeword assignment


def test_codewords_goldens():
    assert codewords_from_depths([0]) == [""]
    assert codewords_from_depths([1, 1]) == ["0", "1"]
    assert codewords_from_depths([1, 2, 2]) == ["0", "10", "11"]
    assert codewords_from_depths([2, 2, 1]) == ["00", "01", "1"]
    assert codewords_from_depths([2, 2, 2, 2]) == ["00", "01", "10", "11"]
    assert codewords_from_depths([1, 3, 3, 2]) == ["0", "100", "101", "11"]


def test_codewords_reject_bad_profiles():
    with pytest.raises(Exception):
        codewords_from_depths([1, 1, 1])
    with pytest.raises(Exception):
        codewords_from_depths([2, 1])


def test_codewords_random_are_a_valid_codebook():
    rng = random.Random(30)
    for _ in range(100):
        n = rng.randint(1, 40)
        profile = random_tree_profile(rng, n)
        words = codewords_from_depths(profile)
        labels = ["s%03d" % i for i in range(n)]
        book = CodeBook(labels, words)  # constructor re-checks everything
        assert book.lengths() == profile


# ----------------------------------------------------------------------
# codebooks


def test_build_code_goldens():
    book = build_code(Distribution("abc", [0.5, 0.25, 0.25]))
    assert list(book.codewords) == ["0", "10", "11"]
    book = build_code(Distribution("abc", [0.25, 0.5, 0.25]))
    assert list(book.codewords) == ["00", "01", "1"]
    book = build_code(Distribution("abcd", [0.25] * 4))
    assert book.lengths() == [2, 2, 2, 2]
    solo = build_code(Distribution("a", [1.0]))
    assert list(solo.codewords) == [""]


def test_build_code_rejects_zero_mass():
    with pytest.raises(CodingError):
        build_code(Distribution("ab", [1.0, 0.0]))


def test_codebook_invariants_enforced():
    with pytest.raises(CodingError):
        CodeBook(["a", "b"], ["1", "0"])  # not increasing
    with pytest.raises(CodingError):
        CodeBook(["a", "b"], ["0", "01"])  # prefix
    with pytest.raises(CodingError):
        CodeBook(["a", "b"], ["0", "11"])  # incomplete (Kraft < 1)
    with pytest.raises(CodingError):
        CodeBook(["b", "a"], ["0", "1"])  # labels out of order
    with pytest.raises(CodingError):
        CodeBook(["a", "b"], ["0", "1x"])
    with pytest.raises(CodingError):
        CodeBook([], [])


def test_codebook_json_roundtrip():
    q = Distribution("abc", [0.5, 0.25, 0.25])
    book = build_code(q)
    text = book.to_json(q=q)
    back, q2 = CodeBook.from_json(text)
    assert back.labels == book.labels
    assert back.codewords == book.codewords
    assert q2.probs == q.probs
    bare, none_q = CodeBook.from_json(book.to_json())
    assert none_q is None
    assert bare.codewords == book.codewords


def test_codebook_json_errors():
    with pytest.raises(CodingError):
        CodeBook.from_json("[1, 2, 3]")
    with pytest.raises(CodingError):
        CodeBook.from_json("{not json")
    with pytest.raises(CodingError):
        CodeBook.from_json(json.dumps({"code": [{"label": "a"}]}))


# ----------------------------------------------------------------------
# encode / decode


def test_encode_decode_roundtrip():
    book = build_code(Distribution("abc", [0.5, 0.25, 0.25]))
    bits = encode("abacab", book)
    assert bits == "010011010"
    assert decode(bits, book) == "abacab"
    assert encode("", book) == ""
    assert decode("", book) == ""


def test_encode_decode_random():
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randint(2, 12)
        labels = [chr(ord("a") + i) for i in range(n)]
        probs = [rng.random() + 0.05 for _ in range(n)]
        t = sum(probs)
        book = build_code(Distribution(labels, [x / t for x in probs]))
        msg = "".join(rng.choice(labels) for _ in range(rng.randint(0, 60)))
        assert book.decode(book.encode(msg)) == msg


def test_encode_unknown_symbol():
    book = build_code(Distribution("ab", [0.5, 0.5]))
    with pytest.raises(CodingError):
        book.encode("abz")


def test_decode_errors():
    book = build_code(Distribution("abc", [0.5, 0.25, 0.25]))
    with pytest.raises(CodingError):
        book.decode("01x")
    with pytest.raises(DecodeError) as ei:
        book.decode("01")  # '0' decodes, then a dangling '1'
    assert ei.value.bit_offset == 1
    solo = build_code(Distribution("a", [1.0]))
    assert solo.decode("") == ""
    with pytest.raises(DecodeError):
        solo.decode("0")


# ----------------------------------------------------------------------
# redundancy accounting


def test_redundancy_bound_dyadic_is_exactly_zero():
    rng = random.Random(32)
    for _ in range(50):
        q = dyadic_from_profile(random_tree_profile(rng, rng.randint(1, 32)))
        assert redundancy_bound(q) == 0.0


def test_redundancy_bound_examples():
    assert redundancy_bound(Distribution("abc", [0.5, 0.25, 0.25])) == 0.0
    assert abs(redundancy_bound(Distribution("abc", [1 / 3] * 3)) - (2 - math.log2(3))) < 1e-9
    assert redundancy_bound(Distribution("abc", [0.25, 0.5, 0.25])) == 1.0


def test_bound_is_nonnegative_and_tight():
    rng = random.Random(33)
    for _ in range(60):
        n = rng.randint(1, 24)
        probs = [rng.random() + 0.01 for _ in range(n)]
        t = sum(probs)
        labels = ["c%02d" % i for i in range(n)]
        q = Distribution(labels, [x / t for x in probs])
        book = build_code(q)
        bound = redundancy_bound(q)
        worst = max(l + math.log2(qi) for l, qi in zip(book.lengths(), q.probs))
        assert bound >= -1e-12
        assert abs(worst - bound) <= 1e-9


def test_evaluate_report():
    q = Distribution("abc", [0.5, 0.25, 0.25])
    book = build_code(q)
    rep = evaluate(q, book, q)
    assert abs(rep.avg_len - 1.5) < 1e-12
    assert abs(rep.excess) < 1e-12
    assert rep.bound == 0.0
    doc = json.loads(rep.to_json())
    assert set(doc) == {"avg_len", "entropy", "relative_entropy", "excess", "bound"}


def test_evaluate_excess_below_bound():
    rng = random.Random(34)
    for _ in range(40):
        n = rng.randint(2, 16)
        labels = [chr(ord("a") + i) for i in range(n)]
        qp = [rng.random() + 0.02 for _ in range(n)]
        qt = sum(qp)
        q = Distribution(labels, [x / qt for x in qp])
        book = build_code(q)
        bound = redundancy_bound(q)
        for _ in range(10):
            pp = [rng.random() for _ in range(n)]
            pt = sum(pp)
            p = Distribution(labels, [x / pt for x in pp])
            rep = evaluate(p, book, q, bound=bound)
            assert rep.excess <= bound + 1e-9


def test_point_mass_attains_bound():
    q = Distribution("abc", [0.25, 0.5, 0.25])
    book = build_code(q)
    bound = redundancy_bound(q)
    worst = max(
        range(3), key=lambda i: book.lengths()[i] + math.log2(q.probs[i])
    )
    probs = [0.0, 0.0, 0.0]
    probs[worst] = 1.0
    rep = evaluate(Distribution("abc", probs), book, q)
    assert abs(rep.excess - bound) <= 1e-9


def test_evaluate_rejects_mismatched_alphabets():
    q = Distribution("ab", [0.5, 0.5])
    book = build_code(q)
    other = Distribution("ac", [0.5, 0.5])
    with pytest.raises(CodingError):
        evaluate(other, book, q)
    with pytest.raises(CodingError):
        evaluate(q, book, other)


def test_evaluate_undefined_divergence():
    q = Distribution("ab", [0.5, 0.5])
    book = build_code(q)
    q_holed = Distribution("ab", [1.0, 0.0])
    p = Distribution("ab", [0.5, 0.5])
    with pytest.raises(UndefinedDivergenceError):
        evaluate(p, book, q_holed)
