"""Permutation algebra, conjugacy classes, and the realizability oracle."""

import math

import pytest

from conecover import (
    REALIZABLE,
    UNKNOWN,
    UNREALIZABLE,
    BranchDatum,
    MonodromyWitness,
    Partition,
    Permutation,
    canonical_of_type,
    class_size,
    conjugacy_class_iter,
    cycle_type,
    find_witness,
    format_cycles,
    is_transitive,
    parse_cycles,
    parse_datum,
    verify_witness,
)

from oracles import count_by_cycle_type, all_partitions

KLEIN = parse_datum("4: 2,2 | 2,2 | 2,2")
PAIR = parse_datum("2: 2 | 2")
D4 = parse_datum("4: 3,1 | 2,2 | 2,2")
D9 = BranchDatum(9, ((2, 2, 2, 2, 1), (3, 3, 3), (3, 3, 3)))


# ------------------------------------------------------------ permutations


def test_permutation_basics():
    p = Permutation((2, 1, 3))
    q = Permutation((1, 3, 2))
    assert p.degree == 3
    assert p(1) == 2 and p(3) == 3
    # left-to-right composition: (p * q)(x) = q(p(x))
    assert (p * q).images == (3, 1, 2)
    assert p.inverse() == p
    r = Permutation((2, 3, 1))
    assert (r * r.inverse()).images == (1, 2, 3)
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))
    with pytest.raises(ValueError):
        Permutation((2, 3))


def test_cycle_text_round_trip():
    p = Permutation((2, 1, 4, 3))
    assert format_cycles(p) == "(1 2)(3 4)"
    assert parse_cycles("(1 2)(3 4)", 4) == p
    assert format_cycles(Permutation((1, 2, 3))) == "()"
    assert parse_cycles("()", 3) == Permutation((1, 2, 3))
    assert parse_cycles("", 3) == Permutation((1, 2, 3))
    assert parse_cycles("( 1 2 3 )", 3) == Permutation((2, 3, 1))
    for bad in ("(1 2", "(1 2)(2 3)", "(0 1)", "(1 5)", "(1; 2)"):
        with pytest.raises(ValueError):
            parse_cycles(bad, 4)


def test_cycle_type():
    assert cycle_type(Permutation((2, 1, 4, 3))) == Partition((2, 2))
    assert cycle_type(Permutation((1, 2, 3, 4))) == Partition((1, 1, 1, 1))
    assert cycle_type(parse_cycles("(1 2 3)(4 5)", 5)) == Partition((3, 2))


def test_canonical_of_type():
    p = canonical_of_type((3, 2), 5)
    assert format_cycles(p) == "(1 2 3)(4 5)"
    assert cycle_type(p) == Partition((3, 2))
    assert canonical_of_type((1, 1), 2) == Permutation((1, 2))


# ------------------------------------------------------- conjugacy classes


def test_class_size_matches_exhaustive_tally():
    for d in range(1, 7):
        counts = count_by_cycle_type(d)
        assert sum(counts.values()) == math.factorial(d)
        for t in all_partitions(d):
            assert class_size(t, d) == counts.get(t, 0)


def test_class_iteration_is_exact_and_duplicate_free():
    got = [format_cycles(p) for p in conjugacy_class_iter((2, 2), 4)]
    assert got == ["(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"]
    for d in range(1, 7):
        for t in all_partitions(d):
            members = list(conjugacy_class_iter(t, d))
            assert len(members) == class_size(t, d)
            assert len(set(members)) == len(members)
            assert all(cycle_type(p) == Partition(t) for p in members)


def test_is_transitive():
    assert is_transitive([Permutation((2, 3, 1))], 3)
    assert not is_transitive([Permutation((2, 1, 3))], 3)
    assert is_transitive([Permutation((2, 1, 3)), Permutation((1, 3, 2))], 3)
    assert is_transitive([], 1)
    assert not is_transitive([], 2)


# ------------------------------------------------------------------ oracle


def test_oracle_frozen_results():
    r = find_witness(KLEIN)
    assert r.status == REALIZABLE
    assert r.nodes == 2
    assert [format_cycles(p) for p in r.witness.perms] == [
        "(1 3)(2 4)", "(1 2)(3 4)", "(1 4)(2 3)"]
    assert verify_witness(KLEIN, r.witness.perms)

    r = find_witness(PAIR)
    assert r.status == REALIZABLE and r.nodes == 1
    assert [format_cycles(p) for p in r.witness.perms] == ["(1 2)", "(1 2)"]

    r = find_witness(D4)
    assert r.status == UNREALIZABLE and r.nodes == 3 and r.witness is None

    r = find_witness(D9)
    assert r.status == UNREALIZABLE and r.nodes == 945

    r = find_witness(parse_datum("5: 5 | 5"))
    assert r.status == REALIZABLE and r.nodes == 1
    assert [format_cycles(p) for p in r.witness.perms] == [
        "(1 2 3 4 5)", "(1 5 4 3 2)"]


def test_oracle_budget_semantics():
    assert find_witness(D9, budget=None).status == UNREALIZABLE
    r = find_witness(D9, budget=0)
    assert r.status == UNKNOWN and r.nodes == 1 and r.witness is None
    r = find_witness(D9, budget=1)
    assert r.status == UNKNOWN and r.nodes == 2
    # a budget big enough to finish changes nothing
    assert find_witness(D9, budget=10**6).status == UNREALIZABLE


def test_oracle_is_row_order_invariant():
    import itertools

    base = D9
    for order in itertools.permutations(range(3)):
        datum = BranchDatum(base.degree, tuple(base.rows[i] for i in order))
        r = find_witness(datum)
        assert r.status == UNREALIZABLE

    for order in itertools.permutations(range(3)):
        datum = BranchDatum(4, tuple(KLEIN.rows[i] for i in order))
        r = find_witness(datum)
        assert r.status == REALIZABLE
        assert verify_witness(datum, r.witness.perms)
        for p, row in zip(r.witness.perms, datum.rows):
            assert cycle_type(p) == row


def test_oracle_rejects_invalid_datum():
    with pytest.raises(ValueError):
        find_witness(BranchDatum(4, ((3, 1), (2, 2))))


def test_verify_witness_negatives():
    good = find_witness(KLEIN).witness.perms
    assert verify_witness(KLEIN, good)
    # wrong count
    assert not verify_witness(KLEIN, good[:2])
    # wrong degree
    assert not verify_witness(KLEIN, (Permutation((2, 1)),) * 3)
    # wrong cycle type in one slot
    bad = (good[0], good[1], Permutation((1, 2, 3, 4)))
    assert not verify_witness(KLEIN, bad)
    # right types, non-identity product
    p = parse_cycles("(1 2)(3 4)", 4)
    q = parse_cycles("(1 3)(2 4)", 4)
    assert not verify_witness(KLEIN, (p, p, q))
    # right types and identity product, but not transitive
    two_rows = BranchDatum(4, ((2, 2), (2, 2)))
    assert not verify_witness(two_rows, (p, p))


def test_witness_json_round_trip():
    w = find_witness(KLEIN).witness
    blob = w.to_json()
    assert blob == {"degree": 4,
                    "perms": ["(1 3)(2 4)", "(1 2)(3 4)", "(1 4)(2 3)"]}
    assert MonodromyWitness.from_json(blob) == w
