"""Families, wire format, syndromes, correction, erasures."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from adinkra import (
    AmbiguousCorrectionError,
    ContradictionError,
    InputError,
    UncorrectableError,
    UnderDeterminedError,
)
from adinkra.codec import (
    DASHING,
    DIRECTION,
    EdgeBitVector,
    Family,
    QUATERNION_FAMILY,
    block_length,
    codewords,
    correct,
    decode,
    encode,
    family_skeleton,
    fill_erasures,
    format_wire,
    inject_errors,
    message_length,
    message_slots,
    min_distance,
    parse_family,
    parse_wire,
    syndrome,
)

SQUARE = Family(2, (), DASHING)
CUBE = Family(3, (), DASHING)
QUOTIENT31 = Family(3, ("1111",), DASHING)
DASHING_FAMILIES = [SQUARE, CUBE, QUOTIENT31]


# ---------- families and wire format ----------


def test_parse_family_accepts_header_and_alias():
    assert parse_family("quaternion") == QUATERNION_FAMILY
    fam = parse_family("n=3;code=1111;scheme=dashing")
    assert fam == QUOTIENT31
    assert parse_family(fam.header()) == fam
    assert parse_family("n=2;code=;scheme=dashing") == SQUARE


@pytest.mark.parametrize(
    "text",
    [
        "n=3;scheme=dashing",  # missing code field
        "n=x;code=;scheme=dashing",
        "n=2;code=;scheme=banana",
        "n=2;code=111;scheme=dashing",  # not doubly even
        "n=2;code=;scheme=direction",  # directions are quaternion-only
    ],
)
def test_parse_family_rejects_bad_headers(text):
    with pytest.raises(InputError):
        parse_family(text)


@pytest.mark.parametrize(
    "family, block, message",
    [
        (SQUARE, 4, 3),
        (CUBE, 12, 7),
        (QUOTIENT31, 16, 8),
        (QUATERNION_FAMILY, 6, 3),
    ],
)
def test_block_and_message_lengths(family, block, message):
    assert block_length(family) == block
    assert message_length(family) == message
    slots = message_slots(family)
    assert len(slots) == message
    assert len(set(slots)) == message


def test_wire_roundtrip():
    v = encode((1, 0, 1), QUATERNION_FAMILY)
    line = format_wire(v)
    assert line == "n=2;code=111;scheme=direction 010111\n"
    assert parse_wire(line) == v


@pytest.mark.parametrize(
    "line",
    [
        "n=2;code=;scheme=dashing",  # no bits
        "n=2;code=;scheme=dashing 01",  # wrong width
        "n=2;code=;scheme=dashing 0101 extra",
        "quaternion 01011x",
    ],
)
def test_parse_wire_rejects_malformed_lines(line):
    with pytest.raises(InputError):
        parse_wire(line)


# ---------- encoding ----------


@pytest.mark.parametrize("family", DASHING_FAMILIES + [QUATERNION_FAMILY])
def test_encode_puts_message_bits_on_the_slots(family):
    m = tuple(i % 2 for i in range(message_length(family)))
    v = encode(m, family)
    assert tuple(v.bits[i] for i in message_slots(family)) == m
    assert syndrome(v).ok
    assert decode(v).message == m
    assert decode(v).flips == ()


def test_every_quaternion_message_encodes_uniquely():
    seen = set()
    for m in itertools.product((0, 1), repeat=3):
        v = encode(m, QUATERNION_FAMILY)
        assert syndrome(v).ok
        assert decode(v).message == m
        seen.add(v.bits)
    assert len(seen) == 8
    assert seen == set(codewords(QUATERNION_FAMILY))


@given(bits=st.tuples(*([st.integers(0, 1)] * 8)))
@settings(max_examples=32, deadline=None)
def test_encode_decode_identity_prop(bits):
    v = encode(bits, QUOTIENT31)
    assert decode(v).message == bits


def test_encode_rejects_wrong_message_length():
    with pytest.raises(InputError):
        encode((1, 0), QUATERNION_FAMILY)


# ---------- syndromes ----------


def test_clean_syndrome_is_empty():
    v = encode((1,) * 7, CUBE)
    syn = syndrome(v)
    assert syn.ok and not syn.violated
    assert syn.describe() == ()


def test_single_flip_violates_exactly_the_checks_on_that_edge():
    from adinkra.codec import _parity_checks

    v = encode((1, 0, 1, 1, 0, 1, 0), CUBE)
    checks = _parity_checks(CUBE)
    for pos in range(block_length(CUBE)):
        syn = syndrome(v.flip([pos]))
        assert not syn.ok
        hit = {
            str(check)
            for check, mask in checks
            if mask >> pos & 1
        }
        assert {str(c) for c in syn.violated} == hit


def test_direction_syndrome_names_broken_relations():
    v = encode((1, 1, 1), QUATERNION_FAMILY)
    syn = syndrome(v.flip([0]))
    assert not syn.ok
    assert all(isinstance(name, str) and name for name in syn.describe())


# ---------- correction ----------


def test_correct_is_a_no_op_on_clean_blocks():
    v = encode((0, 1, 0, 1, 0, 1, 0, 1), QUOTIENT31)
    fixed = correct(v)
    assert fixed.vector == v and fixed.flips == ()


@pytest.mark.parametrize("family", [CUBE, QUOTIENT31, QUATERNION_FAMILY])
def test_all_single_flips_are_uniquely_corrected(family):
    m = tuple(i % 2 for i in range(message_length(family)))
    v = encode(m, family)
    for pos in range(block_length(family)):
        fixed = correct(v.flip([pos]))
        assert fixed.vector == v
        assert fixed.flips == (pos,)
        assert decode(v.flip([pos])).message == m


def test_square_single_flip_is_ambiguous():
    v = encode((1, 0, 1), SQUARE)
    with pytest.raises(AmbiguousCorrectionError) as err:
        correct(v.flip([2]))
    assert err.value.candidates == ((0,), (1,), (2,), (3,))


def test_quaternion_double_flips_at_one_flip_budget():
    # distance 3: a double flip is never corrected back to the sent
    # word with a single-flip budget.  Opposite same-unit pairs land
    # equidistant from several words and are reported uncorrectable;
    # the other twelve sit at distance one from a DIFFERENT word and
    # decode to it — the classic mis-correction beyond half distance.
    v = encode((1, 0, 1), QUATERNION_FAMILY)
    uncorrectable, miscorrected = [], []
    for pair in itertools.combinations(range(6), 2):
        received = v.flip(pair)
        try:
            fixed = correct(received, max_flips=1)
        except UncorrectableError:
            uncorrectable.append(pair)
        else:
            assert fixed.vector != v
            assert syndrome(fixed.vector).ok
            miscorrected.append(pair)
    assert uncorrectable == [(0, 3), (1, 4), (2, 5)]  # same-unit pairs
    assert len(miscorrected) == 12


def test_quaternion_opposite_double_flip_is_ambiguous_at_two():
    v = encode((1, 0, 1), QUATERNION_FAMILY)
    for pair in [(0, 3), (1, 4), (2, 5)]:
        with pytest.raises(AmbiguousCorrectionError) as err:
            correct(v.flip(pair), max_flips=2)
        assert len(err.value.candidates) == 3
        assert tuple(pair) in err.value.candidates


def test_correct_rejects_bad_budget():
    v = encode((1, 0, 1), SQUARE)
    with pytest.raises(InputError):
        correct(v, max_flips=-1)


# ---------- erasures ----------


def test_square_erasures_succeed_exactly_when_survivors_span():
    v = encode((1, 1, 0), SQUARE)
    skeleton = family_skeleton(SQUARE)
    for r in range(5):
        for erased in itertools.combinations(range(4), r):
            survivors = [
                (e.u, e.v)
                for i, e in enumerate(skeleton.edges)
                if i not in erased
            ]
            should_work = oracles.spans_all_nodes(skeleton.nodes, survivors)
            if should_work:
                assert fill_erasures(v, erased) == v
            else:
                with pytest.raises(UnderDeterminedError):
                    fill_erasures(v, erased)


def test_erasing_one_whole_color_class_is_under_determined():
    for family in (CUBE, QUOTIENT31):
        m = tuple(i % 2 for i in range(message_length(family)))
        v = encode(m, family)
        skeleton = family_skeleton(family)
        erased = [
            i for i, e in enumerate(skeleton.edges) if e.color == 1
        ]
        with pytest.raises(UnderDeterminedError):
            fill_erasures(v, erased)


def test_erasing_everything_but_a_spanning_seed_recovers():
    for family in DASHING_FAMILIES:
        m = tuple(i % 2 for i in range(message_length(family)))
        v = encode(m, family)
        keep = set(message_slots(family))
        erased = [i for i in range(block_length(family)) if i not in keep]
        assert fill_erasures(v, erased) == v


def test_direction_erasures():
    v = encode((1, 0, 1), QUATERNION_FAMILY)
    # erasing the three non-slot positions recovers them uniquely
    erased = [i for i in range(6) if i not in message_slots(QUATERNION_FAMILY)]
    assert fill_erasures(v, erased) == v
    # erasing five of six leaves several valid completions
    with pytest.raises(UnderDeterminedError):
        fill_erasures(v, range(5))
    # corrupting a survivor can rule out every completion
    broken = v.flip([0])
    with pytest.raises((ContradictionError, UnderDeterminedError)):
        fill_erasures(broken, [3, 4])


def test_fill_erasures_validates_positions():
    v = encode((1, 1, 0), SQUARE)
    with pytest.raises(InputError):
        fill_erasures(v, [9])


# ---------- code parameters ----------


def test_square_codewords_match_brute_force():
    from adinkra import plaquettes

    skeleton = family_skeleton(SQUARE)
    index = {e: i for i, e in enumerate(skeleton.edges)}
    quads = [tuple(index[e] for e in p.edges) for p in plaquettes(skeleton)]
    brute = set(oracles.brute_force_dashings(4, quads))
    assert set(codewords(SQUARE)) == brute
    assert len(brute) == 8


@pytest.mark.parametrize(
    "family, expected",
    [(SQUARE, 2), (CUBE, 3), (QUOTIENT31, 4), (QUATERNION_FAMILY, 3)],
)
def test_min_distances(family, expected):
    assert min_distance(family) == expected
    assert oracles.naive_min_distance(codewords(family)) == expected


def test_inject_errors_is_deterministic():
    v = encode((1, 0, 1, 1, 0, 1, 0), CUBE)
    hit1, pos1 = inject_errors(v, 3, seed=42)
    hit2, pos2 = inject_errors(v, 3, seed=42)
    assert hit1 == hit2 and pos1 == pos2
    assert len(pos1) == 3 and list(pos1) == sorted(pos1)
    assert hit1.flip(pos1) == v
    _, other = inject_errors(v, 3, seed=43)
    assert other != pos1  # different draw for a different seed
    with pytest.raises(InputError):
        inject_errors(v, 99, seed=1)
