"""Backend parity for the exhaustive-enumeration kernels."""

import numpy as np
import pytest

import oracles
from adinkra import InputError, SizeGuardError
from adinkra._kernels import (
    HAS_NUMBA,
    active_backend,
    check_guard,
    enumerate_valid,
    enumerate_valid_numpy,
    guard_bits,
    min_pairwise_hamming,
    min_pairwise_hamming_numpy,
)

needs_numba = pytest.mark.skipif(not HAS_NUMBA, reason="numba unavailable")


def test_enumerate_valid_tiny_case():
    # odd parity on the low two bits: exactly one of them set
    out = enumerate_valid_numpy(np.array([0b11], dtype=np.uint64), 3)
    assert out.tolist() == [0b001, 0b010, 0b101, 0b110]


def test_enumerate_valid_no_masks_returns_everything():
    out = enumerate_valid_numpy(np.array([], dtype=np.uint64), 3)
    assert out.tolist() == list(range(8))


@needs_numba
@pytest.mark.parametrize("n", [2, 3])
def test_backends_agree_on_cube_plaquettes(n, monkeypatch):
    quads = oracles.cube_plaquette_quads(n)
    masks = [sum(1 << i for i in quad) for quad in quads]
    n_bits = len(oracles.cube_edges(n))
    monkeypatch.setenv("ADINKRA_BACKEND", "numba")
    via_numba = enumerate_valid(masks, n_bits).tolist()
    monkeypatch.setenv("ADINKRA_BACKEND", "numpy")
    via_numpy = enumerate_valid(masks, n_bits).tolist()
    assert via_numba == via_numpy
    # cross-check against the pure-python brute force
    brute = oracles.brute_force_dashings(n_bits, quads)
    as_ints = sorted(
        sum(b << i for i, b in enumerate(bits)) for bits in brute
    )
    assert sorted(via_numpy) == as_ints


@needs_numba
def test_backends_agree_on_min_distance(monkeypatch):
    words = [0b0000, 0b0111, 0b1011, 0b1100]
    monkeypatch.setenv("ADINKRA_BACKEND", "numba")
    a = min_pairwise_hamming(words)
    monkeypatch.setenv("ADINKRA_BACKEND", "numpy")
    b = min_pairwise_hamming(words)
    assert a == b == oracles.naive_min_distance(
        [tuple((w >> i) & 1 for i in range(4)) for w in words]
    )


def test_min_distance_requires_two_words():
    with pytest.raises(InputError):
        min_pairwise_hamming([5])


def test_min_distance_numpy_small():
    assert min_pairwise_hamming_numpy(np.array([0, 3], dtype=np.uint64)) == 2


def test_backend_selection(monkeypatch):
    monkeypatch.setenv("ADINKRA_BACKEND", "numpy")
    assert active_backend() == "numpy"
    monkeypatch.setenv("ADINKRA_BACKEND", "bogus")
    with pytest.raises(InputError):
        active_backend()
    monkeypatch.delenv("ADINKRA_BACKEND")
    assert active_backend() in ("numba", "numpy")


def test_size_guard(monkeypatch):
    monkeypatch.setenv("ADINKRA_SIZE_GUARD", "10")
    assert guard_bits() == 10
    with pytest.raises(SizeGuardError) as err:
        check_guard(12, "enumeration")
    assert "ADINKRA_SIZE_GUARD" in str(err.value)
    check_guard(10, "enumeration")  # at the limit is fine
    monkeypatch.setenv("ADINKRA_SIZE_GUARD", "zap")
    with pytest.raises(InputError):
        guard_bits()
    monkeypatch.delenv("ADINKRA_SIZE_GUARD")
    assert guard_bits() == 20
