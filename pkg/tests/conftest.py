"""Shared fixtures: the witnessing designs and a mixed corpus of passing
and failing two-shell candidates."""

import itertools

import pytest

from tightrel import (
    Design,
    RelativeCandidate,
    complement,
    complementary_pair,
    construct_paley_hadamard,
    construct_witt_23,
    derived,
    residual,
)
from tightrel.designs import bits_of, mask_of


@pytest.fixture(scope="session")
def fano():
    return construct_paley_hadamard(7)


@pytest.fixture(scope="session")
def paley11():
    return construct_paley_hadamard(11)


@pytest.fixture(scope="session")
def witt():
    return construct_witt_23()


@pytest.fixture(scope="session")
def fano_pair(fano):
    return complementary_pair(fano)


@pytest.fixture(scope="session")
def witt_pair(witt):
    return complementary_pair(witt)


@pytest.fixture(scope="session")
def y6(witt):
    return derived(witt, 0)


@pytest.fixture(scope="session")
def y7(witt):
    return residual(witt, 0)


@pytest.fixture(scope="session")
def biplane37():
    """2-(37,9,2) from the fourth-power residues modulo 37 (a difference set)."""
    quartics = sorted({pow(x, 4, 37) for x in range(1, 37)})
    blocks = tuple(mask_of((q + i) % 37 for q in quartics) for i in range(37))
    return Design(37, blocks)


def relabel(design: Design, perm: dict) -> Design:
    return Design(
        design.n,
        tuple(mask_of(perm.get(i, i) for i in bits_of(b)) for b in design.blocks),
    )


@pytest.fixture(scope="session")
def fano_swapped(fano):
    """Fano with points 0 and 1 exchanged; same sequence, different block set."""
    return relabel(fano, {0: 1, 1: 0})


@pytest.fixture(scope="session")
def corpus(fano, paley11, witt, fano_swapped, y6, y7):
    """(candidate, t) pairs, both passing and failing, all with n <= 23."""
    from fractions import Fraction

    complete = Design(7, tuple(mask_of(c) for c in itertools.combinations(range(7), 3)))
    out = []
    for q in (7, 11, 19, 23):
        d = construct_paley_hadamard(q)
        out.append((RelativeCandidate.from_designs(d, complement(d)), 3))
        out.append((RelativeCandidate.from_designs(d, complement(d), 1, 2), 3))
    out.append((complementary_pair(fano), 4))
    out.append((complementary_pair(paley11), 4))
    out.append((complementary_pair(witt), 5))
    out.append((complementary_pair(witt), 4))
    out.append((RelativeCandidate.from_designs(witt, complement(witt), 2, 1), 5))
    out.append(
        (RelativeCandidate.from_designs(witt, complement(witt), Fraction(3, 2), Fraction(3, 2)), 5)
    )
    out.append((RelativeCandidate.from_designs(fano_swapped, complement(fano)), 3))
    out.append((RelativeCandidate.from_designs(complete, complement(complete)), 3))
    out.append((RelativeCandidate.from_designs(complete, complement(complete)), 4))
    out.append((RelativeCandidate.from_designs(paley11, complement(paley11), 2, 3), 3))
    out.append((complementary_pair(fano), 2))
    out.append((RelativeCandidate.from_designs(y6, y7), 4))
    out.append((RelativeCandidate.from_designs(complement(y6), complement(y7)), 4))
    out.append((RelativeCandidate.from_designs(y6, complement(y7)), 4))
    out.append((RelativeCandidate.from_designs(complement(y6), y7), 4))
    out.append((RelativeCandidate.from_designs(y6, y7, 1, 3), 4))
    return out
