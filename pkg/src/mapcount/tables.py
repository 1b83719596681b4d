"""
Reference closed forms for 4-valent map counts, genus 1..7.

These are transcribed term by term and are kept separate from
:func:`mapcount.four_valent.derive_closed_form`, so the two can be compared.
"""
from __future__ import annotations

from fractions import Fraction as F
from math import factorial, prod

from .hypergeometric import HypergeometricSpec, binomial, terminating_pfq


def _f(j):
    # (2j)!/j!
    return F(factorial(2 * j), factorial(j))


def _falling(j, lo, hi):
    return prod(j - k for k in range(lo, hi + 1))


def _z1(j):
    return 12 ** j * j * (F(4 ** j * factorial(j), 12) - _f(j) / 6)


def _z2(j):
    return 12 ** j * _falling(j, 0, 2) * (
        _f(j) * F(7) * (2 * j + 3) / 1080 - 4 ** j * factorial(j) * F(7, 384))


def _z3(j):
    return 12 ** j * _falling(j, 0, 4) * (
        4 ** j * factorial(j) * (F(245, 497664) * j + F(12041, 4976640))
        - _f(j) * F(484 * j + 279, 136080))


def _z4(j):
    return 12 ** j * _falling(j, 0, 6) * (
        _f(j) * (F(37079, 750578400) * j ** 2 + F(6067121, 10508097600) * j + F(127, 604800))
        - 4 ** j * factorial(j) * (F(7805, 47775744) * j + F(1699447, 6688604160)))


def _z5(j):
    return 12 ** j * _falling(j, 0, 8) * (
        4 ** j * factorial(j) * (F(38213, 27518828544) * j ** 2 + F(1702225, 55037657088) * j
                                 + F(482999, 20384317440))
        - _f(j) * (F(491951, 25519665600) * j ** 2 + F(1849339, 25519665600) * j + F(73, 3421440)))


def _z6(j):
    return 12 ** j * _falling(j, 0, 10) * (
        _f(j) * (F(5004682489, 45165980162160000) * j ** 3 + F(389578665043, 92213876164410000) * j ** 2
                 + F(69512878587263, 8852532111783360000) * j + F(1414477, 653837184000))
        - 4 ** j * factorial(j) * (F(54362497, 87179648827392) * j ** 2 + F(381046393, 87179648827392) * j
                                   + F(43567716553, 20341918059724800)))


def _z7(j):
    return 12 ** j * _falling(j, 0, 12) * (
        4 ** j * factorial(j) * (F(6334396069, 2448004539073167360) * j ** 3
                                 + F(2801562779, 18133366956097536) * j ** 2
                                 + F(5032281513503, 9792018156292669440) * j
                                 + F(46115735865131, 228480423646828953600))
        - _f(j) * (F(953637649, 16937242560810000) * j ** 3 + F(335779266491, 491807339543520000) * j ** 2
                   + F(20962080883129, 26557596335350080000) * j + F(8191, 37362124800)))


def _e1(j):
    first = binomial(2 * j - 1, j - 1)
    second = binomial(2 * j - 1, j - 2)
    total = F(0)
    if first:
        total += first * terminating_pfq(HypergeometricSpec((1, 1, 1 - j), (2, j + 1), -1))
    if second:
        total -= second * terminating_pfq(HypergeometricSpec((1, 1, 2 - j), (2, j + 2), -1))
    return factorial(j) * 12 ** (j - 1) * total


def _e2(j):
    return 12 ** (j - 1) * (j - 1) * (
        _f(j) * (F(7, 90) * j + F(1, 40)) - 4 ** (j - 1) * factorial(j) * F(13, 48))


def _e3(j):
    return 12 ** (j - 1) * _falling(j, 1, 3) * (
        4 ** (j - 1) * factorial(j) * (F(245, 20736) * j + F(781, 41472))
        - _f(j) * (F(337, 22680) * j + F(1, 1008)))


def _e4(j):
    return 12 ** (j - 1) * _falling(j, 1, 5) * (
        _f(j) * (F(37079, 125096400) * j ** 2 + F(86356, 54729675) * j + F(1, 28800))
        - 4 ** (j - 1) * factorial(j) * (F(5845, 1990656) * j + F(23297, 39813120)))


def _e5(j):
    return 12 ** (j - 1) * _falling(j, 1, 7) * (
        4 ** (j - 1) * factorial(j) * (F(38213, 1146617856) * j ** 2 + F(915313, 2293235712) * j
                                       - F(1940327, 53508833280))
        - _f(j) * (F(211033, 2319969600) * j ** 2 + F(8139013, 71455063680) * j + F(1, 887040)))


def _e6(j):
    return 12 ** (j - 1) * _falling(j, 1, 9) * (
        _f(j) * (F(5004682489, 7527663360360000) * j ** 3 + F(7523688218141, 491807339543520000) * j ** 2
                 + F(20903746897, 3944978659440000) * j + F(691, 19813248000))
        - 4 ** (j - 1) * factorial(j) * (F(44274265, 3632485367808) * j ** 2
                                         + F(135152437, 3632485367808) * j
                                         - F(522404797, 77052719923200)))


def _e7(j):
    return 12 ** (j - 1) * _falling(j, 1, 11) * (
        4 ** (j - 1) * factorial(j) * (F(6334396069, 102000189128048640) * j ** 3
                                       + F(27364604401, 11333354347560960) * j ** 2
                                       + F(988175350991, 408000756512194560) * j
                                       - F(358193577649, 732309050150092800))
        - _f(j) * (F(25511722279, 90331960324320000) * j ** 3 + F(2675917530049, 1475422018630560000) * j ** 2
                   + F(5035943441, 69980491002240000) * j + F(1, 958003200)))


_ROWS = {
    "z": {1: _z1, 2: _z2, 3: _z3, 4: _z4, 5: _z5, 6: _z6, 7: _z7},
    "e": {1: _e1, 2: _e2, 3: _e3, 4: _e4, 5: _e5, 6: _e6, 7: _e7},
}


def table_count(family: str, genus: int, j: int) -> F:
    """Exact value of the reference row; not coerced to an integer."""
    try:
        row = _ROWS[family][genus]
    except KeyError:
        raise KeyError(f"no reference formula for family {family!r} genus {genus}") from None
    if j < 1:
        raise ValueError("reference formulas are stated for j >= 1")
    return F(row(j))


def available() -> list[tuple[str, int]]:
    return [(f, g) for f in ("z", "e") for g in sorted(_ROWS[f])]
