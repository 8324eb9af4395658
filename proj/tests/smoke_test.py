#!/usr/bin/env python3
"""Smoke tests for the _msuper python module."""

import json

import _msuper as ms


def test_rational_arithmetic():
    a = ms.Rat("1 - q*t")
    b = ms.Rat("1 + q*t")
    assert str(a * b) == "1 - q^2*t^2"
    assert a * b / a == b
    assert str(ms.Rat("t^2/(1 + t)")) == "t^2/(1 + t)"
    assert ms.Rat("q*t^3").specialize(-3) == "1"


def test_content_and_tau():
    assert ms.content_vector(7, 0, [4, 5, 6, 7]) == [3, 2, 1, -3, -2, -1, 0]
    tau = json.loads(ms.tau(7, 0, [4, 5, 6, 7]))
    assert tau["N"] == 7
    assert [t["theta"] for t in tau["terms"]] == [
        [5, 6, 7], [4, 6, 7], [4, 5, 7], [4, 5, 6]]


def test_build_and_eval():
    doc = json.loads(ms.build(4, 0, [3, 4], [1, 0, 0, 0]))
    assert doc["N"] == 4
    assert ms.spectral_vector(4, 0, [3, 4], [1, 0, 0, 0]) == [(1, 2), (0, 1), (0, -1), (0, 0)]
    assert ms.eval_check(4, 0, [3, 4], [1, 0, 0, 0])
    assert ms.eval_check(4, 1, [1, 2], [1, 0, 0, 0])
    assert ms.eval_closed(4, 0, [3, 4], [0, 0, 0, 0]) == "1"


def test_singular_probe():
    probe = ms.singular_probe(6, 1, [1, 2, 3], [2, 1, 0, 0, 0, 0], 2)
    assert probe["specialized_texp"] == [1, 0, -1, 2, 1, 0]
    assert probe["content_condition"] and probe["eigen_confirmed"]
    hollow = ms.singular_probe(6, 1, [1, 2, 3], [1, 2, 0, 0, 0, 0], 2)
    assert not hollow["content_condition"]


def test_verify():
    reports = ms.verify("hooks", n_max=4, deg_max=2, seed=3)
    assert all(not r["failures"] for r in reports)


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"{name}: ok")
    print("python smoke: all checks passed")
