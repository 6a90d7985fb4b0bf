"""Exact q-Fibonacci and q-Lucas polynomials."""

from ._core import (
    Poly,
    enumerate_morse,
    families,
    family,
    fib_pentagonal,
    gf,
    identities,
    moment,
    oracle,
    q_binomial,
    q_catalan,
    render,
    run_all,
    run_identity,
)

__all__ = [
    "Poly",
    "enumerate_morse",
    "families",
    "family",
    "fib_pentagonal",
    "gf",
    "identities",
    "moment",
    "oracle",
    "q_binomial",
    "q_catalan",
    "render",
    "run_all",
    "run_identity",
]
