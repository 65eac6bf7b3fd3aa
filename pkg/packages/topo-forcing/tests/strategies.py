"""
Hypothesis strategies for opens, terms and sentences.
"""

from fractions import Fraction

from hypothesis import strategies as st

from topo_forcing.algebra.opens import NEG_INF, POS_INF, normalize
from topo_forcing.algebra.terms import EMPTY_TERM, Term, make_term, nat_term
from topo_forcing.syntax.formula import BOT, And, Eq, Exists, Forall, Formula, Implies, Mem, Or, Var

# Endpoints live on a coarse lattice so independent draws share breakpoints.
rationals = st.integers(min_value=-6, max_value=6).map(lambda n: Fraction(n, 2))
endpoints = st.one_of(rationals, st.just(NEG_INF), st.just(POS_INF))

opens = st.lists(st.tuples(endpoints, endpoints), max_size=3).map(normalize)


def _entries(children: st.SearchStrategy[Term]) -> st.SearchStrategy[Term]:
    return st.lists(st.tuples(children, opens), max_size=2).map(make_term)


def _settled_entries(children: st.SearchStrategy[Term]) -> st.SearchStrategy[Term]:
    return st.tuples(
        st.lists(st.tuples(children, opens), max_size=2),
        st.lists(st.tuples(children, rationals), max_size=1),
    ).map(lambda parts: make_term(*parts))


terms = st.recursive(st.just(EMPTY_TERM), _entries, max_leaves=4)
settled_terms = st.recursive(st.just(EMPTY_TERM), _settled_entries, max_leaves=4)
ground_terms = st.integers(min_value=0, max_value=3).map(nat_term)

_X, _Y = Var("x"), Var("y")
arguments = st.one_of(settled_terms, st.sampled_from([_X, _Y]))
atomic = st.one_of(
    st.builds(Eq, arguments, arguments),
    st.builds(Mem, arguments, arguments),
    st.just(BOT),
)


def _connectives(children: st.SearchStrategy[Formula]) -> st.SearchStrategy[Formula]:
    return st.one_of(
        st.builds(And, children, children),
        st.builds(Or, children, children),
        st.builds(Implies, children, children),
    )


quantifiers = st.sampled_from([Forall, Exists])

# Sentences binding x outside y, so every variable in the body is in scope.
sentences = st.builds(
    lambda outer, inner, body: outer(_X, inner(_Y, body)),
    quantifiers,
    quantifiers,
    st.recursive(atomic, _connectives, max_leaves=5),
)
