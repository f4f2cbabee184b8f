import dataclasses

import pytest

from hbx import mutants
from hbx.core import Morphism
from hbx.mutants import Mutant

REGISTRY = mutants.registry()


def test_registry_ids_are_unique():
    ids = [m.id for m in REGISTRY]
    assert len(ids) == len(set(ids))


@pytest.mark.parametrize("m", REGISTRY, ids=lambda m: m.id)
def test_mutant_fails_as_pinned(m):
    rep = mutants.run(m)
    assert rep.failed_laws == list(m.fails)
    assert m.target in rep.failed_laws
    assert rep.first(m.target) is not None


@pytest.mark.parametrize("m", REGISTRY, ids=lambda m: m.id)
def test_mutant_differs_in_one_entry(cat, m):
    base = cat.get(m.base)
    mutated = mutants.build(m)
    changed = [k for k in mutants.components(base) if getattr(base, k) != getattr(mutated, k)]
    assert changed == [m.component]
    before, after = getattr(base, m.component), getattr(mutated, m.component)
    if isinstance(before, Morphism):
        diffs = [(i, j) for i in range(before.shape[0]) for j in range(before.shape[1])
                 if before.entry(i, j) != after.entry(i, j)]
    else:
        diffs = [(i, j) for i in range(before.n) for j in range(before.n) if before.op[i][j] != after.op[i][j]]
    assert diffs == [tuple(m.entry)]


@pytest.mark.parametrize("m", REGISTRY, ids=lambda m: m.id)
def test_mutants_preserve_degrees(m):
    part = getattr(mutants.build(m), m.component)
    if isinstance(part, Morphism):
        part.check_degree()


def test_json_round_trip():
    for m in REGISTRY:
        assert Mutant.from_json(m.to_json()) == m


def test_find():
    assert mutants.find(REGISTRY[0].id) == REGISTRY[0]
    with pytest.raises(KeyError):
        mutants.find("nope")


def test_search_finds_the_registered_singleton():
    found = {(b, comp, e, str(v)) for b, comp, e, v, rep in mutants.search(["k[C2]/Q"], max_fail=1)}
    m = mutants.find("hopf-counit-multiplicative")
    assert (m.base, m.component, m.entry, m.value) in found
