"""The Grothendieck construction for finite set-valued functors.

``elements`` turns a set-valued functor into its category of elements with
the forgetful projection; ``straighten`` recovers a presheaf from a
discrete fibration via reindexing.  The two roundtrip operations construct
and verify the canonical isomorphism witnesses in both directions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidFunctor, NotDiscreteFibration, WitnessFailure
from .fib import fibre, is_discrete_fibration, reindex
from .fincat import (
    CONTRAVARIANT,
    COVARIANT,
    FinCat,
    FunctorSpec,
    Morphism,
    SetValuedFunctor,
    compose_functors,
    identity_functor,
    validate_functor,
    validate_set_valued,
)


def _pair(a, b):
    return f"({a}|{b})"


@dataclass(frozen=True)
class ElementsResult:
    total: FinCat
    projection: FunctorSpec


def elements(W: SetValuedFunctor) -> ElementsResult:
    """Category of elements: objects are pairs (c|x) with x in eltset(c).

    Contravariant W: a morphism (f|y) for each f: C -> C' and y in
    eltset(C'), from (C|action(f)(y)) to (C'|y).  Covariant K: a morphism
    (f|x) for each x in eltset(C), from (C|x) to (C'|action(f)(x)).
    """
    if not validate_set_valued(W).ok:
        raise InvalidFunctor("functoriality laws fail")
    contra = W.variance == CONTRAVARIANT
    base = W.base
    objects = tuple(_pair(c, x) for c in base.objects for x in W.eltset[c])
    morphisms = []
    for f in base.morphisms:
        for key in W.action[f.id]:
            val = W.action[f.id][key]
            if contra:
                src, tgt = _pair(f.src, val), _pair(f.tgt, key)
            else:
                src, tgt = _pair(f.src, key), _pair(f.tgt, val)
            morphisms.append(Morphism(_pair(f.id, key), src, tgt))
    identity = {
        _pair(c, x): _pair(base.identity[c], x)
        for c in base.objects
        for x in W.eltset[c]
    }
    compose = {}
    mor_by_id = {m.id: m for m in morphisms}
    # the composite over g.f carries the key of the outer (contra) or the
    # inner (covariant) morphism
    for m2 in morphisms:
        f2, k2 = _split_pair(m2.id)
        for m1 in morphisms:
            if m1.tgt != m2.src:
                continue
            f1, k1 = _split_pair(m1.id)
            h = base.compose[(f2, f1)]
            key = k2 if contra else k1
            compose[(m2.id, m1.id)] = _pair(h, key)
    total = FinCat(objects, tuple(morphisms), identity, compose)
    projection = FunctorSpec(
        dom=total,
        cod=base,
        omap={_pair(c, x): c for c in base.objects for x in W.eltset[c]},
        mmap={m.id: _split_pair(m.id)[0] for m in morphisms},
    )
    return ElementsResult(total=total, projection=projection)


def _split_pair(pid):
    """Inverse of _pair: split "(left|right)" at the top-level separator.

    Components may themselves be encoded pairs; any '|' they carry sits
    inside their own parentheses, so the first depth-1 separator is the
    right one.
    """
    body = pid[1:-1]
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "|" and depth == 0:
            return [body[:i], body[i + 1 :]]
    raise ValueError(f"not an encoded pair: {pid}")


def straighten(p: FunctorSpec) -> SetValuedFunctor:
    """The presheaf of fibres of a discrete fibration, with reindexing
    actions."""
    if not is_discrete_fibration(p).ok:
        raise NotDiscreteFibration("straighten requires a discrete fibration")
    eltset = {c: fibre(p, c).elements for c in p.cod.objects}
    action = {u.id: dict(reindex(p, u.id).table) for u in p.cod.morphisms}
    return SetValuedFunctor(
        base=p.cod, variance=CONTRAVARIANT, eltset=eltset, action=action
    )


@dataclass(frozen=True)
class IsoWitness:
    forward: object  # dict-of-dicts (presheaf side) or FunctorSpec
    backward: object
    checked: bool


def roundtrip_presheaf(W: SetValuedFunctor) -> IsoWitness:
    """Natural isomorphism W = straighten(elements(W)), componentwise
    x -> (c|x)."""
    W2 = straighten(elements(W).projection)
    forward = {c: {x: _pair(c, x) for x in W.eltset[c]} for c in W.base.objects}
    backward = {c: {v: k for k, v in forward[c].items()} for c in W.base.objects}
    for c in W.base.objects:
        if sorted(forward[c].values()) != sorted(W2.eltset[c]):
            raise WitnessFailure(f"component at {c} is not a bijection")
    for u in W.base.morphisms:
        for y in W.eltset[u.tgt]:
            if forward[u.src][W.action[u.id][y]] != W2.action[u.id][forward[u.tgt][y]]:
                raise WitnessFailure(f"naturality fails at ({u.id}, {y})")
    return IsoWitness(forward=forward, backward=backward, checked=True)


def roundtrip_fibration(p: FunctorSpec) -> IsoWitness:
    """Isomorphism of categories over the base:
    elements(straighten(p)) = dom(p)."""
    built = elements(straighten(p))
    E = p.dom
    fw_omap, fw_mmap = {}, {}
    for oid in built.total.objects:
        _, e = _split_pair(oid)
        fw_omap[oid] = e
    for m in built.total.morphisms:
        u, y = _split_pair(m.id)
        cands = [
            h.id for h in E.morphisms if p.mmap[h.id] == u and h.tgt == y
        ]
        if len(cands) != 1:
            raise WitnessFailure(f"no unique lift for {m.id}")
        fw_mmap[m.id] = cands[0]
    forward = FunctorSpec(built.total, E, fw_omap, fw_mmap)
    backward = FunctorSpec(
        E,
        built.total,
        omap={e: _pair(p.omap[e], e) for e in E.objects},
        mmap={m.id: _pair(p.mmap[m.id], m.tgt) for m in E.morphisms},
    )
    for F in (forward, backward):
        if not validate_functor(F).ok:
            raise WitnessFailure("witness map is not a functor")
    fb = compose_functors(forward, backward)
    bf = compose_functors(backward, forward)
    if fb != identity_functor(E) or bf != identity_functor(built.total):
        raise WitnessFailure("composites are not identities")
    if compose_functors(p, forward) != built.projection:
        raise WitnessFailure("forward triangle over the base fails")
    if compose_functors(built.projection, backward) != p:
        raise WitnessFailure("backward triangle over the base fails")
    return IsoWitness(forward=forward, backward=backward, checked=True)
