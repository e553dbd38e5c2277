"""Pregroup types, contraction-based reduction, and the corpus-driven toy
semantics.

Types are strings of simple types carrying an adjoint exponent; reduction
searches adjacent contractions (b, z)(b, z+1) only, leftmost first.  The
surface markers ^l / ^r map to exponent deltas per convention: the default
"paper" convention takes ^l to +1 so that n . n^l contracts; "lambek"
takes ^l to -1.

``build_semantics`` assembles a finite base category from corpus parses,
assigns each constituent the set of corpus sentences containing its
phrase, and produces a genuine discrete fibration via the category of
elements.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product as iproduct

from .errors import TypeSyntaxError, UnparsedSentence
from .fincat import (
    CONTRAVARIANT,
    FinCat,
    Morphism,
    SetValuedFunctor,
    validate_set_valued,
)

CONVENTIONS = {
    "paper": {"l": +1, "r": -1},
    "lambek": {"l": -1, "r": +1},
}


@dataclass(frozen=True)
class SimpleType:
    base: str
    exponent: int = 0


# a pregroup type is a tuple of SimpleType; the empty tuple is the unit


def format_type(t, convention="paper"):
    if not t:
        return "1"
    deltas = CONVENTIONS[convention]
    marker = {deltas["l"]: "l", deltas["r"]: "r"}
    parts = []
    for st in t:
        if st.exponent == 0:
            parts.append(st.base)
        else:
            sign = 1 if st.exponent > 0 else -1
            parts.append(st.base + "^" + marker[sign] * abs(st.exponent))
    return ".".join(parts)


_TOKEN = re.compile(r"([^\s.^]+)(?:\^([lr]+))?$")


def parse_type(text, convention="paper"):
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    deltas = CONVENTIONS[convention]
    simples = []
    col = 0
    for chunk in re.split(r"([.\s]+)", text):
        if not chunk or re.fullmatch(r"[.\s]+", chunk):
            col += len(chunk)
            continue
        m = _TOKEN.match(chunk)
        if m is None:
            raise TypeSyntaxError(f"bad simple type {chunk!r}", col)
        base, markers = m.group(1), m.group(2) or ""
        if "^" in base:
            raise TypeSyntaxError(f"bad simple type {chunk!r}", col)
        if base == "1":
            if markers:
                raise TypeSyntaxError("unit type takes no adjoint", col)
        else:
            simples.append(SimpleType(base, sum(deltas[ch] for ch in markers)))
        col += len(chunk)
    return tuple(simples)


@dataclass(frozen=True)
class ReductionStep:
    position: int
    cancelled_base: str
    cancelled_exponents: tuple  # (z, z+1)


@dataclass(frozen=True)
class ReductionWitness:
    start: tuple
    steps: tuple
    end: tuple


@dataclass(frozen=True)
class NoReduction:
    start: tuple
    target: tuple


def _contractible(a: SimpleType, b: SimpleType):
    return a.base == b.base and b.exponent == a.exponent + 1


def apply_step(t, step: ReductionStep):
    i = step.position
    if i < 0 or i + 1 >= len(t):
        raise ValueError("step position out of range")
    a, b = t[i], t[i + 1]
    if not _contractible(a, b):
        raise ValueError(f"pair at {i} is not contractible")
    if a.base != step.cancelled_base or (a.exponent, b.exponent) != tuple(
        step.cancelled_exponents
    ):
        raise ValueError("step record does not match the type")
    return t[:i] + t[i + 2 :]


def replay(witness: ReductionWitness):
    cur = witness.start
    for step in witness.steps:
        cur = apply_step(cur, step)
    return cur == witness.end


def reduce(t, target):
    """Backtracking search for a contraction sequence from t to target,
    leftmost contraction first.  Returns a NoReduction value when the
    exhaustive search fails."""
    t, target = tuple(t), tuple(target)
    seen = set()

    def search(cur, steps):
        if cur == target:
            return steps
        if len(cur) < len(target) or cur in seen:
            return None
        seen.add(cur)
        for i in range(len(cur) - 1):
            if _contractible(cur[i], cur[i + 1]):
                step = ReductionStep(
                    position=i,
                    cancelled_base=cur[i].base,
                    cancelled_exponents=(cur[i].exponent, cur[i + 1].exponent),
                )
                found = search(cur[:i] + cur[i + 2 :], steps + (step,))
                if found is not None:
                    return found
        return None

    steps = search(t, ())
    if steps is None:
        return NoReduction(start=t, target=target)
    return ReductionWitness(start=t, steps=steps, end=target)


@dataclass(frozen=True)
class Lexicon:
    entries: tuple  # of (phrase tokens tuple, type tuple)

    def __post_init__(self):
        phrases = [p for p, _ in self.entries]
        if len(set(phrases)) != len(phrases):
            raise ValueError("duplicate phrases in lexicon")

    def longest_match(self, tokens, start):
        best = None
        for phrase, ptype in self.entries:
            k = len(phrase)
            if tuple(tokens[start : start + k]) == phrase:
                if best is None or k > len(best[0]):
                    best = (phrase, ptype)
        return best


def make_lexicon(pairs, convention="paper"):
    """Build a Lexicon from (phrase string, type string) pairs."""
    return Lexicon(
        entries=tuple(
            (tuple(phrase.split()), parse_type(text, convention))
            for phrase, text in pairs
        )
    )


@dataclass(frozen=True)
class ParseFailure:
    kind: str  # "unknown-phrase" | "no-reduction"
    detail: object


@dataclass(frozen=True)
class ParseResult:
    segmentation: tuple  # of phrase token tuples
    types: tuple  # one pregroup type per segment
    witness: ReductionWitness


def parse_sentence(tokens, lex: Lexicon, target):
    """Longest-match segmentation left to right, then contraction search."""
    tokens = tuple(tokens)
    segmentation, types = [], []
    pos = 0
    while pos < len(tokens):
        match = lex.longest_match(tokens, pos)
        if match is None:
            return ParseFailure(kind="unknown-phrase", detail=tokens[pos])
        phrase, ptype = match
        segmentation.append(phrase)
        types.append(ptype)
        pos += len(phrase)
    concat = tuple(st for t in types for st in t)
    witness = reduce(concat, target)
    if isinstance(witness, NoReduction):
        return ParseFailure(kind="no-reduction", detail=witness)
    return ParseResult(
        segmentation=tuple(segmentation), types=tuple(types), witness=witness
    )


def _contains(haystack, needle):
    n, k = len(haystack), len(needle)
    return any(tuple(haystack[i : i + k]) == needle for i in range(n - k + 1))


@dataclass(frozen=True)
class SpeakerFibration:
    base: FinCat
    presheaf: SetValuedFunctor
    fibration: object  # ElementsResult
    parses: tuple  # (sentence id, ParseResult) per corpus sentence


def _constituent_id(phrase, ptype, convention):
    return f"({' '.join(phrase)}, {format_type(ptype, convention)})"


def _tensor_id(part_ids):
    return "⊗".join(part_ids)


def _tuple_elt(parts):
    return "(" + "|".join(parts) + ")" if len(parts) > 1 else parts[0]


def build_semantics(corpus, lex: Lexicon, target, convention="paper") -> SpeakerFibration:
    """The toy semantics: each constituent's meaning set is the set of
    corpus sentences employing it; sentence meanings are singletons;
    tensor meanings are cartesian products; reduction acts by the
    diagonal."""
    from .groth import elements

    corpus = [tuple(s) for s in corpus]
    parses = []
    seen_sids = set()
    for i, tokens in enumerate(corpus):
        result = parse_sentence(tokens, lex, target)
        if isinstance(result, ParseFailure):
            raise UnparsedSentence(i, result)
        sid = " ".join(tokens)
        if sid in seen_sids:
            continue
        seen_sids.add(sid)
        parses.append((sid, result))

    objects, eltset = [], {}

    def add_object(oid, elts):
        if oid not in eltset:
            objects.append(oid)
            eltset[oid] = tuple(elts)

    sentence_ids = [sid for sid, _ in parses]
    # sentence objects first: they win when a lexicon phrase is itself a
    # full corpus sentence of the target type
    for sid, result in parses:
        add_object(f"({sid}, {format_type(result.witness.end, convention)})", (sid,))
    constituent_sets = {}
    for sid, result in parses:
        for phrase, ptype in zip(result.segmentation, result.types):
            cid = _constituent_id(phrase, ptype, convention)
            occurs = tuple(s for s in sentence_ids if _contains(s.split(), phrase))
            add_object(cid, occurs)
            constituent_sets[cid] = eltset[cid]
    tensor_parts = {}
    for sid, result in parses:
        part_ids = tuple(
            _constituent_id(ph, ty, convention)
            for ph, ty in zip(result.segmentation, result.types)
        )
        tid = _tensor_id(part_ids)
        if tid not in eltset:
            prod = tuple(
                _tuple_elt(combo)
                for combo in iproduct(*(eltset[pid] for pid in part_ids))
            )
            add_object(tid, prod)
        tensor_parts[tid] = part_ids

    morphisms, identity = [], {}
    for oid in objects:
        mid = f"id:{oid}"
        morphisms.append(Morphism(mid, oid, oid))
        identity[oid] = mid
    action = {identity[oid]: {x: x for x in eltset[oid]} for oid in objects}
    for sid, result in parses:
        sent_obj = f"({sid}, {format_type(result.witness.end, convention)})"
        part_ids = tuple(
            _constituent_id(ph, ty, convention)
            for ph, ty in zip(result.segmentation, result.types)
        )
        tid = _tensor_id(part_ids)
        if tid == sent_obj:
            continue  # zero-step reduction collapses to the identity
        mid = f"reduce:({sid})"
        morphisms.append(Morphism(mid, tid, sent_obj))
        diag = _tuple_elt((sid,) * len(part_ids))
        action[mid] = {sid: diag}
    # reductions run tensor -> sentence and nothing leaves a sentence
    # object, so the only composites involve identities
    compose = {}
    for m in morphisms:
        compose[(identity[m.tgt], m.id)] = m.id
        compose[(m.id, identity[m.src])] = m.id
    cat = FinCat(tuple(objects), tuple(morphisms), identity, compose)
    for g, f in cat.composable_pairs():
        if (g, f) not in compose:
            raise ValueError(
                f"corpus induces a non-identity composite {g} . {f}; unsupported"
            )
    presheaf = SetValuedFunctor(
        base=cat, variance=CONTRAVARIANT, eltset=eltset, action=action
    )
    report = validate_set_valued(presheaf)
    if not report.ok:
        raise ValueError(f"semantics presheaf invalid: {report.violations}")
    return SpeakerFibration(
        base=cat,
        presheaf=presheaf,
        fibration=elements(presheaf),
        parses=tuple(parses),
    )
