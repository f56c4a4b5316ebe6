"""Four-valued Kripke models and their two support relations.

A model carries two valuations per variable: support of truth (``vplus``)
and support of falsity (``vminus``).  The two are independent, so a formula
at a world has one of four values: T (true, not false), B (both), N
(neither), F (false, not true).

Truth/falsity clauses for the modality ``#f`` at ``w`` over the accessible
set ``R(w)``:

* supported-true  iff (a) any two accessible worlds agree on both supports
  of ``f``, and (b) every accessible world supports ``f``'s truth or its
  falsity;
* supported-false iff two accessible worlds disagree on support of truth,
  or disagree on support of falsity, or one supports truth while one
  supports falsity.

In particular ``#f`` is T at a dead end (no accessible world), and it is B
(resp. N) when ``f`` is B (resp. N) in every accessible world of a
nonempty ``R(w)``.

``[]f`` is supported-true iff every accessible world supports ``f``'s
truth, and supported-false iff some accessible world supports its falsity.

Validity note: sequent validity on a frame is truth preservation at every
world of every model on it.  Formula validity (truth at every world of
every model) is also provided; the two notions do not reduce to each other
here because the logic has no valid formulas at all, yet e.g. ``#p`` is
valid as a formula exactly on empty-relation frames.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

from .syntax import ATOM_RE, And, Atom, Box, Formula, Not, Or, Sequent, Tri, variables

__all__ = [
    "FourValue", "Frame", "Model", "PointedModel",
    "ModelError", "UnknownWorldError", "BoundExceededError",
    "supports_true", "supports_false", "eval_formula", "tri_value_by_cases",
    "sequent_holds", "sequent_valid_on_frame", "formula_valid_on_frame",
    "dual_model", "dual_value", "frame_property", "FRAME_PROPERTIES",
    "model_to_dict", "model_from_dict", "frame_from_dict", "frame_to_dict",
    "VALUE_ORDER", "DEFAULT_VALUATION_BOUND", "Evaluator",
]


class ModelError(ValueError):
    """Invalid frame/model data."""


class UnknownWorldError(ModelError):
    """A world identifier that does not belong to the frame."""


class BoundExceededError(RuntimeError):
    """An exhaustive check was refused because |worlds| * |variables| is too
    large.  Raised instead of returning a (necessarily wrong) boolean."""


class FourValue(Enum):
    T = (True, False)
    B = (True, True)
    N = (False, False)
    F = (False, True)

    @property
    def supports_truth(self) -> bool:
        return self.value[0]

    @property
    def supports_falsity(self) -> bool:
        return self.value[1]

    @classmethod
    def from_flags(cls, truth: bool, falsity: bool) -> "FourValue":
        return _FLAGS[(bool(truth), bool(falsity))]

    def __str__(self) -> str:
        return self.name


_FLAGS = {v.value: v for v in FourValue}

# Canonical enumeration order for valuations.
VALUE_ORDER = (FourValue.T, FourValue.B, FourValue.N, FourValue.F)

DEFAULT_VALUATION_BOUND = 12


@dataclass(frozen=True)
class Frame:
    worlds: tuple[str, ...]
    relation: frozenset[tuple[str, str]]

    def __init__(self, worlds: Iterable[str], relation: Iterable[tuple[str, str]]):
        worlds = tuple(worlds)
        relation = frozenset((s, t) for s, t in relation)
        if not worlds:
            raise ModelError("a frame needs at least one world")
        if len(set(worlds)) != len(worlds):
            raise ModelError("duplicate world identifiers")
        for w in worlds:
            if not isinstance(w, str) or not w:
                raise ModelError(f"bad world identifier {w!r}")
        known = set(worlds)
        for s, t in relation:
            if s not in known or t not in known:
                raise UnknownWorldError(f"relation uses unknown world in ({s!r}, {t!r})")
        object.__setattr__(self, "worlds", worlds)
        object.__setattr__(self, "relation", relation)

    def successors(self, world: str) -> tuple[str, ...]:
        """Accessible worlds, in frame world order."""
        if world not in self.worlds:
            raise UnknownWorldError(f"unknown world {world!r}")
        return tuple(t for t in self.worlds if (world, t) in self.relation)


class Model:
    """A frame plus the two valuations, total on worlds.

    ``variables`` fixes the variable universe explicitly; by default it is
    the set of variables mentioned by either valuation.  Carrying it makes
    the dual-model construction an involution even when a variable is B or
    N everywhere.
    """

    __slots__ = ("frame", "vplus", "vminus", "variables", "_succ")

    def __init__(self, frame: Frame,
                 vplus: Mapping[str, Iterable[str]] | None = None,
                 vminus: Mapping[str, Iterable[str]] | None = None,
                 variables: Iterable[str] | None = None):
        self.frame = frame
        self.vplus = self._normalize(frame, vplus)
        self.vminus = self._normalize(frame, vminus)
        mentioned = frozenset().union(*self.vplus.values(), *self.vminus.values())
        if variables is None:
            self.variables = mentioned
        else:
            self.variables = frozenset(variables) | mentioned
        for name in self.variables:
            if not ATOM_RE.fullmatch(name):
                raise ModelError(f"bad variable name {name!r}")
        self._succ = {w: frame.successors(w) for w in frame.worlds}

    @staticmethod
    def _normalize(frame, valuation) -> dict[str, frozenset[str]]:
        table = {w: frozenset() for w in frame.worlds}
        if valuation:
            for world, names in valuation.items():
                if world not in table:
                    raise UnknownWorldError(f"valuation uses unknown world {world!r}")
                table[world] = frozenset(names)
        return table

    @classmethod
    def from_values(cls, frame: Frame,
                    values: Mapping[str, Mapping[str, "FourValue | str"]],
                    variables: Iterable[str] | None = None) -> "Model":
        """Build a model from per-world FourValue assignments."""
        vplus: dict[str, set[str]] = {w: set() for w in frame.worlds}
        vminus: dict[str, set[str]] = {w: set() for w in frame.worlds}
        seen = set()
        for world, assignment in values.items():
            if world not in vplus:
                raise UnknownWorldError(f"valuation uses unknown world {world!r}")
            for var, val in assignment.items():
                val = val if isinstance(val, FourValue) else FourValue[str(val)]
                seen.add(var)
                if val.supports_truth:
                    vplus[world].add(var)
                if val.supports_falsity:
                    vminus[world].add(var)
        universe = seen | (set(variables) if variables else set())
        return cls(frame, vplus, vminus, variables=universe)

    def value(self, world: str, var: str) -> FourValue:
        if world not in self.vplus:
            raise UnknownWorldError(f"unknown world {world!r}")
        return FourValue.from_flags(var in self.vplus[world], var in self.vminus[world])

    def successors(self, world: str) -> tuple[str, ...]:
        try:
            return self._succ[world]
        except KeyError:
            raise UnknownWorldError(f"unknown world {world!r}") from None

    def __eq__(self, other):
        return (isinstance(other, Model)
                and self.frame == other.frame
                and self.vplus == other.vplus
                and self.vminus == other.vminus
                and self.variables == other.variables)

    def __repr__(self):
        return f"Model({self.frame!r}, {dict(self.vplus)!r}, {dict(self.vminus)!r})"


@dataclass(frozen=True)
class PointedModel:
    model: Model
    world: str

    def __post_init__(self):
        if self.world not in self.model.frame.worlds:
            raise UnknownWorldError(f"unknown world {self.world!r}")


class Evaluator:
    """Memoized evaluation of the two support relations on one model.

    The memo is keyed by (world, subformula); reusing one evaluator across
    many formulas on the same model shares work between common subtrees.
    Memoization is observationally invisible: results equal those of a
    plain structural recursion.
    """

    __slots__ = ("model", "_memo")

    def __init__(self, model: Model):
        self.model = model
        self._memo: dict[tuple[str, Formula], tuple[bool, bool]] = {}

    def supports(self, world: str, f: Formula) -> tuple[bool, bool]:
        if world not in self.model.vplus:
            raise UnknownWorldError(f"unknown world {world!r}")
        key = (world, f)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if isinstance(f, Atom):
            res = (f.name in self.model.vplus[world], f.name in self.model.vminus[world])
        elif isinstance(f, Not):
            pos, neg = self.supports(world, f.child)
            res = (neg, pos)
        elif isinstance(f, And):
            lp, ln = self.supports(world, f.left)
            rp, rn = self.supports(world, f.right)
            res = (lp and rp, ln or rn)
        elif isinstance(f, Or):
            lp, ln = self.supports(world, f.left)
            rp, rn = self.supports(world, f.right)
            res = (lp or rp, ln and rn)
        elif isinstance(f, Tri):
            sub = [self.supports(v, f.child) for v in self.model.successors(world)]
            any_p = any(p for p, _ in sub)
            all_p = all(p for p, _ in sub)
            any_n = any(n for _, n in sub)
            all_n = all(n for _, n in sub)
            agree = (all_p or not any_p) and (all_n or not any_n)
            valued = all(p or n for p, n in sub)
            res = (agree and valued,
                   (any_p and not all_p) or (any_n and not all_n) or (any_p and any_n))
        elif isinstance(f, Box):
            sub = [self.supports(v, f.child) for v in self.model.successors(world)]
            res = (all(p for p, _ in sub), any(n for _, n in sub))
        else:
            raise TypeError(f"not a formula: {f!r}")
        self._memo[key] = res
        return res


def supports_true(m: Model, world: str, f: Formula) -> bool:
    return Evaluator(m).supports(world, f)[0]


def supports_false(m: Model, world: str, f: Formula) -> bool:
    return Evaluator(m).supports(world, f)[1]


def eval_formula(m: Model, world: str, f: Formula) -> FourValue:
    return FourValue.from_flags(*Evaluator(m).supports(world, f))


def tri_value_by_cases(m: Model, world: str, f: Formula) -> FourValue:
    """Value of ``#f`` at ``world`` via the four-case characterization:

    T when ``f`` is uniformly T or uniformly F over the accessible worlds
    (vacuously at dead ends); B when they are nonempty and uniformly B;
    N likewise for N; F when two accessible worlds carry different values.

    Agrees with ``eval_formula(m, world, Tri(f))``; kept as an independent
    cross-check of the modal clauses.
    """
    ev = Evaluator(m)
    succ = m.successors(world)
    vals = {FourValue.from_flags(*ev.supports(v, f)) for v in succ}
    if not vals:
        return FourValue.T
    if len(vals) > 1:
        return FourValue.F
    only = next(iter(vals))
    if only in (FourValue.T, FourValue.F):
        return FourValue.T
    return only


def sequent_holds(m: Model, s: Sequent) -> bool:
    """Truth preservation at every world of ``m``."""
    ev = Evaluator(m)
    for w in m.frame.worlds:
        if ev.supports(w, s.premise)[0] and not ev.supports(w, s.conclusion)[0]:
            return False
    return True


def _valuation_slots(frame: Frame, names: frozenset[str], bound: int):
    slots = [(w, v) for w in frame.worlds for v in sorted(names)]
    if len(slots) > bound:
        raise BoundExceededError(
            f"{len(frame.worlds)} worlds x {len(names)} variables exceeds bound {bound}")
    return slots


def _models_on_frame(frame: Frame, names: frozenset[str], bound: int):
    """All models on ``frame`` over ``names``, in canonical order.

    Only the variables occurring in the formulas under test need to be
    enumerated: evaluation is a structural recursion that never reads any
    other variable, so extra variables cannot change a validity verdict.
    """
    slots = _valuation_slots(frame, names, bound)
    for combo in itertools.product(VALUE_ORDER, repeat=len(slots)):
        values: dict[str, dict[str, FourValue]] = {w: {} for w in frame.worlds}
        for (w, var), val in zip(slots, combo):
            values[w][var] = val
        yield Model.from_values(frame, values, variables=names)


def sequent_valid_on_frame(fr: Frame, s: Sequent, *,
                           bound: int = DEFAULT_VALUATION_BOUND) -> bool:
    """Exhaustively check truth preservation over all valuations on ``fr``."""
    names = variables(s.premise) | variables(s.conclusion)
    for m in _models_on_frame(fr, names, bound):
        if not sequent_holds(m, s):
            return False
    return True


def formula_valid_on_frame(fr: Frame, f: Formula, *,
                           bound: int = DEFAULT_VALUATION_BOUND) -> bool:
    """True iff ``f`` is supported-true at every world of every model on ``fr``."""
    for m in _models_on_frame(fr, variables(f), bound):
        ev = Evaluator(m)
        for w in fr.worlds:
            if not ev.supports(w, f)[0]:
                return False
    return True


_DUAL = {FourValue.T: FourValue.T, FourValue.B: FourValue.N,
         FourValue.N: FourValue.B, FourValue.F: FourValue.F}


def dual_value(v: FourValue) -> FourValue:
    """Swap B and N; fix T and F."""
    return _DUAL[v]


def dual_model(m: Model) -> Model:
    """The model on the same frame with every variable's value dualized.

    An involution: ``dual_model(dual_model(m)) == m`` (the variable
    universe is carried along so an everywhere-N variable survives)."""
    values = {
        w: {var: dual_value(m.value(w, var)) for var in m.variables}
        for w in m.frame.worlds
    }
    return Model.from_values(m.frame, values, variables=m.variables)


def _reflexive(ws, rel):
    return all((w, w) in rel for w in ws)


def _transitive(ws, rel):
    return all((a, c) in rel for a, b in rel for b2, c in rel if b == b2)


def _symmetric(ws, rel):
    return all((b, a) in rel for a, b in rel)


def _euclidean(ws, rel):
    return all((b, c) in rel
               for a, b in rel for a2, c in rel if a == a2)


def _serial(ws, rel):
    return all(any((w, t) in rel for t in ws) for w in ws)


def _partial_functional(ws, rel):
    return all(sum(1 for t in ws if (w, t) in rel) <= 1 for w in ws)


def _coreflexive(ws, rel):
    return all(a == b for a, b in rel)


FRAME_PROPERTIES = {
    "reflexive": _reflexive,
    "transitive": _transitive,
    "symmetric": _symmetric,
    "euclidean": _euclidean,
    "serial": _serial,
    "partial_functional": _partial_functional,
    "coreflexive": _coreflexive,
    "empty_relation": lambda ws, rel: not rel,
    "equivalence": lambda ws, rel: (_reflexive(ws, rel) and _symmetric(ws, rel)
                                    and _transitive(ws, rel)),
    "preorder": lambda ws, rel: _reflexive(ws, rel) and _transitive(ws, rel),
}


def frame_property(fr: Frame, prop: str) -> bool:
    """First-order frame conditions checked by direct quantification."""
    try:
        check = FRAME_PROPERTIES[prop]
    except KeyError:
        raise ValueError(f"unknown frame property {prop!r}") from None
    return check(fr.worlds, fr.relation)


# --- JSON interchange --------------------------------------------------------
#
# {"worlds": ["w0", "w1"], "rel": [["w0", "w1"]],
#  "val": {"w0": {"p": "T"}, "w1": {"p": "B"}}}
#
# Values are letters in {T, B, N, F}; variables omitted at a world are N.

def frame_from_dict(data: Mapping) -> Frame:
    if not isinstance(data, Mapping):
        raise ModelError("frame data must be a JSON object")
    try:
        worlds = data["worlds"]
        rel = data.get("rel", [])
    except (TypeError, KeyError) as exc:
        raise ModelError(f"missing frame field: {exc}") from exc
    if not isinstance(worlds, list) or not all(isinstance(w, str) for w in worlds):
        raise ModelError("'worlds' must be a list of strings")
    pairs = []
    for edge in rel:
        if not (isinstance(edge, (list, tuple)) and len(edge) == 2):
            raise ModelError(f"bad relation entry {edge!r}")
        pairs.append((edge[0], edge[1]))
    return Frame(worlds, pairs)


def frame_to_dict(fr: Frame) -> dict:
    order = {w: i for i, w in enumerate(fr.worlds)}
    rel = sorted(fr.relation, key=lambda e: (order[e[0]], order[e[1]]))
    return {"worlds": list(fr.worlds), "rel": [list(e) for e in rel]}


def model_from_dict(data: Mapping) -> Model:
    frame = frame_from_dict(data)
    val = data.get("val", {})
    if not isinstance(val, Mapping):
        raise ModelError("'val' must be an object")
    values: dict[str, dict[str, FourValue]] = {}
    for world, assignment in val.items():
        if world not in frame.worlds:
            raise UnknownWorldError(f"'val' uses unknown world {world!r}")
        if not isinstance(assignment, Mapping):
            raise ModelError(f"'val' entry for {world!r} must be an object")
        row = {}
        for var, letter in assignment.items():
            try:
                row[var] = FourValue[letter]
            except KeyError:
                raise ModelError(f"bad value {letter!r} for {var!r} at {world!r}") from None
        values[world] = row
    return Model.from_values(frame, values)


def model_to_dict(m: Model) -> dict:
    data = frame_to_dict(m.frame)
    val: dict[str, dict[str, str]] = {}
    for w in m.frame.worlds:
        row = {var: m.value(w, var).name for var in sorted(m.variables)}
        if row:
            val[w] = row
    data["val"] = val
    return data
