"""Analytic-cut proof search over labelled branches, with countermodel
extraction from complete open branches.

A branch holds labelled formulas ``w: f ; v`` (value labels t, f, tbar,
fbar for supported-true / supported-false / unsupported-true /
unsupported-false) and relational atoms ``w R w'``.  A branch closes when
some formula carries a value label together with its bar.  Gluts and gaps
do not close anything: ``{w:p;t, w:p;f}`` is a consistent description of
``p`` being B.

Rule scheduling: closure is detected on insertion; then, in priority
order, non-branching propositional rules, modal propagation rules,
branching cuts, and world-creating rules.  Within a class, candidates are
tried in branch insertion order, which makes the search fully
deterministic.

Cut discipline (the analytic part): the value-pair cut is applied only

* to a ``#``-entry whose truth dimension (t/tbar) or falsity dimension
  (f/fbar) is still undecided, on the missing dimension;
* to the argument of a true-and-not-false ``#``-entry at an accessible
  world that carries no entry for it yet (the propagation rules need one
  entry to latch onto);
* to an immediate subformula of a two-premise propositional rule's major
  premise when neither subformula is decided in the relevant dimension.

All cut formulas are subformulas of formulas already on the branch, so
finished tableaux satisfy the subformula property.

Termination: every rule instance fires at most once per branch, and
world-creating rules only ever copy the immediate argument of a ``#``
entry into the worlds they mint, so modal nesting depth strictly
decreases along the creation order; branches are therefore finite.  No
termination proof for unrestricted rule application is known to us; the
once-per-instance bookkeeping is part of this implementation's contract.

The search additionally prunes redundant split siblings: every derived
item records which split decisions it rests on, and when the left
alternative of a split closes without using that split's decision, the
same refutation covers the right alternative, which is skipped and marked
"pruned" in the tree.  Only subtrees in which every branch closes are ever
skipped, so refutation verdicts, branch order, and extracted countermodels
are exactly those of the unpruned left-first search.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Union

from .semantics import Model, PointedModel, Evaluator, Frame
from .syntax import And, Atom, Formula, Not, Or, Sequent, Tri, contains_box, render, variables

__all__ = [
    "Val", "bar", "neg", "Labelled", "RelAtom", "Branch",
    "Proved", "Refuted", "TableauResult", "ProofNode", "ProofStats",
    "LanguageError", "RealisationError",
    "prove", "saturation_step", "is_closed",
    "extract_countermodel", "check_realisation",
    "tree_to_text", "tree_to_dict", "branch_items", "item_to_text",
]


class LanguageError(ValueError):
    """The proof system covers the #-fragment only."""


class RealisationError(RuntimeError):
    """An extracted model failed to realise its own branch; this signals a
    bug in the calculus implementation, not bad user input."""


class Val(Enum):
    T = "t"
    F = "f"
    TBAR = "tbar"
    FBAR = "fbar"

    def __str__(self) -> str:
        return self.value


_BAR = {Val.T: Val.TBAR, Val.TBAR: Val.T, Val.F: Val.FBAR, Val.FBAR: Val.F}
_NEG = {Val.T: Val.F, Val.F: Val.T, Val.TBAR: Val.FBAR, Val.FBAR: Val.TBAR}
_VAL_ORDER = (Val.T, Val.F, Val.TBAR, Val.FBAR)


def bar(v: Val) -> Val:
    """Swap a value label with its unsupported counterpart (involution)."""
    return _BAR[v]


def neg(v: Val) -> Val:
    """Value label of the negated formula: t<->f, tbar<->fbar."""
    return _NEG[v]


@dataclass(frozen=True)
class Labelled:
    world: str
    formula: Formula
    value: Val


@dataclass(frozen=True)
class RelAtom:
    source: str
    target: str


Item = Union[Labelled, RelAtom]


class Branch:
    """A tableau branch: item set plus rule-firing bookkeeping.

    ``fresh`` is the per-branch counter for minted world labels; it is
    copied when a branch splits, so sibling branches reuse the same label
    numbers independently.
    """

    __slots__ = ("items", "_set", "vals", "succ", "worlds", "_worldset",
                 "fired", "fresh", "closed", "closing", "deps", "decisions")

    def __init__(self):
        self.items: list[Item] = []
        self._set: set[Item] = set()
        self.vals: dict[tuple[str, Formula], set[Val]] = {}
        self.succ: dict[str, list[str]] = {}
        self.worlds: list[str] = []
        self._worldset: set[str] = set()
        self.fired: set[tuple] = set()
        self.fresh = 1
        self.closed = False
        self.closing: tuple[Labelled, Labelled] | None = None
        # Which split decisions each item's derivation rests on; lets the
        # search skip the sibling of a split that a closed subtree never used.
        self.deps: dict[Item, frozenset[int]] = {}
        self.decisions = 0

    @classmethod
    def from_items(cls, items: Iterable[Item]) -> "Branch":
        b = cls()
        for item in items:
            b.add(item)
        return b

    def copy(self) -> "Branch":
        b = Branch.__new__(Branch)
        b.items = list(self.items)
        b._set = set(self._set)
        b.vals = {k: set(v) for k, v in self.vals.items()}
        b.succ = {k: list(v) for k, v in self.succ.items()}
        b.worlds = list(self.worlds)
        b._worldset = set(self._worldset)
        b.fired = set(self.fired)
        b.fresh = self.fresh
        b.closed = self.closed
        b.closing = self.closing
        b.deps = dict(self.deps)
        b.decisions = self.decisions
        return b

    def _register_world(self, w: str):
        if w not in self._worldset:
            self._worldset.add(w)
            self.worlds.append(w)

    def add(self, item: Item, dep: frozenset = frozenset()) -> bool:
        """Insert an item; returns False if it was already present."""
        if item in self._set:
            return False
        self.items.append(item)
        self.deps[item] = dep
        self._set.add(item)
        if isinstance(item, Labelled):
            self._register_world(item.world)
            vals = self.vals.setdefault((item.world, item.formula), set())
            vals.add(item.value)
            if not self.closed and bar(item.value) in vals:
                self.closed = True
                self.closing = (item, Labelled(item.world, item.formula, bar(item.value)))
        else:
            self._register_world(item.source)
            self._register_world(item.target)
            self.succ.setdefault(item.source, []).append(item.target)
        return True

    def has(self, world: str, f: Formula, v: Val) -> bool:
        return Labelled(world, f, v) in self._set

    def values(self, world: str, f: Formula) -> set[Val]:
        return self.vals.get((world, f), set())

    def successors(self, world: str) -> list[str]:
        return self.succ.get(world, [])

    def mint(self, count: int) -> tuple[list[str], int]:
        """Names for ``count`` fresh worlds plus the advanced counter value;
        does not mutate the branch."""
        names = []
        n = self.fresh
        while len(names) < count:
            name = f"w{n}"
            n += 1
            if name not in self._worldset:
                names.append(name)
        return names, n

    def __len__(self):
        return len(self.items)


def is_closed(b: Branch) -> bool:
    return b.closed


# --- rule instances ----------------------------------------------------------

@dataclass(frozen=True)
class _Instance:
    rule: str
    key: tuple
    # One tuple of items per resulting branch: one entry = linear rule,
    # two entries = branching rule.
    additions: tuple[tuple[Item, ...], ...]
    premises: tuple[Item, ...] = ()
    fresh_after: int | None = None


def _attempt(b: Branch, rule: str, key: tuple,
             additions: tuple[tuple[Item, ...], ...],
             premises: tuple[Item, ...] = (),
             fresh_after: int | None = None) -> _Instance | None:
    if key in b.fired:
        return None
    if len(additions) == 1 and all(item in b._set for item in additions[0]):
        b.fired.add(key)  # permanently unproductive; skip in later scans
        return None
    return _Instance(rule, key, additions, premises, fresh_after)


def _find_linear(b: Branch) -> _Instance | None:
    for item in b.items:
        if not isinstance(item, Labelled):
            continue
        w, f, v = item.world, item.formula, item.value
        if isinstance(f, Not):
            inst = _attempt(b, f"not_{v.value}", ("not", w, f, v),
                            ((Labelled(w, f.child, neg(v)),),), (item,))
            if inst:
                return inst
        elif isinstance(f, And):
            if v is Val.T:
                inst = _attempt(b, "and_t", ("and_t", w, f),
                                ((Labelled(w, f.left, Val.T), Labelled(w, f.right, Val.T)),),
                                (item,))
                if inst:
                    return inst
            elif v is Val.FBAR:
                inst = _attempt(b, "and_fbar", ("and_fbar", w, f),
                                ((Labelled(w, f.left, Val.FBAR), Labelled(w, f.right, Val.FBAR)),),
                                (item,))
                if inst:
                    return inst
            elif v is Val.F:
                inst = _two_premise(b, "and_f", item, minor=Val.FBAR, concl=Val.F)
                if inst:
                    return inst
            elif v is Val.TBAR:
                inst = _two_premise(b, "and_tbar", item, minor=Val.T, concl=Val.TBAR)
                if inst:
                    return inst
        elif isinstance(f, Or):
            if v is Val.F:
                inst = _attempt(b, "or_f", ("or_f", w, f),
                                ((Labelled(w, f.left, Val.F), Labelled(w, f.right, Val.F)),),
                                (item,))
                if inst:
                    return inst
            elif v is Val.TBAR:
                inst = _attempt(b, "or_tbar", ("or_tbar", w, f),
                                ((Labelled(w, f.left, Val.TBAR), Labelled(w, f.right, Val.TBAR)),),
                                (item,))
                if inst:
                    return inst
            elif v is Val.T:
                inst = _two_premise(b, "or_t", item, minor=Val.TBAR, concl=Val.T)
                if inst:
                    return inst
            elif v is Val.FBAR:
                inst = _two_premise(b, "or_fbar", item, minor=Val.F, concl=Val.FBAR)
                if inst:
                    return inst
    return None


def _two_premise(b: Branch, rule: str, major: Labelled, *, minor: Val, concl: Val):
    w, f = major.world, major.formula
    for idx, (this, other) in enumerate(((f.left, f.right), (f.right, f.left))):
        if b.has(w, this, minor):
            inst = _attempt(b, rule, (rule, w, f, idx), ((Labelled(w, other, concl),),),
                            (major, Labelled(w, this, minor)))
            if inst:
                return inst
    return None


_CLASSICAL_PAIRS = (("ctrue", (Val.T, Val.FBAR)), ("cfalse", (Val.F, Val.TBAR)))


def _find_modal(b: Branch) -> _Instance | None:
    for item in b.items:
        if not (isinstance(item, Labelled) and isinstance(item.formula, Tri)):
            continue
        w, tf = item.world, item.formula
        arg = tf.child
        vals = b.values(w, tf)
        if Val.T in vals and Val.FBAR in vals:
            mode = (Labelled(w, tf, Val.T), Labelled(w, tf, Val.FBAR))
            for wj in b.successors(w):
                for v in _VAL_ORDER:
                    if b.has(wj, arg, v):
                        inst = _attempt(b, "tri_T", ("tri_T", w, tf, wj, v),
                                        ((Labelled(wj, arg, neg(bar(v))),),),
                                        mode + (RelAtom(w, wj), Labelled(wj, arg, v)))
                        if inst:
                            return inst
            for wj1 in b.successors(w):
                for tag, pair in _CLASSICAL_PAIRS:
                    if b.has(wj1, arg, pair[0]) and b.has(wj1, arg, pair[1]):
                        for wj2 in b.successors(w):
                            if wj2 == wj1:
                                continue
                            inst = _attempt(
                                b, "tri_T'", ("tri_T'", w, tf, wj1, wj2, tag),
                                ((Labelled(wj2, arg, pair[0]),
                                  Labelled(wj2, arg, pair[1])),),
                                mode + (RelAtom(w, wj1), RelAtom(w, wj2),
                                        Labelled(wj1, arg, pair[0]),
                                        Labelled(wj1, arg, pair[1])))
                            if inst:
                                return inst
        if Val.T in vals and Val.F in vals:
            mode = (Labelled(w, tf, Val.T), Labelled(w, tf, Val.F))
            for wj in b.successors(w):
                inst = _attempt(b, "tri_B", ("tri_B", w, tf, wj),
                                ((Labelled(wj, arg, Val.T), Labelled(wj, arg, Val.F)),),
                                mode + (RelAtom(w, wj),))
                if inst:
                    return inst
        if Val.TBAR in vals and Val.FBAR in vals:
            mode = (Labelled(w, tf, Val.TBAR), Labelled(w, tf, Val.FBAR))
            for wj in b.successors(w):
                inst = _attempt(b, "tri_N", ("tri_N", w, tf, wj),
                                ((Labelled(wj, arg, Val.TBAR), Labelled(wj, arg, Val.FBAR)),),
                                mode + (RelAtom(w, wj),))
                if inst:
                    return inst
    return None


def _cut(b: Branch, w: str, f, dim: str) -> _Instance | None:
    plain = Val.T if dim == "t" else Val.F
    return _attempt(b, "cut", ("cut", w, f, dim),
                    ((Labelled(w, f, plain),), (Labelled(w, f, bar(plain)),)))


def _find_cuts(b: Branch) -> _Instance | None:
    for item in b.items:
        if not isinstance(item, Labelled):
            continue
        w, f = item.world, item.formula
        if isinstance(f, Tri):
            vals = b.values(w, f)
            tdim = Val.T in vals or Val.TBAR in vals
            fdim = Val.F in vals or Val.FBAR in vals
            if tdim and not fdim:
                inst = _cut(b, w, f, "f")
                if inst:
                    return inst
            elif fdim and not tdim:
                inst = _cut(b, w, f, "t")
                if inst:
                    return inst
            if Val.T in vals and Val.FBAR in vals:
                # Propagation needs one entry for the argument at some
                # accessible world: the completion rule then turns it into a
                # classical pair and the uniformity rule floods that pair to
                # every other accessible world, so one cut is enough.
                succ = b.successors(w)
                if succ and not any(b.values(wj, f.child) for wj in succ):
                    inst = _cut(b, succ[0], f.child, "t")
                    if inst:
                        return inst
        elif isinstance(f, And) or isinstance(f, Or):
            v = item.value
            if isinstance(f, And) and v is Val.F:
                dim = "f"
            elif isinstance(f, And) and v is Val.TBAR:
                dim = "t"
            elif isinstance(f, Or) and v is Val.T:
                dim = "t"
            elif isinstance(f, Or) and v is Val.FBAR:
                dim = "f"
            else:
                continue
            pair = (Val.T, Val.TBAR) if dim == "t" else (Val.F, Val.FBAR)
            decided = any(x in b.values(w, sub)
                          for sub in (f.left, f.right) for x in pair)
            if not decided:
                inst = _cut(b, w, f.left, dim)
                if inst:
                    return inst
    return None


def _find_creators(b: Branch) -> _Instance | None:
    for item in b.items:
        if not (isinstance(item, Labelled) and isinstance(item.formula, Tri)):
            continue
        w, tf = item.world, item.formula
        arg = tf.child
        vals = b.values(w, tf)
        if Val.T in vals and Val.F in vals and not b.successors(w):
            names, nxt = b.mint(1)
            inst = _attempt(b, "tri_B+", ("tri_B+", w, tf),
                            ((RelAtom(w, names[0]),
                              Labelled(names[0], arg, Val.T),
                              Labelled(names[0], arg, Val.F)),),
                            (Labelled(w, tf, Val.T), Labelled(w, tf, Val.F)),
                            fresh_after=nxt)
            if inst:
                return inst
        if Val.TBAR in vals and Val.FBAR in vals and not b.successors(w):
            names, nxt = b.mint(1)
            inst = _attempt(b, "tri_N+", ("tri_N+", w, tf),
                            ((RelAtom(w, names[0]),
                              Labelled(names[0], arg, Val.TBAR),
                              Labelled(names[0], arg, Val.FBAR)),),
                            (Labelled(w, tf, Val.TBAR), Labelled(w, tf, Val.FBAR)),
                            fresh_after=nxt)
            if inst:
                return inst
        if Val.F in vals and Val.TBAR in vals:
            names, nxt = b.mint(2)
            k1, k2 = names
            rels = (RelAtom(w, k1), RelAtom(w, k2))
            inst = _attempt(b, "tri_F", ("tri_F", w, tf),
                            (rels + (Labelled(k1, arg, Val.T), Labelled(k2, arg, Val.TBAR)),
                             rels + (Labelled(k1, arg, Val.F), Labelled(k2, arg, Val.FBAR))),
                            (Labelled(w, tf, Val.F), Labelled(w, tf, Val.TBAR)),
                            fresh_after=nxt)
            if inst:
                return inst
    return None


_FINDERS = (_find_linear, _find_modal, _find_cuts, _find_creators)


def _select(b: Branch) -> _Instance | None:
    for finder in _FINDERS:
        inst = finder(b)
        if inst is not None:
            return inst
    return None


def _apply_to(b: Branch, inst: _Instance, additions: tuple[Item, ...]) -> tuple[Item, ...]:
    b.fired.add(inst.key)
    if inst.fresh_after is not None:
        b.fresh = inst.fresh_after
    base = frozenset().union(*(b.deps[p] for p in inst.premises)) \
        if inst.premises else frozenset()
    if len(inst.additions) > 1:
        # A branching application is a decision point.  Items common to both
        # alternatives (the relational atoms of the two-witness rule) do not
        # depend on the choice taken.
        decision = b.decisions
        b.decisions += 1
        common = set(inst.additions[0]) & set(inst.additions[1])
        chosen = base | {decision}
        return tuple(item for item in additions
                     if b.add(item, base if item in common else chosen))
    return tuple(item for item in additions if b.add(item, base))


def _conflict_deps(b: Branch) -> frozenset[int]:
    first, second = b.closing
    return b.deps[first] | b.deps.get(second, frozenset())


def saturation_step(b: Branch) -> list[Branch]:
    """Apply one unfired applicable rule instance to a copy of ``b``.

    Returns one extended branch for linear rules, two for branching ones.
    Raises ValueError if the branch is closed or already complete.
    """
    if b.closed:
        raise ValueError("branch is closed")
    inst = _select(b)
    if inst is None:
        raise ValueError("branch is complete")
    out = []
    for additions in inst.additions:
        child = b.copy()
        _apply_to(child, inst, additions)
        out.append(child)
    return out


# --- proof search ------------------------------------------------------------

@dataclass
class ProofStats:
    rule_applications: int = 0
    splits: int = 0
    branches_closed: int = 0
    branches_pruned: int = 0
    worlds_created: int = 0

    def to_dict(self) -> dict:
        return {"rule_applications": self.rule_applications,
                "splits": self.splits,
                "branches_closed": self.branches_closed,
                "branches_pruned": self.branches_pruned,
                "worlds_created": self.worlds_created}


@dataclass
class ProofNode:
    rule: str | None
    added: tuple[Item, ...]
    children: list["ProofNode"] = field(default_factory=list)
    status: str | None = None  # "closed" | "open" on leaves


@dataclass
class Proved:
    tree: ProofNode
    stats: ProofStats


@dataclass
class Refuted:
    branch: Branch
    model: Model
    world: str
    tree: ProofNode
    stats: ProofStats


TableauResult = Union[Proved, Refuted]

def prove(s: Sequent, *, start: str = "truth") -> TableauResult:
    """Run the proof search for ``premise |- conclusion``.

    ``start`` selects the root labelling: ``"truth"`` uses
    ``{w0: premise; t, w0: conclusion; tbar}``; ``"nonfalsity"`` uses the
    contraposed root ``{w0: premise; fbar, w0: conclusion; f}``.  The two
    trees close together.

    Returns ``Proved`` when every branch closes, else ``Refuted`` with the
    first (leftmost) complete open branch, its extracted model, and the
    designated world.
    """
    if contains_box(s.premise) or contains_box(s.conclusion):
        raise LanguageError("the proof system covers the #-fragment; [] is not supported")
    if start == "truth":
        root_items = (Labelled("w0", s.premise, Val.T),
                      Labelled("w0", s.conclusion, Val.TBAR))
    elif start == "nonfalsity":
        root_items = (Labelled("w0", s.premise, Val.FBAR),
                      Labelled("w0", s.conclusion, Val.F))
    else:
        raise ValueError(f"unknown start mode {start!r}")
    branch = Branch.from_items(root_items)
    root = ProofNode(None, root_items)
    stats = ProofStats()
    open_branch, _ = _explore(branch, root, stats)
    if open_branch is None:
        return Proved(root, stats)
    pointed = extract_countermodel(open_branch)
    return Refuted(open_branch, pointed.model, pointed.world, root, stats)


def _explore(branch: Branch, node: ProofNode,
             stats: ProofStats) -> tuple[Branch | None, frozenset[int]]:
    """Depth-first, left branch first.

    Returns the first complete open branch (conflict set empty), or None
    together with the set of split decisions the subtree's refutation
    depends on.  When the left alternative of a split closes without using
    that split's decision, the same refutation covers the right
    alternative, which is then skipped ("pruned"); this only ever skips
    subtrees in which every branch closes, so refutation results and
    extracted countermodels are unaffected.
    """
    while True:
        if branch.closed:
            node.status = "closed"
            stats.branches_closed += 1
            return None, _conflict_deps(branch)
        inst = _select(branch)
        if inst is None:
            node.status = "open"
            return branch, frozenset()
        stats.rule_applications += 1
        if inst.fresh_after is not None:
            stats.worlds_created += inst.fresh_after - branch.fresh
        if len(inst.additions) == 1:
            added = _apply_to(branch, inst, inst.additions[0])
            child = ProofNode(inst.rule, added)
            node.children.append(child)
            node = child
            continue
        stats.splits += 1
        decision = branch.decisions
        conflicts: frozenset[int] = frozenset()
        for which, additions in enumerate(inst.additions):
            sub = branch.copy()
            added = _apply_to(sub, inst, additions)
            child = ProofNode(inst.rule, added)
            node.children.append(child)
            result, deps = _explore(sub, child, stats)
            if result is not None:
                return result, frozenset()
            if which == 0 and decision not in deps:
                stats.branches_pruned += 1
                node.children.append(ProofNode(inst.rule, (), status="pruned"))
                return None, conflicts | deps
            conflicts |= deps - {decision}
        return None, conflicts


# --- countermodel extraction ---------------------------------------------------

def extract_countermodel(b: Branch) -> PointedModel:
    """Model read off a complete open branch, pointed at its first world.

    Worlds are the labels occurring on the branch; the relation is the set
    of relational atoms; a variable is supported-true (-false) at a world
    exactly when the branch says so with a ``t`` (``f``) atom entry.  The
    result is checked against the branch and a failure raises
    RealisationError, since it would mean the calculus produced an
    unrealisable "complete" branch.
    """
    if b.closed:
        raise ValueError("cannot extract a model from a closed branch")
    if not b.worlds:
        raise ValueError("empty branch")
    rel = [(item.source, item.target) for item in b.items if isinstance(item, RelAtom)]
    frame = Frame(b.worlds, rel)
    vplus: dict[str, set[str]] = {w: set() for w in b.worlds}
    vminus: dict[str, set[str]] = {w: set() for w in b.worlds}
    mentioned: set[str] = set()
    for item in b.items:
        if not isinstance(item, Labelled):
            continue
        mentioned |= variables(item.formula)
        if isinstance(item.formula, Atom):
            if item.value is Val.T:
                vplus[item.world].add(item.formula.name)
            elif item.value is Val.F:
                vminus[item.world].add(item.formula.name)
    model = Model(frame, vplus, vminus, variables=mentioned)
    if not check_realisation(model, b):
        raise RealisationError("extracted model does not realise its branch")
    return PointedModel(model, b.worlds[0])


def check_realisation(m: Model, b: Branch) -> bool:
    """Does ``m`` satisfy every labelled assertion on ``b``?

    ``t``/``f`` entries must be supported, ``tbar``/``fbar`` entries must
    be unsupported.  Every world label of the branch must exist in ``m``.
    """
    ev = Evaluator(m)
    for item in b.items:
        if isinstance(item, RelAtom):
            if (item.source, item.target) not in m.frame.relation:
                return False
            continue
        pos, negv = ev.supports(item.world, item.formula)
        ok = {Val.T: pos, Val.F: negv, Val.TBAR: not pos, Val.FBAR: not negv}[item.value]
        if not ok:
            return False
    return True


# --- serialization -------------------------------------------------------------

_PRETTY_VALS = {Val.T: "t", Val.F: "f", Val.TBAR: "t̄", Val.FBAR: "f̄"}


def item_to_text(item: Item, pretty: bool = False) -> str:
    if isinstance(item, RelAtom):
        return f"{item.source} R {item.target}"
    val = _PRETTY_VALS[item.value] if pretty else item.value.value
    return f"{item.world}: {render(item.formula, pretty)} ; {val}"


def _item_to_dict(item: Item) -> dict:
    if isinstance(item, RelAtom):
        return {"rel": [item.source, item.target]}
    return {"world": item.world, "formula": render(item.formula),
            "value": item.value.value}


def branch_items(b: Branch) -> list[dict]:
    return [_item_to_dict(item) for item in b.items]


def tree_to_dict(node: ProofNode) -> dict:
    root = {"rule": node.rule, "add": [_item_to_dict(i) for i in node.added],
            "children": []}
    if node.status:
        root["status"] = node.status
    stack = [(node, root)]
    while stack:
        src, dst = stack.pop()
        for child in src.children:
            enc = {"rule": child.rule,
                   "add": [_item_to_dict(i) for i in child.added],
                   "children": []}
            if child.status:
                enc["status"] = child.status
            dst["children"].append(enc)
            stack.append((child, enc))
    return root


def tree_to_text(node: ProofNode, pretty: bool = False) -> str:
    """Indented rendering: one item per line, annotated with the rule that
    added it; leaves carry their closed/open status."""
    lines: list[str] = []
    stack: list[tuple[ProofNode, int]] = [(node, 0)]
    while stack:
        cur, depth = stack.pop()
        label = cur.rule or "root"
        pad = "  " * depth
        for item in cur.added:
            lines.append(f"{pad}{item_to_text(item, pretty)}   [{label}]")
        if not cur.added:
            lines.append(f"{pad}({label}: nothing new)")
        if cur.status:
            lines.append(f"{pad}*{cur.status}*")
        for child in reversed(cur.children):
            stack.append((child, depth + 1))
    return "\n".join(lines)


def result_to_dict(result: TableauResult) -> dict:
    from .semantics import model_to_dict
    if isinstance(result, Proved):
        return {"verdict": "proved", "stats": result.stats.to_dict(),
                "tree": tree_to_dict(result.tree)}
    return {"verdict": "refuted", "stats": result.stats.to_dict(),
            "model": model_to_dict(result.model), "designated": result.world,
            "branch": branch_items(result.branch), "tree": tree_to_dict(result.tree)}


def result_to_json(result: TableauResult) -> str:
    return json.dumps(result_to_dict(result), indent=2)
