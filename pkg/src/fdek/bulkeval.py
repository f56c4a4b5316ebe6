"""Vectorized evaluation over every model on every frame of a fixed size.

The model space for ``n`` worlds over ``k`` variables is the cross product
of all 2^(n*n) relations with all 4^(n*k) valuations.  A formula's two
support relations are computed as boolean arrays of shape
``(relations, valuations, worlds)``, so exhaustive searches over millions
of pointed models become a handful of array operations.

Index conventions (shared with ``analysis.model_from_indices`` so scalar
and vectorized enumeration agree item for item):

* relation ``r`` contains the pair (i, j) iff bit ``i*n + j`` of the mask
  is set; masks are enumerated ascending;
* valuation slots are (world, variable) pairs, worlds outermost and
  variables in sorted order; slot 0 is the most significant base-4 digit
  of the valuation index; digit values 0..3 mean T, B, N, F.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .syntax import And, Atom, Box, Formula, Not, Or, Sequent, Tri

__all__ = ["BulkSpace"]


class BulkSpace:
    def __init__(self, n_worlds: int, variables: Sequence[str],
                 rel_masks: Sequence[int] | None = None):
        if n_worlds < 1:
            raise ValueError("need at least one world")
        if not variables:
            raise ValueError("need at least one variable")
        if n_worlds > 5:
            raise ValueError("relation enumeration beyond 5 worlds is not supported")
        self.n = n_worlds
        self.variables = tuple(sorted(variables))
        k = len(self.variables)
        n = n_worlds
        if rel_masks is None:
            rel_masks = np.arange(2 ** (n * n), dtype=np.int64)
        else:
            rel_masks = np.asarray(rel_masks, dtype=np.int64)
        self.rel_masks = rel_masks
        bits = (rel_masks[:, None] >> np.arange(n * n, dtype=np.int64)) & 1
        self.rel = bits.reshape(len(rel_masks), n, n).astype(bool)

        slots = n * k
        self.n_valuations = 4 ** slots
        powers = 4 ** (slots - 1 - np.arange(slots, dtype=np.int64))
        digits = (np.arange(self.n_valuations, dtype=np.int64)[:, None] // powers) % 4
        vp = digits <= 1                       # digit 0 = T, 1 = B
        vm = (digits == 1) | (digits == 3)     # digit 1 = B, 3 = F
        self._atom_pos = {}
        self._atom_neg = {}
        for j, var in enumerate(self.variables):
            self._atom_pos[var] = vp[:, j::k][None, :, :]   # (1, V, n)
            self._atom_neg[var] = vm[:, j::k][None, :, :]
        self._memo: dict[Formula, tuple[np.ndarray, np.ndarray]] = {}

    def _succ_any(self, x: np.ndarray) -> np.ndarray:
        """out[r, v, w] = some successor w' of w under relation r has x[r, v, w']."""
        n = self.n
        out = np.empty((self.rel.shape[0], x.shape[1], n), dtype=bool)
        for w in range(n):
            mask = self.rel[:, w, :]          # (R, n)
            out[:, :, w] = (x & mask[:, None, :]).any(axis=2)
        return out

    def _succ_all(self, x: np.ndarray) -> np.ndarray:
        return ~self._succ_any(~x)

    def supports(self, f: Formula) -> tuple[np.ndarray, np.ndarray]:
        """(supported-true, supported-false) arrays; shape broadcasts to
        (relations, valuations, worlds)."""
        hit = self._memo.get(f)
        if hit is not None:
            return hit
        if isinstance(f, Atom):
            if f.name not in self._atom_pos:
                raise KeyError(f"variable {f.name!r} not in this space")
            res = (self._atom_pos[f.name], self._atom_neg[f.name])
        elif isinstance(f, Not):
            pos, neg = self.supports(f.child)
            res = (neg, pos)
        elif isinstance(f, And):
            lp, ln = self.supports(f.left)
            rp, rn = self.supports(f.right)
            res = (lp & rp, ln | rn)
        elif isinstance(f, Or):
            lp, ln = self.supports(f.left)
            rp, rn = self.supports(f.right)
            res = (lp | rp, ln & rn)
        elif isinstance(f, Tri):
            pos, neg = self.supports(f.child)
            any_p = self._succ_any(pos)
            all_p = self._succ_all(pos)
            any_n = self._succ_any(neg)
            all_n = self._succ_all(neg)
            agree = (all_p | ~any_p) & (all_n | ~any_n)
            valued = self._succ_all(pos | neg)
            res = (agree & valued,
                   (any_p & ~all_p) | (any_n & ~all_n) | (any_p & any_n))
        elif isinstance(f, Box):
            pos, neg = self.supports(f.child)
            res = (self._succ_all(pos), self._succ_any(neg))
        else:
            raise TypeError(f"not a formula: {f!r}")
        self._memo[f] = res
        return res

    def first_countermodel(self, s: Sequent) -> tuple[int, int, int] | None:
        """Indices (relation, valuation, world) of the first pointed model
        where the premise is supported-true and the conclusion is not, in
        enumeration order; None if the sequent holds throughout."""
        prem_pos, _ = self.supports(s.premise)
        conc_pos, _ = self.supports(s.conclusion)
        bad = prem_pos & ~conc_pos
        if not bad.any():
            return None
        flat = int(bad.argmax())
        _, nv, n = bad.shape
        r, rest = divmod(flat, nv * n)
        v, w = divmod(rest, n)
        # A relation-independent result keeps a singleton first axis.
        if bad.shape[0] == 1:
            r = 0
        return r, v, w

    def sequent_holds_everywhere(self, s: Sequent) -> bool:
        return self.first_countermodel(s) is None

    def formula_true_everywhere(self, f: Formula) -> bool:
        pos, _ = self.supports(f)
        return bool(pos.all())

    def sequent_valid_per_relation(self, s: Sequent) -> np.ndarray:
        """Boolean vector over this space's relations: truth preservation
        holds at every valuation and world of that frame."""
        prem_pos, _ = self.supports(s.premise)
        conc_pos, _ = self.supports(s.conclusion)
        bad = prem_pos & ~conc_pos
        if bad.shape[0] == 1 and self.rel.shape[0] != 1:
            return np.repeat(~bad.any(axis=(1, 2)), self.rel.shape[0])
        return ~bad.any(axis=(1, 2))

    def formula_valid_per_relation(self, f: Formula) -> np.ndarray:
        pos, _ = self.supports(f)
        bad = ~pos
        if bad.shape[0] == 1 and self.rel.shape[0] != 1:
            return np.repeat(~bad.any(axis=(1, 2)), self.rel.shape[0])
        return ~bad.any(axis=(1, 2))
