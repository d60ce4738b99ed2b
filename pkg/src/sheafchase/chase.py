"""Long-exact-sequence chase engine.

Sheaf nodes carry cohomology tables over a twist window; short exact
sequences 0 -> A -> B -> C -> 0 connect them, with per-slot twist shifts
and multiplicities.  A fixed list of propagation rules runs to a fixpoint
and every concluded entry is logged with its rule and premises, yielding a
replayable certificate.  Connecting maps are never assumed zero; only the
rules below fire.

Rules (per sequence, twist and degree i):
  R1: H^i(A)=0 and H^i(C)=0              => H^i(B)=0
  R2: H^{i-1}(C)=0 and H^i(B)=0          => H^i(A)=0
  R3: H^i(B)=0 and H^{i+1}(A)=0          => H^i(C)=0
  R4: H^i(A)=0 and H^{i+1}(A)=0          => H^i(B) = H^i(C)  (both ways)
  R5: H^{i-1}(B)=0 and H^i(B)=0          => H^{i-1}(C) = H^i(A)
  R6: H^{i-1}(C)=0 and H^{i+1}(A)=0      => h^i(A) - h^i(B) + h^i(C) = 0
      (derives whichever of the three dimensions is missing)

Degrees outside [0, dim] (or above a node's support dimension) are
implicitly Zero.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .bwb import BundleExpr, GrassmannSpace, omega_expr, wedge_q_dual_expr
from .bwb import table as bwb_table
from .quadric import QuadricSpace
from .table import Val
from .young import sym_power_split


class Inconsistency(Exception):
    """A derived value conflicts with an established one."""


class UndeterminedEntries(Exception):
    """A predicate needed table entries that the chase did not determine."""

    def __init__(self, entries):
        self.entries = list(entries)
        super().__init__(f"undetermined entries: {self.entries}")


class CertificateError(Exception):
    """A certificate failed to re-verify."""


# --- Certificate ---------------------------------------------------------


@dataclass(frozen=True)
class Conclusion:
    node: str
    i: int
    t: int
    val: Val
    rule: str
    premises: tuple[tuple[str, int, int], ...] = ()

    def render(self) -> str:
        refs = ",".join(f"{n}:{i}:{t}" for n, i, t in self.premises)
        return (
            f"CONCLUDE node={self.node} i={self.i} t={self.t} "
            f"val={self.val.render()} rule={self.rule} from={refs}"
        )


@dataclass(frozen=True)
class Assumption:
    node: str
    i: int
    t: int
    val: Val
    tag: str  # 'hypothesis' | 'paper-citation'

    def render(self) -> str:
        return (
            f"ASSUME node={self.node} i={self.i} t={self.t} "
            f"val={self.val.render()} tag={self.tag}"
        )


CertLine = Conclusion | Assumption


def _parse_fields(text: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for chunk in text.split():
        key, _, value = chunk.partition("=")
        out[key] = value
    return out


def parse_cert_line(line: str) -> CertLine:
    kind, _, rest = line.strip().partition(" ")
    f = _parse_fields(rest)
    if kind == "CONCLUDE":
        premises = tuple(
            (n, int(i), int(t))
            for n, i, t in (ref.split(":") for ref in f["from"].split(",") if ref)
        )
        return Conclusion(
            f["node"], int(f["i"]), int(f["t"]), Val.parse(f["val"]), f["rule"], premises
        )
    if kind == "ASSUME":
        return Assumption(f["node"], int(f["i"]), int(f["t"]), Val.parse(f["val"]), f["tag"])
    raise CertificateError(f"bad certificate line: {line!r}")


class Certificate:
    """Ordered derivation log; serializes to line text and to JSON."""

    def __init__(self, lines: Sequence[CertLine] = ()):
        self.lines: list[CertLine] = list(lines)

    @property
    def conclusions(self) -> list[Conclusion]:
        return [x for x in self.lines if isinstance(x, Conclusion)]

    @property
    def assumptions(self) -> list[Assumption]:
        return [x for x in self.lines if isinstance(x, Assumption)]

    def render(self) -> str:
        return "\n".join(x.render() for x in self.lines) + ("\n" if self.lines else "")

    @classmethod
    def parse(cls, text: str) -> "Certificate":
        return cls([parse_cert_line(ln) for ln in text.splitlines() if ln.strip()])

    def json_obj(self) -> list[dict]:
        out = []
        for x in self.lines:
            if isinstance(x, Conclusion):
                out.append(
                    {
                        "kind": "conclude",
                        "node": x.node,
                        "i": x.i,
                        "t": x.t,
                        "val": x.val.render(),
                        "rule": x.rule,
                        "from": [list(p) for p in x.premises],
                    }
                )
            else:
                out.append(
                    {
                        "kind": "assume",
                        "node": x.node,
                        "i": x.i,
                        "t": x.t,
                        "val": x.val.render(),
                        "tag": x.tag,
                    }
                )
        return out

    @classmethod
    def from_json(cls, obj: list[dict]) -> "Certificate":
        lines: list[CertLine] = []
        for d in obj:
            if d["kind"] == "conclude":
                lines.append(
                    Conclusion(
                        d["node"],
                        d["i"],
                        d["t"],
                        Val.parse(d["val"]),
                        d["rule"],
                        tuple((p[0], p[1], p[2]) for p in d["from"]),
                    )
                )
            else:
                lines.append(Assumption(d["node"], d["i"], d["t"], Val.parse(d["val"]), d["tag"]))
        return cls(lines)


# --- Nodes and sequences -------------------------------------------------


@dataclass
class SheafNode:
    """A sheaf with a cohomology table; either computable (table produced
    by a bott-type calculator) or symbolic (I_Z, O_Z, Ker phi_j, ...)."""

    id: str
    dim: int  # cohomological range is [0, dim]
    table_fn: Callable[[int, int], Val] | None = None  # (i, t) -> Val
    support_dim: int | None = None  # degrees above this are implicitly zero
    table: dict[tuple[int, int], Val] = field(default_factory=dict)

    @property
    def computable(self) -> bool:
        return self.table_fn is not None

    def implicit_zero(self, i: int) -> bool:
        if i < 0 or i > self.dim:
            return True
        return self.support_dim is not None and i > self.support_dim


@dataclass(frozen=True)
class Slot:
    """One position of a short exact sequence: a node, consulted at twist
    t + shift, with a multiplicity.  A string multiplicity is a symbolic
    positive rank; it blocks exact-dimension transfer but keeps zero and
    nonzero transfer valid."""

    node: str
    shift: int = 0
    mult: int | str = 1


@dataclass(frozen=True)
class ShortExactSequence:
    name: str
    a: Slot
    b: Slot
    c: Slot

    @property
    def slots(self) -> tuple[Slot, Slot, Slot]:
        return (self.a, self.b, self.c)


RULES = ("R1", "R2", "R3", "R4", "R5", "R6")


class Chase:
    """One deterministic chase instance over a requested twist window."""

    def __init__(self, window: tuple[int, int]):
        self.lo, self.hi = window
        if self.lo > self.hi:
            raise ValueError("empty twist window")
        self.nodes: dict[str, SheafNode] = {}
        self.sequences: list[ShortExactSequence] = []
        self.certificate = Certificate()
        self._pending_assumptions: list[tuple] = []
        self._materialized = False
        self.ilo = self.lo
        self.ihi = self.hi

    # -- construction

    def add_node(
        self,
        node_id: str,
        dim: int,
        table_fn: Callable[[int, int], Val] | None = None,
        support_dim: int | None = None,
    ) -> SheafNode:
        if node_id in self.nodes:
            raise ValueError(f"duplicate node id {node_id!r}")
        node = SheafNode(node_id, dim, table_fn, support_dim)
        self.nodes[node_id] = node
        return node

    def add_grassmann_node(self, node_id: str, expr: BundleExpr, space: GrassmannSpace) -> SheafNode:
        cache: dict[int, dict[tuple[int, int], Val]] = {}

        def fn(i: int, t: int, expr=expr, space=space, cache=cache) -> Val:
            if t not in cache:
                cache[t] = bwb_table(expr, space, [t])
            return cache[t].get((i, t), Val.zero())

        return self.add_node(node_id, space.dim, fn)

    def add_sequence(self, name: str, a: Slot | str, b: Slot | str, c: Slot | str) -> None:
        a, b, c = (Slot(x) if isinstance(x, str) else x for x in (a, b, c))
        for slot in (a, b, c):
            if slot.node not in self.nodes:
                raise ValueError(f"unknown node {slot.node!r} in sequence {name!r}")
        self.sequences.append(ShortExactSequence(name, a, b, c))

    def assume(self, node_id: str, i: int, t: int, val: Val, tag: str) -> None:
        self._pending_assumptions.append((node_id, i, t, val, tag))

    def assume_all_twists(
        self,
        node_id: str,
        degrees: Iterable[int],
        val: Val,
        tag: str,
        exclude: set[tuple[int, int]] | None = None,
    ) -> None:
        """Quantified seed: the value at every internal-window twist for the
        given degrees, minus the excluded (i, t) pairs."""
        self._pending_assumptions.append((node_id, tuple(degrees), "all", val, tag, exclude or set()))

    # -- entry access

    def get(self, node_id: str, i: int, t: int) -> Val | None:
        node = self.nodes[node_id]
        if node.implicit_zero(i):
            return Val.zero()
        return node.table.get((i, t))

    def _set(
        self,
        node_id: str,
        i: int,
        t: int,
        val: Val,
        rule: str,
        premises: tuple[tuple[str, int, int], ...],
        tag: str | None = None,
    ) -> bool:
        node = self.nodes[node_id]
        if node.implicit_zero(i):
            if val.is_nonzero:
                raise Inconsistency(
                    f"{node_id} H^{i}(t={t}) forced nonzero outside its degree range (rule {rule})"
                )
            return False
        old = node.table.get((i, t))
        if old is not None:
            if old.conflicts(val):
                raise Inconsistency(
                    f"{node_id} H^{i}(t={t}): established {old} vs derived {val} by {rule}"
                )
            if not val.refines(old):
                return False
        node.table[(i, t)] = val
        if tag is not None:
            self.certificate.lines.append(Assumption(node_id, i, t, val, tag))
        else:
            self.certificate.lines.append(Conclusion(node_id, i, t, val, rule, premises))
        return True

    # -- slot semantics

    def _slot_get(self, slot: Slot, i: int, t: int) -> Val | None:
        v = self.get(slot.node, i, t + slot.shift)
        if v is None:
            return None
        if v.is_zero:
            return Val.zero()
        if isinstance(slot.mult, str):
            return Val.nonzero()
        if v.exact_dim is not None:
            return Val.of_dim(v.exact_dim * slot.mult)
        return Val.nonzero()

    def _slot_ref(self, slot: Slot, i: int, t: int) -> tuple[str, int, int]:
        return (slot.node, i, t + slot.shift)

    def _slot_set(self, slot: Slot, i: int, t: int, val: Val, rule: str, premises) -> bool:
        if val.is_zero:
            node_val = Val.zero()
        elif isinstance(slot.mult, str) or val.exact_dim is None:
            node_val = Val.nonzero()
        else:
            d, m = val.exact_dim, slot.mult
            if d % m != 0:
                raise Inconsistency(
                    f"{slot.node} H^{i}: dimension {d} not a multiple of slot multiplicity {m}"
                )
            node_val = Val.of_dim(d // m)
        return self._set(slot.node, i, t + slot.shift, node_val, rule, tuple(premises))

    # -- the fixpoint

    def _materialize(self) -> None:
        if self._materialized:
            return
        pad = sum(
            max(abs(s.shift) for s in seq.slots) for seq in self.sequences
        )
        self.ilo, self.ihi = self.lo - pad, self.hi + pad
        for node in self.nodes.values():
            if node.computable:
                for t in range(self.ilo, self.ihi + 1):
                    for i in range(node.dim + 1):
                        v = node.table_fn(i, t)
                        if not isinstance(v, Val):
                            raise TypeError(f"table_fn of {node.id} returned {v!r}")
                        self._set(node.id, i, t, v, "seed", ())
        self._materialized = True

    def _apply_assumptions(self) -> None:
        pending, self._pending_assumptions = self._pending_assumptions, []
        for spec in pending:
            if len(spec) == 5:
                node_id, i, t, val, tag = spec
                if self.ilo <= t <= self.ihi:
                    self._set(node_id, i, t, val, "assume", (), tag=tag)
            else:
                node_id, degrees, _, val, tag, exclude = spec
                for i in degrees:
                    for t in range(self.ilo, self.ihi + 1):
                        if (i, t) in exclude:
                            continue
                        self._set(node_id, i, t, val, "assume", (), tag=tag)

    def run(self) -> Certificate:
        """Materialize computable tables, apply seeds, chase to fixpoint.
        Idempotent; may be called again after further seeding."""
        self._materialize()
        self._apply_assumptions()
        max_dim = max((n.dim for n in self.nodes.values()), default=0)
        changed = True
        while changed:
            changed = False
            for t in range(self.ilo, self.ihi + 1):
                for seq in self.sequences:
                    for rule in RULES:
                        for i in range(-1, max_dim + 2):
                            if self._apply_rule(rule, seq, i, t):
                                changed = True
        return self.certificate

    def _zero(self, slot: Slot, i: int, t: int) -> bool:
        v = self._slot_get(slot, i, t)
        return v is not None and v.is_zero

    def _apply_rule(self, rule: str, seq: ShortExactSequence, i: int, t: int) -> bool:
        a, b, c = seq.a, seq.b, seq.c
        if rule == "R1":
            if self._zero(a, i, t) and self._zero(c, i, t):
                prem = (self._slot_ref(a, i, t), self._slot_ref(c, i, t))
                return self._slot_set(b, i, t, Val.zero(), "R1", prem)
            return False
        if rule == "R2":
            if self._zero(c, i - 1, t) and self._zero(b, i, t):
                prem = (self._slot_ref(c, i - 1, t), self._slot_ref(b, i, t))
                return self._slot_set(a, i, t, Val.zero(), "R2", prem)
            return False
        if rule == "R3":
            if self._zero(b, i, t) and self._zero(a, i + 1, t):
                prem = (self._slot_ref(b, i, t), self._slot_ref(a, i + 1, t))
                return self._slot_set(c, i, t, Val.zero(), "R3", prem)
            return False
        if rule == "R4":
            if self._zero(a, i, t) and self._zero(a, i + 1, t):
                zeros = (self._slot_ref(a, i, t), self._slot_ref(a, i + 1, t))
                return self._transfer(b, c, i, t, "R4", zeros)
            return False
        if rule == "R5":
            if self._zero(b, i - 1, t) and self._zero(b, i, t):
                zeros = (self._slot_ref(b, i - 1, t), self._slot_ref(b, i, t))
                return self._transfer_pair(c, i - 1, a, i, t, "R5", zeros)
            return False
        if rule == "R6":
            if not (self._zero(c, i - 1, t) and self._zero(a, i + 1, t)):
                return False
            zeros = (self._slot_ref(c, i - 1, t), self._slot_ref(a, i + 1, t))
            vals = [self._slot_get(s, i, t) for s in (a, b, c)]
            dims = [v.exact_dim if v is not None else None for v in vals]
            known = [d for d in dims if d is not None]
            if len(known) < 2:
                return False
            slots = (a, b, c)
            if len(known) == 3:
                if dims[0] - dims[1] + dims[2] != 0:
                    raise Inconsistency(
                        f"sequence {seq.name} at i={i}, t={t}: dimensions "
                        f"{dims[0]} -> {dims[1]} -> {dims[2]} violate exactness"
                    )
                return False
            missing = dims.index(None)
            if missing == 0:
                d = dims[1] - dims[2]
            elif missing == 1:
                d = dims[0] + dims[2]
            else:
                d = dims[1] - dims[0]
            if d < 0:
                raise Inconsistency(
                    f"sequence {seq.name} at i={i}, t={t}: negative dimension {d} forced"
                )
            prem = zeros + tuple(
                self._slot_ref(slots[j], i, t) for j in range(3) if j != missing
            )
            return self._slot_set(slots[missing], i, t, Val.of_dim(d), "R6", prem)
        raise ValueError(f"unknown rule {rule!r}")

    def _transfer(self, x: Slot, y: Slot, i: int, t: int, rule: str, zeros) -> bool:
        return self._transfer_pair(x, i, y, i, t, rule, zeros)

    def _transfer_pair(self, x: Slot, ix: int, y: Slot, iy: int, t: int, rule: str, zeros) -> bool:
        vx = self._slot_get(x, ix, t)
        vy = self._slot_get(y, iy, t)
        if vx is not None and vy is not None and vx.conflicts(vy):
            raise Inconsistency(
                f"{rule}: {x.node} H^{ix} and {y.node} H^{iy} at t={t} must "
                f"agree but are {vx} and {vy}"
            )
        changed = False
        if vx is not None and (vy is None or vx.refines(vy)):
            prem = zeros + (self._slot_ref(x, ix, t),)
            changed |= self._slot_set(y, iy, t, vx, rule, prem)
        vy = self._slot_get(y, iy, t)
        if vy is not None and (vx is None or vy.refines(vx)):
            prem = zeros + (self._slot_ref(y, iy, t),)
            changed |= self._slot_set(x, ix, t, vy, rule, prem)
        return changed

    # -- regularity

    def is_m_regular(self, node_id: str, m: int) -> bool:
        """Castelnuovo-Mumford test: H^i(E(m-i)) = 0 for all 0 < i <= dim."""
        node = self.nodes[node_id]
        blocking = []
        for i in range(1, node.dim + 1):
            v = self.get(node_id, i, m - i)
            if v is None:
                blocking.append((i, m - i))
            elif v.is_nonzero:
                return False
        if blocking:
            raise UndeterminedEntries(blocking)
        return True

    def seed_regularity(self, node_id: str, m: int) -> None:
        """After a true is_m_regular verdict, license zeros at all
        (i, t >= m - i); re-run afterwards to propagate."""
        if not self.is_m_regular(node_id, m):
            raise ValueError(f"{node_id} is not {m}-regular; nothing to seed")
        node = self.nodes[node_id]
        for i in range(1, node.dim + 1):
            prem = ((node_id, i, m - i),)
            for t in range(max(m - i, self.ilo), self.ihi + 1):
                self._set(node_id, i, t, Val.zero(), "regularity", prem)


# --- Certificate soundness checking --------------------------------------


def _resolve(state, nodes_meta, ref):
    node, i, t = ref
    if ref in state:
        return state[ref]
    dim, support = nodes_meta[node]
    if i < 0 or i > dim or (support is not None and i > support):
        return Val.zero()
    raise CertificateError(f"premise {node}:H^{i}(t={t}) not established before use")


def _match_rule(line: Conclusion, state, nodes_meta, sequences) -> bool:
    """Pattern check: the conclusion must be a valid instance of its rule
    against some registered sequence, with all premises already established
    and carrying the values the rule requires."""
    vals = [_resolve(state, nodes_meta, p) for p in line.premises]

    def slot_val(slot: Slot, ref) -> Val:
        v = _resolve(state, nodes_meta, ref)
        if v.is_zero:
            return Val.zero()
        if isinstance(slot.mult, str):
            return Val.nonzero()
        if v.exact_dim is not None:
            return Val.of_dim(v.exact_dim * slot.mult)
        return Val.nonzero()

    for seq in sequences:
        for conc_slot, prem_slots in _rule_shapes(line.rule, seq):
            if conc_slot.node != line.node:
                continue
            t = line.t - conc_slot.shift  # sequence-level twist
            ci = line.i  # degree of the conclusion at its slot
            expected = [
                (slot.node, ci + off, t + slot.shift) for slot, off in prem_slots
            ]
            if list(line.premises) != expected:
                continue
            if not _rule_value_ok(line, seq, conc_slot, prem_slots, vals, t):
                continue
            return True
    return False


def _rule_shapes(rule: str, seq: ShortExactSequence):
    """Yield (conclusion slot, [(premise slot, degree offset), ...]) shapes,
    with offsets relative to the conclusion's degree."""
    a, b, c = seq.a, seq.b, seq.c
    if rule == "R1":
        yield b, [(a, 0), (c, 0)]
    elif rule == "R2":
        yield a, [(c, -1), (b, 0)]
    elif rule == "R3":
        yield c, [(b, 0), (a, 1)]
    elif rule == "R4":
        yield b, [(a, 0), (a, 1), (c, 0)]
        yield c, [(a, 0), (a, 1), (b, 0)]
    elif rule == "R5":
        # conclusion at C in degree i-1 or at A in degree i
        yield c, [(b, 0), (b, 1), (a, 1)]
        yield a, [(b, -1), (b, 0), (c, -1)]
    elif rule == "R6":
        yield a, [(c, -1), (a, 1), (b, 0), (c, 0)]
        yield b, [(c, -1), (a, 1), (a, 0), (c, 0)]
        yield c, [(c, -1), (a, 1), (a, 0), (b, 0)]


def _rule_value_ok(line, seq, conc_slot, prem_slots, vals, t) -> bool:
    def as_slot_val(idx):
        slot, off = prem_slots[idx]
        v = vals[idx]
        if v.is_zero:
            return Val.zero()
        if isinstance(slot.mult, str):
            return Val.nonzero()
        if v.exact_dim is not None:
            return Val.of_dim(v.exact_dim * slot.mult)
        return Val.nonzero()

    def node_val_from_slot(slot: Slot, v: Val) -> Val:
        if v.is_zero:
            return Val.zero()
        if isinstance(slot.mult, str) or v.exact_dim is None:
            return Val.nonzero()
        if v.exact_dim % slot.mult != 0:
            return Val.nonzero()
        return Val.of_dim(v.exact_dim // slot.mult)

    rule = line.rule
    if rule in ("R1", "R2", "R3"):
        return all(v.is_zero for v in vals) and line.val.is_zero
    if rule in ("R4", "R5"):
        if not all(vals[j].is_zero for j in range(2)):
            return False
        src = as_slot_val(2)
        expected = node_val_from_slot(conc_slot, src)
        return line.val == expected or (expected.kind == "Nonzero" and line.val.is_nonzero)
    if rule == "R6":
        if not (vals[0].is_zero and vals[1].is_zero):
            return False
        d2, d3 = as_slot_val(2).exact_dim, as_slot_val(3).exact_dim
        if d2 is None or d3 is None:
            return False
        # alternating sum: dim A - dim B + dim C = 0 at slot level
        if conc_slot is seq.a:
            d = d2 - d3  # known premises are (B, C)
        elif conc_slot is seq.b:
            d = d2 + d3  # known premises are (A, C)
        else:
            d = d3 - d2  # known premises are (A, B)
        if d < 0:
            return False
        return line.val == node_val_from_slot(conc_slot, Val.of_dim(d))
    return False


def verify_certificate(
    cert: Certificate,
    nodes_meta: dict[str, tuple[int, int | None]],
    sequences: Sequence[ShortExactSequence],
) -> bool:
    """Replay a certificate in order; every conclusion must be a valid
    instance of its named rule with previously established premises.
    Raises CertificateError on the first bad line."""
    state: dict[tuple[str, int, int], Val] = {}
    for line in cert.lines:
        key = (line.node, line.i, line.t)
        if isinstance(line, Assumption):
            state[key] = line.val
            continue
        if line.rule == "seed":
            if line.premises:
                raise CertificateError(f"seed with premises: {line.render()}")
        elif line.rule == "regularity":
            if not line.val.is_zero:
                raise CertificateError(f"regularity must conclude Zero: {line.render()}")
            for p in line.premises:
                if not _resolve(state, nodes_meta, p).is_zero:
                    raise CertificateError(f"regularity premise nonzero: {line.render()}")
        elif line.rule == "serre":
            if len(line.premises) != 1:
                raise CertificateError(f"serre needs one premise: {line.render()}")
            if _resolve(state, nodes_meta, line.premises[0]) != line.val:
                raise CertificateError(f"serre value mismatch: {line.render()}")
        elif line.rule in RULES:
            if not _match_rule(line, state, nodes_meta, sequences):
                raise CertificateError(f"no sequence justifies: {line.render()}")
        else:
            raise CertificateError(f"unknown rule {line.rule!r}")
        old = state.get(key)
        if old is not None and old.conflicts(line.val):
            raise CertificateError(f"conflicting re-derivation: {line.render()}")
        state[key] = line.val
    return True


def chase_meta(chase: Chase) -> dict[str, tuple[int, int | None]]:
    return {n.id: (n.dim, n.support_dim) for n in chase.nodes.values()}


# --- Intermediate cohomology and splitting verdicts ----------------------


@dataclass
class CohomologyReport:
    node: str
    classification: str  # 'aCM' | 'aB-candidate' | 'neither'
    nonzero: list[tuple[int, int, Val]]  # (i, t, value)
    undetermined: list[tuple[int, int]]

    @property
    def is_acm(self) -> bool:
        return self.classification == "aCM"


def intermediate_cohomology_report(
    chase: Chase,
    node_id: str,
    degrees: Iterable[int],
    window: tuple[int, int] | None = None,
    strict: bool = True,
) -> CohomologyReport:
    """Classify a node over the given intermediate degrees: aCM (all
    zero), aB-candidate (nonzero entries confined to one degree, all with
    known finite dimensions), or neither.  Buchsbaum-ness itself is not
    decidable from dimensions, so 'aB-candidate' means consistent with aB."""
    lo, hi = window if window is not None else (chase.lo, chase.hi)
    nonzero: list[tuple[int, int, Val]] = []
    undetermined: list[tuple[int, int]] = []
    for i in degrees:
        for t in range(lo, hi + 1):
            v = chase.get(node_id, i, t)
            if v is None:
                undetermined.append((i, t))
            elif v.is_nonzero:
                nonzero.append((i, t, v))
    if strict and undetermined:
        raise UndeterminedEntries(undetermined)
    rows = {i for i, _, _ in nonzero}
    if not nonzero:
        cls = "aCM"
    elif len(rows) == 1:
        cls = "aB-candidate"
    else:
        cls = "neither"
    return CohomologyReport(node_id, cls, nonzero, undetermined)


def horrocks_verdict(
    report: CohomologyReport,
    space,
    spinor_pairing_zero: bool = False,
    rank: int | None = None,
    aux_reports: Sequence[CohomologyReport] = (),
) -> str:
    """Splitting verdict from intermediate cohomology.  On a quadric, aCM
    gives split-plus-spinor; the extra H^{n-1}(E (x) S) vanishing (supplied
    as an assumption flag) or a rank below every spinor rank upgrades it to
    split.  On a Grassmannian, aCM of the bundle and of its companions
    tensored by exterior powers of dual(Q) gives split."""
    from .quadric import spinor_facts

    if isinstance(space, QuadricSpace):
        if not report.is_acm:
            return "NotDecided"
        if spinor_pairing_zero:
            return "Split"
        if rank is not None and rank < min(spinor_facts(space.n).ranks):
            return "Split"
        return "SplitOrSpinor"
    if report.is_acm and all(r.is_acm for r in aux_reports) and aux_reports:
        return "Split"
    return "NotDecided"


# --- Distribution bookkeeping and complex builders ------------------------


@dataclass(frozen=True)
class DistributionSpec:
    """A holomorphic distribution: ambient space, codimension, and a split
    (plus optional spinor) description of the tangent sheaf."""

    space: GrassmannSpace | QuadricSpace
    codim: int
    split_degrees: tuple[int, ...] = ()
    spinor_twist: int | None = None

    def __post_init__(self) -> None:
        if self.codim < 1 or self.codim > self.space.dim - 1:
            raise ValueError(f"codimension {self.codim} out of range on {self.space}")

    @property
    def rank(self) -> int:
        """g: the rank (= dimension) of the distribution."""
        return self.space.dim - self.codim

    @property
    def c1_tangent_sheaf(self) -> int:
        from .quadric import spinor_c1

        c1 = sum(self.split_degrees)
        if self.spinor_twist is not None:
            if not isinstance(self.space, QuadricSpace):
                raise ValueError("spinor summands only exist on quadrics")
            c1 += spinor_c1(self.space.n, self.spinor_twist)
        return c1

    @property
    def degree(self) -> int:
        """d with det(T_F) = O(dim(F) - deg(F))."""
        return self.rank - self.c1_tangent_sheaf

    @property
    def normal_twist(self) -> int:
        """r with N_F = I_Z(r) in the codimension-one case."""
        if self.codim != 1:
            raise ValueError("normal twist r is a codimension-one invariant")
        c1_tx = self.space.index if isinstance(self.space, GrassmannSpace) else self.space.n
        return c1_tx - self.c1_tangent_sheaf


def koszul_complex(
    space: GrassmannSpace, extra_wedges: Sequence[int] = ()
) -> tuple[list[tuple[str, BundleExpr]], str]:
    """The resolution of I_Z for Z = Gr(k-1,n-1), the zero locus of a
    generic section of the rank n-k globally generated quotient bundle,
    optionally tensored by a product of exterior powers of dual(Q):
    terms wedge^p(dual Q) for p = n-k down to 1, then I_Z."""
    if space.k < 1:
        raise ValueError("the sub-Grassmannian degenerates for k = 0")
    terms = []
    for p in range(space.rank_q, 0, -1):
        expr = wedge_q_dual_expr([p] + list(extra_wedges), space)
        terms.append((f"Wedge{p}Qdual", expr))
    return terms, "I_Z"


def eagon_northcott_terms(spec: DistributionSpec) -> tuple[list[tuple[str, object]], str]:
    """Bundle terms of the Eagon-Northcott resolution of I_Z for the map
    Omega^1 -> dual(T_F) of a split distribution: Omega^{g+j} (x) S_j(T_F)
    (x) det(T_F) for j = codim down to 0, then I_Z.  On a Grassmannian the
    terms are Schur expressions; on a quadric they are sums of twisted
    holomorphic forms."""
    if spec.spinor_twist is not None:
        raise ValueError("Eagon-Northcott terms need a fully split tangent sheaf")
    if len(spec.split_degrees) != spec.rank:
        raise ValueError(
            f"expected {spec.rank} split degrees, got {len(spec.split_degrees)}"
        )
    g, c = spec.rank, spec.codim
    det = spec.c1_tangent_sheaf
    terms: list[tuple[str, object]] = []
    for j in range(c, -1, -1):
        twists = sym_power_split(spec.split_degrees, j)
        if isinstance(spec.space, GrassmannSpace):
            expr = BundleExpr()
            base = omega_expr(g + j, spec.space)
            for s, mult in sorted(twists.items()):
                expr = expr + base.twisted(s + det).scaled(mult)
            terms.append((f"EN{j}", expr))
        else:
            bundle = Counter()
            for s, mult in sorted(twists.items()):
                bundle[(g + j, s + det)] += mult
            terms.append((f"EN{j}", bundle))
    return terms, "I_Z"


def quadric_table_fn(atoms: Counter, n: int) -> Callable[[int, int], Val]:
    """Table function for a sum of twisted holomorphic forms on Q_n; atoms
    map (form degree q, twist shift) to multiplicities."""
    from .quadric import omega_value
    from .table import add_vals

    def fn(i: int, t: int) -> Val:
        total = Val.zero()
        for (q, shift), mult in sorted(atoms.items()):
            v = omega_value(i, q, t + shift, n)
            for _ in range(mult):
                total = add_vals(total, v)
        return total

    return fn


def split_into_ses(term_ids: Sequence[str], final_id: str) -> tuple[list[tuple[str, str, str]], list[str]]:
    """Kernel-split an exact complex 0 -> B_{N-1} -> ... -> B_0 -> final -> 0
    into short exact sequences, naming the fresh kernels Ker_phi_j as in the
    printed chases; returns (sequences as (a, b, c) triples, kernel ids)."""
    n_terms = len(term_ids)
    if n_terms < 2:
        raise ValueError("need at least two bundle terms to split")
    seqs: list[tuple[str, str, str]] = []
    kers: list[str] = []
    left = term_ids[0]
    for idx in range(1, n_terms):
        mid = term_ids[idx]
        if idx == n_terms - 1:
            right = final_id
        else:
            right = f"Ker_phi_{n_terms - 2 - idx}"
            kers.append(right)
        seqs.append((left, mid, right))
        left = right
    return seqs, kers
