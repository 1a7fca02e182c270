"""World model: all parsed units resolved into a validated class pool.

Mixin semantics: a class's effective members are its supers' effective
members copied left to right (a later super replaces an earlier one's
member of the same name), then its own members on top.  Replacement
between two distinct origin classes is warned about; the same member
arriving twice through a diamond is deduplicated silently.  Constructors
are never copied.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from pathlib import PurePath

from .diagnostics import (
    ACCESSOR_COLLISION,
    DUPLICATE_NAME,
    FILE_STEM_MISMATCH,
    MEMBER_REPLACED,
    PACKAGE_DIR_MISMATCH,
    PROTOCOL_SUPER_CLASS,
    PROTOCOL_UNSATISFIED,
    RESERVED_STATIC,
    SUPER_CYCLE,
    UNRESOLVED_SUPER,
    Diagnostic,
    Span,
    error,
    warning,
)
from .syntax import (
    RESERVED_META_NAMES,
    ClassDecl,
    ProtocolDecl,
    SlotSpec,
    SourceUnit,
    derive_accessor_names,
)

__all__ = [
    "ClassPool",
    "EffectiveMembers",
    "MemberOrigin",
    "build_pool",
    "resolve_supers",
    "effective_members",
    "check_protocols",
    "initialization_order",
    "derive_accessor_names",
]


@dataclass(frozen=True)
class MemberOrigin:
    member_name: str
    origin_class: str  # canonical name of the declaring class
    kind: str          # "method" | "slot" | "accessor" | "stub"


@dataclass
class SuperEdge:
    name: str          # canonical name of the super
    span: Span         # where the reference appears
    kind: str          # "class" | "protocol"


@dataclass
class EffectiveMembers:
    methods: dict[str, tuple[str, MemberOrigin]] = field(default_factory=dict)
    slots: dict[str, tuple[SlotSpec, MemberOrigin]] = field(default_factory=dict)
    statics: dict[str, str] = field(default_factory=dict)
    stubs: list[str] = field(default_factory=list)
    protocols: list[str] = field(default_factory=list)

    def accessor_names(self) -> dict[str, str]:
        """Maps every derived getter/setter name to its slot."""
        names: dict[str, str] = {}
        for slot_name, (spec, _) in self.slots.items():
            names[spec.getter_name] = slot_name
            names[spec.setter_name] = slot_name
        return names


@dataclass
class ClassPool:
    entries: dict[str, SourceUnit] = field(default_factory=dict)
    super_edges: dict[str, list[SuperEdge]] = field(default_factory=dict)
    resolved: bool = False
    _eff_cache: dict[str, EffectiveMembers] = field(default_factory=dict)
    _eff_diags: dict[str, list[Diagnostic]] = field(default_factory=dict)

    def decl(self, name: str) -> ClassDecl | ProtocolDecl:
        return self.entries[name].decl

    def is_protocol(self, name: str) -> bool:
        return isinstance(self.decl(name), ProtocolDecl)


def build_pool(units: list[SourceUnit]) -> tuple[ClassPool, list[Diagnostic]]:
    """Key every unit by canonical name; duplicates keep the first unit."""
    pool = ClassPool()
    diags: list[Diagnostic] = []
    for unit in units:
        decl = unit.decl
        canonical = decl.canonical
        if canonical in pool.entries:
            diags.append(
                error(
                    DUPLICATE_NAME,
                    f"duplicate declaration of {canonical!r}",
                    decl.span,
                    notes=[("first declared here", pool.entries[canonical].decl.span)],
                )
            )
            continue
        pool.entries[canonical] = unit
        stem = PurePath(unit.file_path).stem
        if stem != decl.name:
            diags.append(
                error(
                    FILE_STEM_MISMATCH,
                    f"file {stem!r} declares {decl.kind} {decl.name!r};"
                    " the file must be named after its declaration",
                    decl.span,
                )
            )
        if unit.rel_dir is not None and unit.rel_dir != decl.package.segments:
            expected = "/".join(decl.package.segments)
            actual = "/".join(unit.rel_dir) or "."
            diags.append(
                error(
                    PACKAGE_DIR_MISMATCH,
                    f"package {decl.package} requires directory {expected!r}"
                    f" but the file sits under {actual!r}",
                    decl.span,
                )
            )
    return pool, diags


def resolve_supers(pool: ClassPool) -> list[Diagnostic]:
    """Resolve every super reference and reject bad edges and cycles.

    Super names must be canonical (package-qualified)."""
    diags: list[Diagnostic] = []
    for canonical, unit in pool.entries.items():
        decl = unit.decl
        edges: list[SuperEdge] = []
        for super_name, span in decl.supers:
            target = pool.entries.get(super_name)
            if target is None:
                diags.append(
                    error(
                        UNRESOLVED_SUPER,
                        f"unknown super {super_name!r}; supers must be canonical"
                        " package-qualified names",
                        span,
                    )
                )
                continue
            kind = target.decl.kind
            if decl.kind == "protocol" and kind == "class":
                diags.append(
                    error(
                        PROTOCOL_SUPER_CLASS,
                        f"protocol {canonical!r} cannot extend class {super_name!r};"
                        " protocols extend only protocols",
                        span,
                    )
                )
                continue
            edges.append(SuperEdge(super_name, span, kind))
        pool.super_edges[canonical] = edges

    diags.extend(_find_cycles(pool))
    pool.resolved = not any(d.is_error for d in diags)
    return diags


def _find_cycles(pool: ClassPool) -> list[Diagnostic]:
    # Iterative DFS; every entry on the active stack that gets revisited
    # closes a cycle.  Each strongly-entangled group is reported once.
    diags: list[Diagnostic] = []
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {name: WHITE for name in pool.entries}
    in_cycle: set[str] = set()

    def edges_of(name: str):
        return [e.name for e in pool.super_edges.get(name, ())]

    for root in sorted(pool.entries):
        if color[root] != WHITE:
            continue
        stack: list[tuple[str, list[str]]] = [(root, edges_of(root))]
        path = [root]
        color[root] = GRAY
        while stack:
            name, pending = stack[-1]
            if not pending:
                stack.pop()
                path.pop()
                color[name] = BLACK
                continue
            nxt = pending.pop(0)
            if color.get(nxt, BLACK) == GRAY:
                cycle = path[path.index(nxt):] + [nxt]
                if not in_cycle.intersection(cycle):
                    in_cycle.update(cycle)
                    edge_span = next(
                        e.span for e in pool.super_edges[name] if e.name == nxt
                    )
                    diags.append(
                        error(
                            SUPER_CYCLE,
                            "cyclic inheritance: " + " -> ".join(cycle),
                            edge_span,
                        )
                    )
            elif color.get(nxt, BLACK) == WHITE:
                color[nxt] = GRAY
                stack.append((nxt, edges_of(nxt)))
                path.append(nxt)
    return diags


def protocol_closure(pool: ClassPool, name: str, acc: list[str]) -> list[str]:
    """Append `name` and its transitive protocol supers to acc, deduplicated,
    in depth-first declaration order."""
    if name not in acc:
        acc.append(name)
        for edge in pool.super_edges.get(name, ()):
            protocol_closure(pool, edge.name, acc)
    return acc


def effective_members(pool: ClassPool, canonical: str) -> EffectiveMembers:
    """Post-mixin member set of a class.  Memoized; the diagnostics produced
    for each class are collected once and retrievable via member_diagnostics."""
    if canonical in pool._eff_cache:
        return pool._eff_cache[canonical]
    if not pool.resolved:
        raise ValueError("effective_members requires a resolved pool")
    decl = pool.decl(canonical)
    if not isinstance(decl, ClassDecl):
        raise ValueError(f"{canonical} is a protocol, not a class")

    eff = EffectiveMembers()
    diags: list[Diagnostic] = []

    def overlay_method(name: str, incoming: tuple[str, MemberOrigin], span: Span):
        _overlay(eff.methods, name, incoming, span, "method", diags)

    def overlay_slot(name: str, incoming: tuple[SlotSpec, MemberOrigin], span: Span):
        _overlay(eff.slots, name, incoming, span, "slot", diags)

    for edge in pool.super_edges[canonical]:
        if edge.kind == "protocol":
            protocol_closure(pool, edge.name, eff.protocols)
            continue
        sup = effective_members(pool, edge.name)
        for name, entry in sup.methods.items():
            overlay_method(name, entry, edge.span)
        for name, entry in sup.slots.items():
            overlay_slot(name, entry, edge.span)
        for proto in sup.protocols:
            if proto not in eff.protocols:
                eff.protocols.append(proto)

    for method in decl.methods:
        overlay_method(
            method.name,
            (method.body_text, MemberOrigin(method.name, canonical, "method")),
            method.span,
        )
    for slot in decl.slots:
        overlay_slot(
            slot.name,
            (slot, MemberOrigin(slot.name, canonical, "slot")),
            slot.span,
        )
    for static in decl.statics:
        eff.statics[static.name] = static.body_text
        if static.name in RESERVED_META_NAMES:
            diags.append(
                error(
                    RESERVED_STATIC,
                    f"static {static.name!r} collides with a built-in"
                    " meta-class member",
                    static.span,
                )
            )

    accessors: dict[str, str] = {}
    for slot_name, (spec, _origin) in eff.slots.items():
        for accessor in (spec.getter_name, spec.setter_name):
            if accessor in eff.methods:
                diags.append(
                    error(
                        ACCESSOR_COLLISION,
                        f"accessor {accessor!r} of slot {slot_name!r} collides"
                        f" with a method of {canonical!r}",
                        spec.span,
                    )
                )
            elif accessor in accessors:
                diags.append(
                    error(
                        ACCESSOR_COLLISION,
                        f"accessor {accessor!r} of slot {slot_name!r} collides"
                        f" with an accessor of slot {accessors[accessor]!r}",
                        spec.span,
                    )
                )
            else:
                accessors[accessor] = slot_name

    eff.stubs = _missing_optional(pool, eff)
    pool._eff_cache[canonical] = eff
    pool._eff_diags[canonical] = diags
    return eff


def _overlay(table: dict, name: str, incoming, span: Span, what: str, diags: list):
    if name not in table:
        table[name] = incoming
        return
    old_origin = table[name][1].origin_class
    new_origin = incoming[1].origin_class
    if old_origin == new_origin:
        return  # same declaration arriving again through a diamond
    diags.append(
        warning(
            MEMBER_REPLACED,
            f"{what} {name!r} from {new_origin!r} replaces the one from"
            f" {old_origin!r}",
            span,
        )
    )
    table[name] = incoming


def member_diagnostics(pool: ClassPool, canonical: str) -> list[Diagnostic]:
    effective_members(pool, canonical)
    return pool._eff_diags[canonical]


def _missing_optional(pool: ClassPool, eff: EffectiveMembers) -> list[str]:
    present = set(eff.methods) | set(eff.accessor_names())
    stubs: list[str] = []
    for proto in eff.protocols:
        for req_name, required, _span in pool.decl(proto).requirements:
            if not required and req_name not in present and req_name not in stubs:
                stubs.append(req_name)
    return stubs


def check_protocols(
    pool: ClassPool, canonical: str, eff: EffectiveMembers
) -> tuple[list[Diagnostic], list[str]]:
    """Verify required protocol methods; return diagnostics and the names
    needing empty-function stubs."""
    diags: list[Diagnostic] = []
    present = set(eff.methods) | set(eff.accessor_names())
    decl = pool.decl(canonical)
    for proto in eff.protocols:
        for req_name, required, _span in pool.decl(proto).requirements:
            if required and req_name not in present:
                diags.append(
                    error(
                        PROTOCOL_UNSATISFIED,
                        f"class {canonical!r} does not implement {req_name!r}"
                        f" required by protocol {proto!r}",
                        decl.span,
                    )
                )
    return diags, _missing_optional(pool, eff)


def initialization_order(pool: ClassPool) -> list[str]:
    """Topological order over the super graph, supers first; ties broken by
    canonical name so the order is reproducible."""
    dependents: dict[str, list[str]] = {name: [] for name in pool.entries}
    pending: dict[str, int] = {}
    for name in pool.entries:
        edges = pool.super_edges.get(name, ())
        pending[name] = len(edges)
        for edge in edges:
            dependents[edge.name].append(name)

    ready = [name for name, count in pending.items() if count == 0]
    heapq.heapify(ready)
    order: list[str] = []
    while ready:
        name = heapq.heappop(ready)
        order.append(name)
        for dep in dependents[name]:
            pending[dep] -= 1
            if pending[dep] == 0:
                heapq.heappush(ready, dep)
    if len(order) != len(pool.entries):
        raise ValueError("initialization_order requires an acyclic pool")
    return order
