"""Emission of the self-contained classpool image.

Layout: one header comment line, the kernel wrapped in an IIFE that
publishes only `Class`, one `Class.define(...)` per entry in
initialization order, and a final `Class.initAll();`.  Registrations
carry each declaration's OWN members; the kernel recomputes the mixin
overlay at runtime, so image size stays linear in the source bodies.
Method bodies are byte-exact slices of the input files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .pool import ClassPool, EffectiveMembers, effective_members
from .syntax import ClassDecl, ProtocolDecl, SlotSpec

HEADER_COMMENT = "/* jscc image format 1 */"


def default_kernel_text() -> str:
    return (
        resources.files("jscc").joinpath("runtime/kernel.js").read_text(encoding="utf-8")
    )


@dataclass
class ImageOptions:
    kernel_text: str = field(default_factory=default_kernel_text)
    header_comment: str = HEADER_COMMENT
    strict: bool = True

    def __post_init__(self):
        if not self.kernel_text:
            raise ValueError("kernel_text must not be empty")


@dataclass
class ClasspoolImage:
    text: str
    # (canonical name, "class"|"protocol", start byte, end byte) per entry
    manifest: list[tuple[str, str, int, int]]

    def manifest_lines(self) -> str:
        records = [
            json.dumps(
                {"name": name, "kind": kind, "startByte": start, "endByte": end},
                separators=(", ", ": "),
            )
            for name, kind, start, end in self.manifest
        ]
        return "".join(record + "\n" for record in records)


def _js_string(text: str) -> str:
    return json.dumps(text)


def _slot_record(spec: SlotSpec) -> str:
    parts = [
        f"name: {_js_string(spec.name)}",
        f"getter: {_js_string(spec.getter_name)}",
        f"setter: {_js_string(spec.setter_name)}",
        f"hasDefault: {'true' if spec.default_text is not None else 'false'}",
    ]
    if spec.default_text is not None:
        parts.append("default: function () { return " + spec.default_text + "; }")
    return "{ " + ", ".join(parts) + " }"


def _method_map(pairs: list[tuple[str, str]]) -> str:
    if not pairs:
        return "{}"
    body = ",\n".join(f"    {name}: {text}" for name, text in pairs)
    return "{\n" + body + "\n  }"


def emit_registration(decl: ClassDecl | ProtocolDecl, eff: EffectiveMembers | None) -> str:
    """One Class.define call.  Classes list their own declared members;
    protocols carry only kind, supers and the requirement map."""
    lines = [f"Class.define({_js_string(decl.canonical)}, {{"]
    lines.append(f'  kind: "{decl.kind}",')
    supers = ", ".join(_js_string(name) for name, _ in decl.supers)
    if isinstance(decl, ProtocolDecl):
        lines.append(f"  supers: [{supers}],")
        if decl.requirements:
            flags = ", ".join(
                f"{name}: {'true' if required else 'false'}"
                for name, required, _ in decl.requirements
            )
            lines.append("  required: { " + flags + " }")
        else:
            lines.append("  required: {}")
        lines.append("});")
        return "\n".join(lines) + "\n"

    lines.append(f"  supers: [{supers}],")
    if decl.slots:
        records = ",\n".join("    " + _slot_record(slot) for slot in decl.slots)
        lines.append("  slots: [\n" + records + "\n  ],")
    else:
        lines.append("  slots: [],")
    lines.append(
        "  methods: "
        + _method_map([(m.name, m.body_text) for m in decl.methods])
        + ","
    )
    lines.append(
        "  statics: "
        + _method_map([(m.name, m.body_text) for m in decl.statics])
        + ","
    )
    if decl.ctor is not None:
        lines.append("  ctor: " + decl.ctor.body_text)
    else:
        lines.append("  ctor: null")
    lines.append("});")
    return "\n".join(lines) + "\n"


def emit_image(pool: ClassPool, order: list[str], options: ImageOptions) -> ClasspoolImage:
    strict = ' "use strict";' if options.strict else ""
    kernel = options.kernel_text
    if not kernel.endswith("\n"):
        kernel += "\n"
    prelude = (
        options.header_comment
        + "\n"
        + f"(function (global) {{{strict}\n"
        + kernel
        + 'global.Class = Class; })(typeof globalThis !== "undefined" ? globalThis : this);\n'
    )

    parts = [prelude]
    manifest: list[tuple[str, str, int, int]] = []
    offset = len(prelude.encode("utf-8"))
    for name in order:
        decl = pool.decl(name)
        eff = effective_members(pool, name) if isinstance(decl, ClassDecl) else None
        registration = emit_registration(decl, eff)
        size = len(registration.encode("utf-8"))
        manifest.append((name, decl.kind, offset, offset + size))
        parts.append(registration)
        offset += size
    parts.append("Class.initAll();\n")
    return ClasspoolImage("".join(parts), manifest)
