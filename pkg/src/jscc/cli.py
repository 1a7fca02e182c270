"""The `jscc` command line: build | check | lint.

Exit codes: 0 success, 1 any error (or any warning under --deny-warnings),
2 usage or I/O errors.  Diagnostics go to stdout (human-readable or
line-delimited JSON); usage errors go to stderr.  No image file is written
when the build exits 1.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .codegen import ImageOptions, emit_image
from .diagnostics import (
    GLOBAL_WRITE,
    NO_INPUT,
    STRICT_WRITE,
    Diagnostic,
    DiagnosticError,
    Span,
    error,
    has_errors,
    sort_key,
    warning,
)
from .lint import STRICT_WRITE_NAMES, find_global_assignments
from .pool import (
    build_pool,
    check_protocols,
    effective_members,
    initialization_order,
    member_diagnostics,
    resolve_supers,
)
from .syntax import ClassDecl, SourceUnit, parse_unit


@dataclass
class BuildConfig:
    roots: list[Path]
    out_path: Path | None = None
    deny_warnings: bool = False
    json_diagnostics: bool = False
    manifest: bool = False
    kernel_override: Path | None = None


class UsageError(Exception):
    pass


def discover_sources(roots: list[Path]) -> list[tuple[Path, tuple[str, ...]]]:
    """All .jsc files under the roots, with the directory part of their
    root-relative path; lexicographically sorted per root."""
    files: list[tuple[Path, tuple[str, ...]]] = []
    for root in roots:
        if not root.is_dir():
            raise UsageError(f"root {root} is not a directory")
        found = sorted(
            (path for path in root.rglob("*.jsc") if path.is_file()),
            key=lambda path: path.relative_to(root).as_posix(),
        )
        for path in found:
            files.append((path, path.relative_to(root).parent.parts))
    return files


def parse_sources(
    files: list[tuple[Path, tuple[str, ...]]]
) -> tuple[list[SourceUnit], list[Diagnostic]]:
    units: list[SourceUnit] = []
    diags: list[Diagnostic] = []
    for path, rel_dir in files:
        try:
            # bytes + decode: keep CRLF intact so body slices stay verbatim
            text = path.read_bytes().decode("utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc}") from exc
        except UnicodeDecodeError as exc:
            raise UsageError(f"{path} is not valid UTF-8: {exc}") from exc
        try:
            unit = parse_unit(text, str(path))
        except DiagnosticError as exc:
            diags.extend(exc.diagnostics)
            continue
        unit.rel_dir = rel_dir
        units.append(unit)
    return units, diags


_LINT_MESSAGES = {
    "assignment": "assignment to undeclared name {name!r} would create a global",
    "update": "{op} of undeclared name {name!r} would create a global",
    "for-in-target": "for-in target {name!r} is undeclared and would create a global",
}


def lint_unit(unit: SourceUnit) -> list[Diagnostic]:
    decl = unit.decl
    if not isinstance(decl, ClassDecl):
        return []
    diags: list[Diagnostic] = []
    methods = list(decl.methods) + list(decl.statics)
    if decl.ctor is not None:
        methods.append(decl.ctor)
    for method in methods:
        for finding in find_global_assignments(method.body):
            if finding.name in STRICT_WRITE_NAMES:
                diags.append(
                    warning(
                        STRICT_WRITE,
                        f"write to {finding.name!r} is a strict-mode violation",
                        finding.span,
                    )
                )
            else:
                message = _LINT_MESSAGES[finding.kind].format(
                    name=finding.name, op="update"
                )
                diags.append(warning(GLOBAL_WRITE, message, finding.span))
    return diags


def _no_input_diagnostic(roots: list[Path]) -> Diagnostic:
    listed = ", ".join(str(root) for root in roots)
    return error(
        NO_INPUT,
        f"no input files: no .jsc sources under {listed}",
        Span(str(roots[0]), 1, 1, 1, 1),
    )


def run_semantic_phase(units, diags) -> tuple:
    """parse -> pool -> resolve -> effective -> protocols -> lint.
    Returns (pool, order or None)."""
    pool, pool_diags = build_pool(units)
    diags.extend(pool_diags)
    diags.extend(resolve_supers(pool))
    order = None
    if pool.resolved:
        order = initialization_order(pool)
        for name in order:
            if not isinstance(pool.decl(name), ClassDecl):
                continue
            eff = effective_members(pool, name)
            diags.extend(member_diagnostics(pool, name))
            protocol_diags, _stubs = check_protocols(pool, name, eff)
            diags.extend(protocol_diags)
    for unit in units:
        diags.extend(lint_unit(unit))
    return pool, order


def report(diags: list[Diagnostic], config: BuildConfig):
    for diag in sorted(diags, key=sort_key):
        if config.json_diagnostics:
            print(diag.render_json())
        else:
            print(diag.render())


def exit_code(diags: list[Diagnostic], config: BuildConfig) -> int:
    if has_errors(diags):
        return 1
    if config.deny_warnings and diags:
        return 1
    return 0


def cmd_build(config: BuildConfig) -> int:
    files = discover_sources(config.roots)
    if not files:
        diags = [_no_input_diagnostic(config.roots)]
        report(diags, config)
        return 1
    units, diags = parse_sources(files)
    pool, order = run_semantic_phase(units, diags)
    report(diags, config)
    code = exit_code(diags, config)
    if code != 0 or order is None:
        return 1
    if config.kernel_override is not None:
        try:
            kernel_text = config.kernel_override.read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read kernel {config.kernel_override}: {exc}")
        options = ImageOptions(kernel_text=kernel_text)
    else:
        options = ImageOptions()
    image = emit_image(pool, order, options)
    out = config.out_path
    if not out.parent.is_dir():
        raise UsageError(f"output directory {out.parent} does not exist")
    try:
        out.write_bytes(image.text.encode("utf-8"))
        if config.manifest:
            manifest_path = out.with_name(out.name + ".manifest")
            manifest_path.write_bytes(image.manifest_lines().encode("utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}")
    return 0


def cmd_check(config: BuildConfig) -> int:
    files = discover_sources(config.roots)
    if not files:
        diags = [_no_input_diagnostic(config.roots)]
        report(diags, config)
        return 1
    units, diags = parse_sources(files)
    run_semantic_phase(units, diags)
    report(diags, config)
    return exit_code(diags, config)


def cmd_lint(config: BuildConfig) -> int:
    files = discover_sources(config.roots)
    if not files:
        diags = [_no_input_diagnostic(config.roots)]
        report(diags, config)
        return 1
    units, diags = parse_sources(files)
    for unit in units:
        diags.extend(lint_unit(unit))
    report(diags, config)
    return 1 if diags else 0


def default_roots() -> list[Path]:
    env = os.environ.get("JSCC_ROOTS", "")
    return [Path(part) for part in env.split(os.pathsep) if part]


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jscc",
        description="JSC compiler: validate .jsc sources and emit a classpool image",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument(
            "--root",
            action="append",
            type=Path,
            default=None,
            metavar="DIR",
            help="source root (repeatable; defaults to $JSCC_ROOTS)",
        )
        p.add_argument("--json", action="store_true", help="line-delimited JSON diagnostics")
        p.add_argument(
            "--deny-warnings", action="store_true", help="treat warnings as fatal"
        )

    build = sub.add_parser("build", help="compile to a classpool image")
    common(build)
    build.add_argument("--out", type=Path, required=True, metavar="FILE")
    build.add_argument(
        "--manifest", action="store_true", help="write FILE.manifest with byte ranges"
    )
    build.add_argument(
        "--kernel", type=Path, default=None, metavar="FILE", help="override the kernel"
    )

    check = sub.add_parser("check", help="run all checks without emitting")
    common(check)

    lint = sub.add_parser("lint", help="report undeclared-global assignments only")
    common(lint)
    return parser


def main(argv=None) -> int:
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    roots = args.root if args.root else default_roots()
    if not roots:
        print("jscc: no --root given and JSCC_ROOTS is not set", file=sys.stderr)
        return 2
    config = BuildConfig(
        roots=roots,
        out_path=getattr(args, "out", None),
        deny_warnings=args.deny_warnings,
        json_diagnostics=args.json,
        manifest=getattr(args, "manifest", False),
        kernel_override=getattr(args, "kernel", None),
    )
    command = {"build": cmd_build, "check": cmd_check, "lint": cmd_lint}[args.command]
    try:
        return command(config)
    except UsageError as exc:
        print(f"jscc: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
