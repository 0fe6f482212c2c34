"""Command-line surface.

Exit codes: 0 when the requested check holds (or the computation succeeded),
1 when a checked property fails, 2 on usage or input errors.  ``--json``
emits canonical JSON (sorted keys, fixed separators), so identical inputs
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import Algebra, IDENTITY_TAGS, check_identity
from .actions import (
    ActionData,
    DEFAULT_BUDGET,
    SplitExtension,
    enumerate_actions,
    extract_action,
    is_acting_morphism,
    morphism_to_action,
    semidirect,
    validate_action,
    weak_actor,
)
from .catalog import MorphismData, open_problem_search, repro_suite
from .errors import AlgactError, InputError, InvalidAction
from .fields import Field, GF, Q
from .opspace import SPACE_KINDS, space_of_kind

USAGE_ERROR = 2
CHECK_FAILED = 1
OK = 0


def _dump_json(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def _load_json_file(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _load_algebra(path: str) -> Algebra:
    return Algebra.from_json_dict(_load_json_file(path))


def _write_output(path: str, data) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(_dump_json(data))
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from exc


def _parse_field(text: str) -> Field:
    if text in ("Q", "q"):
        return Q
    try:
        return GF(int(text))
    except ValueError:
        raise InputError(f"field must be Q or an odd prime, got {text!r}") from None


def _cmd_check(args, out) -> int:
    A = _load_algebra(args.file)
    report = check_identity(A, args.identity)
    if args.json:
        out.write(_dump_json(report.to_json_dict(A.field)))
    else:
        if report.holds:
            out.write(f"{args.identity}: holds\n")
        else:
            defect = ", ".join(A.field.to_str(x) for x in report.defect)
            out.write(
                f"{args.identity}: fails ({report.failed_part}) at basis tuple "
                f"{report.witness}; defect [{defect}]\n"
            )
    return OK if report.holds else CHECK_FAILED


def _cmd_space(args, out) -> int:
    A = _load_algebra(args.file)
    space = space_of_kind(A, args.kind)
    if args.output:
        if not space.ops:
            raise InputError(
                f"the {args.kind} space has no induced operations; "
                "use --json to export its basis"
            )
        _write_output(args.output, space.as_algebra().to_json_dict())
    if args.json:
        out.write(_dump_json(space.to_json_dict()))
    else:
        ops = ", ".join(name for name, _ in space.ops) or "none"
        out.write(f"{args.kind}: dimension {space.dim}, induced operations: {ops}\n")
    return OK


def _cmd_action_validate(args, out) -> int:
    action = ActionData.from_json_dict(_load_json_file(args.file))
    report = validate_action(action)
    if args.json:
        out.write(_dump_json(report.to_json_dict(action.field)))
    else:
        for cond in report.conditions:
            status = "holds" if cond.holds else "FAILS"
            line = f"({cond.label}) {status}"
            if not cond.holds:
                defect = ", ".join(action.field.to_str(x) for x in cond.defect)
                line += f" at {cond.witness}; defect [{defect}]"
            out.write(line + "\n")
        out.write(f"action: {'valid' if report.passed else 'invalid'}\n")
    return OK if report.passed else CHECK_FAILED


def _cmd_action_semidirect(args, out) -> int:
    action = ActionData.from_json_dict(_load_json_file(args.file))
    try:
        ext = semidirect(action)
    except InvalidAction as exc:
        if args.json:
            out.write(_dump_json(exc.report.to_json_dict(action.field)))
        else:
            out.write(f"invalid action: fails {', '.join(exc.report.failed_labels())}\n")
        return CHECK_FAILED
    _write_output(args.output, ext.to_json_dict())
    if args.json:
        out.write(_dump_json(ext.to_json_dict()))
    else:
        out.write(
            f"semidirect product of dimension {ext.total.dim} written to {args.output}\n"
        )
    return OK


def _cmd_action_extract(args, out) -> int:
    ext = SplitExtension.from_json_dict(_load_json_file(args.file))
    action = extract_action(ext, args.variety)
    data = action.to_json_dict()
    if args.output:
        _write_output(args.output, data)
    if args.json or not args.output:
        out.write(_dump_json(data))
    else:
        out.write(f"derived action written to {args.output}\n")
    return OK


def _cmd_morphism_check(args, out) -> int:
    data = _load_json_file(args.file)
    mor = MorphismData.from_json_dict(data)
    space = weak_actor(mor.kernel, mor.variety)
    matrix = mor.matrix(space)
    verdict = is_acting_morphism(matrix, mor.acting, mor.kernel, mor.variety, space=space)
    if verdict.acting:
        if args.json:
            out.write(_dump_json({"acting": True}))
        else:
            out.write("acting: the morphism corresponds to a split extension\n")
        return OK
    action = morphism_to_action(
        matrix, mor.acting, mor.kernel, mor.variety, space=space
    )
    report = validate_action(action)
    failed = report.failed_labels()
    if args.json:
        payload = verdict.to_json_dict(mor.acting.field)
        payload["failed_conditions"] = failed
        out.write(_dump_json(payload))
    else:
        f = mor.acting.field
        parts = []
        for label in failed:
            cond = report.condition(label)
            defect = ", ".join(f.to_str(x) for x in cond.defect)
            parts.append(f"({label}) defect [{defect}] at {cond.witness}")
        out.write("not acting: " + "; ".join(parts) + "\n")
    return CHECK_FAILED


def _cmd_repro(args, out) -> int:
    field = _parse_field(args.field)
    fact_ids = set(args.fact) if args.fact else None
    report = repro_suite(field, fact_ids)
    if args.json:
        out.write(_dump_json(report.to_json_dict()))
    else:
        out.write(report.to_text() + "\n")
    return OK if report.passed else CHECK_FAILED


def _cmd_hunt(args, out) -> int:
    report = open_problem_search(GF(args.p), args.dim, args.samples, args.seed)
    if args.json:
        out.write(_dump_json(report.to_json_dict()))
    else:
        out.write(report.to_text() + "\n")
    return OK


def _cmd_enumerate(args, out) -> int:
    data = _load_json_file(args.pairfile)
    try:
        variety = data["variety"]
        acting = Algebra.from_json_dict(data["acting"])
        kernel = Algebra.from_json_dict(data["kernel"])
    except KeyError as exc:
        raise InputError(f"pair file missing {exc}") from exc
    budget = args.budget
    if budget is None:
        env = os.environ.get("ALGACT_BUDGET")
        budget = int(env) if env else DEFAULT_BUDGET
    found = enumerate_actions(acting, kernel, variety, budget=budget)
    if args.json:
        out.write(
            _dump_json(
                {
                    "count": len(found),
                    "actions": [a.to_json_dict() for a in found],
                }
            )
        )
    else:
        out.write(f"{len(found)} valid actions\n")
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="algact",
        description="exact computations with actions and actors of "
        "finite-dimensional algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="test a named identity of an algebra file")
    p_check.add_argument("file")
    p_check.add_argument("--identity", required=True, choices=IDENTITY_TAGS)
    p_check.add_argument("--json", action="store_true")
    p_check.set_defaults(fn=_cmd_check)

    p_space = sub.add_parser("space", help="compute an operator space")
    p_space.add_argument("file")
    p_space.add_argument("--kind", required=True, choices=SPACE_KINDS)
    p_space.add_argument("-o", "--output", help="write the induced algebra as a file")
    p_space.add_argument("--json", action="store_true")
    p_space.set_defaults(fn=_cmd_space)

    p_action = sub.add_parser("action", help="validate, build or split actions")
    action_sub = p_action.add_subparsers(dest="subcommand", required=True)

    p_av = action_sub.add_parser("validate")
    p_av.add_argument("file")
    p_av.add_argument("--json", action="store_true")
    p_av.set_defaults(fn=_cmd_action_validate)

    p_as = action_sub.add_parser("semidirect")
    p_as.add_argument("file")
    p_as.add_argument("-o", "--output", required=True)
    p_as.add_argument("--json", action="store_true")
    p_as.set_defaults(fn=_cmd_action_semidirect)

    p_ae = action_sub.add_parser("extract")
    p_ae.add_argument("file")
    p_ae.add_argument("--variety", required=True,
                      choices=("associative", "leibniz", "poisson", "cpoisson"))
    p_ae.add_argument("-o", "--output")
    p_ae.add_argument("--json", action="store_true")
    p_ae.set_defaults(fn=_cmd_action_extract)

    p_mor = sub.add_parser("morphism", help="test morphisms into a weak actor")
    mor_sub = p_mor.add_subparsers(dest="subcommand", required=True)
    p_mc = mor_sub.add_parser("check")
    p_mc.add_argument("file")
    p_mc.add_argument("--json", action="store_true")
    p_mc.set_defaults(fn=_cmd_morphism_check)

    p_repro = sub.add_parser("repro", help="replay the built-in fact suite")
    p_repro.add_argument("--fact", action="append", help="restrict to a fact id (repeatable)")
    p_repro.add_argument("--field", default="Q", help="Q or an odd prime")
    p_repro.add_argument("--json", action="store_true")
    p_repro.set_defaults(fn=_cmd_repro)

    p_hunt = sub.add_parser("hunt", help="random search for an actor-space counterexample")
    p_hunt.add_argument("--p", type=int, required=True)
    p_hunt.add_argument("--dim", type=int, required=True)
    p_hunt.add_argument("--samples", type=int, required=True)
    p_hunt.add_argument("--seed", type=int, default=0)
    p_hunt.add_argument("--json", action="store_true")
    p_hunt.set_defaults(fn=_cmd_hunt)

    p_enum = sub.add_parser("enumerate", help="exhaust all valid actions of a pair")
    p_enum.add_argument("pairfile")
    p_enum.add_argument("--budget", type=int, default=None,
                        help="assignment budget (default: ALGACT_BUDGET or 3^10)")
    p_enum.add_argument("--json", action="store_true")
    p_enum.set_defaults(fn=_cmd_enumerate)

    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors, 0 on --help
        return USAGE_ERROR if exc.code not in (0, None) else OK
    try:
        return args.fn(args, out)
    except AlgactError as exc:
        err.write(f"error [{type(exc).__name__}]: {exc}\n")
        return USAGE_ERROR


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
