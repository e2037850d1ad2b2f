import argparse
import json
import logging
import sys
from functools import partial

from pydantic import ValidationError

from pancakes.cli.run_config import RunConfig, Command, OutputMode
from pancakes.cli.sweep import run_all, EXIT_OK, EXIT_FAILURE, EXIT_OVERFLOW, EXIT_USAGE
from pancakes.group_core.context import GroupContext
from pancakes.group_core.permutation import SignedPermutation
from pancakes.pancake.sorting import greedy_sort, verify_certificate
from pancakes.presentations.catalog import build_presentation
from pancakes.presentations.export import export, ExportFormat
from pancakes.presentations.presentation import expected_order
from pancakes.presentations.word_parser import parse_word
from pancakes.rewriting.completion import kb_complete
from pancakes.rewriting.rewrite_system import RewriteSystem, reduce, enumerate_normal_forms
from pancakes.todd_coxeter.coset_table import CosetStatus
from pancakes.todd_coxeter.enumeration import enumerate_cosets
from pancakes.utils.errors import Overflow
from pancakes.utils.log_utils import log_with_context
from pancakes.verifier.checks import check_relators, check_order, check_lemma_identities


class ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors with exit code 3 instead of argparse's 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser(defaults: dict) -> ArgumentParser:
    parser = ArgumentParser(prog="pancakes",
                            description="Prefix-reversal presentations of the Coxeter groups of types A, B and D")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debug")
    common = ArgumentParser(add_help=False)
    common.add_argument("--type", dest="group_type", choices=["A", "B", "D"])
    common.add_argument("--n", dest="degree", type=int)
    common.add_argument("--family", choices=["pancake", "coxeter"], default="pancake")
    common.add_argument("--json", dest="output", action="store_const", const=OutputMode.JSON.value,
                        default=OutputMode.TEXT.value)
    common.add_argument("--bfs-cap", type=int, default=defaults["bfsCap"])
    common.add_argument("--max-cosets", type=int, default=defaults["maxCosets"])
    common.add_argument("--max-rules", type=int, default=defaults["maxRules"])
    common.add_argument("--max-len", type=int, default=defaults["maxLen"])
    common.add_argument("--workers", type=int, default=defaults["workers"])

    commands = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)
    commands.add_parser("present", parents=[common], help="print a presentation")
    commands.add_parser("verify", parents=[common], help="evaluate every relator")
    commands.add_parser("order", parents=[common], help="compare the closure size with the group order")
    tc = commands.add_parser("tc", parents=[common], help="enumerate cosets of a subgroup")
    tc.add_argument("--subgroup", action="append", default=[], help="subgroup generator word, repeatable")
    kb = commands.add_parser("kb", parents=[common], help="run Knuth-Bendix completion")
    kb.add_argument("--emit", "--rules-out", dest="output_file", help="write the rewrite system as JSON")
    reduce_parser = commands.add_parser("reduce", parents=[common], help="reduce a word to normal form")
    reduce_parser.add_argument("--word", required=True)
    reduce_parser.add_argument("--rules", dest="rules_file", help="rewrite system JSON from 'kb --emit'")
    sort = commands.add_parser("sort", parents=[common], help="sort a stack with prefix reversals")
    sort.add_argument("--perm", dest="permutation", required=True, help="window notation, e.g. [3,-1,2]")
    export_parser = commands.add_parser("export", parents=[common], help="export a presentation")
    export_parser.add_argument("--format", dest="export_format", choices=[f.value for f in ExportFormat],
                               default=ExportFormat.JSON.value)
    export_parser.add_argument("--output", dest="output_file")
    commands.add_parser("lemmas", parents=[common], help="check the flip and transposition identities")
    commands.add_parser("sweep", parents=[common], help="run every check over the default degree ranges")
    return parser


def parse_config(argv=None, environ=None) -> tuple[RunConfig, int]:
    defaults = RunConfig.defaults(environ)
    args = build_parser(defaults).parse_args(argv)
    values = {k: v for k, v in vars(args).items() if v is not None and k != "verbose"}
    values["subgroup"] = tuple(values.get("subgroup", ()))
    return RunConfig(**values), args.verbose


def main(argv=None, out=None, environ=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        config, verbosity = parse_config(argv, environ)
    except (ValidationError, ValueError) as e:
        print(f"pancakes: error: {_describe(e)}", file=sys.stderr)
        return EXIT_USAGE
    _configure_logging(verbosity)
    return run(config, out)


def run(config: RunConfig, out=None, presentation_builder=None) -> int:
    out = out if out is not None else sys.stdout
    handlers = {
        Command.PRESENT: _present,
        Command.VERIFY: _verify,
        Command.ORDER: _order,
        Command.TC: _tc,
        Command.KB: _kb,
        Command.REDUCE: _reduce,
        Command.SORT: _sort,
        Command.EXPORT: _export,
        Command.LEMMAS: _lemmas,
    }
    handler = handlers.get(config.command, partial(_sweep, presentation_builder=presentation_builder))
    try:
        return handler(config, out)
    except Overflow as e:
        log_with_context(f"{config.command.value} inconclusive: {e}", context={"CHECK": config.command.value},
                         log_level='warning')
        _emit(config, out, {"status": "overflow", "cap": e.cap, "message": str(e)}, [f"inconclusive: {e}"])
        return EXIT_OVERFLOW
    except (ValueError, OSError) as e:
        print(f"pancakes: error: {_describe(e)}", file=sys.stderr)
        return EXIT_USAGE


def _present(config, out):
    p = build_presentation(config.context, config.family)
    if config.is_json:
        print(export(p, ExportFormat.JSON), file=out)
        return EXIT_OK
    print(p, file=out)
    for entry in p.relators:
        print(f"  {entry.describe():<14} {entry.word}", file=out)
    return EXIT_OK


def _verify(config, out):
    report = check_relators(build_presentation(config.context, config.family))
    _emit(config, out, report.model_dump(mode="json"), report.summary_lines())
    return EXIT_OK if report.passed else EXIT_FAILURE


def _order(config, out):
    report = check_order(build_presentation(config.context, config.family), config.bfs_cap)
    _emit(config, out, report.model_dump(mode="json"), report.summary_lines())
    return EXIT_OK if report.passed else EXIT_FAILURE


def _tc(config, out):
    p = build_presentation(config.context, config.family)
    subgroup = [parse_word(text, config.context) for text in config.subgroup]
    table = enumerate_cosets(p, subgroup, config.max_cosets)
    summary = table.to_json_dict()
    _emit(config, out, summary, [f"{key}: {value}" for key, value in summary.items()])
    if table.status == CosetStatus.OVERFLOWED:
        return EXIT_OVERFLOW
    if not subgroup and table.live_count != expected_order(config.context).value:
        return EXIT_FAILURE
    return EXIT_OK


def _kb(config, out):
    p = build_presentation(config.context, config.family)
    rs = kb_complete(p, max_rules=config.max_rules, max_len=config.max_len)
    summary = {"confluent": rs.confluent, "rule_cap_hit": rs.rule_cap_hit, "rules": len(rs)}
    exit_code = EXIT_OVERFLOW
    if rs.confluent:
        summary["normal_forms"] = enumerate_normal_forms(rs, config.bfs_cap)
        summary["order_expected"] = expected_order(config.context).value
        exit_code = EXIT_OK if summary["normal_forms"] == summary["order_expected"] else EXIT_FAILURE
    if config.output_file:
        with open(config.output_file, "w") as handle:
            handle.write(rs.to_json())
    _emit(config, out, summary, [f"{key}: {value}" for key, value in summary.items()])
    return exit_code


def _reduce(config, out):
    w = parse_word(config.word, config.context)
    if config.rules_file:
        with open(config.rules_file) as handle:
            rs = RewriteSystem.from_json(handle.read(), config.context)
    else:
        rs = kb_complete(build_presentation(config.context, config.family), max_rules=config.max_rules,
                         max_len=config.max_len)
    normal_form = reduce(w, rs)
    if not rs.confluent:
        log_with_context("rewrite system is not confluent; the result may not be the normal form",
                         context={"CHECK": "reduce"}, log_level='warning')
    _emit(config, out, {"input": w.tokens(), "normal_form": normal_form.tokens(), "confluent": rs.confluent},
          [str(normal_form)])
    return EXIT_OK


def _sort(config, out):
    permutation = SignedPermutation.parse(config.permutation)
    ctx = GroupContext(group_type=config.group_type, degree=config.degree or len(permutation))
    certificate = greedy_sort(permutation, ctx)
    verified = verify_certificate(certificate, ctx)
    _emit(config, out, {**certificate.to_json_dict(), "verified": verified},
          [f"{certificate.word} ({certificate.flip_count} flips)"])
    return EXIT_OK if verified else EXIT_FAILURE


def _export(config, out):
    text = export(build_presentation(config.context, config.family), config.export_format)
    if config.output_file:
        with open(config.output_file, "w") as handle:
            handle.write(text)
    else:
        out.write(text if text.endswith("\n") else text + "\n")
    return EXIT_OK


def _lemmas(config, out):
    report = check_lemma_identities(config.context)
    _emit(config, out, report.model_dump(mode="json"), report.summary_lines())
    return EXIT_OK if report.passed else EXIT_FAILURE


def _sweep(config, out, presentation_builder=None):
    caps = {"bfsCap": config.bfs_cap, "maxCosets": config.max_cosets, "workers": config.workers}
    exit_code, results = run_all(caps, presentation_builder)
    if config.is_json:
        print(json.dumps({"exit_code": exit_code, "results": [r.to_json_dict() for r in results]}, indent=2),
              file=out)
    else:
        for result in results:
            print(result, file=out)
    return exit_code


def _emit(config, out, document, lines):
    if config.is_json:
        print(json.dumps(document, indent=2), file=out)
    else:
        for line in lines:
            print(line, file=out)


def _configure_logging(verbosity: int):
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format="%(asctime)s %(levelname)s %(name)s %(message)s")


def _describe(exception: Exception) -> str:
    if isinstance(exception, ValidationError):
        return "; ".join(error["msg"] for error in exception.errors())
    return str(exception)


if __name__ == "__main__":
    sys.exit(main())
