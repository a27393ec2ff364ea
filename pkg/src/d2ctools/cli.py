"""
`d2c` command line.

Exit codes: 0 YES (or a mapping found), 1 NO (or NONE), 2 input or usage error, 3 oracle refusal, 4 a certificate
failed re-verification under --verify. A graph6 input file may hold one graph per line; commands that take a single
graph use the first record, `decide`, `oracle` and `canon` process every record and exit with the worst code.
"""

import argparse
import sys
import time
from pathlib import Path
from typing import Any, Optional, Sequence, Union

from logzero import logger
from pydantic import BaseModel, ConfigDict

from d2ctools import package_version
from d2ctools.d2c import (
    ComponentNotDistinguishable,
    D2CVerdict,
    IsomorphicPairNotAsymmetric,
    NonBipartite,
    ThreeIsomorphicComponents,
    decide_d2c,
    verify_distinguishing,
)
from d2ctools.graphs.core import Graph
from d2ctools.graphs.formats import (
    GraphParseError,
    UnsupportedGraphSize,
    parse_coloring,
    parse_edge_list,
    parse_graph6,
    write_graph6,
)
from d2ctools.iso.canonical import CertificateError, are_isomorphic, canonical_form, has_color_preserving_nta, has_nta
from d2ctools.oracle import OracleRefusal, brute_chi_d_le_2
from d2ctools.reductions import cc_to_ga, ga_to_cc
from d2ctools.utils.common_init import configure_logging, get_brute_force_threshold
from d2ctools.utils.misc import format_elapsed, int_list

EXIT_YES = 0
EXIT_NO = 1
EXIT_INPUT_ERROR = 2
EXIT_ORACLE_REFUSAL = 3
EXIT_VERIFICATION_FAILED = 4


class OutputRecord(BaseModel):
    """One line of --machine output."""

    model_config = ConfigDict(frozen=True)

    command: str
    record: int = 1
    verdict: Optional[str] = None
    graph: Optional[str] = None
    case: Optional[str] = None
    certificate: dict[str, Any] = {}
    verified: Optional[bool] = None
    elapsed_seconds: float


class VerificationFailed(RuntimeError):
    pass


def _load_records(path: str, fmt: str) -> list[Union[Graph, GraphParseError]]:
    """Every record of the file; a malformed graph6 line becomes its parse error instead of aborting the file."""
    text = Path(path).read_text()
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    records: list[Union[Graph, GraphParseError]] = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            records.append(parse_graph6(line))
        except (GraphParseError, UnsupportedGraphSize) as err:
            records.append(GraphParseError(str(err), line=line_number))
    if not records:
        raise GraphParseError("no graph records found")
    return records


def _load_graph(path: str, fmt: str) -> Graph:
    first = _load_records(path, fmt)[0]
    if isinstance(first, GraphParseError):
        raise first
    return first


def _report_error(err: Exception, index: int, total: int) -> None:
    print(_with_record_prefix(f"error: {err}", index, total), file=sys.stderr)


def _emit(args: argparse.Namespace, record: OutputRecord, human: str) -> None:
    print(record.model_dump_json() if args.machine else human)


def _check_verification(verified: Optional[bool], what: str) -> None:
    if verified is False:
        raise VerificationFailed(f"{what} failed re-verification")


def _with_record_prefix(human: str, index: int, total: int) -> str:
    return f"{index}: {human}" if total > 1 else human


def _reason_certificate(verdict: D2CVerdict) -> tuple[str, dict[str, Any]]:
    if verdict.witness is not None:
        return f"YES witness={int_list(verdict.witness.colors)}", {"witness": list(verdict.witness.colors)}
    reason = verdict.reason
    if isinstance(reason, NonBipartite):
        cycle = list(reason.certificate.cycle)
        return f"NO NonBipartite cycle={int_list(cycle)}", {"kind": reason.kind, "cycle": cycle}
    if isinstance(reason, ComponentNotDistinguishable):
        return f"NO ComponentNotDistinguishable nta={int_list(reason.nta.p)}", {
            "kind": reason.kind,
            "component_index": reason.component_index,
            "nta": list(reason.nta.p),
        }
    if isinstance(reason, ThreeIsomorphicComponents):
        isos = [list(p.p) for p in reason.isomorphisms]
        human = (
            f"NO ThreeIsomorphicComponents components={int_list(reason.component_indices)} "
            f"isomorphisms={';'.join(int_list(p) for p in isos)}"
        )
        return human, {"kind": reason.kind, "component_indices": list(reason.component_indices), "isomorphisms": isos}
    assert isinstance(reason, IsomorphicPairNotAsymmetric)
    human = (
        f"NO IsomorphicPairNotAsymmetric components={int_list(reason.component_indices)} "
        f"iso={int_list(reason.iso.p)} nta={int_list(reason.nta.p)}"
    )
    return human, {
        "kind": reason.kind,
        "component_indices": list(reason.component_indices),
        "iso": list(reason.iso.p),
        "nta": list(reason.nta.p),
    }


def run_decide(args: argparse.Namespace) -> int:
    records = _load_records(args.graph_file, args.format)
    worst = EXIT_YES
    for index, g in enumerate(records, start=1):
        if isinstance(g, GraphParseError):
            _report_error(g, index, len(records))
            worst = max(worst, EXIT_INPUT_ERROR)
            continue
        started = time.perf_counter()
        try:
            verdict = decide_d2c(g)
            verified = verdict.verify(g) if args.verify else None
            _check_verification(verified, "verdict")
        except (CertificateError, VerificationFailed) as err:
            _report_error(err, index, len(records))
            worst = max(worst, EXIT_VERIFICATION_FAILED)
            continue
        elapsed = time.perf_counter() - started
        logger.info(f"decide: record {index} n={g.n} in {format_elapsed(elapsed)}")
        human, certificate = _reason_certificate(verdict)
        if verified:
            human += " (verified)"
        record = OutputRecord(
            command="decide",
            record=index,
            verdict="YES" if verdict.is_yes else "NO",
            graph=write_graph6(g),
            certificate=certificate,
            verified=verified,
            elapsed_seconds=elapsed,
        )
        _emit(args, record, _with_record_prefix(human, index, len(records)))
        worst = max(worst, EXIT_YES if verdict.is_yes else EXIT_NO)
    return worst


def run_oracle(args: argparse.Namespace) -> int:
    records = _load_records(args.graph_file, args.format)
    threshold = get_brute_force_threshold(args.brute_threshold)
    worst = EXIT_YES
    for index, g in enumerate(records, start=1):
        if isinstance(g, GraphParseError):
            _report_error(g, index, len(records))
            worst = max(worst, EXIT_INPUT_ERROR)
            continue
        started = time.perf_counter()
        try:
            answer = brute_chi_d_le_2(g, threshold=threshold)
        except OracleRefusal as err:
            _report_error(err, index, len(records))
            worst = max(worst, EXIT_ORACLE_REFUSAL)
            continue
        record = OutputRecord(
            command="oracle",
            record=index,
            verdict="YES" if answer else "NO",
            graph=write_graph6(g),
            elapsed_seconds=time.perf_counter() - started,
        )
        _emit(args, record, _with_record_prefix("YES" if answer else "NO", index, len(records)))
        worst = max(worst, EXIT_YES if answer else EXIT_NO)
    return worst


def run_check_coloring(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph_file, args.format)
    coloring = parse_coloring(Path(args.coloring_file).read_text())
    if len(coloring) != g.n:
        raise ValueError(f"coloring has {len(coloring)} entries but the graph has {g.n} vertices")
    started = time.perf_counter()
    certificate: dict[str, Any] = {}
    conflict = coloring.first_conflict(g)
    if conflict is not None:
        human = f"NO not-proper edge={int_list(conflict)}"
        certificate["edge"] = list(conflict)
        ok = False
    else:
        nta = has_color_preserving_nta(g, coloring)
        ok = nta is None
        if ok:
            human = "YES distinguishing"
        else:
            human = f"NO not-distinguishing nta={int_list(nta.p)}"
            certificate["nta"] = list(nta.p)
    verified = None
    if args.verify:
        verified = verify_distinguishing(g, coloring) == ok
        _check_verification(verified, "coloring check")
        human += " (verified)"
    record = OutputRecord(
        command="check-coloring",
        verdict="YES" if ok else "NO",
        graph=write_graph6(g),
        certificate=certificate,
        verified=verified,
        elapsed_seconds=time.perf_counter() - started,
    )
    _emit(args, record, human)
    return EXIT_YES if ok else EXIT_NO


def run_reduce_ga_to_cc(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph_file, args.format)
    started = time.perf_counter()
    result = ga_to_cc(g)
    mapping = result.subdivision_map
    certificate: dict[str, Any] = {"complemented": result.complemented, "note": result.note}
    lines = [write_graph6(result.graph), f"case={result.case.value} complemented={str(result.complemented).lower()}"]
    if mapping is not None:
        edge_vertices = [list(mapping.edge_of(x)) for x in range(mapping.source_n, len(mapping))]
        certificate["originals"] = list(range(mapping.source_n))
        certificate["edge_vertices"] = edge_vertices
        tags = [f"{v}:V{v}" for v in range(mapping.source_n)]
        tags += [f"{mapping.source_n + k}:E{u}-{v}" for k, (u, v) in enumerate(edge_vertices)]
        lines.append("map=" + " ".join(tags))
    if result.note:
        lines.append(f"note={result.note}")
    record = OutputRecord(
        command="reduce-ga-to-cc",
        graph=write_graph6(result.graph),
        case=result.case.value,
        certificate=certificate,
        elapsed_seconds=time.perf_counter() - started,
    )
    _emit(args, record, "\n".join(lines))
    return EXIT_YES


def run_reduce_cc_to_ga(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph_file, args.format)
    started = time.perf_counter()
    result = cc_to_ga(g)
    lines = [write_graph6(result.graph), f"case={result.case.value}"]
    certificate: dict[str, Any] = {}
    gadget = result.gadget_map
    if gadget is not None:
        certificate = {"a": gadget.a, "b": gadget.b, "c": gadget.c, "x_vertices": list(gadget.x_vertices)}
        lines.append(f"a={gadget.a} b={gadget.b} c={gadget.c} X={int_list(gadget.x_vertices)}")
    record = OutputRecord(
        command="reduce-cc-to-ga",
        graph=write_graph6(result.graph),
        case=result.case.value,
        certificate=certificate,
        elapsed_seconds=time.perf_counter() - started,
    )
    _emit(args, record, "\n".join(lines))
    return EXIT_YES


def run_iso(args: argparse.Namespace) -> int:
    g1 = _load_graph(args.first_file, args.format)
    g2 = _load_graph(args.second_file, args.format)
    started = time.perf_counter()
    mapping = are_isomorphic(g1, g2)
    verified = None
    if args.verify and mapping is not None:
        verified = mapping.maps_onto(g1, g2)
        _check_verification(verified, "isomorphism")
    human = "NONE" if mapping is None else int_list(mapping.p)
    if verified:
        human += " (verified)"
    record = OutputRecord(
        command="iso",
        verdict="NONE" if mapping is None else "FOUND",
        certificate={} if mapping is None else {"mapping": list(mapping.p)},
        verified=verified,
        elapsed_seconds=time.perf_counter() - started,
    )
    _emit(args, record, human)
    return EXIT_NO if mapping is None else EXIT_YES


def run_auto(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph_file, args.format)
    started = time.perf_counter()
    nta = has_nta(g)
    verified = None
    if args.verify and nta is not None:
        verified = not nta.is_identity and nta.is_automorphism_of(g)
        _check_verification(verified, "automorphism")
    human = "NONE" if nta is None else int_list(nta.p)
    if verified:
        human += " (verified)"
    record = OutputRecord(
        command="auto",
        verdict="NONE" if nta is None else "FOUND",
        graph=write_graph6(g),
        certificate={} if nta is None else {"nta": list(nta.p)},
        verified=verified,
        elapsed_seconds=time.perf_counter() - started,
    )
    _emit(args, record, human)
    return EXIT_NO if nta is None else EXIT_YES


def run_canon(args: argparse.Namespace) -> int:
    records = _load_records(args.graph_file, args.format)
    coloring = parse_coloring(Path(args.coloring).read_text()) if args.coloring else None
    graphs = [g for g in records if isinstance(g, Graph)]
    if coloring is not None and any(len(coloring) != g.n for g in graphs):
        raise ValueError(f"coloring has {len(coloring)} entries but not every graph has that many vertices")
    worst = EXIT_YES
    for index, g in enumerate(records, start=1):
        if isinstance(g, GraphParseError):
            _report_error(g, index, len(records))
            worst = max(worst, EXIT_INPUT_ERROR)
            continue
        started = time.perf_counter()
        form = canonical_form(g, coloring)
        verified = None
        if args.verify:
            verified = form.labeling.maps_onto(g, form.canon)
            _check_verification(verified, "canonical labeling")
        human = form.key + (" (verified)" if verified else "")
        record = OutputRecord(
            command="canon",
            record=index,
            graph=write_graph6(form.canon),
            certificate={"key": form.key, "labeling": list(form.labeling.p)},
            verified=verified,
            elapsed_seconds=time.perf_counter() - started,
        )
        _emit(args, record, _with_record_prefix(human, index, len(records)))
    return worst


def _add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["graph6", "edgelist"], default="graph6", help="input graph format")
    parser.add_argument("--machine", action="store_true", help="emit one JSON record per result")
    parser.add_argument("--brute-threshold", type=int, default=None, help="largest n the brute-force oracle accepts")
    parser.add_argument("--verify", action="store_true", help="re-verify every certificate and say so")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="d2c", description="Distinguishing 2-colorings, graph automorphism and the reductions between them."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {package_version}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str, *files: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text, description=help_text)
        for file_arg in files:
            sub.add_argument(file_arg)
        _add_common_options(sub)
        sub.set_defaults(handler=handler)
        return sub

    add("decide", run_decide, "Decide whether each graph has a proper distinguishing 2-coloring.", "graph_file")
    add("oracle", run_oracle, "Answer the same question by exhaustive search (small graphs only).", "graph_file")
    add(
        "check-coloring",
        run_check_coloring,
        "Report whether a coloring (one color per line) is proper and distinguishing.",
        "graph_file",
        "coloring_file",
    )
    add("reduce-ga-to-cc", run_reduce_ga_to_cc, "Build the CC instance matching the input's GA answer.", "graph_file")
    add(
        "reduce-cc-to-ga",
        run_reduce_cc_to_ga,
        "Build the GA instance matching the connected input's CC answer.",
        "graph_file",
    )
    add(
        "iso",
        run_iso,
        "Print an isomorphism from the first graph onto the second, or NONE.",
        "first_file",
        "second_file",
    )
    add("auto", run_auto, "Print a nontrivial automorphism, or NONE when the graph is asymmetric.", "graph_file")
    canon = add("canon", run_canon, "Print the canonical key of each graph.", "graph_file")
    canon.add_argument("--coloring", default=None, help="coloring file; canonize the colored graph")
    return parser


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        configure_logging()
        return args.handler(args)
    except (CertificateError, VerificationFailed) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    except (OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def main():
    sys.exit(cli_main())
