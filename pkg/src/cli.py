import argparse
import json
import logging
import os
import sys
from typing import Callable, Dict, List, Optional

# Add project root to path so `python src/cli.py` can import the src package
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src import config
from src.errors import BoundExceededError, CartomatError, InvalidMapError
from src.hyperoct import act_on_map, act_on_matrix, act_on_matroid, act_on_polytope, from_word
from src.lagmat import AdmissibleSet, LagrangianMatroid, bases_of_map, check_symmetric_exchange, is_matroid
from src.models import CommandResult, OrbitRowDocument
from src.permkit import cycles
from src.polytope import MatroidPolytope, gs_check
from src.reprmat import Representation, bases_from_matrix, interlacement_representation, isotropy_check
from src.surfmap import (cartographic_group_order, dual, enumerate_partial_duals, from_document,
                         is_isomorphic, is_planar, partial_dual, to_document)

logger = logging.getLogger(__name__)

COMMANDS = ("info", "dual", "pdual", "bases", "matroid-check", "represent", "minors",
            "polytope", "gs-check", "act", "orbit", "iso")


class UsageError(Exception):
    """Bad flags or unreadable input; reported with exit code 2."""


class JsonArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> JsonArgumentParser:
    parser = JsonArgumentParser(
        prog="cartomat",
        description="Maps on surfaces, their Lagrangian matroids, representations and polytopes.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name in COMMANDS:
        cmd = sub.add_parser(name)
        cmd.add_argument("--input", help="JSON document to read (default: standard input)")
        cmd.add_argument("--verbose", action="store_true", help="log progress to standard error")
        if name == "pdual":
            cmd.add_argument("--edges", default="", help="comma-separated edge indices, or 'all'")
        if name == "act":
            cmd.add_argument("--word", required=True, help='BC_n word such as "(1 1*)(1 2)(1* 2*)"')
        if name == "represent":
            cmd.add_argument("--base", help='base to start from, e.g. "12*3"')
        if name == "minors":
            cmd.add_argument("--mode", choices=("orthogonal", "symplectic"),
                             help="override the mode stored in the document")
    return parser


def read_input(path: Optional[str]):
    try:
        if path is None:
            doc = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as f:
                doc = json.load(f)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
        raise UsageError(f"could not read input: {e}") from e
    # outputs of earlier commands can be piped straight back in
    if isinstance(doc, dict) and "status" in doc and "payload" in doc:
        doc = doc["payload"]
    return doc


def parse_edges(text: str, n: int) -> List[int]:
    text = text.strip()
    if text == "all":
        return list(range(1, n + 1))
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as e:
        raise UsageError(f"--edges expects comma-separated integers, got {text!r}") from e


def _read_matroid(doc) -> LagrangianMatroid:
    """A matroid document, or a map whose bases are taken."""
    if isinstance(doc, dict) and "sigma" in doc:
        return bases_of_map(from_document(doc))
    return LagrangianMatroid.from_document(doc)


def cmd_info(doc, args):
    M = from_document(doc)
    payload = to_document(M)
    payload["group_order"] = cartographic_group_order(M)
    payload["planar"] = is_planar(M)
    return payload


def cmd_dual(doc, args):
    return to_document(dual(from_document(doc)))


def cmd_pdual(doc, args):
    M = from_document(doc)
    return to_document(partial_dual(M, parse_edges(args.edges, M.n)))


def cmd_bases(doc, args):
    return bases_of_map(from_document(doc)).to_document()


def cmd_matroid_check(doc, args):
    collection = LagrangianMatroid.from_document(doc)
    result = check_symmetric_exchange(collection)
    witness = None
    if result.witness is not None:
        A, B, j = result.witness
        witness = [str(A), str(B), j]
    return {"ok": result.ok, "witness": witness, "is_matroid": is_matroid(collection)}


def cmd_represent(doc, args):
    M = from_document(doc)
    base = AdmissibleSet.parse(args.base, M.n) if args.base else None
    return interlacement_representation(M, base).to_document()


def cmd_minors(doc, args):
    if isinstance(doc, dict) and args.mode:
        doc = {**doc, "mode": args.mode}
    R = Representation.from_document(doc)
    payload = bases_from_matrix(R).to_document()
    payload["isotropic"] = isotropy_check(R)
    return payload


def cmd_polytope(doc, args):
    return MatroidPolytope.from_matroid(_read_matroid(doc)).to_document()


def cmd_gs_check(doc, args):
    result = gs_check(_read_matroid(doc))
    return {
        "ok": result.ok,
        "edge": [list(p) for p in result.edge] if result.edge else None,
        "difference": list(result.difference) if result.edge else None,
    }


def cmd_act(doc, args):
    if not isinstance(doc, dict):
        raise InvalidMapError("act expects a map, matroid, representation or polytope document")
    if "sigma" in doc:
        M = from_document(doc)
        return to_document(act_on_map(from_word(args.word, M.n), M))
    if "bases" in doc:
        collection = LagrangianMatroid.from_document(doc)
        return act_on_matroid(from_word(args.word, collection.n), collection).to_document()
    if "rows" in doc:
        R = Representation.from_document(doc)
        return act_on_matrix(from_word(args.word, R.n), R).to_document()
    if "vertices" in doc:
        P = MatroidPolytope.from_document(doc)
        return act_on_polytope(from_word(args.word, P.n), P).to_document()
    raise InvalidMapError("act expects a map, matroid, representation or polytope document")


def cmd_orbit(doc, args) -> List[OrbitRowDocument]:
    M = from_document(doc)
    if M.n > config.MAX_EDGES:
        raise BoundExceededError(f"orbit refuses maps with more than {config.MAX_EDGES} edges, got {M.n}")
    return [
        {
            "subset": sorted(row.subset.members),
            "vertices": row.vertices,
            "faces": row.faces,
            "genus": row.genus,
            "one_face": row.one_face,
            "iso_class": row.iso_class,
        }
        for row in enumerate_partial_duals(M)
    ]


def cmd_iso(doc, args):
    if not isinstance(doc, list) or len(doc) != 2:
        raise UsageError("iso expects a JSON array of two map documents")
    first, second = (from_document(d) for d in doc)
    h = is_isomorphic(first, second)
    return {"isomorphic": h is not None, "bijection": cycles(h) if h is not None else None}


HANDLERS: Dict[str, Callable] = {
    "info": cmd_info,
    "dual": cmd_dual,
    "pdual": cmd_pdual,
    "bases": cmd_bases,
    "matroid-check": cmd_matroid_check,
    "represent": cmd_represent,
    "minors": cmd_minors,
    "polytope": cmd_polytope,
    "gs-check": cmd_gs_check,
    "act": cmd_act,
    "orbit": cmd_orbit,
    "iso": cmd_iso,
}


def emit(result: CommandResult):
    print(json.dumps(result))


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        emit({"status": "error", "payload": None, "diagnostics": [f"usage: {e}"]})
        return 2

    level = logging.INFO if args.verbose else config.LOG_LEVEL
    logging.basicConfig(level=level, format=config.LOG_FORMAT, stream=sys.stderr)

    try:
        payload = HANDLERS[args.command](read_input(args.input), args)
    except UsageError as e:
        emit({"status": "error", "payload": None, "diagnostics": [f"usage: {e}"]})
        return 2
    except CartomatError as e:
        logger.error(f"{args.command} failed: {e}")
        emit({"status": "error", "payload": None, "diagnostics": [str(e)]})
        return 1

    emit({"status": "ok", "payload": payload, "diagnostics": []})
    return 0


if __name__ == "__main__":
    sys.exit(main())
