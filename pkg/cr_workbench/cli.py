"""
Command line front end for the CR workbench.

    crwb family --k 2
    crwb freeman --input su2_borel.json
    crwb levi --k 3 --order 1
    crwb verify-model --k 1,2,3 --jobs 3
    crwb validate-doc --input my_algebra.json

The certificate is printed on stdout and nothing else is; progress lines go to stderr.

Exit codes: 0 verified, 1 a verification failed, 2 invalid input document, 3 usage error.
"""
import argparse
import functools
import hashlib
import json
import os
import sys
import time
from multiprocessing import Pool

from jsonschema.exceptions import ValidationError

from cr_workbench import cralg
from cr_workbench import exactnum as en
from cr_workbench import hypersurface
from cr_workbench import liecore
from cr_workbench import su2family
from cr_workbench.exceptions import (
    DegreeBoundExceeded,
    ExactArithmeticError,
    InvalidDocument,
    InvalidStructure,
    NonStabilization,
    PreconditionError,
    UsageError,
)
from cr_workbench.utils.config import get_config
from cr_workbench.utils.json_validation import load_json_or_yaml, run_validator

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_USAGE = 3


# -- documents -------------------------------------------------------------------------


def _canonical_scalar(obj, where):
    value = en.scalar_from_json(obj)
    if en.scalar_to_json(value) != {"re": obj["re"], "im": obj["im"]}:
        raise ValueError(f"{where}: rationals must be in lowest terms, got {obj}")
    return value


def _vector(entries, n, where):
    if len(entries) != n:
        raise ValueError(f"{where}: expected {n} entries, got {len(entries)}")
    return tuple(_canonical_scalar(e, where) for e in entries)


def load_document(data, path="<document>"):
    """
    Turn a CR algebra document into a CRAlgebra.

    :raises InvalidDocument:  if the document breaks the schema or has out of range indices
    :raises InvalidStructure: if it fails the Jacobi, grading, involution or subalgebra gates
    """
    try:
        data = run_validator(schema_file=get_config()["document_schema"], data=data, nicer_errors=True)
    except ValidationError as err:
        raise InvalidDocument(path, err.message)
    basis = data["basis"]
    n = len(basis)
    structure = {}
    try:
        for entry in data["brackets"]:
            i, j = entry["i"], entry["j"]
            if not i < j < n:
                raise ValueError(f"bracket ({i}, {j}) needs i < j < {n}")
            if (i, j) in structure:
                raise ValueError(f"bracket ({i}, {j}) is given twice")
            coords = [en.ZERO] * n
            for term in entry["coeffs"]:
                if term["k"] >= n:
                    raise ValueError(f"bracket ({i}, {j}) has a coefficient at index {term['k']} >= {n}")
                coords[term["k"]] += _canonical_scalar(term["value"], f"bracket ({i}, {j})")
            structure[(i, j)] = tuple(coords)
        grades = data.get("grades")
        if grades is not None and len(grades) != n:
            raise ValueError(f"grades: expected {n} entries, got {len(grades)}")
        if len(data["tau"]) != n:
            raise ValueError(f"tau: expected {n} rows, got {len(data['tau'])}")
        tau_rows = [_vector(row, n, f"tau row {r}") for r, row in enumerate(data["tau"])]
        f_vectors = [_vector(v, n, f"f vector {r}") for r, v in enumerate(data["f"])]
    except (ValueError, ExactArithmeticError) as err:
        raise InvalidDocument(path, str(err))

    g = liecore.LieAlgebra(basis, structure, grades=grades)
    liecore.require(liecore.check_jacobi(g))
    liecore.require(liecore.check_grading(g))
    tau = liecore.AntilinearMap.from_rows(tau_rows)
    return cralg.CRAlgebra(g, tau, en.Subspace.span(f_vectors, n))


def dump_document(a, name=None):
    """The CR algebra as a document; f is written through its canonical basis."""
    g = a.g
    doc = {}
    if name is not None:
        doc["name"] = name
    doc["basis"] = list(g.basis_labels)
    if g.grades is not None:
        doc["grades"] = list(g.grades)
    doc["brackets"] = [
        {
            "i": i,
            "j": j,
            "coeffs": [
                {"k": m, "value": en.scalar_to_json(c)}
                for m, c in enumerate(g.structure_constants(i, j))
                if c
            ],
        }
        for (i, j) in g.nonzero_pairs
    ]
    doc["tau"] = [[en.scalar_to_json(c) for c in row] for row in a.tau.rows()]
    doc["f"] = [[en.scalar_to_json(c) for c in v] for v in a.f.basis]
    return doc


def find_document(path):
    """Bare file names that do not exist here are looked up in the data directory."""
    if os.path.exists(path) or os.path.dirname(path):
        return path
    return os.path.join(get_config()["data_path"], path)


def read_document(path):
    path = find_document(path)
    try:
        return path, load_json_or_yaml(path)
    except (OSError, TypeError, ValueError) as err:
        # json.JSONDecodeError is a ValueError
        raise InvalidDocument(path, str(err))


def digest(obj):
    """sha256 of the canonical JSON encoding."""
    text = json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


# -- jobs ------------------------------------------------------------------------------
# Every job takes a picklable source and returns a plain dict, so jobs can run in a pool.


def _algebra(source):
    """
    :param source: ("family", k) or ("document", path, data)
    """
    if source[0] == "family":
        k = source[1]
        info = {"source": f"family k={k}", "input_digest": digest({"family": k})}
        return su2family.build_family(k).cr_algebra(), info
    _, path, data = source
    return load_document(data, path), {"source": os.path.basename(path), "input_digest": digest(data)}


def _labels(a, space):
    return [a.g.describe(b) for b in space.basis]


def _dims(a):
    crdim, crcodim = cralg.cr_dimensions(a)
    return {"crdim": crdim, "crcodim": crcodim}


def family_job(k):
    family = su2family.build_family(k)
    g = family.g
    a = family.cr_algebra()
    reports = [
        liecore.check_jacobi(g),
        liecore.check_grading(g),
        liecore.check_involution(g, family.tau),
        liecore.check_grading_element(g, su2family.characteristic_element(k)),
    ]
    return {
        "source": f"family k={k}",
        "input_digest": digest({"family": k}),
        "k": k,
        "dim_g": g.dim,
        "dim_f": a.f.dim,
        "basis": list(g.basis_labels),
        "grades": list(g.grades),
        "f": _labels(a, a.f),
        "isotropy": _labels(a, a.isotropy),
        "cr_dimensions": _dims(a),
        "reports": [r.to_dict() for r in reports],
        "passed": all(r.passed for r in reports),
    }


def freeman_job(source, max_steps=None, expect_order=None):
    a, info = _algebra(source)
    sequence = cralg.freeman_sequence(a, max_steps)
    verdict = sequence.verdict
    result = dict(
        info,
        cr_dimensions=_dims(a),
        dims=sequence.dims,
        steps=[_labels(a, s) for s in sequence.steps],
        stabilization_index=sequence.stabilization_index,
        verdict={"kind": verdict.kind, "order": verdict.order, "text": str(verdict)},
        weakly_nondegenerate=cralg.weak_nondegeneracy(a, sequence),
        steps_are_subalgebras=all(liecore.is_subalgebra(a.g, s) for s in sequence.steps),
    )
    passed = result["steps_are_subalgebras"]
    if expect_order is not None:
        result["expected_order"] = expect_order
        passed = passed and verdict == cralg.Verdict(cralg.NONDEGENERATE, expect_order)
    result["passed"] = passed
    return result


def levi_job(source, order, max_steps=None):
    a, info = _algebra(source)
    sequence = cralg.freeman_sequence(a, max_steps)
    levi = cralg.levi_matrix(a, order, sequence)
    kernel = levi.left_kernel()
    next_step = cralg.freeman_step(a, levi.source)
    return dict(
        info,
        order=order,
        row_basis=levi.row_basis,
        col_basis=levi.col_basis,
        target_basis=levi.target_basis,
        entries=[[[en.scalar_to_json(c) for c in row] for row in component] for component in levi.entries],
        rank=levi.rank(),
        support=[list(p) for p in levi.support()],
        left_kernel=_labels(a, kernel),
        left_kernel_dim_mod_isotropy=kernel.dim - a.isotropy.dim,
        left_kernel_is_next_step=kernel == next_step,
        passed=kernel == next_step,
    )


def verify_job(k, suites=hypersurface.DEFAULT_SUITES):
    reports = hypersurface.run_suites(k, suites)
    return {
        "source": f"model hypersurface k={k}",
        "input_digest": digest({"family": k}),
        "k": k,
        "suites": [r.to_dict() for r in reports],
        "passed": all(r.passed for r in reports),
    }


def document_job(source):
    a, info = _algebra(source)
    return dict(info, valid=True, cr_dimensions=_dims(a), passed=True)


def _timed(fn, item):
    start = time.perf_counter()
    result = fn(item)
    result["seconds"] = round(time.perf_counter() - start, 3)
    return result


def run_jobs(fn, items, jobs=1, timing=False):
    """Run fn over items, in a process pool when jobs > 1; results keep the order of items."""
    if timing:
        fn = functools.partial(_timed, fn)
    if jobs > 1 and len(items) > 1:
        with Pool(processes=min(jobs, len(items))) as pool:
            return pool.map(fn, items)
    return [fn(item) for item in items]


# -- rendering -------------------------------------------------------------------------


def _mark(passed):
    return "✓" if passed else "✕"


def _render_reports(reports, lines, indent="  "):
    for r in reports:
        lines.append(f"{indent}{_mark(r['passed'])} {r['name']}: {r['n_checks']} checks")
        for c in r["failures"]:
            detail = f" ({c['detail']})" if c.get("detail") else ""
            lines.append(f"{indent}    ✕ {c['name']}{detail}")
        for c in r["recorded"]:
            detail = f" ({c['detail']})" if c.get("detail") else ""
            lines.append(f"{indent}    recorded {_mark(c['passed'])} {c['name']}{detail}")


def _render_family(result, lines):
    lines.append(f"  dim g = {result['dim_g']}, dim f = {result['dim_f']}")
    lines.append("  basis: " + ", ".join(result["basis"]))
    lines.append("  grades: " + ", ".join(str(g) for g in result["grades"]))
    lines.append("  f: " + ", ".join(result["f"]))
    lines.append("  f ∩ tau(f): " + ", ".join(result["isotropy"]))
    _render_reports(result["reports"], lines)


def _render_freeman(result, lines):
    for h, (dim, labels) in enumerate(zip(result["dims"], result["steps"])):
        lines.append(f"  f^{h}: dim {dim}  <" + ", ".join(labels) + ">")
    lines.append(f"  verdict: {result['verdict']['text']}")
    lines.append(f"  weakly nondegenerate: {'yes' if result['weakly_nondegenerate'] else 'no'}")
    if "expected_order" in result:
        lines.append(f"  {_mark(result['passed'])} expected order {result['expected_order']}")


def _render_levi(result, lines):
    cols = result["col_basis"]
    rows = result["row_basis"]
    width = max([len(c) for c in cols] + [len(r) for r in rows] + [6])
    lines.append(f"  order {result['order']}")
    for target, component in zip(result["target_basis"], result["entries"]):
        lines.append(f"  component along {target}:")
        lines.append("    " + " " * width + "  " + "  ".join(c.rjust(width) for c in cols))
        for label, row in zip(rows, component):
            values = [en.format_scalar(en.scalar_from_json(v)).rjust(width) for v in row]
            lines.append("    " + label.rjust(width) + "  " + "  ".join(values))
    support = " ".join(f"({i},{j})" for i, j in result["support"])
    lines.append(f"  rank {result['rank']}, support {support or '-'}")
    lines.append(f"  left kernel dim (mod f ∩ tau f): {result['left_kernel_dim_mod_isotropy']}")


def _render_verify(result, lines):
    _render_reports(result["suites"], lines)


def _render_document(result, lines):
    lines.append("  valid CR algebra document")


_RENDERERS = {
    "family": _render_family,
    "freeman": _render_freeman,
    "levi": _render_levi,
    "verify-model": _render_verify,
    "validate-doc": _render_document,
}


def render(certificate, fmt):
    if fmt == "json":
        return json.dumps(certificate, sort_keys=True, indent=2, ensure_ascii=False)
    lines = [f"{certificate['command']}: {_mark(certificate['passed'])}"]
    for result in certificate["results"]:
        lines.append(f"{result['source']} (input sha256 {result['input_digest']})")
        if "cr_dimensions" in result:
            dims = result["cr_dimensions"]
            lines.append(f"  CR dimension {dims['crdim']}, CR codimension {dims['crcodim']}")
        _RENDERERS[certificate["command"]](result, lines)
        if "seconds" in result:
            lines.append(f"  time: {result['seconds']} s")
    return "\n".join(lines)


# -- argument parsing ------------------------------------------------------------------


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _k_list(text):
    try:
        ks = [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma separated list of integers, got '{text}'")
    if any(k < 1 for k in ks):
        raise argparse.ArgumentTypeError(f"k must be >= 1, got '{text}'")
    return sorted(set(ks))


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got '{text}'")
    return value


def _non_negative_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got '{text}'")
    return value


def _suite_list(text):
    names = [part.strip() for part in text.split(",") if part.strip()]
    unknown = [n for n in names if n not in hypersurface.SUITES]
    if unknown or not names:
        known = ", ".join(hypersurface.SUITES)
        raise argparse.ArgumentTypeError(f"unknown suite(s) '{text}', choose from {known}")
    return names


def build_parser():
    common = _ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text", help="certificate format")
    common.add_argument("--timing", action="store_true", help="add wall clock timings to the certificate")

    parser = _ArgumentParser(prog="crwb", description="Exact computations with CR algebras")
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    family = commands.add_parser("family", parents=[common], help="build members of the su(2) family")
    family.add_argument("--k", type=_k_list, required=True, help="k, or a comma separated list")
    family.add_argument("--jobs", type=_positive_int, default=1)
    family.add_argument("--emit-document", action="store_true", help="print the member as an input document")

    freeman = commands.add_parser("freeman", parents=[common], help="Freeman sequence and nondegeneracy order")
    _add_source(freeman)
    freeman.add_argument("--max-steps", type=_positive_int)
    freeman.add_argument("--expect-order", type=_non_negative_int)

    levi = commands.add_parser("levi", parents=[common], help="Levi form of a given order")
    _add_source(levi)
    levi.add_argument("--order", type=int, required=True)
    levi.add_argument("--max-steps", type=_positive_int)

    verify = commands.add_parser("verify-model", parents=[common], help="verify the model hypersurface")
    verify.add_argument("--k", type=_k_list, required=True)
    verify.add_argument("--suites", type=_suite_list, default=list(hypersurface.DEFAULT_SUITES))
    verify.add_argument("--jobs", type=_positive_int, default=1)

    validate = commands.add_parser("validate-doc", parents=[common], help="validate a CR algebra document")
    validate.add_argument("--input", required=True)
    return parser


def _add_source(parser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--k", type=_k_list, help="family member(s)")
    source.add_argument("--input", help="CR algebra document (json or yaml)")
    parser.add_argument("--jobs", type=_positive_int, default=1)


def _sources(args):
    if args.input is not None:
        path, data = read_document(args.input)
        # fail on a bad document before any job starts
        load_document(data, path)
        return [("document", path, data)]
    return [("family", k) for k in args.k]


# -- commands --------------------------------------------------------------------------


def cmd_family(args):
    if args.emit_document:
        if len(args.k) != 1:
            raise UsageError("--emit-document takes a single k")
        k = args.k[0]
        a = su2family.build_family(k).cr_algebra()
        return {"document": dump_document(a, name=f"family_k{k}")}
    return {"results": run_jobs(family_job, args.k, args.jobs, args.timing)}


def cmd_freeman(args):
    max_steps = args.max_steps or get_config()["max_steps"]
    job = functools.partial(freeman_job, max_steps=max_steps, expect_order=args.expect_order)
    return {"results": run_jobs(job, _sources(args), args.jobs, args.timing)}


def cmd_levi(args):
    max_steps = args.max_steps or get_config()["max_steps"]
    job = functools.partial(levi_job, order=args.order, max_steps=max_steps)
    return {"results": run_jobs(job, _sources(args), args.jobs, args.timing)}


def cmd_verify_model(args):
    job = functools.partial(verify_job, suites=tuple(args.suites))
    return {"results": run_jobs(job, args.k, args.jobs, args.timing)}


def cmd_validate_doc(args):
    path, data = read_document(args.input)
    return {"results": run_jobs(document_job, [("document", path, data)], 1, args.timing)}


_COMMANDS = {
    "family": cmd_family,
    "freeman": cmd_freeman,
    "levi": cmd_levi,
    "verify-model": cmd_verify_model,
    "validate-doc": cmd_validate_doc,
}


def _error(msg):
    print(f"✕ {msg}", file=sys.stderr)


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        try:
            get_config()
        except ValueError as err:
            raise UsageError(str(err))
        args = build_parser().parse_args(argv)
        outcome = _COMMANDS[args.command](args)
    except UsageError as err:
        _error(err)
        return EXIT_USAGE
    except PreconditionError as err:
        _error(err)
        return EXIT_USAGE
    except (InvalidDocument, InvalidStructure, DegreeBoundExceeded) as err:
        _error(err)
        return EXIT_INVALID
    except NonStabilization as err:
        _error(err)
        return EXIT_FAILED

    if "document" in outcome:
        print(json.dumps(outcome["document"], sort_keys=True, indent=2, ensure_ascii=False))
        return EXIT_OK

    command, results = args.command, outcome["results"]
    passed = all(r["passed"] for r in results)
    certificate = {"command": command, "argv": argv, "passed": passed, "results": results}
    for result in results:
        print(f"{_mark(result['passed'])} {command} {result['source']}", file=sys.stderr)
    print(render(certificate, args.format))
    return EXIT_OK if passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
