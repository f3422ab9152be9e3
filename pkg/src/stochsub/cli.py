"""Command line front end.

Subcommands: language, matrix, freqs, entropy, sample, check.  Every
subcommand reads a rule from a JSON config (--config) and writes a report to
standard output as TSV (default, 12 significant digits) or JSON (full double
precision).  Exit codes: 0 success, 1 validation or usage error, 2 resource
guard tripped.
"""

from __future__ import annotations

import argparse
import json
import sys

from .entropy import metric_entropy_partial, topological_entropy_partial
from .guards import GuardExceeded
from .induced import induced_mean_matrix
from .language import LanguageTable
from .measure import FrequencyMeasure
from .sampler import DEFAULT_SEED, empirical_frequency, length_tail, sample_iterate
from .spectral import NonConvergence, pf_eigenpair
from .substitution import RuleValidationError, SubstitutionRule


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; here 2 is reserved for guards
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(self._fail(message))

    @staticmethod
    def _fail(message):
        print(f"error: {message}", file=sys.stderr)
        return 1


def _fmt(x: float) -> str:
    return "%.12g" % x


def _emit(report: dict, rows: list[list], fmt: str) -> None:
    """rows drive the TSV output; report is the JSON document."""
    if fmt == "json":
        json.dump(report, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for row in rows:
            cells = [_fmt(c) if isinstance(c, float) else str(c) for c in row]
            sys.stdout.write("\t".join(cells) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stochsub", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", required=True, help="rule config (JSON)")
        p.add_argument("--format", choices=("json", "tsv"), default="tsv")

    p = sub.add_parser("language", help="list the legal words of a length")
    common(p)
    p.add_argument("--ell", type=int, required=True)

    p = sub.add_parser("matrix", help="mean or induced mean matrix, exact")
    common(p)
    p.add_argument("--ell", type=int, default=1)

    p = sub.add_parser("freqs", help="cylinder frequencies of legal words")
    common(p)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--word", help="restrict to one word")

    p = sub.add_parser("entropy", help="entropy partial sums")
    common(p)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument(
        "--flavor", choices=("metric", "topological", "both"), default="both"
    )

    p = sub.add_parser("sample", help="Monte-Carlo iterate sampling")
    common(p)
    p.add_argument("--letter", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--word", help="estimate the frequency of this word")
    p.add_argument("--tail-K", type=float, dest="tail_k", metavar="K",
                   help="estimate P[length < K*n]")

    p = sub.add_parser("check", help="run the invariant suite on a config")
    common(p)

    return parser


def _cmd_language(rule, args):
    words = LanguageTable(rule).words_of_length(args.ell)
    decoded = [rule.alphabet.decode(w) for w in words]
    report = {"ell": args.ell, "count": len(decoded), "words": decoded}
    return report, [[w] for w in decoded]


def _cmd_matrix(rule, args):
    if args.ell < 1:
        raise ValueError("--ell must be >= 1")
    mat = rule.mean_matrix() if args.ell == 1 else induced_mean_matrix(rule, args.ell)
    if args.ell == 1:
        labels = [rule.alphabet.symbol(c) for c in mat.labels]
    else:
        labels = [rule.alphabet.decode(w) for w in mat.labels]
    str_rows = [[f"{x.numerator}/{x.denominator}" if x.denominator != 1 else
                 str(x.numerator) for x in row] for row in mat.rows]
    report = {"ell": args.ell, "labels": labels, "rows": str_rows}
    rows = [["", *labels]]
    rows += [[lab, *line] for lab, line in zip(labels, str_rows)]
    return report, rows


def _cmd_freqs(rule, args):
    if args.ell < 1:
        raise ValueError("--ell must be >= 1")
    fm = FrequencyMeasure(rule)
    if args.word is not None:
        value = fm.cylinder_measure(args.word)
        return {"word": args.word, "measure": value}, [[args.word, value]]
    words, vec = fm.frequency_vector(args.ell)
    decoded = [rule.alphabet.decode(w) for w in words]
    values = [float(v) for v in vec]
    report = {"ell": args.ell,
              "measures": {w: v for w, v in zip(decoded, values)}}
    return report, [[w, v] for w, v in zip(decoded, values)]


def _cmd_entropy(rule, args):
    if args.max_n < 1:
        raise ValueError("--max-n must be >= 1")
    fm = FrequencyMeasure(rule) if args.flavor in ("metric", "both") else None
    entries = []
    rows = []
    for n in range(1, args.max_n + 1):
        entry = {"n": n}
        row = [n]
        if args.flavor in ("metric", "both"):
            entry["metric"] = metric_entropy_partial(fm, n)
            row.append(entry["metric"])
        if args.flavor in ("topological", "both"):
            entry["topological"] = topological_entropy_partial(rule, n)
            row.append(entry["topological"])
        entries.append(entry)
        rows.append(row)
    return {"flavor": args.flavor, "series": entries}, rows


def _cmd_sample(rule, args):
    if args.word is not None:
        stats = empirical_frequency(
            rule, args.letter, args.word, args.n, args.trials, seed=args.seed
        )
        report = {"mode": "frequency", "word": args.word,
                  "estimate": stats.estimate, "stderr": stats.stderr,
                  "trials": stats.trials, "n": stats.depth, "seed": stats.seed}
        return report, [["estimate", stats.estimate], ["stderr", stats.stderr],
                        ["trials", stats.trials], ["n", stats.depth],
                        ["seed", stats.seed]]
    if args.tail_k is not None:
        frac = length_tail(rule, args.letter, args.n, args.tail_k, args.trials,
                           seed=args.seed)
        report = {"mode": "tail", "K": args.tail_k, "fraction": frac,
                  "trials": args.trials, "n": args.n, "seed": args.seed}
        return report, [["fraction", frac]]
    word = sample_iterate(rule, args.letter, args.n, seed=args.seed)
    decoded = rule.alphabet.decode(word)
    report = {"mode": "iterate", "n": args.n, "seed": args.seed,
              "length": len(word), "word": decoded}
    return report, [[decoded], ["length", len(word)]]


def _cmd_check(rule, args):
    """Classification plus the cheap structural identities; each check is a
    (name, ok, detail) row and the overall verdict drives the exit code."""
    checks = []
    primitive, witness = rule.is_primitive()
    checks.append(("primitive", primitive,
                   f"witness power {witness}" if primitive else "no positive power"))
    expanding = rule.is_expanding()
    checks.append(("expanding", True, str(expanding)))
    mat = rule.mean_matrix()
    if primitive:
        pair = pf_eigenpair(mat)
        checks.append(("pf-eigenvalue", True, _fmt(pair.value)))
        checks.append(("expanding-iff-lambda",
                       expanding == (pair.value > 1 + 1e-9),
                       "lambda > 1 matches expanding"))
        # column sums of the mean matrix vs expected image lengths
        sums = mat.column_sums()
        ok = all(sums[c] == rule.expected_image_length(c)
                 for c in range(rule.alphabet.size))
        checks.append(("mean-column-sums", ok, "match expected image lengths"))
        if expanding:
            fm = FrequencyMeasure(rule)
            for ell in (1, 2, 3):
                _, vec = fm.frequency_vector(ell)
                checks.append((f"normalization-ell-{ell}",
                               abs(float(vec.sum()) - 1.0) <= 1e-9,
                               _fmt(float(vec.sum()))))
            res = fm.consistency_residual(1, 3)
            checks.append(("consistency-1-3", res <= 1e-9, _fmt(res)))
            ind = induced_mean_matrix(rule, 2, table=fm.table)
            lam2 = pf_eigenpair(ind).value
            checks.append(("induced-eigenvalue-2",
                           abs(lam2 - pair.value) <= 1e-9, _fmt(lam2)))
            first_sums = {w[0]: s for w, s in zip(ind.labels, ind.column_sums())}
            ok = all(first_sums[c] == rule.expected_image_length(c)
                     for c in first_sums)
            checks.append(("induced-column-sums", ok, "match E|image(u1)|"))
    ok_all = all(ok for _, ok, _ in checks)
    report = {"checks": [{"name": n, "ok": ok, "detail": d}
                         for n, ok, d in checks],
              "ok": ok_all}
    rows = [[n, "pass" if ok else "FAIL", d] for n, ok, d in checks]
    return report, rows, ok_all


_COMMANDS = {
    "language": _cmd_language,
    "matrix": _cmd_matrix,
    "freqs": _cmd_freqs,
    "entropy": _cmd_entropy,
    "sample": _cmd_sample,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        rule = SubstitutionRule.from_file(args.config)
        if args.command == "check":
            report, rows, ok = _cmd_check(rule, args)
            _emit(report, rows, args.format)
            return 0 if ok else 1
        report, rows = _COMMANDS[args.command](rule, args)
        _emit(report, rows, args.format)
        return 0
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RuleValidationError, NonConvergence, OSError, ValueError, KeyError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
