"""Command-line front end.

Exit codes: 0 success (or "yes" for ``recognize``), 1 "no" / not a 2-chain,
2 bad input or size cap exceeded.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import bichain, binseq, counting, coxeter, rchain, splice, verify
from .errors import NotTwoChain, TwoChainError
from .poset import Poset, bits, covers, dual
from .posetfile import format_poset, read_poset

_WORD = re.compile(r"[01]*")


def _fmt_set(elements) -> str:
    return "{" + ",".join(str(x + 1) for x in sorted(elements)) + "}"


def _fmt_shape(shape) -> str:
    return "(" + ",".join(map(str, shape)) + ")"


# -- output formats -------------------------------------------------------------


def render_dot(p: Poset, labels: list[str] | None = None, name: str = "poset") -> str:
    """Hasse diagram as a DOT digraph, edges from lower to upper element."""
    labels = labels or [str(x + 1) for x in range(p.n)]
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
    for x in range(p.n):
        lines.append(f'  v{x + 1} [label="{labels[x]}"];')
    levels: dict[int, list[int]] = {}
    for x, h in enumerate(p.heights):
        levels.setdefault(h, []).append(x)
    for h in sorted(levels):
        members = " ".join(f"v{x + 1};" for x in levels[h])
        lines.append(f"  {{ rank=same; {members} }}")
    for i, j in covers(p):
        lines.append(f"  v{i + 1} -> v{j + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_table(a: str) -> str:
    lab = binseq.seq_poset(a)
    upper = binseq.upper_insertions(a)
    width = len(a) + 1
    rows = [f"{'i':>3}  {'a(i)':<{width}}  {'a[i]':<{width}}  w(i)"]
    for i, s in enumerate(lab.elements):
        rows.append(f"{i:>3}  {s:<{width}}  {upper[i]:<{width}}  {lab.w[i]}")
    return "\n".join(rows) + "\n"


# -- commands -------------------------------------------------------------------


def cmd_from_seq(args) -> int:
    a = binseq.check_word(args.seq)
    lab = binseq.seq_poset(a, check=True)
    if args.format == "covers":
        out = format_poset(lab.order, [f"poset of the word {a!r}" if a else "poset of the empty word"])
    elif args.format == "dot":
        out = render_dot(lab.order, list(lab.elements))
    else:
        out = render_table(a)
    sys.stdout.write(out)
    return 0


def _two_chain_verdict(p: Poset, mode: str) -> bool:
    if mode == "definition":
        return bichain.is_two_chain_by_definition(p)
    if mode == "fast":
        return bichain.is_two_chain_fast(p)
    return bichain.has_two_ideals_each_size(p)


def cmd_recognize(args) -> int:
    p = read_poset(args.file)
    r = args.r
    if r != 2:
        if args.mode != "definition":
            raise TwoChainError(f"only --mode definition is available for r={r}")
        if not rchain.is_r_chain_by_definition(p, r):
            print(f"{r}-chain: no")
            return 1
        print(f"{r}-chain: yes")
        for k, m in enumerate(rchain.unique_chain_cover(p, r), 1):
            print(f"chain {k}: {_fmt_set(bits(m))}")
        return 0
    if not _two_chain_verdict(p, args.mode):
        print("2-chain: no")
        return 1
    cert = bichain.certificate(p)
    print(f"2-chain: yes; canonical sequence {binseq.canonical_sequence(p)}")
    first, second = sorted(cert.decomposition, key=min)
    print(f"chain 1: {_fmt_set(first)}")
    print(f"chain 2: {_fmt_set(second)}")
    if cert.supermaximal is not None:
        print(f"supermaximal: {cert.supermaximal + 1}")
    return 0


def _load(source: str) -> Poset:
    if _WORD.fullmatch(source) and not Path(source).is_file():
        return binseq.seq_poset(source).order
    return read_poset(source)


def cmd_stats(args) -> int:
    p = _load(args.input)
    if not bichain.is_two_chain_fast(p):
        print("not a 2-chain")
        return 1
    a = binseq.canonical_sequence(p)
    rows = [("n", str(p.n)), ("canonical sequence", a or "(empty)")]
    if p.n < 3:
        rows += [("splice shape", "()"), ("counts", "n<3: formulas not applicable")]
    else:
        st = counting.two_chain_stats(p)
        c_formula = counting.cover_count_formula(st.shape)
        l_rec = counting.linear_extension_recurrence(st.shape)
        if c_formula != st.covers or l_rec != st.linear_extensions:
            raise AssertionError(f"formula mismatch for {a!r}")
        rows += [
            ("splice shape", _fmt_shape(st.shape)),
            ("covers", f"{st.covers} (formula {c_formula})"),
            ("linear extensions", f"{st.linear_extensions} (recurrence {l_rec})"),
            ("comparable pairs", str(st.comparable_pairs)),
        ]
    sd = binseq.is_self_dual(a)
    kind = "swaps chains" if sd.swaps_chains else "preserves chains" if sd.preserves_chains else ""
    rows += [
        ("dual canonical sequence", binseq.canonical_sequence(dual(p)) or "(empty)"),
        ("self-dual", f"yes, {kind}" if sd.self_dual else "no"),
        ("coxeter element", coxeter.format_permutation(coxeter.coxeter_from_two_chain(p))),
    ]
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        print(f"{k:<{width}}  {v}")
    return 0


def cmd_enumerate(args) -> int:
    posets = bichain.enumerate_two_chains(args.size)
    for p in posets:
        a = binseq.canonical_sequence(p)
        if args.format == "sequences":
            print(a if a else "(empty)")
        elif args.format == "shapes":
            print(f"{a or '(empty)'}  {_fmt_shape(splice.shape_of_sequence(a))}")
        else:
            sys.stdout.write(format_poset(p, [f"canonical sequence {a or '(empty)'}"]))
    print(f"count: {len(posets)}")
    return 0


def cmd_verify(args) -> int:
    ok = True
    for res in verify.run_suite(args.suite, args.max_n):
        if res.experimental:
            tag = "FINDING agrees" if res.passed else "FINDING differs"
        else:
            tag = "PASS" if res.passed else "FAIL"
            ok &= res.passed
        print(f"{tag}  {res.name}: {res.detail}")
    return 0 if ok else 1


def cmd_qn(args) -> int:
    sys.stdout.write(format_poset(splice.make_qn(args.size, args.r)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twochains", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("from-seq", help="poset of a binary word")
    p.add_argument("seq")
    p.add_argument("--format", choices=("covers", "dot", "table"), default="covers")
    p.set_defaults(func=cmd_from_seq)

    p = sub.add_parser("recognize", help="decide whether a poset file is an r-chain")
    p.add_argument("file")
    p.add_argument("--mode", choices=("definition", "fast", "ideals"), default="fast")
    p.add_argument("--r", type=int, default=2)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("stats", help="counts and invariants of a 2-chain")
    p.add_argument("input", help="binary word or poset file")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("enumerate", help="all 2-chains of one size")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--format", choices=("sequences", "shapes", "covers"), default="sequences")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=(*verify.SUITES, "all"), default="all")
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("qn", help="the poset with i below j iff i <= j - r")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.set_defaults(func=cmd_qn)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotTwoChain as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (TwoChainError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
