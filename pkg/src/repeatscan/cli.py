"""Command-line interface: query, stats, selftest, and bench."""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

from repeatscan._backend import BACKEND
from repeatscan.engine import ExecPolicy
from repeatscan.llr import build_compact_llr, build_raw_llr, compact_llr_sequential
from repeatscan.oracle import DEFAULT_SIZE_CAP, oracle_all_positions
from repeatscan.query import (
    ALL,
    COMPACT,
    LEFTMOST,
    RAW,
    AllAnswers,
    LeftmostAnswers,
    all_lr_compact,
    all_lr_raw,
    all_positions,
    leftmost_lr_compact,
    leftmost_lr_raw,
    _all_all_positions,
    _leftmost_all_positions,
)
from repeatscan.stats import compute_walk_stats
from repeatscan.suffixes import build_suffix_structures, verify_suffix_structures
from repeatscan.text import Text


class CliError(Exception):
    pass


def resolve_workers(flag_value: int | None) -> int:
    """REPEATSCAN_THREADS overrides --threads; default is hardware parallelism."""
    env = os.environ.get("REPEATSCAN_THREADS")
    if env:
        try:
            workers = int(env)
        except ValueError:
            raise CliError(f"invalid REPEATSCAN_THREADS value {env!r}")
    elif flag_value is not None:
        workers = flag_value
    else:
        workers = os.cpu_count() or 1
    if workers < 1:
        raise CliError(f"worker count must be >= 1, got {workers}")
    return workers


def make_policy(exec_mode: str, threads: int | None) -> ExecPolicy:
    if exec_mode == "seq":
        return ExecPolicy.sequential()
    return ExecPolicy.parallel(resolve_workers(threads))


def leftmost_line(k: int, start: int, length: int) -> str:
    return f"{k}\t{start}\t{length}"


def all_line(k: int, answers: list) -> str:
    if not answers:
        return f"{k}\t-1,0"
    return f"{k}\t" + ";".join(f"{a.start},{a.length}" for a in answers)


def serialize_leftmost(res: LeftmostAnswers, lo: int, hi: int) -> bytes:
    starts = res.starts.tolist()
    lengths = res.lengths.tolist()
    lines = [leftmost_line(k, starts[k], lengths[k]) for k in range(lo, hi + 1)]
    return ("".join(line + "\n" for line in lines)).encode()


def serialize_all(res: AllAnswers, lo: int, hi: int) -> bytes:
    lengths = res.lengths.tolist()
    offsets = res.offsets.tolist()
    flat = res.flat_starts.tolist()
    parts = []
    for k in range(lo, hi + 1):
        length = lengths[k]
        if length == 0:
            parts.append(f"{k}\t-1,0\n")
        else:
            starts = flat[offsets[k] : offsets[k + 1]]
            parts.append(
                f"{k}\t" + ";".join(f"{s},{length}" for s in starts) + "\n"
            )
    return "".join(parts).encode()


def _load_text(args) -> Text:
    path = Path(args.file)
    if not path.is_file():
        raise CliError(f"missing file: {path}")
    return Text.from_file(path, chomp=args.chomp)


def _write_output(args, payload: bytes) -> None:
    if args.output:
        try:
            Path(args.output).write_bytes(payload)
        except OSError as e:
            raise CliError(f"unwritable output {args.output}: {e}")
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()


def _parse_range(spec: str, n: int) -> tuple[int, int]:
    try:
        a_s, b_s = spec.split(":", 1)
        a, b = int(a_s), int(b_s)
    except ValueError:
        raise CliError(f"invalid range {spec!r} (expected A:B)")
    if not (1 <= a <= b <= n):
        raise CliError(f"range {spec} out of range for n={n}")
    return a, b


def cmd_query(args) -> int:
    text = _load_text(args)
    s = build_suffix_structures(text)
    if args.verify and not verify_suffix_structures(text, s):
        raise CliError("suffix structure verification failed")
    policy = make_policy(args.exec, args.threads)
    n = text.n
    if args.pos is not None:
        if not 1 <= args.pos <= n:
            raise CliError(f"position {args.pos} out of range 1..{n}")
        raw = build_raw_llr(s, policy)
        k = args.pos
        if args.path == RAW:
            if args.mode == LEFTMOST:
                ans = leftmost_lr_raw(raw, k)
            else:
                answers = all_lr_raw(raw, k)
        else:
            c = build_compact_llr(raw, policy)
            if args.mode == LEFTMOST:
                ans = leftmost_lr_compact(c, k, n)
            else:
                answers = all_lr_compact(c, k, n)
        if args.mode == LEFTMOST:
            payload = (leftmost_line(k, ans.start, ans.length) + "\n").encode()
        else:
            payload = (all_line(k, answers) + "\n").encode()
        _write_output(args, payload)
        return 0
    lo, hi = 1, n
    if args.range is not None:
        lo, hi = _parse_range(args.range, n)
    res = all_positions(text, mode=args.mode, path=args.path, policy=policy, structures=s)
    if args.mode == LEFTMOST:
        payload = serialize_leftmost(res, lo, hi)
    else:
        payload = serialize_all(res, lo, hi)
    _write_output(args, payload)
    return 0


def cmd_stats(args) -> int:
    text = _load_text(args)
    s = build_suffix_structures(text)
    raw = build_raw_llr(s)
    c = compact_llr_sequential(raw)
    lines = ["path\tmin\tmax\tavg"]
    for path in (RAW, COMPACT):
        st = compute_walk_stats(raw, c, path)
        line = f"{st.path}\t{st.min_steps}\t{st.max_steps}\t{st.avg_steps:.2f}"
        if st.positions == 0:
            line += "\tno repeats"
        lines.append(line)
    _write_output(args, ("".join(l + "\n" for l in lines)).encode())
    return 0


def cmd_selftest(args) -> int:
    text = _load_text(args)
    n = text.n
    if n > args.cap:
        raise CliError(f"oracle size cap exceeded (n={n}, cap={args.cap})")
    s = build_suffix_structures(text)
    if not verify_suffix_structures(text, s):
        raise CliError("suffix structure verification failed")
    expected_left = oracle_all_positions(text, "leftmost")
    expected_all = oracle_all_positions(text, "all")
    for path in (RAW, COMPACT):
        left = all_positions(text, mode=LEFTMOST, path=path, structures=s)
        allr = all_positions(text, mode=ALL, path=path, structures=s)
        for k in range(1, n + 1):
            if left.answer(k) != expected_left[k - 1]:
                raise CliError(
                    f"selftest mismatch: path={path} mode=leftmost k={k} "
                    f"got {left.answer(k)} want {expected_left[k - 1]}"
                )
            if allr.answers(k) != expected_all[k - 1]:
                raise CliError(
                    f"selftest mismatch: path={path} mode=all k={k} "
                    f"got {allr.answers(k)} want {expected_all[k - 1]}"
                )
    print(f"selftest OK (n={n}, paths=raw,compact modes=leftmost,all)")
    return 0


def cmd_bench(args) -> int:
    text = _load_text(args)
    policy = make_policy(args.exec, args.threads)
    t0 = time.perf_counter()
    s = build_suffix_structures(text)
    t_build = time.perf_counter() - t0

    t0 = time.perf_counter()
    raw = build_raw_llr(s, policy)
    t_raw = time.perf_counter() - t0

    t_compact = 0.0
    c = None
    if args.path == COMPACT:
        t0 = time.perf_counter()
        c = build_compact_llr(raw, policy)
        t_compact = time.perf_counter() - t0

    t0 = time.perf_counter()
    if args.mode == LEFTMOST:
        _leftmost_all_positions(s.n, args.path, raw, c, policy)
    else:
        _all_all_positions(s.n, args.path, raw, c, policy)
    t_query = time.perf_counter() - t0

    total = t_raw + t_compact + t_query
    if args.include_build:
        total += t_build
    report = {
        "dataset": Path(args.file).name,
        "n": text.n,
        "sigma": text.sigma,
        "mode": args.mode,
        "path": args.path,
        "exec": args.exec,
        "workers": policy.workers,
        "backend": BACKEND,
        "build_seconds": f"{t_build:.6f}",
        "raw_llr_seconds": f"{t_raw:.6f}",
        "compaction_seconds": f"{t_compact:.6f}",
        "query_seconds": f"{t_query:.6f}",
        "total_seconds": f"{total:.6f}",
        "include_build": str(args.include_build).lower(),
    }
    payload = "".join(f"{k}={v}\n" for k, v in report.items()).encode()
    _write_output(args, payload)
    return 0


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", help="input file (raw bytes)")
    p.add_argument("--chomp", action="store_true", help="strip one trailing newline")
    p.add_argument("--output", help="write results to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repeatscan",
        description="Longest repeated substrings covering every text position",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    q = sub.add_parser("query", help="per-position longest-repeat answers")
    _add_common(q)
    q.add_argument("--mode", choices=[LEFTMOST, ALL], default=LEFTMOST)
    q.add_argument("--path", choices=[RAW, COMPACT], default=COMPACT)
    q.add_argument("--exec", choices=["seq", "par"], default="seq")
    q.add_argument("--threads", type=int, default=None)
    q.add_argument("--pos", type=int, default=None, help="single 1-based position")
    q.add_argument("--range", default=None, help="inclusive 1-based range A:B")
    q.add_argument("--verify", action="store_true", help="self-check suffix structures")
    q.set_defaults(func=cmd_query)

    st = sub.add_parser("stats", help="walk-step statistics for both paths")
    _add_common(st)
    st.set_defaults(func=cmd_stats)

    se = sub.add_parser("selftest", help="compare against the brute-force oracle")
    _add_common(se)
    se.add_argument("--cap", type=int, default=DEFAULT_SIZE_CAP)
    se.set_defaults(func=cmd_selftest)

    b = sub.add_parser("bench", help="timing report as key=value lines")
    _add_common(b)
    b.add_argument("--mode", choices=[LEFTMOST, ALL], default=LEFTMOST)
    b.add_argument("--path", choices=[RAW, COMPACT], default=COMPACT)
    b.add_argument("--exec", choices=["seq", "par"], default="seq")
    b.add_argument("--threads", type=int, default=None)
    b.add_argument("--include-build", action="store_true")
    b.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except IndexError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
