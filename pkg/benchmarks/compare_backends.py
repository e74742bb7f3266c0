#!/usr/bin/env python3
"""Compare the numba kernels against the pure-numpy fallback.

Generates a random DNA-like input, then runs `repeatscan bench` in a
subprocess per backend (the backend is fixed at import time via
REPEATSCAN_BACKEND) and prints both reports side by side.

Usage: python benchmarks/compare_backends.py [--size N] [--mode leftmost|all]
       [--path raw|compact] [--exec seq|par] [--threads N]
"""

import argparse
import os
import subprocess
import sys
import tempfile

import numpy as np


def run_bench(backend: str, path: str, args) -> dict:
    cmd = [
        sys.executable, "-m", "repeatscan", "bench",
        "--mode", args.mode, "--path", args.path, "--exec", args.exec,
    ]
    if args.threads:
        cmd += ["--threads", str(args.threads)]
    cmd.append(path)
    proc = subprocess.run(
        cmd,
        capture_output=True,
        text=True,
        env={**os.environ, "REPEATSCAN_BACKEND": backend},
    )
    if proc.returncode != 0:
        raise SystemExit(f"bench failed for backend {backend}: {proc.stderr}")
    return dict(line.split("=", 1) for line in proc.stdout.splitlines())


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=1_000_000)
    parser.add_argument("--mode", choices=["leftmost", "all"], default="leftmost")
    parser.add_argument("--path", choices=["raw", "compact"], default="compact")
    parser.add_argument("--exec", choices=["seq", "par"], default="seq")
    parser.add_argument("--threads", type=int, default=None)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    data = rng.choice(np.frombuffer(b"acgt", np.uint8), size=args.size).tobytes()
    with tempfile.NamedTemporaryFile(suffix=".txt", delete=False) as f:
        f.write(data)
        path = f.name
    try:
        reports = {b: run_bench(b, path, args) for b in ("numpy", "numba")}
    finally:
        os.unlink(path)

    keys = [
        "n", "mode", "path", "exec", "workers",
        "build_seconds", "raw_llr_seconds", "compaction_seconds",
        "query_seconds", "total_seconds",
    ]
    print(f"{'key':<20} {'numpy':>14} {'numba':>14}")
    for k in keys:
        print(f"{k:<20} {reports['numpy'][k]:>14} {reports['numba'][k]:>14}")
    speedup = float(reports["numpy"]["total_seconds"]) / max(
        float(reports["numba"]["total_seconds"]), 1e-12
    )
    print(f"\nnumba speedup on total (excl. build): {speedup:.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
