"""Symbolic check of partial associativity of the cup product over degree tuples.

Writes one JSON line per degree tuple; exits 3 if any certificate is nonzero.

    python3 scripts/verify_theorems.py --n 3 --max-sum 2
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
import time
from dataclasses import dataclass

from operadix.cochain import theorem_check_symbolic
from operadix.fields import field_from_tag


@dataclass
class VerifyConfig:
    n: int = 3
    max_sum: int = 2
    wcap: int = 6
    field: str = "q"
    out: str | None = None


def run(cfg: VerifyConfig):
    fld = field_from_tag(cfg.field)
    for degrees in itertools.product(range(cfg.max_sum + 1), repeat=2 * cfg.n - 1):
        if sum(degrees) > cfg.max_sum:
            continue
        start = time.perf_counter()
        cert = theorem_check_symbolic(cfg.n, degrees, cfg.wcap, fld)
        yield {"degrees": list(degrees), "weight": cert.weight, "monomials": len(cert.entries),
               "ok": cert.ok, "seconds": round(time.perf_counter() - start, 3)}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=3, choices=[3, 4])
    ap.add_argument("--max-sum", type=int, default=2)
    ap.add_argument("--wcap", type=int, default=6)
    ap.add_argument("--field", default="q")
    ap.add_argument("--out")
    cfg = VerifyConfig(**vars(ap.parse_args()))
    sink = open(cfg.out, "w") if cfg.out else sys.stdout
    failed = 0
    for rec in run(cfg):
        failed += not rec["ok"]
        print(json.dumps(rec), file=sink, flush=True)
    if cfg.out:
        sink.close()
    print(f"{'all certificates zero' if not failed else f'{failed} nonzero certificates'}",
          file=sys.stderr)
    sys.exit(3 if failed else 0)


if __name__ == "__main__":
    main()
