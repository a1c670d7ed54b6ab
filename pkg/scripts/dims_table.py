"""Print dimension series of quotient operads next to n-ary Catalan numbers.

    python3 scripts/dims_table.py --arities 3 4 5 --wmax 4
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from operadix.components import dims
from operadix.fields import field_from_tag
from operadix.quadratic import presentation
from operadix.trees import catalan


@dataclass
class DimsConfig:
    arities: list[int] = field(default_factory=lambda: [3, 4, 5])
    families: list[str] = field(default_factory=lambda: ["ta", "pa"])
    degree: int = 0
    wmax: int = 4
    field: str = "q"


def run(cfg: DimsConfig) -> list[dict]:
    fld = field_from_tag(cfg.field)
    rows = []
    for n in cfg.arities:
        for family in cfg.families:
            start = time.perf_counter()
            ds = dims(presentation(family, n, cfg.degree, fld), cfg.wmax)
            rows.append({"family": family, "n": n, "dims": ds,
                         "catalan_n-1": [catalan(n - 1, w) for w in range(cfg.wmax + 1)],
                         "seconds": time.perf_counter() - start})
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--arities", type=int, nargs="+", default=DimsConfig().arities)
    ap.add_argument("--families", nargs="+", default=DimsConfig().families)
    ap.add_argument("--degree", type=int, default=0)
    ap.add_argument("--wmax", type=int, default=4)
    ap.add_argument("--field", default="q")
    cfg = DimsConfig(**vars(ap.parse_args()))
    print(f"{'family':>6} {'n':>2}  dims  | (n-1)-ary Catalan")
    for r in run(cfg):
        print(f"{r['family']:>6} {r['n']:>2}  {r['dims']}  | {r['catalan_n-1']}  "
              f"[{r['seconds']:.2f}s]")


if __name__ == "__main__":
    main()
