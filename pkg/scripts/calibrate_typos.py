#!/usr/bin/env python3
"""Resolve suspect printed coefficients against the grid oracle.

Five spots in the printed contest-transfer conditions look like misprints
(a spurious factor, a repeated phi2 under a square root, a missing square).
Each site is implemented in both readings; this script samples games, finds
every game whose existence verdict differs between the readings, adjudicates
those games with the brute-force oracle, and writes a report justifying the
package default (the corrected reading).

Usage: python3 scripts/calibrate_typos.py [--count 100000] [--seed 2718] \
        [--out-dir calibration]
"""

import argparse
import time
from pathlib import Path

from coalitional_lotto.mutual import (
    TYPO_SITES,
    Mechanism,
    SearchConfig,
    contest_mutual_exists,
)
from coalitional_lotto.oracle import GridSpec, grid_mutual_search
from coalitional_lotto.sweep import SAMPLE_HI, SAMPLE_LO, sample_games

SITE_NOTES = {
    "c2": "route 2.1 second quadratic constant: 4*(x1/x2)*phi2^2 - 4*phi1*phi2 "
    "(printed) vs - phi1*phi2 (corrected)",
    "sqrt33": "route 3.3 upper bound: sqrt(x1*phi2*phi2/x2) (printed) vs "
    "sqrt(x1*phi1*phi2/x2) (corrected)",
    "sqrt77": "routes 4.4/5.8 first quadratic: same square root inside the "
    "linear and constant coefficients",
    "sqrt45": "routes 4.5/5.9 upper bound: same square root",
    "c14": "route 5.11 second quadratic constant: (x1/x2)*(x2*phi2 + "
    "sqrt(x1*x2*phi1*phi2) - phi1*phi2) (printed) vs "
    "(x1/x2)*(x2*phi2 + sqrt(x1*x2*phi1*phi2))^2 - phi1*phi2 (corrected)",
}


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--count", type=int, default=100_000)
    parser.add_argument("--seed", type=int, default=2718)
    parser.add_argument("--out-dir", default="calibration")
    parser.add_argument("--oracle-resolution", type=int, default=8001)
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    spec = GridSpec(args.oracle_resolution, 1e-6)
    corrected_cfg = SearchConfig()

    t0 = time.time()
    games = sample_games(args.count, args.seed)
    corrected = [contest_mutual_exists(g, corrected_cfg).exists for g in games]
    print(f"corrected sweep done ({time.time() - t0:.0f}s)")

    csv_rows = []
    site_summary = {}
    for site in TYPO_SITES:
        site_cfg = SearchConfig(literal_sites=(site,))
        differing = []
        for g, cor in zip(games, corrected):
            lit = contest_mutual_exists(g, site_cfg).exists
            if lit != cor:
                differing.append((g, lit, cor))
        lit_right = cor_right = 0
        for g, lit, cor in differing:
            oracle = grid_mutual_search(g, Mechanism.CONTEST, spec).exists
            if lit == oracle:
                lit_right += 1
            if cor == oracle:
                cor_right += 1
            csv_rows.append(
                f"{site},{g.phi1!r},{g.phi2!r},{g.x1!r},{g.x2!r},"
                f"{int(lit)},{int(cor)},{int(oracle)}"
            )
        site_summary[site] = (len(differing), lit_right, cor_right)
        print(
            f"site {site}: {len(differing)} verdict flips; oracle sides with "
            f"literal {lit_right}, corrected {cor_right}"
        )

    csv_path = out_dir / "typo_calibration.csv"
    with csv_path.open("w") as fh:
        fh.write("# games where one site's literal reading flips the existence verdict\n")
        fh.write(f"# count={args.count} seed={args.seed} box=[{SAMPLE_LO},{SAMPLE_HI}]^4\n")
        fh.write("site,phi1,phi2,x1,x2,literal_exists,corrected_exists,oracle_exists\n")
        for row in csv_rows:
            fh.write(row + "\n")

    md_path = out_dir / "typo_resolution.md"
    with md_path.open("w") as fh:
        fh.write("# Suspect printed coefficients: grid-oracle calibration\n\n")
        fh.write(
            f"Sampled {args.count} games uniformly from "
            f"[{SAMPLE_LO}, {SAMPLE_HI}]^4 (SplitMix64 seed {args.seed}).  For each "
            "suspect site, the table counts games whose contest-transfer existence "
            "verdict flips between the literal and corrected readings, and how many "
            f"of those flips each reading wins against a {args.oracle_resolution}-point "
            "grid oracle with local refinement.\n\n"
        )
        fh.write("| site | verdict flips | literal right | corrected right | resolution |\n")
        fh.write("|------|--------------:|--------------:|----------------:|------------|\n")
        for site in TYPO_SITES:
            n, lit_right, cor_right = site_summary[site]
            if n == 0:
                res = "no verdict-level effect in sample; corrected kept (derivation)"
            elif cor_right == n and lit_right == 0:
                res = "corrected"
            elif lit_right == n and cor_right == 0:
                res = "literal"
            else:
                res = "mixed -- inspect CSV"
            fh.write(f"| {site} | {n} | {lit_right} | {cor_right} | {res} |\n")
        fh.write("\n## Site descriptions\n\n")
        for site in TYPO_SITES:
            fh.write(f"* **{site}** -- {SITE_NOTES[site]}\n")
        fh.write(
            "\nEvery corrected reading was also re-derived by hand from the case-2/"
            "case-3 payoff expressions before calibration; the oracle counts above "
            "are the empirical confirmation.  Differing games are listed in "
            "`typo_calibration.csv`.\n"
        )
    print(f"wrote {md_path} and {csv_path} ({time.time() - t0:.0f}s total)")


if __name__ == "__main__":
    main()
