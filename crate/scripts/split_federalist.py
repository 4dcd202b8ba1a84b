#!/usr/bin/env python3
"""Split a plain-text edition of The Federalist Papers into per-essay files.

Input: the Project Gutenberg plain-text edition (one file, essays delimited
by "FEDERALIST No. <k>" headings, each essay body starting after the
"To the People of the State of New York" salutation).

Output layout (essays 1-77, the set studied in the classical
Mosteller-Wallace attribution problem):

    <out>/corpora/hamilton/fedNNN.txt   43 essays of known Hamilton authorship
    <out>/corpora/madison/fedNNN.txt    14 essays of known Madison authorship
    <out>/corpora/jay/fedNNN.txt         5 essays of known Jay authorship
    <out>/disputed/fedNNN.txt           12 disputed essays (49-58, 62, 63)

Essays 18-20 (joint Hamilton/Madison) and 78-85 are omitted. Headings,
dates, and attribution lines are stripped so that document text carries no
authorship markers.
"""

import argparse
import re
import sys
from pathlib import Path

HAMILTON = {1, 6, 7, 8, 9, 11, 12, 13, 15, 16, 17, 21, 22, 23, 24, 25,
            26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 59, 60, 61,
            65, 66, 67, 68, 69, 70, 71, 72, 73, 74, 75, 76, 77}
MADISON = {10, 14, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48}
JAY = {2, 3, 4, 5, 64}
DISPUTED = {49, 50, 51, 52, 53, 54, 55, 56, 57, 58, 62, 63}

HEADING = re.compile(r"FEDERALIST No\.?\s*(\d+)")
SALUTATION = "To the People of the State of New York"
FOOTER = re.compile(r"^(\*\*\* END OF|End of the Project Gutenberg)")


def split_essays(raw: str):
    essays = {}
    current = None
    in_body = False
    for line in raw.splitlines():
        m = HEADING.search(line)
        if m:
            current = int(m.group(1))
            essays[current] = []
            in_body = False
            continue
        if current is None:
            continue
        if FOOTER.search(line):
            current = None
            continue
        if not in_body:
            if SALUTATION in line:
                in_body = True
            continue
        essays[current].append(line)
    return {no: "\n".join(lines).strip() + "\n" for no, lines in essays.items()}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("input", type=Path, help="raw Federalist Papers text file")
    ap.add_argument("out", type=Path, help="output directory")
    args = ap.parse_args()

    raw = args.input.read_text(encoding="utf-8-sig")
    essays = split_essays(raw)

    missing = [no for no in range(1, 78) if no not in essays or not essays[no].strip()]
    if missing:
        sys.exit(f"error: essays not found or empty: {missing}")

    groups = [("corpora/hamilton", HAMILTON), ("corpora/madison", MADISON),
              ("corpora/jay", JAY), ("disputed", DISPUTED)]
    for rel, numbers in groups:
        d = args.out / rel
        d.mkdir(parents=True, exist_ok=True)
        for no in sorted(numbers):
            (d / f"fed{no:03d}.txt").write_text(essays[no], encoding="utf-8")
        print(f"{rel}: {len(numbers)} essays")


if __name__ == "__main__":
    main()
