#!/usr/bin/env python3
"""Rewrite the checksum header of embedded data files.

Each file under data/ starts with a line

    # springer-data v1 fnv1a64=<16 hex digits>

where the hash covers every byte after that first line. Run with --check to
verify without rewriting.
"""
import argparse
import pathlib
import sys

HEADER = "# springer-data v1 fnv1a64="


def fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return h


def split(path: pathlib.Path):
    text = path.read_bytes()
    first, _, body = text.partition(b"\n")
    if not first.decode().startswith(HEADER):
        body = text
    return body


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--check", action="store_true")
    ap.add_argument("root", nargs="?", default=pathlib.Path(__file__).resolve().parent.parent / "data")
    args = ap.parse_args()
    bad = 0
    for path in sorted(pathlib.Path(args.root).rglob("*.txt")):
        body = split(path)
        header = f"{HEADER}{fnv1a64(body):016x}\n".encode()
        current = path.read_bytes()
        if current == header + body:
            continue
        if args.check:
            print(f"checksum mismatch: {path}")
            bad += 1
        else:
            path.write_bytes(header + body)
            print(f"updated {path}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
