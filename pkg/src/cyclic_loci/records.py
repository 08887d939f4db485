"""Flat records for atlas output (JSON objects and CSV rows)."""

from __future__ import annotations

import csv
import io
import json

from .hurwitz import BranchingDatum, ComponentLabel, HurwitzDatum, make_label

FIELDS = (
    "g",
    "m",
    "n",
    "g_prime",
    "nu",
    "k",
    "r",
    "aut_orbit_size",
    "psi_degree",
    "etale_part",
    "exponent_modulus",
)


def label_to_record(label: ComponentLabel) -> dict:
    kr = label.canonical_kr
    return {
        "g": label.g,
        "m": label.m,
        "n": label.n,
        "g_prime": label.g_prime,
        "nu": label.nu,
        "k": list(kr.k.exponents),
        "r": list(kr.r),
        "aut_orbit_size": label.aut_orbit_size,
        "psi_degree": label.psi_degree,
        "etale_part": label.etale_part,
        "exponent_modulus": label.exponent_modulus,
    }


def label_from_record(record: dict) -> ComponentLabel:
    """Rebuild a label from its record, recomputing every derived field."""
    n = record["n"]
    kr = BranchingDatum(HurwitzDatum.from_residues(n, record["k"]), tuple(record["r"]))
    return make_label(record["g"], record["m"], record["g_prime"], kr)


def atlas_to_json(labels) -> str:
    """A JSON array with one record per line."""
    rows = [json.dumps(label_to_record(lab)) for lab in labels]
    if not rows:
        return "[]\n"
    return "[\n  " + ",\n  ".join(rows) + "\n]\n"


def atlas_from_json(text: str) -> list[ComponentLabel]:
    return [label_from_record(rec) for rec in json.loads(text)]


def atlas_to_csv(labels) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    for lab in labels:
        rec = label_to_record(lab)
        rec["k"] = ";".join(map(str, rec["k"]))
        rec["r"] = ";".join(map(str, rec["r"]))
        writer.writerow(rec)
    return buf.getvalue()


def atlas_from_csv(text: str) -> list[ComponentLabel]:
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        rec = {f: row[f] for f in FIELDS}
        for f in ("k", "r"):
            rec[f] = [int(x) for x in rec[f].split(";") if x != ""]
        for f in ("g", "m", "n", "g_prime"):
            rec[f] = int(rec[f])
        out.append(label_from_record(rec))
    return out
