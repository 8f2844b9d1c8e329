"""
Plain-dict forms of the CLI artifacts.

Certificates and spectrum reports already know their JSON form; the two
table artifacts are assembled here. Integers go out as decimal strings so
that degrees and character values of large n survive any JSON reader.
"""

from utils.input_parser import InputParser


def character_table_payload(shapes, classes, rows, labels=None):
    payload = {
        "n": shapes[0].n if shapes else 0,
        "classes": [rho.to_json() for rho in classes],
        "rows": [
            {"partition": shape.to_json(), "values": [str(value) for value in values]}
            for shape, values in zip(shapes, rows)
        ],
    }
    if labels is not None:
        for row, label in zip(payload["rows"], labels):
            row["label"] = label
    return payload


def classes_payload(n, t, classes):
    return {
        "n": n,
        "t": t,
        "classes": [{"cycleType": rho.to_json(), "size": str(size)} for rho, size in classes],
        "total": str(sum(size for _, size in classes)),
    }


def character_table_rows(shapes, classes, rows, labels=None):
    """One CSV row per shape, one column per cycle type."""
    table = []
    for index, (shape, values) in enumerate(zip(shapes, rows)):
        row = {"partition": str(shape)}
        if labels is not None:
            row["label"] = labels[index]
        row.update({str(rho): str(value) for rho, value in zip(classes, values)})
        table.append(row)
    return table


def spectrum_rows(report):
    fmt = InputParser.format_rational
    return [
        {
            "partition": str(row.partition),
            "degree": str(row.degree),
            "eigenvalue": "" if row.eigenvalue is None else fmt(row.eigenvalue),
            "regime": row.regime,
        }
        for row in report.rows
    ]


def certificate_row(certificate):
    """A certificate flattened to one CSV row; list fields are ';'-joined."""
    data = certificate.to_dict()
    point = data["point"]
    return {
        "n": str(data["n"]),
        "case": data["case"],
        "point": "" if point is None else f"{point['t']},{point['s']}",
        "classes": ";".join(str(rho) for rho in certificate.weighting.classes),
        "omegas": ";".join(data["omegas"]),
        "spectrumDigest": data["spectrumDigest"],
        "minAttainers": ";".join(str(p) for p in certificate.spectrum.min_attainers),
        "bound": data["bound"],
        "boundExpression": data["boundExpression"],
        "chromaticLower": data["chromaticLower"],
        "chromaticUpper": data["chromaticUpper"],
        "verified": str(data["verified"]).lower(),
        "mode": data["mode"],
        "strategy": data["strategy"],
    }


def classes_rows(classes):
    return [{"cycleType": str(rho), "size": str(size)} for rho, size in classes]
