#!/usr/bin/env python3
"""Writes the illustrative CSV inputs under samples/.

The numbers are generated, not observed: magnitudes resemble Peru's export
partners but no value is a published statistic.
"""
import csv
import math
import pathlib
import random

OUT = pathlib.Path(__file__).resolve().parent.parent / "samples"
YEARS = range(2004, 2016)

# partner: (distance_km, language, border, gdp_2004_bn, gdppc_2004, fx_2004)
PARTNERS = {
    "USA": (5650, 0, 0, 12200, 41900, 1.0),
    "CHN": (16700, 0, 0, 1950, 1500, 8.28),
    "CHE": (10300, 0, 0, 400, 54000, 1.24),
    "CAN": (6300, 0, 0, 1020, 31900, 1.30),
    "KOR": (16800, 0, 0, 790, 16500, 1145.0),
    "JPN": (15500, 0, 0, 4810, 37700, 108.2),
    "BRA": (3160, 0, 1, 670, 3600, 2.93),
    "CHL": (2460, 1, 1, 100, 6200, 609.5),
    "ESP": (9500, 1, 0, 1070, 24900, 0.80),
    "DEU": (10600, 0, 0, 2810, 34100, 0.80),
    "ITA": (10800, 0, 0, 1800, 31000, 0.80),
    "IND": (16800, 0, 0, 710, 620, 45.3),
    "MEX": (4240, 1, 0, 780, 7300, 11.29),
    "ECU": (1320, 1, 1, 36, 2700, 1.0),
    "COL": (1880, 1, 1, 117, 2700, 2628.0),
    "BOL": (1070, 1, 1, 8.8, 980, 7.94),
    "ARG": (3150, 1, 0, 165, 4250, 2.92),
    "NLD": (10400, 0, 0, 650, 39700, 0.80),
    "GBR": (10200, 0, 0, 2420, 40300, 0.55),
    "BEL": (10300, 0, 0, 390, 36800, 0.80),
    "VEN": (2740, 1, 0, 112, 4300, 1891.0),
    "PAN": (2350, 1, 0, 16, 4900, 1.0),
    "FRA": (10200, 0, 0, 2120, 33800, 0.80),
    "URY": (3200, 1, 0, 13.7, 4100, 28.7),
}

MEMBERSHIPS = [
    ("APEC", "PER", 1998, "member"), ("APEC", "USA", 1989, "member"), ("APEC", "CHN", 1991, "member"),
    ("APEC", "CAN", 1989, "member"), ("APEC", "KOR", 1989, "member"), ("APEC", "JPN", 1989, "member"),
    ("APEC", "CHL", 1994, "member"), ("APEC", "MEX", 1993, "member"),
    ("CAN", "PER", 1969, "member"), ("CAN", "ECU", 1969, "member"), ("CAN", "COL", 1969, "member"),
    ("CAN", "BOL", 1969, "member"),
    ("MERCOSUR", "PER", 2003, "associate"), ("MERCOSUR", "BRA", 1991, "member"),
    ("MERCOSUR", "ARG", 1991, "member"), ("MERCOSUR", "URY", 1991, "member"),
    ("MERCOSUR", "CHL", 1996, "associate"), ("MERCOSUR", "BOL", 1996, "associate"),
    ("MERCOSUR", "COL", 2004, "associate"), ("MERCOSUR", "ECU", 2004, "associate"),
    ("MERCOSUR", "VEN", 2012, "member"),
]


def main():
    rng = random.Random(20160101)
    OUT.mkdir(exist_ok=True)
    peru = {"gdp": 66.0, "gdppc": 2450.0, "fx": 3.41, "cpi": 78.0, "infl": 0.037}
    series = {}
    for code, (_, _, _, gdp, gdppc, fx) in list(PARTNERS.items()) + [("PER", (0, 0, 0, 66.0, 2450.0, 3.41))]:
        g = 0.03 + 0.04 * rng.random()
        cpi, level = 80.0 + 10 * rng.random(), 1.0
        rows = {}
        for y in YEARS:
            level *= math.exp(g + 0.03 * rng.gauss(0, 1))
            infl = max(-0.01, 0.03 + 0.02 * rng.gauss(0, 1))
            cpi *= 1.0 + infl
            rows[y] = {
                "gdp_usd": gdp * 1e9 * level,
                "gnipc_usd": gdppc * level * (0.95 + 0.03 * rng.random()),
                "gdppc_usd": gdppc * level,
                "fx_rate": fx * math.exp(0.05 * rng.gauss(0, 1)),
                "cpi_index": cpi,
                "inflation_rate": infl,
            }
        series[code] = rows

    with open(OUT / "indicators.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["country", "year", "indicator", "value"])
        for code in ["PER"] + sorted(PARTNERS):
            for y in YEARS:
                for k, v in series[code][y].items():
                    w.writerow([code, y, k, f"{v:.6g}" if k != "gdp_usd" else f"{v:.0f}"])

    with open(OUT / "pair_static.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["partner", "distance_km", "common_language", "common_border"])
        for code, (dist, lang, border, *_rest) in sorted(PARTNERS.items()):
            w.writerow([code, dist, lang, border])

    with open(OUT / "memberships.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["organization", "country", "accession_year", "status"])
        w.writerows(MEMBERSHIPS)

    effect = {code: 0.6 * rng.gauss(0, 1) for code in PARTNERS}
    with open(OUT / "trade.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["reporter", "partner", "year", "export_value_usd"])
        for code, (dist, lang, border, *_rest) in sorted(PARTNERS.items()):
            for y in YEARS:
                p, q = series["PER"][y], series[code][y]
                ln_x = (-14.0 + 0.9 * math.log(q["gdp_usd"]) + 0.7 * math.log(p["gdp_usd"])
                        - 1.1 * math.log(dist) + 0.3 * lang + 0.2 * border
                        - 0.1 * math.log(abs(p["gdppc_usd"] - q["gdppc_usd"]))
                        + effect[code] + 0.25 * rng.gauss(0, 1))
                w.writerow(["PER", code, y, f"{math.exp(ln_x):.0f}"])


if __name__ == "__main__":
    main()
