#!/usr/bin/env python3
"""Regenerates the synthetic CSV fixtures under data/.

All series are hand-built so their aggregates are known in closed form;
none of them is measured data.
"""
import math
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent / "data"


def ts(day, hour):
    return f"2023-{day}T{hour:02d}:00:00Z"


def write(path, header, rows):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as f:
        f.write(",".join(header) + "\n")
        for r in rows:
            f.write(",".join(str(v) for v in r) + "\n")


def fmt(x):
    return repr(round(x, 6))


def toy():
    rows = [
        (ts("01-01", 0), 500, 0, 500),
        (ts("01-01", 1), 450, 50, 500),
        (ts("01-01", 2), 400, 120, 480),
    ]
    write(ROOT / "regions" / "toy.csv", ["timestamp", "wind", "solar", "coal"], rows)


def south_australia():
    # Every hour: 1000 MWh with solar+wind 660.7, gas 200, coal 27.67,
    # hydro 111.63. Solar follows a daylight bump, wind fills the rest.
    rows = []
    for h in range(24):
        solar = max(0.0, 400.0 * math.sin(math.pi * (h - 6) / 12.0)) if 6 <= h <= 18 else 0.0
        solar = round(solar, 3)
        wind = round(660.7 - solar, 3)
        rows.append((ts("10-01", h), fmt(solar), fmt(wind), 200, 27.67, 111.63))
    write(
        ROOT / "south-australia" / "south-australia.csv",
        ["timestamp", "solar", "wind", "gas", "coal", "hydro"],
        rows,
    )


def caiso_like():
    # Hour 20: coal 200, hydro 300, wind 500 -> total CI 200, residual 400.
    # Hour 12: coal 234.74, hydro 370.26, solar 1335 -> 121 and 388.
    # Others: coal 200, hydro 300, solar+wind in (500, 1100) -> (125, 200) and 400.
    rows = []
    for h in range(24):
        if h == 20:
            coal, hydro, solar, wind = 200, 300, 0, 500
        elif h == 12:
            coal, hydro, solar, wind = 234.74, 370.26, 1335, 0
        else:
            renew = 520 + 20 * h if h < 12 else 1060 - 25 * (h - 12)
            solar = 0 if h < 7 or h > 18 else min(renew - 100, 60 * (h - 6))
            wind = renew - solar
            coal, hydro = 200, 300
        rows.append((ts("06-15", h), coal, hydro, solar, wind))
    write(
        ROOT / "caiso-like" / "caiso-like.csv",
        ["timestamp", "coal", "hydro", "solar", "wind"],
        rows,
    )


def discrepancy_signals():
    # Hours 11-20 average 75.7 reported and 194.5 actual.
    reported, actual = [], []
    for h in range(24):
        inside = 11 <= h <= 20
        reported.append((ts("06-15", h), 75.7 if inside else 150 + 2 * h))
        actual.append((ts("06-15", h), 194.5 if inside else 260 + h))
    write(ROOT / "signals" / "reported.csv", ["timestamp", "ci_g_per_kwh"], reported)
    write(ROOT / "signals" / "actual.csv", ["timestamp", "ci_g_per_kwh"], actual)


FLEET = {
    # region: rows of (solar, wind, other-column values), header per region
    "alpha": (["solar", "wind", "gas"], [(100, 100, 800), (0, 300, 700)]),
    "beta": (["solar", "wind", "coal"], [(50, 0, 950), (0, 50, 950)]),
    "gamma": (["wind", "hydro"], [(600, 400), (400, 600)]),
    "delta": (["solar", "nuclear"], [(300, 700), (100, 400)]),
    "epsilon": (["wind", "gas", "oil"], [(250, 750, 0), (250, 0, 750)]),
}


def fleet():
    for name, (cols, rows) in FLEET.items():
        out = [(ts("03-01", i),) + tuple(r) for i, r in enumerate(rows)]
        write(ROOT / "fleet" / f"{name}.csv", ["timestamp"] + cols, out)


if __name__ == "__main__":
    toy()
    south_australia()
    caiso_like()
    discrepancy_signals()
    fleet()
