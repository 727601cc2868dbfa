#!/usr/bin/env python3
"""Regenerates the bundled toy worlds under data/.

Three fixtures:
  data/toy        six heterogeneous countries in two regions, sectoral benchmarks
  data/homog      four identical-income countries, linear aggregate damages
  data/divergent  extreme benchmarks that push NSCCs into the clamp and a
                  shrinking country that hits the population/income floors

The CSVs are committed; rerun this script only when changing the fixtures.
"""

import json
import os

BASE_YEAR = 2019
LAST_SCENARIO_YEAR = 2100
ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")

SECTORS = [
    "agriculture", "cooling", "heating", "hurricanes", "extratropical_storms",
    "forests", "water", "cardiovascular", "respiratory", "diarrhoea",
    "vector_borne", "biodiversity", "slr_dryland", "slr_wetland",
    "slr_protection", "slr_migration",
]


def fmt(x):
    if isinstance(x, int):
        return str(x)
    return format(x, ".17g")


def write_csv(path, header, rows):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as f:
        f.write(",".join(header) + "\n")
        for row in rows:
            f.write(",".join(fmt(c) if not isinstance(c, str) else c for c in row) + "\n")


def write_series(path, values_by_iso):
    """values_by_iso: iso -> callable(year) -> value, emitted annually."""
    rows = []
    for iso in sorted(values_by_iso):
        fn = values_by_iso[iso]
        for year in range(BASE_YEAR, LAST_SCENARIO_YEAR + 1):
            rows.append([iso, year, fn(year)])
    write_csv(path, ["iso", "year", "value"], rows)


def constant(v):
    return lambda year: v


def growing(v0, rate):
    return lambda year: v0 * (1.0 + rate) ** (year - BASE_YEAR)


def write_config(path, cfg):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as f:
        json.dump(cfg, f, indent=2, sort_keys=True)
        f.write("\n")


# ---------------------------------------------------------------- toy world

TOY_COUNTRIES = [
    # iso, name, region, pop, gdp, temp, coast, wetland, dryland, urban, pattern
    ["ALP", "Alpinia",   "RA", 50e6,  2.5e12,  8.0,  2000,  5000,  150000, 0.80, 1.4],
    ["BOR", "Borealia",  "RA", 100e6, 3.0e12,  5.0,  8000,  20000, 800000, 0.75, 1.8],
    ["NOR", "Nordhavn",  "RA", 20e6,  1.2e12,  3.0,  15000, 8000,  200000, 0.85, 1.6],
    ["CAL", "Caloria",   "RB", 800e6, 2.0e12,  26.0, 6000,  30000, 2000000, 0.35, 1.0],
    ["DEL", "Deltania",  "RB", 300e6, 1.5e12,  24.0, 4000,  15000, 1000000, 0.45, 1.05],
    ["EQA", "Equatoria", "RB", 150e6, 0.45e12, 28.0, 1000,  10000, 500000, 0.30, 0.95],
]

# Regional benchmark impacts at 2.5 degC warming, in US$ (positive = damage),
# expressed here as shares of regional base GDP for readability.
TOY_RA_GDP = 6.7e12
TOY_RB_GDP = 3.95e12
TOY_BENCHMARKS = {
    "RA": {
        "agriculture": -0.0005, "cooling": 0.003, "heating": -0.001,
        "hurricanes": 0.0008, "extratropical_storms": 0.001, "forests": 0.0003,
        "water": 0.002, "cardiovascular": 0.0025, "respiratory": 0.001,
        "diarrhoea": 0.0001, "vector_borne": 0.0003, "biodiversity": 0.003,
        "slr_dryland": 0.0015, "slr_wetland": 0.001, "slr_protection": 0.002,
        "slr_migration": 0.0005,
    },
    "RB": {
        "agriculture": 0.012, "cooling": 0.005, "heating": -0.0005,
        "hurricanes": 0.002, "extratropical_storms": 0.0005, "forests": 0.001,
        "water": 0.006, "cardiovascular": 0.003, "respiratory": 0.002,
        "diarrhoea": 0.005, "vector_borne": 0.004, "biodiversity": 0.001,
        "slr_dryland": 0.004, "slr_wetland": 0.003, "slr_protection": 0.005,
        "slr_migration": 0.002,
    },
}

TOY_POP_GROWTH = {"ALP": 0.002, "BOR": 0.002, "NOR": 0.002,
                  "CAL": 0.008, "DEL": 0.010, "EQA": 0.012}
# Initial TFP growth rates; each path decays by 2% per year so growth tapers
# off over the century instead of compounding forever.
TOY_TFP_GROWTH = {"ALP": 0.008, "BOR": 0.010, "NOR": 0.006,
                  "CAL": 0.025, "DEL": 0.022, "EQA": 0.028}
TFP_DECAY = 0.98


def tapering(g0):
    return lambda year: g0 * TFP_DECAY ** (year - BASE_YEAR)
TOY_SAVINGS = {"ALP": 0.22, "BOR": 0.22, "NOR": 0.22,
               "CAL": 0.25, "DEL": 0.25, "EQA": 0.25}


def scenario_block(prefix):
    return {
        "population": prefix + "population.csv",
        "tfp_growth": prefix + "tfp_growth.csv",
        "savings_rate": prefix + "savings_rate.csv",
        "intensity_co2": prefix + "intensity_co2.csv",
        "intensity_ch4": prefix + "intensity_ch4.csv",
        "intensity_n2o": prefix + "intensity_n2o.csv",
        "intensity_sf6": prefix + "intensity_sf6.csv",
        "intensity_so2": prefix + "intensity_so2.csv",
        "cfc11": prefix + "cfc11.csv",
        "cfc12": prefix + "cfc12.csv",
    }


def make_toy():
    d = os.path.join(ROOT, "toy")
    write_csv(os.path.join(d, "countries.csv"),
              ["iso", "name", "region", "pop", "gdp", "temp", "coast_km",
               "wetland_km2", "dryland_km2", "urban_share", "temp_pattern"],
              TOY_COUNTRIES)

    rows = []
    for region, shares in sorted(TOY_BENCHMARKS.items()):
        gdp = TOY_RA_GDP if region == "RA" else TOY_RB_GDP
        for sector in SECTORS:
            rows.append([region, sector, shares[sector] * gdp])
    write_csv(os.path.join(d, "benchmarks.csv"),
              ["region", "sector", "impact_usd_at_2p5C"], rows)

    isos = [c[0] for c in TOY_COUNTRIES]
    pops = {c[0]: c[3] for c in TOY_COUNTRIES}
    write_series(os.path.join(d, "population.csv"),
                 {iso: growing(pops[iso], TOY_POP_GROWTH[iso]) for iso in isos})
    write_series(os.path.join(d, "tfp_growth.csv"),
                 {iso: tapering(TOY_TFP_GROWTH[iso]) for iso in isos})
    write_series(os.path.join(d, "savings_rate.csv"),
                 {iso: constant(TOY_SAVINGS[iso]) for iso in isos})
    write_series(os.path.join(d, "intensity_co2.csv"), {iso: constant(-0.015) for iso in isos})
    write_series(os.path.join(d, "intensity_ch4.csv"), {iso: constant(-0.020) for iso in isos})
    write_series(os.path.join(d, "intensity_n2o.csv"), {iso: constant(-0.015) for iso in isos})
    write_series(os.path.join(d, "intensity_sf6.csv"), {iso: constant(-0.010) for iso in isos})
    write_series(os.path.join(d, "intensity_so2.csv"), {iso: constant(-0.020) for iso in isos})
    write_series(os.path.join(d, "cfc11.csv"), {"WLD": growing(220.0, -0.005)})
    write_series(os.path.join(d, "cfc12.csv"), {"WLD": growing(490.0, -0.004)})

    write_config(os.path.join(d, "config.json"), {
        "run_name": "toy",
        "output_dir": "out",
        "inputs": {
            "countries": "countries.csv",
            "benchmarks": "benchmarks.csv",
            "scenario": scenario_block(""),
        },
        "base_year": BASE_YEAR,
        "horizon": 2200,
        "eval_years": [2025, 2100],
        "initial_climate": {"co2_ppm": 410.0, "ch4_ppb": 1866.0, "n2o_ppb": 332.0,
                             "sf6_ppt": 10.0, "t_global": 1.1},
        "world_base_emissions": {"co2_gtc": 10.0, "ch4_mt": 380.0, "n2o_mt": 10.0,
                                  "sf6_kt": 9.0, "so2_mts": 40.0},
        "world_reference_totals": {"pop": 1.42e9, "gdp": 10.65e12},
        "preferences": {"prtp": 0.03, "rra": 1.0},
        "preference_grid": [[0.01, 1.0], [0.03, 1.0], [0.03, 2.0]],
        "discounting": "national",
        "epsilon": 0.0,
        "damage_model": {"kind": "sectoral"},
        "pulse": {"size_gtc": 0.001, "gas": "co2"},
        "uncertainty": {"draws": 60, "seed": 42, "ecs_median": 3.0,
                         "ecs_sigma_log": 0.25, "alpha_relative_sd": 0.3,
                         "alpha_min_multiplier": 0.0, "alpha_max_multiplier": 3.0,
                         "population_growth_persistence": 0.9,
                         "population_growth_sd": 0.002,
                         "max_failed_draw_fraction": 0.01},
        "scenario_options": {"interpolate_gaps": True,
                              "extrapolation": {"intensity_rate": "constant-level"}},
        "threads": 0,
    })


# ------------------------------------------------------------- homog world
# Four countries with identical per-capita income, temperature pattern 1.0,
# identical dyadic-rational drivers, and a linear aggregate damage form: the
# single-region model then reproduces the sum of national values exactly.

HOMOG_COUNTRIES = [
    ["HOA", "Homog A", "HR", 100e6, 1.0e12, 15.0, 1000, 1000, 100000, 0.5, 1.0],
    ["HOB", "Homog B", "HR", 200e6, 2.0e12, 15.0, 1000, 1000, 100000, 0.5, 1.0],
    ["HOC", "Homog C", "HR", 50e6,  0.5e12, 15.0, 1000, 1000, 100000, 0.5, 1.0],
    ["HOD", "Homog D", "HR", 400e6, 4.0e12, 15.0, 1000, 1000, 100000, 0.5, 1.0],
]


def make_homog():
    d = os.path.join(ROOT, "homog")
    write_csv(os.path.join(d, "countries.csv"),
              ["iso", "name", "region", "pop", "gdp", "temp", "coast_km",
               "wetland_km2", "dryland_km2", "urban_share", "temp_pattern"],
              HOMOG_COUNTRIES)

    isos = [c[0] for c in HOMOG_COUNTRIES]
    pops = {c[0]: c[3] for c in HOMOG_COUNTRIES}
    write_series(os.path.join(d, "population.csv"),
                 {iso: constant(pops[iso]) for iso in isos})
    write_series(os.path.join(d, "tfp_growth.csv"), {iso: constant(0.015625) for iso in isos})
    write_series(os.path.join(d, "savings_rate.csv"), {iso: constant(0.25) for iso in isos})
    write_series(os.path.join(d, "intensity_co2.csv"), {iso: constant(-0.0078125) for iso in isos})
    for gas in ["ch4", "n2o", "sf6", "so2"]:
        write_series(os.path.join(d, "intensity_%s.csv" % gas),
                     {iso: constant(0.0) for iso in isos})
    write_series(os.path.join(d, "cfc11.csv"), {"WLD": constant(0.0)})
    write_series(os.path.join(d, "cfc12.csv"), {"WLD": constant(0.0)})

    write_config(os.path.join(d, "config.json"), {
        "run_name": "homog",
        "output_dir": "out",
        "inputs": {
            "countries": "countries.csv",
            "benchmarks": "",
            "scenario": scenario_block(""),
        },
        "base_year": BASE_YEAR,
        "horizon": 2200,
        "eval_years": [2025],
        "initial_climate": {"co2_ppm": 410.0, "ch4_ppb": 722.0, "n2o_ppb": 270.0,
                             "sf6_ppt": 0.0, "t_global": 1.0},
        "world_base_emissions": {"co2_gtc": 10.0, "ch4_mt": 0.0, "n2o_mt": 0.0,
                                  "sf6_kt": 0.0, "so2_mts": 0.0},
        "world_reference_totals": {"pop": 750e6, "gdp": 7.5e12},
        "preferences": {"prtp": 0.03, "rra": 0.0},
        "preference_grid": [[0.03, 0.0]],
        "discounting": "national",
        "epsilon": 0.0,
        "damage_model": {"kind": "hope", "aggregate_is_market": True},
        "pulse": {"size_gtc": 1.0, "gas": "co2"},
        "uncertainty": {"draws": 0, "seed": 1, "ecs_median": 3.0,
                         "ecs_sigma_log": 0.25, "alpha_relative_sd": 0.0,
                         "alpha_min_multiplier": 0.0, "alpha_max_multiplier": 3.0,
                         "population_growth_persistence": 0.9,
                         "population_growth_sd": 0.0,
                         "max_failed_draw_fraction": 0.01},
        "scenario_options": {"interpolate_gaps": True,
                              "extrapolation": {"intensity_rate": "constant-level"}},
        "threads": 0,
    })


# --------------------------------------------------------- divergent world
# DIV carries an enormous non-market biodiversity benchmark (clamps at +200
# without feeding back on output); BEN carries an enormous market heating
# benefit (clamps at -200; negative damages never annihilate the economy);
# TIN shrinks until the population and income floors bind.

DIVERGENT_COUNTRIES = [
    ["DIV", "Divergia", "DA", 500e6, 1.0e12, 25.0, 2000, 5000, 500000, 0.5, 1.0],
    ["TIN", "Tinystan", "DA", 2500,  3.0e5,  22.0, 10,   10,   1000,   0.4, 1.0],
    ["BEN", "Benefica", "DB", 100e6, 3.0e12, 5.0,  3000, 8000, 400000, 0.8, 1.2],
]

DIVERGENT_BENCHMARKS = {
    "DA": {"biodiversity": 1.5e14},
    "DB": {"heating": -1.5e14},
}
DIVERGENT_DEFAULT_BENCH = {
    "DA": 1.0e9,   # small positive damages elsewhere
    "DB": 3.0e9,
}


def make_divergent():
    d = os.path.join(ROOT, "divergent")
    write_csv(os.path.join(d, "countries.csv"),
              ["iso", "name", "region", "pop", "gdp", "temp", "coast_km",
               "wetland_km2", "dryland_km2", "urban_share", "temp_pattern"],
              DIVERGENT_COUNTRIES)

    rows = []
    for region in sorted(DIVERGENT_BENCHMARKS):
        for sector in SECTORS:
            value = DIVERGENT_BENCHMARKS[region].get(sector,
                                                     DIVERGENT_DEFAULT_BENCH[region])
            rows.append([region, sector, value])
    write_csv(os.path.join(d, "benchmarks.csv"),
              ["region", "sector", "impact_usd_at_2p5C"], rows)

    write_series(os.path.join(d, "population.csv"),
                 {"DIV": growing(500e6, 0.005), "BEN": growing(100e6, 0.001),
                  "TIN": growing(2500, -0.04)})
    write_series(os.path.join(d, "tfp_growth.csv"),
                 {"DIV": constant(0.02), "BEN": constant(0.01), "TIN": constant(-0.08)})
    write_series(os.path.join(d, "savings_rate.csv"),
                 {"DIV": constant(0.25), "BEN": constant(0.25), "TIN": constant(0.2)})
    write_series(os.path.join(d, "intensity_co2.csv"),
                 {iso: constant(-0.005) for iso in ["DIV", "BEN", "TIN"]})
    for gas in ["ch4", "n2o", "sf6", "so2"]:
        write_series(os.path.join(d, "intensity_%s.csv" % gas),
                     {iso: constant(0.0) for iso in ["DIV", "BEN", "TIN"]})
    write_series(os.path.join(d, "cfc11.csv"), {"WLD": constant(0.0)})
    write_series(os.path.join(d, "cfc12.csv"), {"WLD": constant(0.0)})

    write_config(os.path.join(d, "config.json"), {
        "run_name": "divergent",
        "output_dir": "out",
        "inputs": {
            "countries": "countries.csv",
            "benchmarks": "benchmarks.csv",
            "scenario": scenario_block(""),
        },
        "base_year": BASE_YEAR,
        "horizon": 2200,
        "eval_years": [2025],
        "initial_climate": {"co2_ppm": 410.0, "ch4_ppb": 722.0, "n2o_ppb": 270.0,
                             "sf6_ppt": 0.0, "t_global": 1.1},
        "world_base_emissions": {"co2_gtc": 10.0, "ch4_mt": 0.0, "n2o_mt": 0.0,
                                  "sf6_kt": 0.0, "so2_mts": 0.0},
        "world_reference_totals": {"pop": 600002500.0, "gdp": 4.0003e12},
        "preferences": {"prtp": 0.03, "rra": 1.0},
        "preference_grid": [[0.03, 1.0]],
        "discounting": "national",
        "epsilon": 0.0,
        "sector_defaults": {"heating": {"income_elasticity": 0.0}},
        "damage_model": {"kind": "sectoral"},
        "pulse": {"size_gtc": 0.001, "gas": "co2"},
        "uncertainty": {"draws": 50, "seed": 7, "ecs_median": 3.0,
                         "ecs_sigma_log": 0.2, "alpha_relative_sd": 0.2,
                         "alpha_min_multiplier": 0.5, "alpha_max_multiplier": 2.0,
                         "population_growth_persistence": 0.9,
                         "population_growth_sd": 0.0,
                         "max_failed_draw_fraction": 0.01},
        "scenario_options": {"interpolate_gaps": True,
                              "extrapolation": {"intensity_rate": "constant-level"}},
        "threads": 0,
    })


if __name__ == "__main__":
    make_toy()
    make_homog()
    make_divergent()
    print("fixtures written under", os.path.normpath(ROOT))
