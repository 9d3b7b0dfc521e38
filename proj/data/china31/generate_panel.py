"""Regenerates the synthetic 31-province demonstration panel.

Raw values are synthetic: each province's level follows its average coupling
coordination degree in the reference fixture, scaled per indicator with a
per-indicator growth rate and multiplicative noise. Output is deterministic.
"""
import csv
import numpy as np

YEARS = list(range(2014, 2022))

INDICATORS = [
    ("domain_names", "Number of domain names", "X", "+", "10^4"),
    ("base_stations", "Mobile telephone base stations", "X", "+", "10^4"),
    ("optical_cable", "Long-distance optical cable line length", "X", "+", "km"),
    ("phone_penetration", "Mobile phone penetration rate", "X", "+", "per 100 people"),
    ("broadband_ports", "Internet broadband access ports", "X", "+", "10^4"),
    ("science_parks", "National university science parks", "X", "+", "count"),
    ("incubators", "Technology business incubators", "X", "+", "count"),
    ("torch_bases", "Torch characteristic industrial bases", "X", "+", "count"),
    ("railway_km", "Railway operating mileage", "X", "+", "km"),
    ("highway_km", "Graded highway mileage", "X", "+", "km"),
    ("computers_per_100", "Computers used per 100 people", "X", "+", "units"),
    ("websites_per_100", "Websites per 100 enterprises", "X", "+", "count"),
    ("ecommerce_sales", "E-commerce sales", "X", "+", "10^8 yuan"),
    ("dt_technology", "Digital technology application word frequency", "Y", "+", "count"),
    ("dt_internet", "Internet business model word frequency", "Y", "+", "count"),
    ("dt_manufacturing", "Intelligent manufacturing word frequency", "Y", "+", "count"),
    ("dt_information", "Modern information system word frequency", "Y", "+", "count"),
]


def main():
    rng = np.random.default_rng(20240601)
    with open("regions.csv", newline="") as f:
        regions = [row["id"] for row in csv.DictReader(f)]
    with open("../../tests/fixtures/coupling_reference.csv", newline="") as f:
        level = {row["region"]: np.mean([float(row[str(y)]) for y in YEARS])
                 for row in csv.DictReader(f)}

    with open("indicators.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["id", "name", "subsystem", "direction", "unit"])
        w.writerows(INDICATORS)

    with open("values.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["year", "region", "indicator", "value"])
        for k, (ind, _, subsystem, _, _) in enumerate(INDICATORS):
            scale = 10 ** rng.uniform(1, 4)
            growth = rng.uniform(0.02, 0.08) if subsystem == "X" else rng.uniform(0.12, 0.25)
            power = 1.5 if subsystem == "X" else 3.0
            for t, year in enumerate(YEARS):
                for r in regions:
                    noise = rng.lognormal(0.0, 0.15)
                    v = scale * level[r] ** power * (1 + growth) ** t * noise
                    w.writerow([year, r, ind, f"{v:.4f}"])


if __name__ == "__main__":
    main()
