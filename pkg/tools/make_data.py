"""Regenerate the shipped example files from hocolab.catalog."""
from pathlib import Path

from hocolab.catalog import write_data

if __name__ == "__main__":
    for p in write_data(Path(__file__).resolve().parents[1] / "src" / "hocolab" / "data"):
        print(p.name)
