"""Supporting methods for WignerKit testing."""

# standard libraries
import csv

def read_table(path):
    """Read an emitted csv table into a list of rows of floats."""
    with open(path, newline='') as stream:
        return [{key: float(value) for key, value in row.items()} for row in csv.DictReader(stream)]
