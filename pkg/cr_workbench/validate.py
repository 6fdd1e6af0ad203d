"""
Validate every CR algebra document in a directory: the yaml schema first, then the
Jacobi, grading, involution and subalgebra gates.
"""
import glob
import os
import sys

from cr_workbench.cli import load_document, read_document
from cr_workbench.cralg import cr_dimensions
from cr_workbench.exceptions import InvalidDocument, InvalidStructure
from cr_workbench.utils.config import get_config


def validate_document(path):
    """Validate a single document file, returning its CRAlgebra."""
    print(f"  validating {path}..")
    path, data = read_document(path)
    a = load_document(data, path)
    name = data.get("name")
    filename = os.path.splitext(os.path.basename(path))[0]
    if name is not None and name != filename:
        raise InvalidDocument(path, f"Name key should match filename: {name} vs {filename}")
    crdim, crcodim = cr_dimensions(a)
    print(f"✓ {path} is valid (CR dimension {crdim}, CR codimension {crcodim}).")
    return a


def validate_all(directory=None):
    """
    Validate all json and yaml documents below directory.

    :param directory: (string)  defaults to the configured data path

    :return n_errors: (int)     the number of invalid documents
    """
    if directory is None:
        directory = get_config()["data_path"]
    print(f"Validating CR algebra documents in {directory}...")
    err_files = []
    n_files = 0
    for path in sorted(glob.iglob(os.path.join(directory, "**", "*.*"), recursive=True)):
        if not path.endswith((".json", ".yaml", ".yml")):
            continue
        n_files += 1
        try:
            validate_document(path)
        except (InvalidDocument, InvalidStructure) as err:
            print(f"✕ {path} failed validation")
            print(err)
            err_files.append(path)

    if not n_files:
        print("No documents found")
    elif err_files:
        print("Validation failed! Files with errors:\n" + "\n".join(err_files))
    else:
        print("...all valid.")
    return len(err_files)


if __name__ == "__main__":
    base_dir = sys.argv[1] if len(sys.argv) > 1 else None
    sys.exit(0 if not validate_all(base_dir) else 2)
