"""
Test JSON validation functions

Most tests validate against the CR algebra document schema in cr_workbench/schema, using
the bundled documents in cr_workbench/data and the test documents in
cr_workbench/test/data/documents. The same schema is also exercised as a data structure
to check that files and dicts behave the same.
"""
import copy
import os
import tempfile
import unittest

from jsonschema.exceptions import ValidationError

from cr_workbench.test.helpers import TEST_DATA_DIR
from cr_workbench.utils.config import get_config
from cr_workbench.utils.json_validation import load_json_or_yaml, run_validator

_DOCS = os.path.join(TEST_DATA_DIR, "documents")

test_schema = {
    "definitions": {"rational": {"type": "string", "pattern": "^-?[0-9]+/[1-9][0-9]*$"}},
    "properties": {
        "params": {
            "type": "object",
            "properties": {
                "name": {"type": "string", "pattern": "^\\w+$", "default": "blank"},
                "scale": {"$ref": "#/definitions/rational", "default": "1/1"},
                "labels": {"type": "array", "items": {"type": "string"}, "default": [], "uniqueItems": True},
            },
        }
    },
}

schema_defaults = {"name": "blank", "scale": "1/1", "labels": []}


class TestJsonValidation(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.schema_file = get_config()["document_schema"]

    def test_non_validation_validator_errors(self):
        """test errors in the validator that are unrelated to the validation functionality"""

        err_str = "Please supply either a schema or a schema file path"
        with self.assertRaisesRegex(ValueError, err_str):
            run_validator()

        with self.assertRaisesRegex(ValueError, err_str):
            run_validator(data={})

        # only supply one of schema or schema_file
        with self.assertRaisesRegex(ValueError, err_str):
            run_validator(schema={}, schema_file="/path/to/file")

        err_str = "Please supply either a data structure or a data file path"
        with self.assertRaisesRegex(ValueError, err_str):
            run_validator(schema={})

        with self.assertRaisesRegex(ValueError, err_str):
            run_validator(schema={}, data={}, data_file="/path/to/file")

    def test_defaults(self):
        """missing values are filled in from the schema defaults"""
        output = run_validator(schema=test_schema, data={"params": {}})
        self.assertEqual(output, {"params": schema_defaults})

        output = run_validator(schema=test_schema, data={"params": {"name": "borel"}})
        self.assertEqual(output["params"]["name"], "borel")
        self.assertEqual(output["params"]["scale"], "1/1")

    def test_validate_at(self):
        """validate against a schema nested below the root, keeping local refs resolvable"""
        output = run_validator(schema=test_schema, data={}, validate_at="/properties/params")
        self.assertEqual(output, schema_defaults)

        with self.assertRaisesRegex(ValidationError, "does not match"):
            run_validator(schema=test_schema, data={"scale": "1/0"}, validate_at="/properties/params")

        output = run_validator(
            schema_file=self.schema_file,
            data={"re": "1/2", "im": "0/1"},
            validate_at="/definitions/gaussian_rational",
        )
        self.assertEqual(output, {"re": "1/2", "im": "0/1"})

        with self.assertRaises(ValidationError):
            run_validator(
                schema_file=self.schema_file,
                data={"re": 0.5, "im": "0/1"},
                validate_at="/definitions/gaussian_rational",
            )

    def test_document_files(self):
        """json and yaml documents validate the same way, as files or as data"""
        for name in ("su2_borel.json", "abelian_swap.yaml"):
            path = os.path.join(get_config()["data_path"], name)
            with self.subTest(name=name):
                from_file = run_validator(schema_file=self.schema_file, data_file=path)
                from_data = run_validator(schema_file=self.schema_file, data=load_json_or_yaml(path))
                self.assertEqual(from_file, from_data)

    def test_brackets_default(self):
        data = load_json_or_yaml(os.path.join(get_config()["data_path"], "su2_borel.json"))
        del data["brackets"]
        output = run_validator(schema_file=self.schema_file, data=copy.deepcopy(data))
        self.assertEqual(output["brackets"], [])

    def test_nicer_errors(self):
        data = load_json_or_yaml(os.path.join(_DOCS, "borel.json"))
        data["tau"][0][0] = {"re": "1/2"}

        with self.assertRaisesRegex(ValidationError, "'im' is a required property"):
            run_validator(schema_file=self.schema_file, data=copy.deepcopy(data))

        # with nicer_errors every error is reported, not just the best match
        data["colour"] = "blue"
        with self.assertRaises(ValidationError) as ctx:
            run_validator(schema_file=self.schema_file, data=data, nicer_errors=True)
        message = str(ctx.exception)
        self.assertIn("'im' is a required property", message)
        self.assertIn("Additional properties are not allowed ('colour' was unexpected)", message)

    def test_load_json_or_yaml(self):
        data = load_json_or_yaml(os.path.join(_DOCS, "bad_jacobi.yaml"))
        self.assertEqual(data["basis"], ["X-", "H", "X+"])
        with tempfile.NamedTemporaryFile(suffix=".md") as fd:
            with self.assertRaisesRegex(TypeError, "Unknown file type encountered"):
                load_json_or_yaml(fd.name)
