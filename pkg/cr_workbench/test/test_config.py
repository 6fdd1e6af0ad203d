"""
Tests for loading configuration from the environment
"""
import os
import unittest

from cr_workbench.test.helpers import modified_environ
from cr_workbench.utils.config import get_config

_VARS = ("CRWB_MAX_STEPS", "CRWB_MAX_FIELD_DEGREE", "CRWB_DATA_PATH", "CRWB_SCHEMA_PATH")


class TestConfig(unittest.TestCase):
    def test_defaults(self):
        with modified_environ(*_VARS):
            config = get_config()
        self.assertEqual(config["max_steps"], 64)
        self.assertEqual(config["max_field_degree"], 8)
        self.assertTrue(os.path.isdir(config["data_path"]))
        self.assertTrue(os.path.isfile(config["document_schema"]))
        self.assertEqual(os.path.basename(config["document_schema"]), "cr_algebra_document.yaml")

    def test_overrides(self):
        with modified_environ(CRWB_MAX_STEPS="5", CRWB_SCHEMA_PATH="/tmp/schemas", CRWB_DATA_PATH="/tmp/docs"):
            config = get_config()
        self.assertEqual(config["max_steps"], 5)
        self.assertEqual(config["data_path"], "/tmp/docs")
        self.assertEqual(config["document_schema"], os.path.join("/tmp/schemas", "cr_algebra_document.yaml"))

    def test_empty_value_uses_default(self):
        with modified_environ(CRWB_MAX_FIELD_DEGREE=""):
            self.assertEqual(get_config()["max_field_degree"], 8)

    def test_invalid_values(self):
        for value in ("0", "-3", "many", "2.5"):
            with self.subTest(value=value):
                with modified_environ(CRWB_MAX_STEPS=value):
                    with self.assertRaisesRegex(ValueError, "CRWB_MAX_STEPS must be a positive integer"):
                        get_config()

    def test_cached(self):
        self.assertIs(get_config(), get_config())
