# Copyright 2026 The spacetime-swap Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import pathlib
import subprocess

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

HERE = pathlib.Path(__file__).resolve().parent
DATA = HERE / "data"
SCHEMAS = HERE.parent.parent / "schemas"


def _load_schema(name):
    return json.loads((SCHEMAS / name).read_text())


@pytest.fixture(scope="session")
def binary():
    path = os.environ.get("SPACETIME_SWAP_BIN")
    if not path:
        pytest.skip("SPACETIME_SWAP_BIN not set")
    return str(pathlib.Path(path).resolve())


@pytest.fixture(scope="session")
def report_validator():
    matrix = _load_schema("matrix_file.schema.json")
    report = _load_schema("run_report.schema.json")
    registry = Registry().with_resources(
        [(matrix["$id"], Resource.from_contents(matrix)),
         (report["$id"], Resource.from_contents(report))])
    Draft202012Validator.check_schema(report)
    return Draft202012Validator(report, registry=registry)


@pytest.fixture(scope="session")
def matrix_validator():
    schema = _load_schema("matrix_file.schema.json")
    Draft202012Validator.check_schema(schema)
    return Draft202012Validator(schema)


class Runner:
    def __init__(self, binary):
        self.binary = binary

    def __call__(self, *args, stdin=None, tol=None):
        env = {k: v for k, v in os.environ.items() if k != "SPACETIME_SWAP_TOL"}
        if tol is not None:
            env["SPACETIME_SWAP_TOL"] = tol
        return subprocess.run([self.binary, *args], input=stdin, capture_output=True,
                              env=env, cwd=DATA, check=False)


@pytest.fixture(scope="session")
def run(binary):
    return Runner(binary)
