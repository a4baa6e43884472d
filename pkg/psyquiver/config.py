# Copyright 2025 Google LLC
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

import os
import logging
from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import BaseModel, Field, ValidationError


logger = logging.getLogger(__name__)

load_dotenv()

MAX_ENDO_CARRIER = int(os.getenv("PSYQUIVER_MAX_ENDO_CARRIER", 12))
BRUTE_FORCE_LIMIT = int(os.getenv("PSYQUIVER_BRUTE_FORCE_LIMIT", 10**7))
ISOMORPHISM_VERTEX_LIMIT = int(os.getenv("PSYQUIVER_ISOMORPHISM_VERTEX_LIMIT", 12))
PERTURB_MAX_MOVES = int(os.getenv("PSYQUIVER_PERTURB_MAX_MOVES", 16))
LOG_LEVEL = os.getenv("PSYQUIVER_LOG_LEVEL", "INFO").upper()

# Bundled corpus of algebras, diagrams and expected tables
LOCAL_CORPUS_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "corpus", "data")
CORPUS_DIR = os.getenv("PSYQUIVER_CORPUS_DIR", LOCAL_CORPUS_DIR)


class SearchBounds(BaseModel):
    """Upper bounds for the exhaustive searches."""
    max_endo_carrier: int = Field(default=MAX_ENDO_CARRIER, ge=1)
    brute_force_limit: int = Field(default=BRUTE_FORCE_LIMIT, ge=1)
    isomorphism_vertex_limit: int = Field(default=ISOMORPHISM_VERTEX_LIMIT, ge=0)


class Config(BaseSettings):
    """Configuration settings for psyquiver."""

    model_config = SettingsConfigDict(env_prefix="PSYQUIVER_", extra="ignore")

    corpus_dir: str = CORPUS_DIR
    log_level: str = LOG_LEVEL
    perturb_max_moves: int = PERTURB_MAX_MOVES
    bounds: SearchBounds = Field(default_factory=SearchBounds)


try:
    configs = Config()
except ValidationError as e:
    logger.error(
        f"Pydantic ValidationError loading configuration in config.py. "
        f"Details: {e.errors()}"
    )
    configs = Config.model_construct(bounds=SearchBounds())
