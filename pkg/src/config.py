import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

load_dotenv()


class Budgets(BaseModel):
    """Caps that keep the exponential enumerations at desk scale."""

    model_config = ConfigDict(frozen=True)

    cover_cap: int = Field(default=24, ge=1)
    product_cap: int = Field(default=1_000_000, ge=1)
    max_generators: int = Field(default=5000, ge=1)
    explore_cap: int = Field(default=32, ge=1)


_ENV_NAMES = {
    "cover_cap": "ROOTED_COVER_CAP",
    "product_cap": "ROOTED_PRODUCT_CAP",
    "max_generators": "ROOTED_MAX_GENERATORS",
    "explore_cap": "ROOTED_EXPLORE_CAP",
}


def _read_int(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} environment variable must be an integer, got {raw!r}")


def load_budgets(**overrides: Optional[int]) -> Budgets:
    """Build budgets from the environment, then apply non-None overrides."""
    values = {}
    for field, env_name in _ENV_NAMES.items():
        value = _read_int(env_name)
        if value is not None:
            values[field] = value
    values.update({k: v for k, v in overrides.items() if v is not None})
    return Budgets(**values)


def default_budgets() -> Budgets:
    return load_budgets()
