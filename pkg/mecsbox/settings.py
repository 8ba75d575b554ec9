import os
from typing import Literal, Mapping, Optional

from pydantic import BaseModel, Field, ValidationError

from mecsbox.exceptions import ParameterError

ENV_PREFIX = "MECSBOX_"

LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR"]


class Settings(BaseModel):
    """
    Runtime configuration. Every field has a default; environment variables and CLI flags override.
    """

    log_level: LogLevel = "WARNING"
    workers: int = Field(default=1, ge=1)
    bench_repeats: int = Field(default=3, ge=1)

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        environ = os.environ if environ is None else environ
        values = {}
        for name in ("log_level", "workers", "bench_repeats"):
            raw = environ.get(ENV_PREFIX + name.upper())
            if raw:
                values[name] = raw.upper() if name == "log_level" else raw
        return cls.build(**values)

    @classmethod
    def build(cls, **values) -> "Settings":
        try:
            return cls(**values)
        except ValidationError as exc:
            error = exc.errors()[0]
            raise ParameterError(f"Invalid setting {'.'.join(map(str, error['loc']))}: {error['msg']}")

    def override(self, **values) -> "Settings":
        merged = self.model_dump()
        merged.update({key: value for key, value in values.items() if value is not None})
        return self.build(**merged)
