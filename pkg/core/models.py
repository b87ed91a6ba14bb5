from typing import Any, Optional

from pydantic import AliasChoices, BaseModel, ConfigDict, Field, model_validator

from .utils import sign


class BettiProfile(BaseModel):
    """Reduced Betti numbers over F_p, keyed by dimension from -1 upward."""

    model_config = ConfigDict(frozen=True)

    prime: int
    betti: dict[int, int]

    def get(self, d):
        return self.betti.get(d, 0)

    def nonzero(self):
        return {d: b for d, b in self.betti.items() if b}

    def alternating_sum(self):
        return sum(sign(d) * b for d, b in self.betti.items())

    def same_numbers(self, other):
        return self.nonzero() == other.nonzero()

    def __str__(self):
        return f"F_{self.prime} " + " ".join(f"b{d}={b}" for d, b in sorted(self.betti.items()))


class Wedge(BaseModel):
    """A wedge of `count` spheres of dimension `dim`; count 0 with no dim means contractible."""

    model_config = ConfigDict(frozen=True)

    count: int
    dim: Optional[int] = None

    def as_tuple(self):
        return (self.count, self.dim)


class HomologySummary(BaseModel):
    field: int
    betti: dict[int, int]
    euler: int
    wedge: Optional[Wedge] = None


class HomologyCheck(BaseModel):
    profiles: list[BettiProfile]
    euler: int
    primes_agree: bool
    euler_consistent: bool
    boundary_zero: bool

    @property
    def ok(self):
        return self.primes_agree and self.euler_consistent and self.boundary_zero


class MatchingReport(BaseModel):
    labels: list[str]
    pairs: int
    critical: dict[int, list[list[str]]]
    acyclic: bool
    empty_face_matched: bool
    verdict: Optional[Wedge] = None
    morse_euler_ok: Optional[bool] = None
    weak_morse_ok: Optional[bool] = None
    # Appendix matchings only: census after the apex step
    type_one: Optional[int] = None
    type_two: Optional[int] = None
    type_two_matched_down: Optional[bool] = None

    @property
    def n_critical(self):
        return sum(len(faces) for faces in self.critical.values())


class VerificationCase(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    id: str
    params: dict[str, Any]
    expected: Any
    observed: Any
    provenance: str = ""
    passed: bool = Field(
        default=False,
        serialization_alias="pass",
        validation_alias=AliasChoices("pass", "passed"),
    )

    @model_validator(mode="after")
    def require_provenance(self):
        if self.passed and not self.provenance.strip():
            raise ValueError(f"Case {self.id} cannot pass without provenance for its expected value")
        return self

    @classmethod
    def judge(cls, claim, params, expected, observed, provenance):
        passed = bool(provenance.strip()) and expected == observed
        return cls(id=claim, params=params, expected=expected, observed=observed,
                   provenance=provenance, passed=passed)
