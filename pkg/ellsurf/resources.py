# -*- coding: utf-8 -*-
"""
Resources
~~~~~~~~~

Serialisable results of computations.

Every machine readable output is one of these resources and is encoded with
the odin JSON codec.

"""
import odin

from typing import AnyStr  # noqa
from odin.fields import Field

from .constants import ErrorCode, Verdict  # noqa


class AnyField(Field):
    """
    Any JSON compatible value.
    """
    def to_python(self, value):
        return value


class Error(odin.Resource):
    """
    Returned in place of a report when a computation raises.

    The *meta* field carries data specific to the error, eg the two
    configurations that disagreed in a cross validation.

    """
    class Meta:
        namespace = None

    @classmethod
    def from_code(cls, error_code, message=None, developer_message=None, meta=None):
        # type: (ErrorCode, AnyStr, AnyStr, dict) -> Error
        """
        Build an error resource from an error code.

        :param error_code: The :class:`ErrorCode` being reported.
        :param message: Message for the end user; defaults to the code description.
        :param developer_message: Additional detail; defaults to the code description.
        :param meta: Error specific data.

        """
        return cls(
            code=error_code.value,
            exit_code=error_code.exit_code,
            message=message or error_code.description,
            developer_message=developer_message or error_code.description,
            meta=meta,
        )

    code = odin.StringField(
        help_text="Symbolic error code."
    )
    exit_code = odin.IntegerField(
        help_text="Process exit status associated with the error."
    )
    message = odin.StringField(
        help_text="A message that can be displayed to an end user"
    )
    developer_message = odin.StringField(
        null=True,
        help_text="An error message suitable for the developer"
    )
    meta = AnyField(
        null=True,
        help_text="Additional meta information that can help solve errors."
    )


class Claim(odin.Resource):
    """
    A single checked statement within a report.
    """
    class Meta:
        namespace = None

    label = odin.StringField(
        help_text="Short name of the claim."
    )
    anchor = odin.StringField(
        help_text="The construction the claim belongs to."
    )
    computed = AnyField(
        null=True,
        help_text="Value produced by the computation."
    )
    expected = AnyField(
        null=True,
        help_text="Value the construction predicts."
    )
    verdict = odin.StringField(
        choices=[v.value for v in Verdict],
        help_text="PASS, FAIL or INFO (informational, never fails)."
    )

    @property
    def failed(self):
        return self.verdict == Verdict.Fail.value


class Report(odin.Resource):
    """
    Output of one command.
    """
    class Meta:
        namespace = None

    title = odin.StringField(
        help_text="Human readable title."
    )
    command = odin.StringField(
        help_text="Command that produced the report."
    )
    claims = odin.ArrayOf(
        Claim,
        help_text="Checked claims in evaluation order."
    )
    data = AnyField(
        null=True,
        help_text="Supporting data (configurations, certificates, coefficients)."
    )

    @property
    def passed(self):
        return not any(claim.failed for claim in self.claims)


class Envelope(odin.Resource):
    """
    Wrapper around reports; the only place a timestamp appears.
    """
    class Meta:
        namespace = None

    generated_at = odin.DateTimeField(
        help_text="When the reports were produced; excluded from comparisons."
    )
    reports = odin.ArrayOf(
        Report,
        help_text="Reports in the order they were run."
    )

    @property
    def payload(self):
        """
        Deterministic part of the envelope.
        """
        return self.reports


class FiberEntry(odin.Resource):
    """
    One singular fibre of a configuration.
    """
    class Meta:
        namespace = None

    place = odin.StringField(
        help_text="Place of the base curve."
    )
    type = odin.StringField(
        help_text="Kodaira type, eg I3 or IV*."
    )
    mult = odin.IntegerField(
        help_text="Number of geometric fibres housed at the place."
    )


class SurfaceSummary(odin.Resource):
    """
    Global invariants of an elliptic surface.
    """
    class Meta:
        namespace = None

    chi = odin.IntegerField(help_text="Topological Euler number.")
    deg_l = odin.IntegerField(help_text="Degree of the fundamental line bundle.")
    p_g = odin.IntegerField(help_text="Geometric genus.")
    q = odin.IntegerField(help_text="Irregularity.")
    h11 = odin.IntegerField(help_text="Hodge number h^{1,1}.")
    moduli_dimension = odin.IntegerField(help_text="Dimension 10d + 2g - 2 of the moduli.")
    j_degree = odin.IntegerField(help_text="Degree of the J-map.")
    classification = odin.StringField(help_text="Surface class.")


class Certificate(odin.Resource):
    """
    Outcome of a symbolic or exhaustive verification.
    """
    class Meta:
        namespace = None

    name = odin.StringField(
        help_text="What was verified."
    )
    holds = odin.BooleanField(
        help_text="True when the verification succeeded."
    )
    detail = AnyField(
        null=True,
        help_text="Supporting data, eg the identity checked or counts enumerated."
    )


class IsotropicQuotient(odin.Resource):
    """
    An isotropic subgroup of a discriminant form with its quotient.
    """
    class Meta:
        namespace = None

    generator = odin.ArrayField(help_text="Generator of the isotropic subgroup.")
    perp_order = odin.IntegerField(help_text="Order of the orthogonal complement.")
    structure = odin.ArrayField(help_text="Invariant factors of the quotient.")


class SearchCertificate(odin.Resource):
    """
    Certificate of a bounded primitivity search.
    """
    class Meta:
        namespace = None

    n_max = odin.IntegerField(help_text="Largest multiple searched.")
    h_max = odin.IntegerField(help_text="Largest height parameter searched.")
    coeff_bound = odin.IntegerField(help_text="Box bound on root coefficients.")
    patterns = odin.IntegerField(help_text="Incidence patterns of the section.")
    vectors_examined = odin.IntegerField(help_text="Root vectors examined across blocks.")
    admissible = odin.IntegerField(help_text="Admissible classes found in the box.")
    mod3_excluded = odin.IntegerField(help_text="Candidates excluded by the mod 3 filter.")
    solutions = odin.ArrayField(help_text="Solutions found (expected empty).")


class GraphVertex(odin.Resource):
    """
    A component of a fibre in a dual graph.
    """
    class Meta:
        namespace = None

    label = odin.StringField(help_text="Component label, eg E' or D1'.")
    genus = odin.IntegerField(help_text="Geometric genus of the component.")
    self_intersection = odin.StringField(help_text="Self-intersection as an exact rational.")
    multiplicity = odin.IntegerField(help_text="Multiplicity in the fibre.")


class TraceStep(odin.Resource):
    """
    One step of a semistable reduction.
    """
    class Meta:
        namespace = None

    kind = odin.StringField(help_text="Step kind.")
    detail = odin.StringField(help_text="What the step did.")
    vertices = odin.ArrayOf(GraphVertex, help_text="Vertex data after the step.")
    section_square = odin.StringField(null=True, help_text="Section self-intersection after the step.")


class SeriesEvaluation(odin.Resource):
    """
    Numerical evaluation of a q-expansion.
    """
    class Meta:
        namespace = None

    tau = odin.StringField(help_text="Point of the upper half plane.")
    value = odin.StringField(help_text="Value of the truncated series.")
    modulus = odin.FloatField(help_text="Absolute value of the series.")
    tail = odin.FloatField(help_text="Estimated truncation error.")


class HurwitzOrbit(odin.Resource):
    """
    A class of Hurwitz tuples modulo simultaneous conjugation.
    """
    class Meta:
        namespace = None

    representative = odin.ArrayField(help_text="Tuple in cycle notation.")
    size = odin.IntegerField(help_text="Number of raw tuples in the class.")
    limit = odin.StringField(help_text="Limit when the transpositions collide.")
