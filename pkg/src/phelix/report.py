"""Report documents: the values a command computed, with provenance.

Reports serialize to JSON with every exact value encoded losslessly
(rationals as strings, polynomials as ascending coefficient arrays) plus a
human-readable rendering for convenience.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .analysis import CurveAnalysis, HelixKind, HelixVerdict
from .polynomials import GaussPoly, RatPoly, RationalFunction, ScaledSqrt
from .quintic import ClassificationReport

TOOL_NAME = "phelix"


def encode_fraction(value: Fraction) -> str:
    return str(value)


def encode_rat_poly(p: RatPoly) -> dict:
    return {"coefficients": [str(c) for c in p.coeffs], "rendered": str(p)}


def encode_gauss_poly(p: GaussPoly) -> dict:
    return {
        "coefficients": [[str(c.re), str(c.im)] for c in p.coeffs],
        "rendered": str(p),
    }


def encode_scaled_sqrt(s: Optional[ScaledSqrt]) -> Optional[dict]:
    if s is None:
        return None
    return {
        "scale": str(s.scale),
        "body": [str(c) for c in s.body.coeffs],
        "rendered": str(s),
    }


def encode_rational_function(r: Optional[RationalFunction]) -> Optional[dict]:
    if r is None:
        return None
    return {
        "num": [str(c) for c in r.num.coeffs],
        "den": [str(c) for c in r.den.coeffs],
        "rendered": str(r),
    }


def encode_verdict(v: HelixVerdict) -> dict:
    return {
        "kind": v.kind,
        "slope_squared": None if v.slope_squared is None else str(v.slope_squared),
        "axis": None if v.axis is None else [str(c) for c in v.axis],
    }


@dataclass
class ReportDocument:
    version: str
    input_doc: dict
    analysis: CurveAnalysis
    classification: Optional[ClassificationReport] = None
    seed: Optional[int] = None

    @property
    def degenerate(self) -> bool:
        if self.analysis.verdict.kind == HelixKind.LINE:
            return True
        return (
            self.classification is not None
            and self.classification.quintic_class.kind == "degenerate"
        )

    def to_dict(self) -> dict:
        a = self.analysis
        doc = {
            "tool": TOOL_NAME,
            "version": self.version,
            "input": self.input_doc,
            "analysis": {
                "sigma_squared": encode_rat_poly(a.sigma_squared),
                "is_ph": a.is_ph,
                "sigma": encode_scaled_sqrt(a.sigma),
                "rho_squared": encode_rat_poly(a.cross.rho_squared),
                "is_2ph": a.is_2ph,
                "rho": encode_scaled_sqrt(a.cross.rho),
                "torsion_numerator": encode_rat_poly(a.torsion_numerator),
                "lancret_ratio_squared": encode_rational_function(
                    a.lancret_ratio_squared
                ),
                "verdict": encode_verdict(a.verdict),
            },
        }
        if self.seed is not None:
            doc["seed"] = self.seed
        if self.classification is not None:
            c = self.classification
            doc["classification"] = {
                "wronskian": encode_gauss_poly(c.wronskian),
                "decomposition": None
                if c.decomposition is None
                else {
                    "case": c.decomposition.case,
                    "omega": None
                    if c.decomposition.omega is None
                    else encode_rat_poly(c.decomposition.omega),
                    "z_squared": None
                    if c.decomposition.z_squared is None
                    else encode_gauss_poly(c.decomposition.z_squared),
                },
                "kind": c.quintic_class.kind,
                "shared_factor": None
                if c.quintic_class.shared_factor is None
                else encode_gauss_poly(c.quintic_class.shared_factor),
                "dependence": None
                if c.quintic_class.dependence is None
                else {
                    "c0": str(c.quintic_class.dependence.c0),
                    "c2": str(c.quintic_class.dependence.c2),
                    "degenerate": c.quintic_class.dependence.degenerate,
                },
                "reason": c.quintic_class.reason,
            }
        return doc

    def to_text(self) -> str:
        a = self.analysis
        lines: List[str] = []
        form = self.input_doc.get("form", "?")
        lines.append(f"input form: {form}")
        lines.append(f"sigma^2 = {a.sigma_squared}")
        lines.append(f"PH: {'yes' if a.is_ph else 'no'}")
        if a.sigma is not None:
            lines.append(f"  sigma = {a.sigma}")
        lines.append(f"rho^2 = {a.cross.rho_squared}")
        lines.append(f"2-PH: {'yes' if a.is_2ph else 'no'}")
        if a.cross.rho is not None and not a.cross.rho.is_zero:
            lines.append(f"  rho = {a.cross.rho}")
        if a.verdict.kind == HelixKind.LINE:
            lines.append("curvature vanishes identically: the curve is a straight line")
        else:
            lines.append(f"torsion numerator det(a',a'',a''') = {a.torsion_numerator}")
            ratio = a.lancret_ratio_squared
            constant = " (constant)" if ratio is not None and ratio.is_constant else ""
            lines.append(f"(tau/kappa)^2 = {ratio}{constant}")
        v = a.verdict
        lines.append(f"slope verdict: {v.kind}")
        if v.axis is not None:
            axis = ", ".join(str(c) for c in v.axis)
            lines.append(f"  axis direction: ({axis})")
            lines.append(f"  slope^2 = {v.slope_squared}")
        if self.classification is not None:
            c = self.classification
            lines.append(f"wronskian W = {c.wronskian}")
            if c.decomposition is not None:
                lines.append(f"decomposition: {c.decomposition.case}")
                if c.decomposition.omega is not None:
                    lines.append(f"  omega = {c.decomposition.omega}")
                    lines.append(f"  z^2 = {c.decomposition.z_squared}")
            lines.append(f"classification: {c.quintic_class.kind}")
            if c.quintic_class.shared_factor is not None:
                lines.append(f"  shared factor gcd(z1, z2) = {c.quintic_class.shared_factor}")
            if c.quintic_class.dependence is not None:
                dep = c.quintic_class.dependence
                lines.append(f"  dependence A1 = c0*A0 + c2*A2 with (c0, c2) = ({dep.c0}, {dep.c2})")
            if c.quintic_class.reason:
                lines.append(f"  reason: {c.quintic_class.reason}")
        return "\n".join(lines)
