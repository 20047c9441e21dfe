"""Built-in knot data: the unknot and the left-handed trefoil."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UnknownKnot
from .parser import evaluate
from .peripheral import PeripheralElement, ideal_to_peripheral
from .recurrence import kappa_closed_form_unknot

__all__ = ["KnotEntry", "catalog", "KNOTS"]

# generator presentations, expanded on load
_UNKNOT_GENERATORS = (
    "(l+t^2)*(l+t^-2)",
    "l*m^2*(l+t^2)+t^2*(l+t^-2)",
)
_TREFOIL_GENERATORS = (
    "[m^4*(l+t^10)-t^-4*(l+t^2)]*(l-t^6*m^6)",
    "(l+t^24)*(l+t^10)*(l+t^2)*(l-t^6*m^6)",
    "(m^2-t^-22)*(l+t^10)*(l+t^2)*(l-t^6*m^6)",
)
# reference form with t^3 on (0,5); it contradicts the five-term recursion
# and kappa_1, and is kept only for comparison
TREFOIL_REFERENCE = "(1,-5) - t^-8*(1,-1) + t^3*(0,5) - t*(0,1)"
# the same element with t^-3 on (0,5); equals the left-recentred first
# generator up to the unit -t^8
TREFOIL_CORRECTED = "(1,-5) - t^-8*(1,-1) + t^-3*(0,5) - t*(0,1)"

KNOTS = ("unknot", "trefoil_left")


@dataclass
class KnotEntry:
    name: str
    generator_texts: tuple
    ideal_generators: list
    peripheral_elements: list
    known_kappa: dict = field(default_factory=dict)
    kappa_formula: object = None
    reference_peripheral: PeripheralElement | None = None

    @property
    def default_element(self):
        return self.peripheral_elements[0]

    def to_json(self):
        out = {
            "name": self.name,
            "ideal_generators": [
                {"presentation": text, "expanded": g.to_json()}
                for text, g in zip(self.generator_texts, self.ideal_generators)
            ],
            "peripheral_elements": [
                {"text": str(p.element), "element": p.element.to_json()}
                for p in self.peripheral_elements
            ],
            "known_kappa": {str(k): v.to_json() for k, v in sorted(self.known_kappa.items())},
        }
        if self.reference_peripheral is not None:
            out["reference_peripheral"] = {
                "text": str(self.reference_peripheral.element),
                "element": self.reference_peripheral.element.to_json(),
            }
        return out


def _expand(texts):
    return [evaluate(text, context="ideal") for text in texts]


def _unknot():
    gens = _expand(_UNKNOT_GENERATORS)
    standard = PeripheralElement(evaluate("(1,0) + t^2 + t^-2"), "unknot")
    second = ideal_to_peripheral(gens[1], "unknot").peripheral
    return KnotEntry(
        name="unknot",
        generator_texts=_UNKNOT_GENERATORS,
        ideal_generators=gens,
        peripheral_elements=[standard, second],
        known_kappa={n: kappa_closed_form_unknot(n) for n in range(4)},
        kappa_formula=kappa_closed_form_unknot,
    )


def _trefoil():
    gens = _expand(_TREFOIL_GENERATORS)
    corrected = PeripheralElement(evaluate(TREFOIL_CORRECTED), "trefoil_left")
    first = ideal_to_peripheral(gens[0], "trefoil_left").peripheral
    return KnotEntry(
        name="trefoil_left",
        generator_texts=_TREFOIL_GENERATORS,
        ideal_generators=gens,
        peripheral_elements=[corrected, first],
        known_kappa={0: evaluate("1"), 1: evaluate("t^18 - t^10 - t^6 - t^2")},
        reference_peripheral=PeripheralElement(evaluate(TREFOIL_REFERENCE), "trefoil_left"),
    )


_BUILDERS = {"unknot": _unknot, "trefoil_left": _trefoil}
_CACHE = {}


def catalog(name):
    """Return the :class:`KnotEntry` for ``unknot`` or ``trefoil_left``."""
    if name not in _BUILDERS:
        raise UnknownKnot(f"unknown knot {name!r}; known: {', '.join(KNOTS)}")
    if name not in _CACHE:
        _CACHE[name] = _BUILDERS[name]()
    return _CACHE[name]
