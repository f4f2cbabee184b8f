"""JSON structure files.

Every map ``X -> Y`` is stored as a nested array indexed first by the basis
indices of the input wires and then by those of the output wires, so a
multiplication is ``mult[i][j][k]`` (coefficient of ``e_k`` in
``e_i e_j``), a comultiplication is ``comult[i][j][k]`` (coefficient of
``e_j (x) e_k`` in ``delta(e_i)``), a unit is a vector over outputs and a
counit a vector over inputs.  Scalars are integers or ``"num/den"`` strings.
"""

from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

from .brace import HopfBraceData
from .cocycle import CocycleData
from .core import BraidSpec, FinObject, Morphism, make_object, tensor_objects, unit_object
from .errors import DegreeError, HbxError, InvalidInput
from .fields import Field, PrimeField, Q
from .hopf import HopfData, ModuleData
from .modules import BraceModuleData, CocycleModuleData

KINDS = ("hopf", "hopf_brace", "cocycle", "module", "brace_module", "cocycle_module")
HOPF_KEYS = ("unit", "mult", "counit", "comult", "antipode")
BRACE_KEYS = ("counit", "comult", "unit1", "mult1", "antipode1", "unit2", "mult2", "antipode2")


# writing


def _dims(x: FinObject) -> list[int]:
    return [w.dim for w in x.wires]


def _scalar(field: Field, v) -> int | str:
    if isinstance(field, PrimeField):
        return int(v)
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def to_tensor(m: Morphism):
    vals = np.array(m.values(), dtype=object).T  # [src, dst]
    shape = _dims(m.src) + _dims(m.dst)
    out = np.vectorize(lambda v: _scalar(m.field, v), otypes=[object])(vals).reshape(shape or (1,))
    return out.tolist() if shape else out.tolist()[0]


def field_json(field: Field) -> dict:
    return {"kind": "Fp", "p": field.p} if isinstance(field, PrimeField) else {"kind": "Q"}


def braid_json(b: BraidSpec) -> dict:
    if b.kind == "swap":
        return {"kind": "swap"}
    if b.modulus == 2 and b.q == -1:
        return {"kind": "sign"}
    return {"kind": "bicharacter", "N": b.modulus, "q": _scalar(b.q.field, b.q.value)}


def _hopf_body(h: HopfData) -> dict:
    body = {k: to_tensor(getattr(h, k)) for k in HOPF_KEYS}
    body["grading"] = list(h.obj.grading)
    return body


def dump(obj) -> dict:
    """Serialize a Hopf algebra, brace, cocycle or module to a JSON-ready dict."""
    if isinstance(obj, HopfData):
        x, kind, body = obj.obj, "hopf", _hopf_body(obj)
    elif isinstance(obj, HopfBraceData):
        x, kind = obj.obj, "hopf_brace"
        body = {k: to_tensor(v) for k, v in obj.parts().items()}
        body["grading"] = list(x.grading)
    elif isinstance(obj, CocycleData):
        x, kind = obj.H.obj, "cocycle"
        body = {"A": _hopf_body(obj.A), "H": _hopf_body(obj.H), "phi": to_tensor(obj.phi),
                "pi": to_tensor(obj.pi), "pi_inv": to_tensor(obj.pi_inv)}
    elif isinstance(obj, BraceModuleData):
        x, kind = obj.over.obj, "brace_module"
        body = {"hopf_brace": dump(obj.over)["hopf_brace"], "carrier_grading": list(obj.carrier.grading),
                "psi1": to_tensor(obj.psi1), "psi2": to_tensor(obj.psi2)}
    elif isinstance(obj, CocycleModuleData):
        x, kind = obj.over.H.obj, "cocycle_module"
        body = {"cocycle": dump(obj.over)["cocycle"], "M_grading": list(obj.M.grading),
                "N_grading": list(obj.N.grading)}
        for k in ("phiM", "varphiM", "phiN", "gamma", "gamma_inv"):
            body[k] = to_tensor(getattr(obj, k))
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return {"field": field_json(x.field), "braiding": braid_json(x.braid), "grading": list(x.grading),
            "name": getattr(obj, "name", ""), kind: body}


def dumps(obj) -> str:
    return json.dumps(dump(obj), indent=1, sort_keys=True) + "\n"


# reading


class _Reader:
    def __init__(self, doc: dict):
        if not isinstance(doc, dict):
            raise InvalidInput("top level must be a JSON object")
        self.doc = doc
        self.field = self._field(doc.get("field"))
        self.braid = self._braid(doc.get("braiding", {"kind": "swap"}))

    def _field(self, spec) -> Field:
        if not isinstance(spec, dict) or "kind" not in spec:
            raise InvalidInput("key 'field' must be an object with a 'kind'")
        if spec["kind"] == "Q":
            return Q
        if spec["kind"] == "Fp":
            p = spec.get("p")
            if not isinstance(p, int):
                raise InvalidInput("key 'field.p' must be an integer")
            return PrimeField(p)
        raise InvalidInput(f"key 'field.kind': unknown field {spec['kind']!r}")

    def _braid(self, spec) -> BraidSpec:
        if not isinstance(spec, dict):
            raise InvalidInput("key 'braiding' must be an object")
        kind = spec.get("kind")
        if kind == "swap":
            return BraidSpec.swap()
        if kind == "sign":
            return BraidSpec.sign(self.field)
        if kind == "bicharacter":
            n = spec.get("N")
            if not isinstance(n, int):
                raise InvalidInput("key 'braiding.N' must be an integer")
            try:
                q = self.field(self.field.parse(spec.get("q")))
            except InvalidInput as e:
                raise InvalidInput(f"key 'braiding.q': {e}") from None
            return BraidSpec.bicharacter(n, q)
        raise InvalidInput(f"key 'braiding.kind': unknown braiding {kind!r}")

    def obj(self, grading, key: str, name: str = "") -> FinObject:
        if not isinstance(grading, list) or not grading or not all(isinstance(g, int) for g in grading):
            raise InvalidInput(f"key {key!r} must be a non-empty list of integers")
        try:
            return make_object(len(grading), self.field, self.braid, grading, name)
        except HbxError as e:
            raise InvalidInput(f"key {key!r}: {e}") from None

    def unit(self) -> FinObject:
        return unit_object(self.field, self.braid)

    def morphism(self, body: dict, key: str, src: FinObject, dst: FinObject, path: str) -> Morphism:
        where = f"{path}.{key}" if path else key
        if key not in body:
            raise InvalidInput(f"missing key {where!r}")
        shape = tuple(_dims(src) + _dims(dst))
        data = body[key]
        arr = np.array(data, dtype=object) if shape else np.array([data], dtype=object)
        if arr.size == 1 and src.dim * dst.dim == 1 and arr.dtype == object:
            arr = arr.reshape(shape or (1,))  # any nesting of a single scalar
        if arr.shape != (shape or (1,)):
            raise InvalidInput(f"key {where!r} has shape {arr.shape}, expected {shape}")
        flat = []
        for idx, v in np.ndenumerate(arr):
            if isinstance(v, (list, dict)) or v is None or isinstance(v, float):
                raise InvalidInput(f"key {where!r} index {list(idx)}: invalid scalar {v!r}")
            try:
                flat.append(self.field.parse(v))
            except InvalidInput as e:
                raise InvalidInput(f"key {where!r} index {list(idx)}: {e}") from None
        vals = np.array(flat, dtype=object).reshape(src.dim, dst.dim).T
        try:
            return Morphism(src, dst, vals)
        except DegreeError as e:
            raise InvalidInput(f"key {where!r}: {e}") from None

    def hopf(self, body, path: str, grading=None) -> HopfData:
        if not isinstance(body, dict):
            raise InvalidInput(f"key {path!r} must be an object")
        g = body.get("grading", grading if grading is not None else self.doc.get("grading"))
        x = self.obj(g, f"{path}.grading", "H")
        K = self.unit()
        xx = tensor_objects(x, x)
        m = {
            "unit": self.morphism(body, "unit", K, x, path),
            "mult": self.morphism(body, "mult", xx, x, path),
            "counit": self.morphism(body, "counit", x, K, path),
            "comult": self.morphism(body, "comult", x, xx, path),
            "antipode": self.morphism(body, "antipode", x, x, path),
        }
        return HopfData(x, name=self.doc.get("name", "") or path, **m)

    def hopf_brace(self, body, path: str) -> HopfBraceData:
        if not isinstance(body, dict):
            raise InvalidInput(f"key {path!r} must be an object")
        x = self.obj(body.get("grading", self.doc.get("grading")), f"{path}.grading", "H")
        K, xx = self.unit(), tensor_objects(x, x)
        ends = {"counit": (x, K), "comult": (x, xx), "unit1": (K, x), "mult1": (xx, x), "antipode1": (x, x),
                "unit2": (K, x), "mult2": (xx, x), "antipode2": (x, x)}
        parts = {k: self.morphism(body, k, s, d, path) for k, (s, d) in ends.items()}
        return HopfBraceData(x, name=self.doc.get("name", "") or path, **parts)

    def cocycle(self, body, path: str) -> CocycleData:
        if not isinstance(body, dict):
            raise InvalidInput(f"key {path!r} must be an object")
        A = self.hopf(body.get("A"), f"{path}.A")
        H = self.hopf(body.get("H"), f"{path}.H")
        return CocycleData(A, H, self.morphism(body, "phi", tensor_objects(A.obj, H.obj), H.obj, path),
                           self.morphism(body, "pi", A.obj, H.obj, path),
                           self.morphism(body, "pi_inv", H.obj, A.obj, path),
                           self.doc.get("name", "") or path)

    def module(self, body, path: str) -> tuple[HopfData, ModuleData]:
        h = self.hopf(body.get("hopf"), f"{path}.hopf")
        m = self.obj(body.get("carrier_grading"), f"{path}.carrier_grading", "M")
        act = self.morphism(body, "action", tensor_objects(h.obj, m), m, path)
        return h, ModuleData(m, act, h.algebra)

    def brace_module(self, body, path: str) -> BraceModuleData:
        hb = self.hopf_brace(body.get("hopf_brace"), f"{path}.hopf_brace")
        m = self.obj(body.get("carrier_grading"), f"{path}.carrier_grading", "M")
        src = tensor_objects(hb.obj, m)
        return BraceModuleData(m, self.morphism(body, "psi1", src, m, path),
                               self.morphism(body, "psi2", src, m, path), hb, self.doc.get("name", ""))

    def cocycle_module(self, body, path: str) -> CocycleModuleData:
        cd = self.cocycle(body.get("cocycle"), f"{path}.cocycle")
        M = self.obj(body.get("M_grading"), f"{path}.M_grading", "M")
        N = self.obj(body.get("N_grading"), f"{path}.N_grading", "N")
        A, H = cd.A.obj, cd.H.obj
        return CocycleModuleData(
            M, N,
            self.morphism(body, "phiM", tensor_objects(A, M), M, path),
            self.morphism(body, "varphiM", tensor_objects(H, M), M, path),
            self.morphism(body, "phiN", tensor_objects(A, N), N, path),
            self.morphism(body, "gamma", N, M, path),
            self.morphism(body, "gamma_inv", M, N, path), cd, self.doc.get("name", ""))


def structure_kind(doc: dict) -> str:
    found = [k for k in KINDS if k in doc]
    if len(found) != 1:
        raise InvalidInput(f"expected exactly one of {', '.join(KINDS)}; found {found or 'none'}")
    return found[0]


def load(doc: dict):
    """Parse a structure document; returns ``(kind, structure)``.

    For ``module`` the structure is a pair ``(hopf, module)``.
    """
    r = _Reader(doc)
    kind = structure_kind(doc)
    body = doc[kind]
    if kind == "hopf":
        return kind, r.hopf(body, kind)
    return kind, getattr(r, kind)(body, kind)


def load_path(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise InvalidInput(f"cannot read {path}: {e.strerror}") from None
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise InvalidInput(f"{path} is not valid JSON: {e}") from None
    return load(doc)
