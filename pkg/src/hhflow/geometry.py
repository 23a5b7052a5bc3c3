"""Model Riemannian submersions: projections, the A-tensor, and curvature.

Two kinds of model are supported.  Coordinate models carry a global chart
with an explicit metric, analytic Christoffel symbols, and horizontal /
vertical frame fields; the built-in `heisenberg3` is the Heisenberg group
with its left-invariant metric submersing onto the flat plane.  Invariant
models are homogeneous: the geometry is encoded once and for all in
structure constants and an inner product on a Lie-algebra basis; the
built-in `sl2r` is SL(2,R) over the hyperbolic plane with the rotation
generator vertical.

All operations are pure and the models are immutable, so everything here
is safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

HORIZONTALITY_TOL = 1e-10


@dataclass(frozen=True)
class Point:
    """A point of a model total space, in chart coordinates."""

    coords: tuple[float, ...]
    model_id: str


class TangentVec:
    """A tangent vector with coordinate components at a base point."""

    __slots__ = ("base", "components")

    def __init__(self, base: Point, components):
        components = np.asarray(components, dtype=float)
        if components.shape != (len(base.coords),):
            raise ValueError(
                f"components of length {components.shape} do not match the "
                f"{len(base.coords)}-dimensional chart at {base.model_id}"
            )
        self.base = base
        self.components = components

    def __repr__(self):
        return f"TangentVec({self.base.model_id}, {self.components.tolist()})"


def _require_same_base(*vecs: TangentVec) -> Point:
    base = vecs[0].base
    for v in vecs[1:]:
        if v.base != base:
            raise ValueError("tangent vectors must share a base point")
    return base


# ---------------------------------------------------------------------------
# Lie-algebra data for invariant models
# ---------------------------------------------------------------------------


class LieData:
    """Structure constants and an inner product on a Lie-algebra basis.

    `structure[i, j, k]` is the coefficient of basis element k in the
    bracket of elements i and j.  `horizontal` indexes the subspace that
    projects isometrically to the base, `central` (optional) marks basis
    elements that belong to the isotropy complement and are dropped by the
    m-component projection; everything else is vertical.
    """

    def __init__(self, basis, structure, ip, horizontal, central=()):
        self.basis = tuple(basis)
        m = len(self.basis)
        self.structure = np.asarray(structure, dtype=float)
        if self.structure.shape != (m, m, m):
            raise ValueError(f"structure constants must have shape ({m},{m},{m})")
        self.ip = np.asarray(ip, dtype=float)
        if self.ip.shape != (m, m):
            raise ValueError(f"inner product must have shape ({m},{m})")
        self.horizontal = tuple(int(i) for i in horizontal)
        self.central = tuple(int(i) for i in central)
        taken = set(self.horizontal) | set(self.central)
        if len(taken) != len(self.horizontal) + len(self.central):
            raise ValueError("horizontal and central index sets overlap")
        self.vertical = tuple(i for i in range(m) if i not in taken)

        skew = np.abs(self.structure + self.structure.transpose(1, 0, 2)).max()
        if skew > 0:
            raise ValueError(f"structure constants not antisymmetric (residual {skew:g})")
        if np.abs(self.ip - self.ip.T).max() > 0:
            raise ValueError("inner product must be symmetric")
        if np.linalg.eigvalsh(self.ip).min() <= 0:
            raise ValueError("inner product must be positive definite")
        res = self.jacobi_residual()
        if res > 1e-12:
            raise ValueError(f"Jacobi identity fails with residual {res:g}")

    def __len__(self):
        return len(self.basis)

    def bracket(self, y, z) -> np.ndarray:
        return np.einsum("ijk,i,j->k", self.structure, y, z)

    def m_component(self, v) -> np.ndarray:
        out = np.array(v, dtype=float)
        for i in self.central:
            out[i] = 0.0
        return out

    def jacobi_residual(self) -> float:
        """Max absolute residual of [[x,y],z] + [[y,z],x] + [[z,x],y]."""
        c = self.structure
        term = np.einsum("ijm,mkl->ijkl", c, c)
        total = term + term.transpose(1, 2, 0, 3) + term.transpose(2, 0, 1, 3)
        return float(np.abs(total).max())


def lie_data_from_json(doc: dict) -> LieData:
    """Build LieData from the wire format

    {basis: [names], C: [[i, j, k, value], ...], ip: matrix,
     horizontal: [indices], central: [indices]?}
    """
    basis = doc["basis"]
    m = len(basis)
    structure = np.zeros((m, m, m))
    for entry in doc["C"]:
        i, j, k, value = entry
        structure[int(i), int(j), int(k)] = float(value)
        structure[int(j), int(i), int(k)] = -float(value)
    return LieData(
        basis=basis,
        structure=structure,
        ip=np.asarray(doc["ip"], dtype=float),
        horizontal=doc["horizontal"],
        central=doc.get("central", ()),
    )


def invariant_connection(lie: LieData, y, z) -> np.ndarray:
    """The canonical invariant connection: half the m-component of [y, z]."""
    y = np.asarray(y, dtype=float)
    z = np.asarray(z, dtype=float)
    if y.shape != (len(lie),) or z.shape != (len(lie),):
        raise ValueError("vectors must be expressed on the LieData basis")
    return 0.5 * lie.m_component(lie.bracket(y, z))


# ---------------------------------------------------------------------------
# Models
# ---------------------------------------------------------------------------


class SubmersionModel:
    """Shared projection and curvature machinery for both model kinds."""

    model_id: str
    total_dim: int
    base_dim: int
    fiber_dim: int
    base_curvature: float
    nonpositive_base: bool

    # single-point hooks supplied by subclasses
    def metric(self, coords: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def horizontal_frame(self, coords: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def vertical_frame(self, coords: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def oneill_A_at(self, coords: np.ndarray, y: np.ndarray, z: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def sample_coords(self, rng: np.random.Generator) -> np.ndarray:
        raise NotImplementedError

    # --- projections -------------------------------------------------------

    def vertical_projector(self, coords: np.ndarray) -> np.ndarray:
        """Metric-orthogonal projector onto the span of the vertical frame."""
        if self.fiber_dim == 0:
            return np.zeros((self.total_dim, self.total_dim))
        g = self.metric(coords)
        V = self.vertical_frame(coords)
        gram = V.T @ g @ V
        return V @ np.linalg.solve(gram, V.T @ g)

    def horizontal_projector(self, coords: np.ndarray) -> np.ndarray:
        return np.eye(self.total_dim) - self.vertical_projector(coords)

    def inner(self, coords: np.ndarray, v: np.ndarray, w: np.ndarray) -> float:
        return float(v @ self.metric(coords) @ w)

    def norm(self, coords: np.ndarray, v: np.ndarray) -> float:
        return float(np.sqrt(max(self.inner(coords, v, v), 0.0)))

    # --- batched hooks (defaults loop; fast models override) ---------------

    def metric_batch(self, P: np.ndarray) -> np.ndarray:
        flat = P.reshape(-1, self.total_dim)
        out = np.stack([self.metric(p) for p in flat])
        return out.reshape(P.shape[:-1] + (self.total_dim, self.total_dim))

    def horizontal_projector_batch(self, P: np.ndarray) -> np.ndarray:
        flat = P.reshape(-1, self.total_dim)
        out = np.stack([self.horizontal_projector(p) for p in flat])
        return out.reshape(P.shape[:-1] + (self.total_dim, self.total_dim))

    def vertical_projector_batch(self, P: np.ndarray) -> np.ndarray:
        flat = P.reshape(-1, self.total_dim)
        out = np.stack([self.vertical_projector(p) for p in flat])
        return out.reshape(P.shape[:-1] + (self.total_dim, self.total_dim))

    # --- base curvature -----------------------------------------------------

    def base_curvature_term(self, coords, y, z, u, v) -> float:
        """<R'(Y,Z)U,V> for the constant-curvature base, via the isometry
        of the projection on horizontal vectors."""
        k = self.base_curvature
        if k == 0.0:
            return 0.0
        g = self.metric(coords)
        return k * float((y @ g @ u) * (z @ g @ v) - (z @ g @ u) * (y @ g @ v))


class CoordinateModel(SubmersionModel):
    """A chart-based model: metric, Christoffel symbols, and frame fields
    are explicit functions of the chart coordinates."""

    kind = "coordinate"

    def __init__(
        self,
        model_id: str,
        total_dim: int,
        base_dim: int,
        metric: Callable[[np.ndarray], np.ndarray],
        christoffel: Callable[[np.ndarray], np.ndarray],
        horizontal_frame: Callable[[np.ndarray], np.ndarray],
        vertical_frame: Callable[[np.ndarray], np.ndarray],
        frame_jacobian: Callable[[np.ndarray], np.ndarray],
        base_curvature: float = 0.0,
        nonpositive_base: bool = True,
        sample_box: float = 2.0,
        batch_overrides: Optional[dict] = None,
    ):
        self.model_id = model_id
        self.total_dim = total_dim
        self.base_dim = base_dim
        self.fiber_dim = total_dim - base_dim
        self._metric = metric
        self._christoffel = christoffel
        self._hframe = horizontal_frame
        self._vframe = vertical_frame
        self._frame_jacobian = frame_jacobian
        self.base_curvature = base_curvature
        self.nonpositive_base = nonpositive_base
        self.sample_box = sample_box
        self._batch = dict(batch_overrides or {})

    def metric(self, coords):
        return self._metric(np.asarray(coords, dtype=float))

    def christoffel(self, coords):
        return self._christoffel(np.asarray(coords, dtype=float))

    def horizontal_frame(self, coords):
        return self._hframe(np.asarray(coords, dtype=float))

    def vertical_frame(self, coords):
        return self._vframe(np.asarray(coords, dtype=float))

    def frames(self, coords) -> np.ndarray:
        if self.fiber_dim == 0:
            return self.horizontal_frame(coords)
        return np.hstack([self.horizontal_frame(coords), self.vertical_frame(coords)])

    def frame_jacobian(self, coords) -> np.ndarray:
        """Jacobians of all frame fields, horizontal first: J[f, a, b] =
        d(frame_f)^a / dx^b."""
        return self._frame_jacobian(np.asarray(coords, dtype=float))

    def sample_coords(self, rng):
        return rng.uniform(-self.sample_box, self.sample_box, size=self.total_dim)

    # covariant derivative at `coords` of the frame-extended field with
    # constant frame coefficients `coeffs`, in the direction `direction`
    def _nabla_frame_extension(self, coords, direction, coeffs):
        F = self.frames(coords)
        J = self.frame_jacobian(coords)
        G = self.christoffel(coords)
        w = F @ coeffs
        jac = np.einsum("f,fab->ab", coeffs, J)
        return jac @ direction + np.einsum("abc,b,c->a", G, direction, w)

    def oneill_A_at(self, coords, y, z):
        """A(y, z) = H nabla_{Hy} Vz + V nabla_{Hy} Hz, frame extensions."""
        PH = self.horizontal_projector(coords)
        PV = np.eye(self.total_dim) - PH
        hy = PH @ y
        coeffs = np.linalg.solve(self.frames(coords), z)
        ch = np.concatenate([coeffs[: self.base_dim], np.zeros(self.fiber_dim)])
        cv = np.concatenate([np.zeros(self.base_dim), coeffs[self.base_dim :]])
        term_v = self._nabla_frame_extension(coords, hy, cv)
        term_h = self._nabla_frame_extension(coords, hy, ch)
        return PH @ term_v + PV @ term_h

    def frame_bracket(self, coords, i: int, j: int) -> np.ndarray:
        """Coordinate Lie bracket [F_i, F_j] of two frame fields at a point."""
        F = self.frames(coords)
        J = self.frame_jacobian(coords)
        return J[j] @ F[:, i] - J[i] @ F[:, j]

    def horizontal_field_bracket(self, coords, y, z) -> np.ndarray:
        """[Y, Z] at `coords` for the frame extensions of horizontal y, z."""
        F = self.frames(coords)
        a = np.linalg.solve(F, y)[: self.base_dim]
        b = np.linalg.solve(F, z)[: self.base_dim]
        out = np.zeros(self.total_dim)
        for i in range(self.base_dim):
            for j in range(self.base_dim):
                if a[i] == 0.0 or b[j] == 0.0:
                    continue
                out += a[i] * b[j] * self.frame_bracket(coords, i, j)
        return out

    # batched hooks
    def metric_batch(self, P):
        if "metric" in self._batch:
            return self._batch["metric"](P)
        return super().metric_batch(P)

    def christoffel_batch(self, P):
        if "christoffel" in self._batch:
            return self._batch["christoffel"](P)
        flat = P.reshape(-1, self.total_dim)
        out = np.stack([self.christoffel(p) for p in flat])
        return out.reshape(P.shape[:-1] + (self.total_dim,) * 3)

    def horizontal_projector_batch(self, P):
        if "hproj" in self._batch:
            return self._batch["hproj"](P)
        return super().horizontal_projector_batch(P)

    def vertical_projector_batch(self, P):
        if "vproj" in self._batch:
            return self._batch["vproj"](P)
        return super().vertical_projector_batch(P)


class InvariantModel(SubmersionModel):
    """A homogeneous model given by structure constants; the chart is the
    Lie-algebra basis itself and every point sees the same geometry."""

    kind = "invariant"

    def __init__(self, model_id: str, lie: LieData, base_curvature: float,
                 nonpositive_base: bool = True):
        if lie.central:
            raise ValueError("invariant models require an empty central block")
        self.model_id = model_id
        self.lie = lie
        self.total_dim = len(lie)
        self.base_dim = len(lie.horizontal)
        self.fiber_dim = len(lie.vertical)
        self.base_curvature = base_curvature
        self.nonpositive_base = nonpositive_base
        h, v = lie.horizontal, lie.vertical
        cross = lie.ip[np.ix_(h, v)]
        if cross.size and np.abs(cross).max() > 1e-12:
            raise ValueError(
                "inner product must make the horizontal and vertical blocks orthogonal"
            )

    def metric(self, coords):
        return self.lie.ip

    def metric_batch(self, P):
        return np.broadcast_to(self.lie.ip, P.shape[:-1] + self.lie.ip.shape)

    def horizontal_frame(self, coords):
        return np.eye(self.total_dim)[:, list(self.lie.horizontal)]

    def vertical_frame(self, coords):
        return np.eye(self.total_dim)[:, list(self.lie.vertical)]

    def vertical_projector(self, coords):
        P = np.zeros((self.total_dim, self.total_dim))
        for i in self.lie.vertical:
            P[i, i] = 1.0
        return P

    def sample_coords(self, rng):
        return np.zeros(self.total_dim)

    def oneill_A_at(self, coords, y, z):
        """Bracket form of the A-tensor under the invariant connection."""
        PH = self.horizontal_projector(coords)
        PV = self.vertical_projector(coords)
        hy, hz, vz = PH @ y, PH @ z, PV @ z
        term_v = 0.5 * self.lie.m_component(self.lie.bracket(hy, vz))
        term_h = 0.5 * self.lie.m_component(self.lie.bracket(hy, hz))
        return PH @ term_v + PV @ term_h

    def horizontal_field_bracket(self, coords, y, z):
        return self.lie.m_component(self.lie.bracket(y, z))


# ---------------------------------------------------------------------------
# Registry and built-in models
# ---------------------------------------------------------------------------

_REGISTRY: dict[str, SubmersionModel] = {}


def register_model(model: SubmersionModel) -> SubmersionModel:
    _REGISTRY[model.model_id] = model
    return model


def get_model(model_id: str) -> SubmersionModel:
    try:
        return _REGISTRY[model_id]
    except KeyError:
        raise KeyError(
            f"unknown model {model_id!r}; registered: {sorted(_REGISTRY)}"
        ) from None


def model_ids() -> tuple[str, ...]:
    return tuple(sorted(_REGISTRY))


def _build_heisenberg() -> CoordinateModel:
    # Chart (x, y, t) with orthonormal frame X = dx - (y/2) dt,
    # Y = dy + (x/2) dt, T = dt; the submersion forgets t.

    def metric(p):
        x, y = p[0], p[1]
        return np.array(
            [
                [1 + y * y / 4, -x * y / 4, y / 2],
                [-x * y / 4, 1 + x * x / 4, -x / 2],
                [y / 2, -x / 2, 1.0],
            ]
        )

    def christoffel(p):
        x, y = p[0], p[1]
        G = np.zeros((3, 3, 3))
        G[0, 0, 1] = G[0, 1, 0] = y / 4
        G[0, 1, 1] = -x / 2
        G[0, 1, 2] = G[0, 2, 1] = 0.5
        G[1, 0, 0] = -y / 2
        G[1, 0, 1] = G[1, 1, 0] = x / 4
        G[1, 0, 2] = G[1, 2, 0] = -0.5
        G[2, 0, 0] = -x * y / 4
        G[2, 0, 1] = G[2, 1, 0] = (x * x - y * y) / 8
        G[2, 0, 2] = G[2, 2, 0] = -x / 4
        G[2, 1, 1] = x * y / 4
        G[2, 1, 2] = G[2, 2, 1] = -y / 4
        return G

    def hframe(p):
        x, y = p[0], p[1]
        return np.array([[1.0, 0.0], [0.0, 1.0], [-y / 2, x / 2]])

    def vframe(p):
        return np.array([[0.0], [0.0], [1.0]])

    def frame_jacobian(p):
        J = np.zeros((3, 3, 3))
        J[0, 2, 1] = -0.5  # d X^t / dy
        J[1, 2, 0] = 0.5   # d Y^t / dx
        return J

    def metric_batch(P):
        x, y = P[..., 0], P[..., 1]
        g = np.zeros(P.shape[:-1] + (3, 3))
        g[..., 0, 0] = 1 + y * y / 4
        g[..., 1, 1] = 1 + x * x / 4
        g[..., 2, 2] = 1.0
        g[..., 0, 1] = g[..., 1, 0] = -x * y / 4
        g[..., 0, 2] = g[..., 2, 0] = y / 2
        g[..., 1, 2] = g[..., 2, 1] = -x / 2
        return g

    def christoffel_batch(P):
        x, y = P[..., 0], P[..., 1]
        G = np.zeros(P.shape[:-1] + (3, 3, 3))
        G[..., 0, 0, 1] = G[..., 0, 1, 0] = y / 4
        G[..., 0, 1, 1] = -x / 2
        G[..., 0, 1, 2] = G[..., 0, 2, 1] = 0.5
        G[..., 1, 0, 0] = -y / 2
        G[..., 1, 0, 1] = G[..., 1, 1, 0] = x / 4
        G[..., 1, 0, 2] = G[..., 1, 2, 0] = -0.5
        G[..., 2, 0, 0] = -x * y / 4
        G[..., 2, 0, 1] = G[..., 2, 1, 0] = (x * x - y * y) / 8
        G[..., 2, 0, 2] = G[..., 2, 2, 0] = -x / 4
        G[..., 2, 1, 1] = x * y / 4
        G[..., 2, 1, 2] = G[..., 2, 2, 1] = -y / 4
        return G

    def hproj_batch(P):
        x, y = P[..., 0], P[..., 1]
        H = np.zeros(P.shape[:-1] + (3, 3))
        H[..., 0, 0] = 1.0
        H[..., 1, 1] = 1.0
        H[..., 2, 0] = -y / 2
        H[..., 2, 1] = x / 2
        return H

    def vproj_batch(P):
        x, y = P[..., 0], P[..., 1]
        V = np.zeros(P.shape[:-1] + (3, 3))
        V[..., 2, 0] = y / 2
        V[..., 2, 1] = -x / 2
        V[..., 2, 2] = 1.0
        return V

    return CoordinateModel(
        model_id="heisenberg3",
        total_dim=3,
        base_dim=2,
        metric=metric,
        christoffel=christoffel,
        horizontal_frame=hframe,
        vertical_frame=vframe,
        frame_jacobian=frame_jacobian,
        base_curvature=0.0,
        nonpositive_base=True,
        batch_overrides={
            "metric": metric_batch,
            "christoffel": christoffel_batch,
            "hproj": hproj_batch,
            "vproj": vproj_batch,
        },
    )


def _build_sl2r() -> InvariantModel:
    # Orthonormal basis (P1, P2, V) with [P1,P2] = V, [P1,V] = P2,
    # [P2,V] = -P1; the base is the hyperbolic plane at curvature -1.
    m = 3
    c = np.zeros((m, m, m))

    def setb(i, j, k, val):
        c[i, j, k] = val
        c[j, i, k] = -val

    setb(0, 1, 2, 1.0)
    setb(0, 2, 1, 1.0)
    setb(1, 2, 0, -1.0)
    lie = LieData(basis=("P1", "P2", "V"), structure=c, ip=np.eye(m), horizontal=(0, 1))
    return InvariantModel("sl2r", lie, base_curvature=-1.0)


register_model(_build_heisenberg())
register_model(_build_sl2r())


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def _resolve(v: TangentVec) -> tuple[SubmersionModel, np.ndarray]:
    model = get_model(v.base.model_id)
    return model, np.asarray(v.base.coords, dtype=float)


def vertical_project(v: TangentVec) -> TangentVec:
    model, coords = _resolve(v)
    return TangentVec(v.base, model.vertical_projector(coords) @ v.components)


def horizontal_project(v: TangentVec) -> TangentVec:
    model, coords = _resolve(v)
    return TangentVec(v.base, model.horizontal_projector(coords) @ v.components)


def oneill_A(y: TangentVec, z: TangentVec) -> TangentVec:
    """The O'Neill tensor A(y, z) of the model the vectors live in."""
    base = _require_same_base(y, z)
    model, coords = _resolve(y)
    return TangentVec(base, model.oneill_A_at(coords, y.components, z.components))


def _check_horizontal(model, coords, v: np.ndarray, tol: float, what: str):
    vert = (np.eye(model.total_dim) - model.horizontal_projector(coords)) @ v
    defect = model.norm(coords, vert)
    scale = 1.0 + model.norm(coords, v)
    if defect > tol * scale:
        raise ValueError(f"{what} is not horizontal (vertical norm {defect:g})")


def oneill_curvature(y: TangentVec, z: TangentVec, u: TangentVec, v: TangentVec) -> float:
    """<R(Y,Z)U,V> on horizontal vectors, assembled from the base curvature
    and the A-tensor correction terms.
    """
    base = _require_same_base(y, z, u, v)
    model, coords = _resolve(y)
    for vec, name in ((y, "y"), (z, "z"), (u, "u"), (v, "v")):
        _check_horizontal(model, coords, vec.components, HORIZONTALITY_TOL, name)

    g = model.metric(coords)

    def A(a, b):
        return model.oneill_A_at(coords, a.components, b.components)

    def ip(a, b):
        return float(a @ g @ b)

    r_base = model.base_curvature_term(coords, y.components, z.components,
                                       u.components, v.components)
    return (
        r_base
        - 2.0 * ip(A(y, z), A(u, v))
        + ip(A(z, u), A(y, v))
        - ip(A(y, u), A(z, v))
    )


def sectional_data(y: TangentVec, z: TangentVec) -> tuple[float, float, float]:
    """(K_total, K_base, |A(y,z)|^2) for the 2-plane spanned by y, z.

    Values are normalized by the squared plane area, so for an orthonormal
    pair they are the sectional curvatures directly and the plane form
    K_total = K_base - 3 |A|^2 holds.
    """
    base = _require_same_base(y, z)
    model, coords = _resolve(y)
    g = model.metric(coords)
    yy = float(y.components @ g @ y.components)
    zz = float(z.components @ g @ z.components)
    yz = float(y.components @ g @ z.components)
    area2 = yy * zz - yz * yz
    if area2 <= 1e-14:
        raise ValueError("degenerate 2-plane")
    k_total = oneill_curvature(y, z, y, z) / area2
    k_base = model.base_curvature_term(
        coords, y.components, z.components, y.components, z.components
    ) / area2
    a = model.oneill_A_at(coords, y.components, z.components)
    a_norm_sq = float(a @ g @ a) / area2
    return k_total, k_base, a_norm_sq


@dataclass(frozen=True)
class CurvatureSample:
    point: Point
    plane: tuple[TangentVec, TangentVec]
    K_total: float
    K_base: float
    A_norm_sq: float


@dataclass(frozen=True)
class CurvatureReport:
    model_id: str
    samples: tuple[CurvatureSample, ...]
    min_K: float
    max_K: float
    success: bool


def random_horizontal_pair(model: SubmersionModel, coords: np.ndarray,
                           rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """An orthonormal horizontal pair at `coords` (metric Gram-Schmidt)."""
    PH = model.horizontal_projector(coords)
    g = model.metric(coords)
    while True:
        a = PH @ rng.standard_normal(model.total_dim)
        b = PH @ rng.standard_normal(model.total_dim)
        na = np.sqrt(a @ g @ a)
        if na < 1e-8:
            continue
        a = a / na
        b = b - (b @ g @ a) * a
        nb = np.sqrt(b @ g @ b)
        if nb < 1e-8:
            continue
        return a, b / nb


def check_nonpositive_horizontal(model, n_samples: int, seed: int = 0,
                                 tol: float = 1e-9) -> CurvatureReport:
    """Sample random horizontal 2-planes and report their curvatures.

    Requires a model whose base is declared nonpositively curved; success
    means every sampled K stayed below `tol`.
    """
    if isinstance(model, str):
        model = get_model(model)
    if not model.nonpositive_base:
        raise ValueError(f"{model.model_id}: base is not declared nonpositively curved")
    rng = np.random.default_rng(seed)
    samples = []
    for _ in range(n_samples):
        coords = model.sample_coords(rng)
        a, b = random_horizontal_pair(model, coords, rng)
        pt = Point(tuple(coords), model.model_id)
        y = TangentVec(pt, a)
        z = TangentVec(pt, b)
        k_total, k_base, a2 = sectional_data(y, z)
        samples.append(CurvatureSample(pt, (y, z), k_total, k_base, a2))
    if samples:
        ks = [s.K_total for s in samples]
        min_k, max_k = min(ks), max(ks)
        success = max_k <= tol
    else:
        min_k = max_k = float("nan")
        success = True
    return CurvatureReport(model.model_id, tuple(samples), min_k, max_k, success)


def vertical_tension(du: Sequence[TangentVec], point: Point,
                     tol: float = HORIZONTALITY_TOL) -> TangentVec:
    """Sum of A(du_i, du_i) over the differential's values.

    The inputs must be horizontal (within `tol`); the returned vector is
    the vertical part of the tension of a horizontal map and vanishes up
    to rounding.
    """
    model = get_model(point.model_id)
    coords = np.asarray(point.coords, dtype=float)
    total = np.zeros(model.total_dim)
    for i, v in enumerate(du):
        if v.base != point:
            raise ValueError("all differential values must sit at the given point")
        _check_horizontal(model, coords, v.components, tol, f"du(e_{i})")
        total += model.oneill_A_at(coords, v.components, v.components)
    return TangentVec(point, total)
