"""Dense tensors with reverse-mode automatic differentiation.

A `Tensor` wraps a float32 or float64 numpy array and records, per
operation, a closure that propagates the output gradient to its parents.
`backward` on a scalar runs the closures in reverse topological order.

Conventions:
  - float32 is the training dtype, float64 the verification dtype used by
    `grad_check`; binary ops require matching dtypes.
  - No implicit broadcasting between tensors. The only shape-changing
    binary forms are the dedicated ops (`linear` bias rows,
    `expand_channels`), which define their own exact backward.
  - Tensors are treated as immutable once created; only `grad` accumulates.
  - Max-type ops (maxpool2d, channel_max) route gradient to the first
    maximal element in row-major scan order.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

FLOAT_DTYPES = (np.float32, np.float64)


class ShapeError(ValueError):
    """Raised when operand shapes are incompatible for an operation."""


class Tensor:
    __slots__ = ("data", "grad", "requires_grad", "_parents", "_backward", "op", "_done")

    def __init__(self, data, requires_grad: bool = False, dtype=None):
        arr = np.asarray(data, dtype=dtype)
        if arr.dtype not in FLOAT_DTYPES:
            arr = arr.astype(np.float32)
        self.data: np.ndarray = arr
        self.grad: np.ndarray | None = None
        self.requires_grad = bool(requires_grad)
        self._parents: tuple[Tensor, ...] = ()
        self._backward: Callable[[np.ndarray], None] | None = None
        self.op = "leaf"
        self._done = False

    # -- introspection -----------------------------------------------------

    @property
    def shape(self) -> tuple[int, ...]:
        return self.data.shape

    @property
    def ndim(self) -> int:
        return self.data.ndim

    @property
    def size(self) -> int:
        return self.data.size

    @property
    def dtype(self):
        return self.data.dtype

    def item(self) -> float:
        return float(self.data.reshape(-1)[0]) if self.data.size == 1 else self._not_scalar()

    def _not_scalar(self):
        raise ValueError(f"item() on tensor of shape {self.shape}")

    def __repr__(self) -> str:
        return f"Tensor(shape={self.shape}, dtype={self.data.dtype}, op={self.op})"

    # -- graph plumbing ----------------------------------------------------

    def detach(self) -> "Tensor":
        return Tensor(self.data, requires_grad=False)

    def zero_grad(self) -> None:
        self.grad = None

    def _accumulate(self, g: np.ndarray) -> None:
        if self.grad is None:
            self.grad = np.array(g, dtype=self.data.dtype, copy=True)
        else:
            self.grad += g

    def backward(self) -> None:
        backward(self)

    # -- operator sugar ------------------------------------------------------

    def __add__(self, other: "Tensor") -> "Tensor":
        return add(self, other)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return sub(self, other)

    def __mul__(self, other: "Tensor") -> "Tensor":
        return mul(self, other)

    def __neg__(self) -> "Tensor":
        return neg(self)

    def sum(self, axis=None, keepdims: bool = False) -> "Tensor":
        return sum_(self, axis=axis, keepdims=keepdims)

    def mean(self, axis=None, keepdims: bool = False) -> "Tensor":
        return mean_(self, axis=axis, keepdims=keepdims)


def _make(data: np.ndarray, parents: Sequence[Tensor], bwd: Callable[[np.ndarray], None], op: str) -> Tensor:
    out = Tensor(data)
    out.requires_grad = any(p.requires_grad for p in parents)
    if out.requires_grad:
        out._parents = tuple(parents)
        out._backward = bwd
    out.op = op
    return out


def _check_same(a: Tensor, b: Tensor, op: str) -> None:
    if a.shape != b.shape:
        raise ShapeError(f"{op}: operand shapes {a.shape} and {b.shape} differ")
    if a.dtype != b.dtype:
        raise ShapeError(f"{op}: operand dtypes {a.dtype} and {b.dtype} differ")


def backward(loss: Tensor) -> None:
    """Populate grads of every requires_grad ancestor of a scalar loss."""
    if loss.size != 1:
        raise ValueError(f"backward requires a scalar loss, got shape {loss.shape}")
    if not loss.requires_grad:
        raise ValueError("backward on a detached graph: loss does not require grad")
    if loss._done:
        raise RuntimeError("backward already ran for this graph; rebuild the graph first")
    loss._done = True

    topo: list[Tensor] = []
    visited: set[int] = set()
    stack: list[tuple[Tensor, bool]] = [(loss, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            topo.append(node)
            continue
        if id(node) in visited:
            continue
        visited.add(id(node))
        stack.append((node, True))
        for p in node._parents:
            if p.requires_grad and id(p) not in visited:
                stack.append((p, False))

    loss._accumulate(np.ones_like(loss.data))
    for node in reversed(topo):
        if node._backward is not None:
            node._backward(node.grad)


# -- elementwise -------------------------------------------------------------


def add(a: Tensor, b: Tensor) -> Tensor:
    _check_same(a, b, "add")

    def bwd(g):
        if a.requires_grad:
            a._accumulate(g)
        if b.requires_grad:
            b._accumulate(g)

    return _make(a.data + b.data, (a, b), bwd, "add")


def sub(a: Tensor, b: Tensor) -> Tensor:
    _check_same(a, b, "sub")

    def bwd(g):
        if a.requires_grad:
            a._accumulate(g)
        if b.requires_grad:
            b._accumulate(-g)

    return _make(a.data - b.data, (a, b), bwd, "sub")


def mul(a: Tensor, b: Tensor) -> Tensor:
    _check_same(a, b, "mul")

    def bwd(g):
        if a.requires_grad:
            a._accumulate(g * b.data)
        if b.requires_grad:
            b._accumulate(g * a.data)

    return _make(a.data * b.data, (a, b), bwd, "mul")


def neg(x: Tensor) -> Tensor:
    def bwd(g):
        x._accumulate(-g)

    return _make(-x.data, (x,), bwd, "neg")


def scale(x: Tensor, c: float) -> Tensor:
    c = float(c)

    def bwd(g):
        x._accumulate(g * c)

    return _make(x.data * x.data.dtype.type(c), (x,), bwd, "scale")


def add_scalar(x: Tensor, c: float) -> Tensor:
    def bwd(g):
        x._accumulate(g)

    return _make(x.data + x.data.dtype.type(c), (x,), bwd, "add_scalar")


def pow_const(x: Tensor, p: float) -> Tensor:
    p = float(p)
    out = x.data**p

    def bwd(g):
        x._accumulate(g * p * x.data ** (p - 1.0))

    return _make(out, (x,), bwd, "pow_const")


def log(x: Tensor) -> Tensor:
    def bwd(g):
        x._accumulate(g / x.data)

    return _make(np.log(x.data), (x,), bwd, "log")


def exp(x: Tensor) -> Tensor:
    out = np.exp(x.data)

    def bwd(g):
        x._accumulate(g * out)

    return _make(out, (x,), bwd, "exp")


def abs_(x: Tensor) -> Tensor:
    def bwd(g):
        x._accumulate(g * np.sign(x.data))

    return _make(np.abs(x.data), (x,), bwd, "abs")


def clamp(x: Tensor, lo: float, hi: float) -> Tensor:
    out = np.clip(x.data, lo, hi)

    def bwd(g):
        x._accumulate(g * ((x.data > lo) & (x.data < hi)))

    return _make(out, (x,), bwd, "clamp")


def relu(x: Tensor) -> Tensor:
    out = np.maximum(x.data, 0)

    def bwd(g):
        x._accumulate(g * (x.data > 0))

    return _make(out, (x,), bwd, "relu")


def sigmoid(x: Tensor) -> Tensor:
    d = x.data
    out = np.empty_like(d)
    pos = d >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-d[pos]))
    ex = np.exp(d[~pos])
    out[~pos] = ex / (1.0 + ex)

    def bwd(g):
        x._accumulate(g * out * (1.0 - out))

    return _make(out, (x,), bwd, "sigmoid")


def softmax(x: Tensor, axis: int = -1) -> Tensor:
    _check_axis(x, axis, "softmax")
    shifted = x.data - x.data.max(axis=axis, keepdims=True)
    e = np.exp(shifted)
    out = e / e.sum(axis=axis, keepdims=True)

    def bwd(g):
        x._accumulate(out * (g - (g * out).sum(axis=axis, keepdims=True)))

    return _make(out, (x,), bwd, "softmax")


def log_softmax(x: Tensor, axis: int = -1) -> Tensor:
    _check_axis(x, axis, "log_softmax")
    shifted = x.data - x.data.max(axis=axis, keepdims=True)
    out = shifted - np.log(np.exp(shifted).sum(axis=axis, keepdims=True))

    def bwd(g):
        x._accumulate(g - np.exp(out) * g.sum(axis=axis, keepdims=True))

    return _make(out, (x,), bwd, "log_softmax")


def _check_axis(x: Tensor, axis: int, op: str) -> None:
    if not -x.ndim <= axis < x.ndim:
        raise ShapeError(f"{op}: axis {axis} out of range for {x.ndim}-d tensor")


# -- reductions ----------------------------------------------------------------


def sum_(x: Tensor, axis=None, keepdims: bool = False) -> Tensor:
    out = x.data.sum(axis=axis, keepdims=keepdims)

    def bwd(g):
        gg = np.asarray(g)
        if axis is not None and not keepdims:
            gg = np.expand_dims(gg, axis)
        x._accumulate(np.broadcast_to(gg, x.shape))

    return _make(out, (x,), bwd, "sum")


def mean_(x: Tensor, axis=None, keepdims: bool = False) -> Tensor:
    out = x.data.mean(axis=axis, keepdims=keepdims)
    count = x.size if axis is None else np.prod([x.shape[a] for a in np.atleast_1d(axis)])

    def bwd(g):
        gg = np.asarray(g) / x.data.dtype.type(count)
        if axis is not None and not keepdims:
            gg = np.expand_dims(gg, axis)
        x._accumulate(np.broadcast_to(gg, x.shape))

    return _make(out, (x,), bwd, "mean")


# -- linear algebra --------------------------------------------------------


def matmul(a: Tensor, b: Tensor) -> Tensor:
    if a.ndim != 2 or b.ndim != 2:
        raise ShapeError(f"matmul: expects 2-d operands, got {a.shape} and {b.shape}")
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"matmul: inner dimensions {a.shape[1]} and {b.shape[0]} differ")

    def bwd(g):
        if a.requires_grad:
            a._accumulate(g @ b.data.T)
        if b.requires_grad:
            b._accumulate(a.data.T @ g)

    return _make(a.data @ b.data, (a, b), bwd, "matmul")


def linear(x: Tensor, w: Tensor, b: Tensor) -> Tensor:
    """Affine map y = x @ w + b with b broadcast over rows."""
    if x.ndim != 2 or w.ndim != 2 or b.ndim != 1:
        raise ShapeError(f"linear: expects (N,F), (F,O), (O,), got {x.shape}, {w.shape}, {b.shape}")
    if x.shape[1] != w.shape[0] or w.shape[1] != b.shape[0]:
        raise ShapeError(f"linear: inner dims {x.shape[1]}->{w.shape}->{b.shape} inconsistent")

    def bwd(g):
        if x.requires_grad:
            x._accumulate(g @ w.data.T)
        if w.requires_grad:
            w._accumulate(x.data.T @ g)
        if b.requires_grad:
            b._accumulate(g.sum(axis=0))

    return _make(x.data @ w.data + b.data, (x, w, b), bwd, "linear")


# -- shape ops ------------------------------------------------------------------


def concat(xs: Sequence[Tensor], axis: int) -> Tensor:
    if not xs:
        raise ShapeError("concat: empty input list")
    first = xs[0]
    _check_axis(first, axis, "concat")
    ax = axis % first.ndim
    for i, t in enumerate(xs[1:], 1):
        if t.ndim != first.ndim:
            raise ShapeError(f"concat: input {i} has rank {t.ndim}, expected {first.ndim}")
        for d in range(first.ndim):
            if d != ax and t.shape[d] != first.shape[d]:
                raise ShapeError(f"concat: input {i} dimension {d} is {t.shape[d]}, expected {first.shape[d]}")
    out = np.concatenate([t.data for t in xs], axis=ax)
    offsets = np.cumsum([0] + [t.shape[ax] for t in xs])

    def bwd(g):
        idx = [slice(None)] * first.ndim
        for t, lo, hi in zip(xs, offsets[:-1], offsets[1:]):
            if t.requires_grad:
                idx[ax] = slice(lo, hi)
                t._accumulate(g[tuple(idx)])

    return _make(out, tuple(xs), bwd, "concat")


def expand_channels(x: Tensor, channels: int) -> Tensor:
    """Tile an (N,1,H,W) map across the channel axis."""
    if x.ndim != 4 or x.shape[1] != 1:
        raise ShapeError(f"expand_channels: expects (N,1,H,W), got {x.shape}")
    out = np.repeat(x.data, channels, axis=1)

    def bwd(g):
        x._accumulate(g.sum(axis=1, keepdims=True))

    return _make(out, (x,), bwd, "expand_channels")


def reshape(x: Tensor, shape: tuple[int, ...]) -> Tensor:
    out = x.data.reshape(shape)

    def bwd(g):
        x._accumulate(g.reshape(x.shape))

    return _make(out, (x,), bwd, "reshape")


# -- spatial ops -------------------------------------------------------------


def conv2d(x: Tensor, w: Tensor, b: Tensor, stride: int = 1, padding: int = 0, strict: bool = True) -> Tensor:
    """Cross-correlation of NCHW input with (Co,C,kh,kw) kernels."""
    if x.ndim != 4:
        raise ShapeError(f"conv2d: input must be (N,C,H,W), got {x.shape}")
    if w.ndim != 4:
        raise ShapeError(f"conv2d: kernel must be (Co,C,kh,kw), got {w.shape}")
    n, c, h, wd = x.shape
    co, ci, kh, kw = w.shape
    if ci != c:
        raise ShapeError(f"conv2d: kernel expects {ci} input channels, input has {c}")
    if b.shape != (co,):
        raise ShapeError(f"conv2d: bias shape {b.shape} does not match {co} output channels")
    if stride < 1:
        raise ShapeError(f"conv2d: stride must be >= 1, got {stride}")
    hp, wp = h + 2 * padding, wd + 2 * padding
    if kh > hp or kw > wp:
        raise ShapeError(f"conv2d: kernel ({kh},{kw}) larger than padded input ({hp},{wp})")
    if strict and ((hp - kh) % stride or (wp - kw) % stride):
        raise ShapeError(f"conv2d: spatial extents ({hp},{wp}) minus kernel ({kh},{kw}) not divisible by stride {stride}")
    ho, wo = (hp - kh) // stride + 1, (wp - kw) // stride + 1

    xp = np.pad(x.data, ((0, 0), (0, 0), (padding, padding), (padding, padding))) if padding else x.data
    win = sliding_window_view(xp, (kh, kw), axis=(2, 3))[:, :, ::stride, ::stride]
    cols = np.ascontiguousarray(win.transpose(0, 2, 3, 1, 4, 5)).reshape(n * ho * wo, c * kh * kw)
    wmat = w.data.reshape(co, -1)
    out = cols @ wmat.T
    out += b.data
    out = np.ascontiguousarray(out.reshape(n, ho, wo, co).transpose(0, 3, 1, 2))

    def bwd(g):
        gmat = np.ascontiguousarray(g.transpose(0, 2, 3, 1)).reshape(n * ho * wo, co)
        if b.requires_grad:
            b._accumulate(gmat.sum(axis=0))
        if w.requires_grad:
            w._accumulate((gmat.T @ cols).reshape(w.shape))
        if not x.requires_grad:
            return
        if stride == 1:
            # input gradient = full correlation of g with the flipped kernel
            gp = np.pad(g, ((0, 0), (0, 0), (kh - 1, kh - 1), (kw - 1, kw - 1)))
            gwin = sliding_window_view(gp, (kh, kw), axis=(2, 3))
            gcols = np.ascontiguousarray(gwin.transpose(0, 2, 3, 1, 4, 5)).reshape(n * hp * wp, co * kh * kw)
            wflip = np.ascontiguousarray(w.data[:, :, ::-1, ::-1].transpose(1, 0, 2, 3)).reshape(c, co * kh * kw)
            dxp = (gcols @ wflip.T).reshape(n, hp, wp, c).transpose(0, 3, 1, 2)
        else:
            dcols = (gmat @ wmat).reshape(n, ho, wo, c, kh, kw).transpose(0, 3, 1, 2, 4, 5)
            dxp = np.zeros((n, c, hp, wp), dtype=x.data.dtype)
            for i in range(kh):
                for j in range(kw):
                    dxp[:, :, i : i + stride * ho : stride, j : j + stride * wo : stride] += dcols[:, :, :, :, i, j]
        if padding:
            dxp = dxp[:, :, padding : padding + h, padding : padding + wd]
        x._accumulate(np.ascontiguousarray(dxp))

    return _make(out, (x, w, b), bwd, "conv2d")


def _pool_windows(x: np.ndarray, window: int, stride: int):
    win = sliding_window_view(x, (window, window), axis=(2, 3))[:, :, ::stride, ::stride]
    return win


def _check_pool(x: Tensor, window: int, op: str) -> None:
    if x.ndim != 4:
        raise ShapeError(f"{op}: input must be (N,C,H,W), got {x.shape}")
    if window > x.shape[2] or window > x.shape[3]:
        raise ShapeError(f"{op}: window {window} larger than spatial extents {x.shape[2:]}")


def maxpool2d(x: Tensor, window: int, stride: int | None = None) -> Tensor:
    _check_pool(x, window, "maxpool2d")
    stride = window if stride is None else stride
    n, c, h, wd = x.shape
    win = _pool_windows(x.data, window, stride)
    n_, c_, ho, wo = win.shape[:4]
    flat = win.reshape(n, c, ho, wo, window * window)
    idx = flat.argmax(axis=-1)  # first maximum in scan order on ties
    out = np.take_along_axis(flat, idx[..., None], axis=-1)[..., 0]

    def bwd(g):
        onehot = idx[..., None] == np.arange(window * window)
        dwin = g[..., None] * onehot
        if stride == window and h == ho * window and wd == wo * window:
            dx = dwin.reshape(n, c, ho, wo, window, window).transpose(0, 1, 2, 4, 3, 5).reshape(n, c, h, wd)
            x._accumulate(np.ascontiguousarray(dx))
        else:
            # overlap-safe scatter for the general stride case
            dx = np.zeros_like(x.data)
            dwin6 = dwin.reshape(n, c, ho, wo, window, window)
            for oi in range(ho):
                for oj in range(wo):
                    dx[:, :, oi * stride : oi * stride + window, oj * stride : oj * stride + window] += dwin6[:, :, oi, oj]
            x._accumulate(dx)

    return _make(np.ascontiguousarray(out), (x,), bwd, "maxpool2d")


def avgpool2d(x: Tensor, window: int, stride: int | None = None) -> Tensor:
    _check_pool(x, window, "avgpool2d")
    stride = window if stride is None else stride
    n, c, h, wd = x.shape
    win = _pool_windows(x.data, window, stride)
    ho, wo = win.shape[2], win.shape[3]
    out = win.mean(axis=(-2, -1))
    inv = 1.0 / (window * window)

    def bwd(g):
        gshare = (g * x.data.dtype.type(inv))[:, :, :, None, :, None]
        if stride == window and h == ho * window and wd == wo * window:
            dx = np.broadcast_to(gshare, (n, c, ho, window, wo, window)).reshape(n, c, h, wd)
            x._accumulate(np.ascontiguousarray(dx))
        else:
            dx = np.zeros_like(x.data)
            for oi in range(ho):
                for oj in range(wo):
                    dx[:, :, oi * stride : oi * stride + window, oj * stride : oj * stride + window] += g[:, :, oi : oi + 1, oj : oj + 1] * inv
            x._accumulate(dx)

    return _make(np.ascontiguousarray(out), (x,), bwd, "avgpool2d")


def channel_max(x: Tensor) -> Tensor:
    """Per-pixel maximum over the channel axis, (N,C,H,W) -> (N,1,H,W)."""
    if x.ndim != 4 or x.shape[1] < 1:
        raise ShapeError(f"channel_max: expects (N,C,H,W) with C >= 1, got {x.shape}")
    idx = x.data.argmax(axis=1)  # first maximum on ties
    out = x.data.max(axis=1, keepdims=True)
    c = x.shape[1]

    def bwd(g):
        onehot = np.arange(c)[None, :, None, None] == idx[:, None, :, :]
        x._accumulate(g * onehot)

    return _make(out, (x,), bwd, "channel_max")


def channel_avg(x: Tensor) -> Tensor:
    """Per-pixel mean over the channel axis, (N,C,H,W) -> (N,1,H,W)."""
    if x.ndim != 4 or x.shape[1] < 1:
        raise ShapeError(f"channel_avg: expects (N,C,H,W) with C >= 1, got {x.shape}")
    c = x.shape[1]
    out = x.data.mean(axis=1, keepdims=True)

    def bwd(g):
        x._accumulate(np.broadcast_to(g / x.data.dtype.type(c), x.shape))

    return _make(out, (x,), bwd, "channel_avg")


def _interp_matrix(n_in: int, n_out: int, dtype) -> np.ndarray:
    """Row-stochastic bilinear interpolation matrix with half-pixel centers."""
    m = np.zeros((n_out, n_in), dtype=dtype)
    s = n_in / n_out
    for i in range(n_out):
        src = (i + 0.5) * s - 0.5
        i0 = int(np.floor(src))
        t = src - i0
        lo = min(max(i0, 0), n_in - 1)
        hi = min(max(i0 + 1, 0), n_in - 1)
        m[i, lo] += 1.0 - t
        m[i, hi] += t
    return m


def resize_array(a: np.ndarray, out_h: int, out_w: int) -> np.ndarray:
    """Bilinear resize of the trailing two axes of a plain array."""
    if a.shape[-2] != out_h:
        a = np.matmul(_interp_matrix(a.shape[-2], out_h, a.dtype), a)
    if a.shape[-1] != out_w:
        a = np.matmul(a, _interp_matrix(a.shape[-1], out_w, a.dtype).T)
    return a


def bilinear_resize(x: Tensor, out_h: int, out_w: int) -> Tensor:
    """Bilinear resize of (N,C,H,W); same-size resize is the bit-exact identity."""
    if x.ndim != 4:
        raise ShapeError(f"bilinear_resize: expects (N,C,H,W), got {x.shape}")
    if out_h < 1 or out_w < 1:
        raise ShapeError(f"bilinear_resize: target size ({out_h},{out_w}) must be positive")
    h, w = x.shape[2], x.shape[3]
    mh = None if out_h == h else _interp_matrix(h, out_h, x.data.dtype)
    mw = None if out_w == w else _interp_matrix(w, out_w, x.data.dtype)
    out = x.data
    if mh is not None:
        out = np.matmul(mh, out)
    if mw is not None:
        out = np.matmul(out, mw.T)
    if mh is None and mw is None:
        out = out.copy()

    def bwd(g):
        dx = g
        if mh is not None:
            dx = np.matmul(mh.T, dx)
        if mw is not None:
            dx = np.matmul(dx, mw)
        x._accumulate(dx)

    return _make(np.ascontiguousarray(out), (x,), bwd, "bilinear_resize")


# -- verification -----------------------------------------------------------


def grad_check(f: Callable[..., Tensor], inputs: Sequence[Tensor], eps: float = 1e-5) -> float:
    """Max relative error between backward grads and central differences.

    Inputs must be float64. Relative error uses the denominator
    max(|analytic|, |numeric|, 1e-8) per element; the overall maximum over
    all elements of all requires_grad inputs is returned.
    """
    for t in inputs:
        if t.dtype != np.float64:
            raise ValueError("grad_check requires float64 inputs")
        t.zero_grad()
    out = f(*inputs)
    backward(out)
    worst = 0.0
    for t in inputs:
        if not t.requires_grad:
            continue
        analytic = np.zeros_like(t.data) if t.grad is None else t.grad
        flat = t.data.reshape(-1)
        numeric = np.zeros(flat.size, dtype=np.float64)
        for i in range(flat.size):
            orig = flat[i]
            flat[i] = orig + eps
            fp = f(*inputs).item()
            flat[i] = orig - eps
            fm = f(*inputs).item()
            flat[i] = orig
            numeric[i] = (fp - fm) / (2.0 * eps)
        a = analytic.reshape(-1)
        denom = np.maximum(np.maximum(np.abs(a), np.abs(numeric)), 1e-8)
        worst = max(worst, float(np.max(np.abs(a - numeric) / denom)))
    return worst
