"""Per-pixel background estimation and motion labeling.

The estimator is an integer recurrence on 8-bit levels: the background mean
M follows each pixel by at most one level per frame, a variance image V
tracks an amplified version of the non-zero differences the same way, and
the binary label E marks pixels whose current difference reaches V.
Intensities are quantized to levels 0..255 on entry because +/-1 stepping is
only meaningful on an integer lattice.
"""

from dataclasses import dataclass

import numpy as np

from .core import Frame, Sequence, quantize
from .errors import DimensionError, ParameterError


@dataclass(frozen=True)
class SigmaDeltaParams:
    """Detector parameters.

    amplification : factor applied to non-zero differences before they feed
        the variance recurrence (>= 1).
    v_min, v_max : clamp bounds for the variance image, 1 <= v_min <= v_max <= 255.
        The floor keeps the label from firing on quantization jitter.
    """

    amplification: int = 2
    v_min: int = 2
    v_max: int = 255

    def __post_init__(self):
        if self.amplification < 1:
            raise ParameterError(f"amplification must be >= 1, got {self.amplification}")
        if not 1 <= self.v_min <= self.v_max <= 255:
            raise ParameterError(
                f"need 1 <= v_min <= v_max <= 255, got v_min={self.v_min} v_max={self.v_max}"
            )


class SigmaDeltaState:
    """Mutable per-pixel state: background mean M and variance V (int32)."""

    __slots__ = ("M", "V", "params")

    def __init__(self, M: np.ndarray, V: np.ndarray, params: SigmaDeltaParams):
        self.M = M
        self.V = V
        self.params = params


class MotionFrame:
    """Detector output for one frame: difference magnitude O and labels E."""

    __slots__ = ("O", "E")

    def __init__(self, O: np.ndarray, E: np.ndarray):
        self.O = O
        self.E = E


def sd_init(first: Frame, params: SigmaDeltaParams) -> SigmaDeltaState:
    """Start a detector: M is the quantized first frame, V sits at the floor."""
    M = quantize(first)
    V = np.full(M.shape, params.v_min, dtype=np.int32)
    return SigmaDeltaState(M, V, params)


def sd_update(state: SigmaDeltaState, frame: Frame) -> MotionFrame:
    """Advance the detector by one frame and return its motion output.

    With I the quantized input, the four steps per pixel are:

    1. M += sign(I - M)                      (mean tracks by one level)
    2. O = |I - M|                           (difference, after the M update)
    3. where O != 0: V += sign(amplification * O - V), clamped to [v_min, v_max]
    4. E = 0 where O < V, else 1
    """
    if frame.data.shape != state.M.shape:
        raise DimensionError(
            f"frame is {frame.data.shape}, state is {state.M.shape}"
        )
    I = quantize(frame)
    state.M += np.sign(I - state.M, dtype=np.int32)
    O = np.abs(I - state.M)
    moving = O != 0
    target = state.params.amplification * O
    V = state.V
    V[moving] += np.sign(target - V, dtype=np.int32)[moving]
    np.clip(V, state.params.v_min, state.params.v_max, out=V)
    E = (O >= V).astype(np.uint8)
    return MotionFrame(O, E)


def sd_run(seq: Sequence, params: SigmaDeltaParams) -> list:
    """Run the detector over a sequence, one MotionFrame per frame.

    Frame 0 initializes the state and has no meaningful difference; it gets
    an all-zero MotionFrame so the output aligns 1:1 with the input frames.
    """
    state = sd_init(seq[0], params)
    zeros = np.zeros(state.M.shape, dtype=np.int32)
    out = [MotionFrame(zeros.copy(), zeros.astype(np.uint8))]
    for frame in seq.frames[1:]:
        out.append(sd_update(state, frame))
    return out
