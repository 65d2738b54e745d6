"""Frame/Sequence data model and the discrete difference primitives.

Intensities live in the normalized [0, 1] domain everywhere inside the
toolkit; 8-bit levels appear only at the I/O edges (see `pgm`).  Boundary
handling is nearest-pixel replication, i.e. a zero-flux boundary.
"""

import numpy as np

from .errors import DimensionError, FormatError


class Frame:
    """One grayscale image: row-major float64 intensities in [0, 1]."""

    __slots__ = ("_data",)

    def __init__(self, data):
        arr = np.ascontiguousarray(data, dtype=np.float64)
        if arr.ndim != 2:
            raise DimensionError(f"frame data must be 2-D, got shape {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise DimensionError("frame must be at least 1x1")
        if not np.all(np.isfinite(arr)):
            raise ValueError("frame intensities must be finite")
        lo, hi = float(arr.min()), float(arr.max())
        if lo < 0.0 or hi > 1.0:
            raise ValueError(f"frame intensities must lie in [0, 1], got [{lo}, {hi}]")
        arr.setflags(write=False)
        self._data = arr

    @property
    def data(self) -> np.ndarray:
        """Read-only (height, width) float64 array."""
        return self._data

    @property
    def width(self) -> int:
        return self._data.shape[1]

    @property
    def height(self) -> int:
        return self._data.shape[0]

    def __eq__(self, other):
        if not isinstance(other, Frame):
            return NotImplemented
        return np.array_equal(self._data, other._data)

    def __repr__(self):
        return f"Frame({self.width}x{self.height})"


class Sequence:
    """Ordered list of equally sized Frames; the index is the time axis."""

    __slots__ = ("_frames",)

    def __init__(self, frames):
        frames = list(frames)
        if not frames:
            raise DimensionError("sequence must contain at least one frame")
        w, h = frames[0].width, frames[0].height
        for i, f in enumerate(frames):
            if f.width != w or f.height != h:
                raise DimensionError(
                    f"frame {i} is {f.width}x{f.height}, expected {w}x{h}"
                )
        self._frames = frames

    @classmethod
    def from_array(cls, arr) -> "Sequence":
        """Build a Sequence from a (frames, height, width) array."""
        arr = np.asarray(arr, dtype=np.float64)
        if arr.ndim != 3:
            raise DimensionError(f"expected a 3-D array, got shape {arr.shape}")
        return cls([Frame(a) for a in arr])

    def as_array(self) -> np.ndarray:
        """Stack all frames into a (frames, height, width) float64 array."""
        return np.stack([f.data for f in self._frames])

    @property
    def frames(self) -> list:
        return list(self._frames)

    @property
    def width(self) -> int:
        return self._frames[0].width

    @property
    def height(self) -> int:
        return self._frames[0].height

    def __len__(self):
        return len(self._frames)

    def __getitem__(self, n) -> Frame:
        return self._frames[n]

    def __iter__(self):
        return iter(self._frames)

    def __eq__(self, other):
        if not isinstance(other, Sequence):
            return NotImplemented
        return len(self) == len(other) and all(
            a == b for a, b in zip(self._frames, other._frames)
        )

    def __repr__(self):
        return f"Sequence({len(self)} frames, {self.width}x{self.height})"


def frame_from_bytes(width: int, height: int, data, maxval: int = 255) -> Frame:
    """Decode 8-bit samples into a Frame, dividing by `maxval` exactly.

    Parameters
    ----------
    width, height : int
        Frame dimensions; len(data) must equal width * height.
    data : bytes or iterable of int
        Row-major 8-bit samples, each <= maxval.
    maxval : int
        Full-scale sample value, 1..255.
    """
    if not 1 <= maxval <= 255:
        raise FormatError(f"maxval must be in 1..255, got {maxval}")
    if isinstance(data, (bytes, bytearray, memoryview)):
        samples = np.frombuffer(data, dtype=np.uint8)
    else:
        samples = np.asarray(data, dtype=np.int64)
    if samples.size != width * height:
        raise DimensionError(
            f"expected {width * height} samples for {width}x{height}, got {samples.size}"
        )
    if samples.size and int(samples.max()) > maxval:
        raise FormatError(f"sample {int(samples.max())} exceeds maxval {maxval}")
    values = samples.reshape(height, width).astype(np.float64) / maxval
    return Frame(values)


def frame_to_bytes(frame: Frame) -> bytes:
    """Quantize a Frame to 8-bit samples: round(v * 255), half away from zero."""
    # values are >= 0, so half-away-from-zero == floor(x + 0.5)
    levels = np.floor(frame.data * 255.0 + 0.5)
    return np.clip(levels, 0, 255).astype(np.uint8).tobytes()


def quantize(frame: Frame) -> np.ndarray:
    """Frame intensities as integer levels 0..255 (same rounding as frame_to_bytes)."""
    return np.floor(frame.data * 255.0 + 0.5).astype(np.int32)


def sample(frame: Frame, x: int, y: int) -> float:
    """Pixel value at (x, y) with out-of-range indices clamped to the border."""
    xc = min(max(x, 0), frame.width - 1)
    yc = min(max(y, 0), frame.height - 1)
    return float(frame.data[yc, xc])


def neighbor_differences(seq: Sequence, n: int, x: int, y: int):
    """Differences neighbor - center for the 4 spatial and 2 temporal neighbors.

    Returns (north, south, east, west, prev, next).  Spatial neighbors outside
    the frame replicate the border pixel.  Temporal neighbors that do not
    exist (n == 0 or n == len(seq) - 1) are returned as None, not zero, so a
    solver can skip them instead of fabricating a zero temporal gradient.
    """
    if not 0 <= n < len(seq):
        raise IndexError(f"frame index {n} out of range for length {len(seq)}")
    f = seq[n]
    center = sample(f, x, y)
    north = sample(f, x, y - 1) - center
    south = sample(f, x, y + 1) - center
    east = sample(f, x + 1, y) - center
    west = sample(f, x - 1, y) - center
    prev = sample(seq[n - 1], x, y) - center if n > 0 else None
    nxt = sample(seq[n + 1], x, y) - center if n < len(seq) - 1 else None
    return north, south, east, west, prev, nxt
