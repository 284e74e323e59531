"""Deterministic scenario simulation.

A scenario is a timeline of signal segments (rest, single-axis sine, enveloped
movement burst, ambient vibration) plus optional motor feedback and scripted
button presses. Gravity of 1 g sits on the Z axis throughout, and seeded
Gaussian sensor noise is added to every sample.

Motor feedback closes the loop: whenever the watch motor was on at the
previous tick, the configured vibration tone is added to all three axes of
the next sample. The band-pass filter has to strip that tone for the watch to
behave identically with and without feedback.

Determinism: the noise for tick k is drawn from a generator seeded with
(seed, k), so a sample depends only on the scenario, the seed and the motor
state, never on query order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .counts import CountsConfig, CountsPipeline, RawSample
from .detector import DetectorConfig, DetectorEvent
from .device import Button, Device, DeviceConfig
from .filters import FilterSpec

__all__ = [
    "Axis",
    "Rest",
    "SineMovement",
    "BurstMovement",
    "AmbientVibration",
    "Segment",
    "MotorFeedback",
    "ButtonPress",
    "Scenario",
    "ScenarioSampler",
    "generate",
    "SimulationTrace",
    "run",
    "canonical_scenario",
]

Axis = Literal["x", "y", "z"]
_AXIS_INDEX = {"x": 0, "y": 1, "z": 2}


def _check_span(start: float, end: float) -> None:
    if not (math.isfinite(start) and math.isfinite(end) and 0.0 <= start < end):
        raise ValueError(f"segment must satisfy 0 <= start < end, got [{start}, {end})")


def _check_tone(amplitude_g: float, frequency_hz: float) -> None:
    if not (math.isfinite(amplitude_g) and amplitude_g >= 0.0):
        raise ValueError(f"amplitude_g must be nonnegative, got {amplitude_g!r}")
    if not (math.isfinite(frequency_hz) and frequency_hz > 0.0):
        raise ValueError(f"frequency_hz must be positive, got {frequency_hz!r}")


@dataclass(frozen=True, slots=True)
class Rest:
    """No movement: gravity only (plus sensor noise)."""

    start: float
    end: float

    def __post_init__(self) -> None:
        _check_span(self.start, self.end)


@dataclass(frozen=True, slots=True)
class SineMovement:
    """Steady sinusoidal movement on one axis, phase starting at the segment."""

    start: float
    end: float
    axis: Axis
    amplitude_g: float
    frequency_hz: float

    def __post_init__(self) -> None:
        _check_span(self.start, self.end)
        if self.axis not in _AXIS_INDEX:
            raise ValueError(f"axis must be one of x, y, z, got {self.axis!r}")
        _check_tone(self.amplitude_g, self.frequency_hz)


@dataclass(frozen=True, slots=True)
class BurstMovement:
    """A movement episode on all axes: a raised-cosine envelope over the segment."""

    start: float
    end: float
    amplitude_g: float
    center_frequency_hz: float

    def __post_init__(self) -> None:
        _check_span(self.start, self.end)
        _check_tone(self.amplitude_g, self.center_frequency_hz)


@dataclass(frozen=True, slots=True)
class AmbientVibration:
    """Continuous environmental vibration tone on all axes (e.g. a rolling chair)."""

    start: float
    end: float
    amplitude_g: float
    frequency_hz: float

    def __post_init__(self) -> None:
        _check_span(self.start, self.end)
        _check_tone(self.amplitude_g, self.frequency_hz)


Segment = Rest | SineMovement | BurstMovement | AmbientVibration


@dataclass(frozen=True, slots=True)
class MotorFeedback:
    """Vibration tone fed back into the sensor while the motor runs."""

    enabled: bool = False
    amplitude_g: float = 0.5
    frequency_hz: float = 20.0

    def __post_init__(self) -> None:
        _check_tone(self.amplitude_g, self.frequency_hz)


@dataclass(frozen=True, slots=True)
class ButtonPress:
    t: float
    button: Button


@dataclass(frozen=True, slots=True)
class Scenario:
    """A reproducible simulation input: segments tiling [0, duration], a seed,
    optional motor feedback and scripted button presses."""

    duration_seconds: float
    seed: int = 0
    segments: tuple[Segment, ...] = ()
    motor_feedback: MotorFeedback = field(default_factory=MotorFeedback)
    button_presses: tuple[ButtonPress, ...] = ()
    noise_sigma_g: float = 0.003

    def __post_init__(self) -> None:
        if not (math.isfinite(self.duration_seconds) and self.duration_seconds >= 0.0):
            raise ValueError(f"duration_seconds must be >= 0, got {self.duration_seconds!r}")
        if not (isinstance(self.seed, int) and 0 <= self.seed < 2**64):
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")
        if not (math.isfinite(self.noise_sigma_g) and self.noise_sigma_g >= 0.0):
            raise ValueError(f"noise_sigma_g must be >= 0, got {self.noise_sigma_g!r}")
        object.__setattr__(self, "segments", tuple(self.segments))
        object.__setattr__(self, "button_presses", tuple(self.button_presses))
        if self.duration_seconds == 0.0:
            if self.segments:
                raise ValueError("a zero-duration scenario cannot have segments")
        else:
            if not self.segments:
                raise ValueError("segments must tile [0, duration]; none given")
            if self.segments[0].start != 0.0:
                raise ValueError(
                    f"first segment must start at 0, got {self.segments[0].start}"
                )
            for a, b in zip(self.segments, self.segments[1:]):
                if a.end != b.start:
                    raise ValueError(
                        f"segments must tile without gaps or overlap: "
                        f"[..., {a.end}) then [{b.start}, ...)"
                    )
            if self.segments[-1].end != self.duration_seconds:
                raise ValueError(
                    f"last segment ends at {self.segments[-1].end}, "
                    f"expected {self.duration_seconds}"
                )
        for press in self.button_presses:
            if not (0.0 <= press.t < self.duration_seconds):
                raise ValueError(
                    f"button press at t={press.t} is outside [0, {self.duration_seconds})"
                )


def _segment_signal(segment: Segment, t: float) -> tuple[float, float, float]:
    """Movement contribution of a segment at time t (gravity and noise excluded)."""
    if isinstance(segment, Rest):
        return (0.0, 0.0, 0.0)
    local = t - segment.start
    if isinstance(segment, SineMovement):
        value = segment.amplitude_g * math.sin(2.0 * math.pi * segment.frequency_hz * local)
        out = [0.0, 0.0, 0.0]
        out[_AXIS_INDEX[segment.axis]] = value
        return (out[0], out[1], out[2])
    if isinstance(segment, BurstMovement):
        u = local / (segment.end - segment.start)
        envelope = 0.5 - 0.5 * math.cos(2.0 * math.pi * u)
        value = (
            segment.amplitude_g
            * envelope
            * math.sin(2.0 * math.pi * segment.center_frequency_hz * local)
        )
        return (value, value, value)
    # AmbientVibration
    value = segment.amplitude_g * math.sin(2.0 * math.pi * segment.frequency_hz * local)
    return (value, value, value)


def _noise(seed: int, k: int, sigma: float) -> tuple[float, float, float]:
    if sigma == 0.0:
        return (0.0, 0.0, 0.0)
    draw = np.random.default_rng((seed, k)).normal(0.0, sigma, 3)
    return (float(draw[0]), float(draw[1]), float(draw[2]))


class ScenarioSampler:
    """Sample generator for one scenario at a fixed rate."""

    def __init__(self, scenario: Scenario, sample_rate_hz: float = 100.0):
        if not (math.isfinite(sample_rate_hz) and sample_rate_hz > 0):
            raise ValueError(f"sample_rate_hz must be positive, got {sample_rate_hz!r}")
        nyquist = sample_rate_hz / 2.0
        for segment in scenario.segments:
            freq = getattr(segment, "frequency_hz", None) or getattr(
                segment, "center_frequency_hz", None
            )
            if freq is not None and freq >= nyquist:
                raise ValueError(
                    f"segment frequency {freq} Hz is not below the Nyquist "
                    f"frequency {nyquist} Hz"
                )
        if scenario.motor_feedback.enabled and scenario.motor_feedback.frequency_hz >= nyquist:
            raise ValueError(
                f"motor feedback frequency {scenario.motor_feedback.frequency_hz} Hz "
                f"is not below the Nyquist frequency {nyquist} Hz"
            )
        ticks = scenario.duration_seconds * sample_rate_hz
        if abs(ticks - round(ticks)) > 1e-9:
            raise ValueError(
                f"duration {scenario.duration_seconds} s is not a whole number of "
                f"samples at {sample_rate_hz} Hz"
            )
        self.scenario = scenario
        self.sample_rate_hz = sample_rate_hz
        self.n_ticks = int(round(ticks))

    def _segment_at(self, t: float) -> Segment:
        # Last segment whose start is <= t; tiling guarantees it covers t.
        segments = self.scenario.segments
        lo, hi = 0, len(segments) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if segments[mid].start <= t:
                lo = mid
            else:
                hi = mid - 1
        return segments[lo]

    def sample(self, k: int, motor_on: bool = False) -> RawSample:
        """The raw sample at tick k; motor_on is the motor state one tick earlier."""
        if not self.scenario.segments or not (0 <= k <= self.n_ticks):
            raise ValueError(f"tick {k} outside scenario of {self.n_ticks} ticks")
        t = k / self.sample_rate_hz
        segment = self._segment_at(t)
        x, y, z = _segment_signal(segment, t)
        nx, ny, nz = _noise(self.scenario.seed, k, self.scenario.noise_sigma_g)
        x += nx
        y += ny
        z += nz + 1.0  # gravity
        feedback = self.scenario.motor_feedback
        if motor_on and feedback.enabled:
            tone = feedback.amplitude_g * math.sin(2.0 * math.pi * feedback.frequency_hz * t)
            x += tone
            y += tone
            z += tone
        return RawSample(t, x, y, z)


def generate(
    scenario: Scenario,
    t: float,
    sample_rate_hz: float = 100.0,
    motor_on: bool = False,
) -> RawSample:
    """Sample a scenario at one grid time; off-grid times are rejected."""
    if not (math.isfinite(t) and 0.0 <= t <= scenario.duration_seconds):
        raise ValueError(f"t={t!r} outside the scenario duration")
    k_float = t * sample_rate_hz
    k = int(round(k_float))
    if abs(k_float - k) > 1e-6:
        raise ValueError(
            f"t={t} is not on the {sample_rate_hz} Hz sample grid"
        )
    return ScenarioSampler(scenario, sample_rate_hz).sample(k, motor_on)


@dataclass(frozen=True, eq=False)
class SimulationTrace:
    """Per-tick record of a full closed-loop run, plus the detector events."""

    t: np.ndarray
    ax: np.ndarray
    ay: np.ndarray
    az: np.ndarray
    vm: np.ndarray
    sx: np.ndarray
    sy: np.ndarray
    sz: np.ndarray
    timer: np.ndarray
    motor: np.ndarray
    white: np.ndarray
    blue: np.ndarray
    red: np.ndarray
    option: np.ndarray
    events: tuple[DetectorEvent, ...]

    def __len__(self) -> int:
        return len(self.t)


def run(
    scenario: Scenario,
    device_config: DeviceConfig | None = None,
    counts_config: CountsConfig | None = None,
    filter_spec: FilterSpec | None = None,
    detector_config: DetectorConfig | None = None,
    filter_order: int = 2,
) -> SimulationTrace:
    """Simulate the whole watch over a scenario.

    The loop per tick: synthesize the raw sample (motor state from the
    previous tick drives the feedback), convert it to a VM count, feed the
    watch, record everything. Any omitted configuration takes its default.
    """
    counts_config = counts_config or CountsConfig()
    detector_config = detector_config or DetectorConfig()
    if abs(detector_config.tick_seconds * counts_config.sample_rate_hz - 1.0) > 1e-9:
        raise ValueError(
            f"detector tick {detector_config.tick_seconds} s does not match the "
            f"{counts_config.sample_rate_hz} Hz sample rate"
        )
    sampler = ScenarioSampler(scenario, counts_config.sample_rate_hz)
    pipeline = CountsPipeline.from_spec(filter_spec, counts_config, order=filter_order)
    device = Device(device_config, detector_config)

    presses = sorted(scenario.button_presses, key=lambda p: p.t)
    next_press = 0

    n = sampler.n_ticks
    cols: dict[str, list] = {name: [] for name in (
        "t", "ax", "ay", "az", "vm", "sx", "sy", "sz",
        "timer", "motor", "white", "blue", "red", "option")}
    motor_prev = False
    for k in range(n):
        t = k / counts_config.sample_rate_hz
        while next_press < len(presses) and presses[next_press].t <= t + 1e-9:
            device.press_button(presses[next_press].button, t)
            next_press += 1
        sample = sampler.sample(k, motor_prev)
        count = pipeline.process_sample(sample)
        snap = device.tick(count.value, t)
        motor_prev = snap.motor
        sx, sy, sz = pipeline.epoch_sums
        cols["t"].append(t)
        cols["ax"].append(sample.ax)
        cols["ay"].append(sample.ay)
        cols["az"].append(sample.az)
        cols["vm"].append(count.value)
        cols["sx"].append(sx)
        cols["sy"].append(sy)
        cols["sz"].append(sz)
        cols["timer"].append(snap.timer_seconds)
        cols["motor"].append(snap.motor)
        cols["white"].append(snap.white)
        cols["blue"].append(snap.blue)
        cols["red"].append(snap.red)
        cols["option"].append(snap.option)

    return SimulationTrace(
        t=np.asarray(cols["t"], dtype=np.float64),
        ax=np.asarray(cols["ax"], dtype=np.float64),
        ay=np.asarray(cols["ay"], dtype=np.float64),
        az=np.asarray(cols["az"], dtype=np.float64),
        vm=np.asarray(cols["vm"], dtype=np.float64),
        sx=np.asarray(cols["sx"], dtype=np.float64),
        sy=np.asarray(cols["sy"], dtype=np.float64),
        sz=np.asarray(cols["sz"], dtype=np.float64),
        timer=np.asarray(cols["timer"], dtype=np.float64),
        motor=np.asarray(cols["motor"], dtype=bool),
        white=np.asarray(cols["white"], dtype=bool),
        blue=np.asarray(cols["blue"], dtype=bool),
        red=np.asarray(cols["red"], dtype=bool),
        option=np.asarray(cols["option"], dtype=np.int64),
        events=tuple(device.events),
    )


def canonical_scenario(
    duration_seconds: float = 30.0,
    seed: int = 1234,
    motor_feedback: MotorFeedback | None = None,
) -> Scenario:
    """The stock demonstration scenario: rest, one strong movement burst at
    5-8 s, then rest. With the default detector settings this produces one
    timer reset during the burst, a vibration 10 s after the movement dies
    down, and a 5 s vibration followed by a reset."""
    if duration_seconds < 10.0:
        raise ValueError("canonical scenario needs at least 10 s")
    return Scenario(
        duration_seconds=duration_seconds,
        seed=seed,
        segments=(
            Rest(0.0, 5.0),
            BurstMovement(5.0, 8.0, amplitude_g=3.0, center_frequency_hz=1.0),
            Rest(8.0, duration_seconds),
        ),
        motor_feedback=motor_feedback or MotorFeedback(),
    )
