"""Parsing and serialization of every stream and configuration format.

All tabular data is CSV: UTF-8, LF line endings, comma separator, decimal
point, no quoting and no locale handling. Scenario and configuration files
use a small sectioned key-value format:

    # comment
    [section]
    key = value

Parsers are strict: the first problem raises ParseError carrying the line
number, and nothing is returned. Serializers emit canonical text, so
serialize(parse(text)) reproduces canonical input byte for byte.

Formats:
  samples        t,ax,ay,az                     raw accelerometer stream
  counts         t,vm,sx,sy,sz                  VM counts and epoch sums
  events         t,event                        detector event trace
  trace          t,ax,..,vm,..,timer,motor,...  wide simulation trace
  device log     t,kind,arg                     timed device input
  snapshots      t,motor,white,blue,red,option,timer
  scenario       sectioned key-value            simulation input
  config         sectioned key-value            all tunables
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .counts import CountsConfig, RawSample
from .detector import RESET, VIB_END, VIB_START, DetectorConfig, DetectorEvent
from .device import POWER, RED_TOGGLE, SELECT, DeviceConfig, DeviceSnapshot
from .filters import FilterSpec
from .sim import (
    AmbientVibration,
    BurstMovement,
    ButtonPress,
    MotorFeedback,
    Rest,
    Scenario,
    Segment,
    SimulationTrace,
    SineMovement,
)

__all__ = [
    "ParseError",
    "ConfigFile",
    "parse_samples",
    "serialize_samples",
    "parse_counts",
    "serialize_counts",
    "parse_events",
    "serialize_events",
    "parse_trace",
    "serialize_trace",
    "parse_device_log",
    "serialize_device_log",
    "parse_snapshots",
    "serialize_snapshots",
    "parse_scenario",
    "serialize_scenario",
    "parse_config",
    "serialize_config",
]

SAMPLES_HEADER = "t,ax,ay,az"
COUNTS_HEADER = "t,vm,sx,sy,sz"
EVENTS_HEADER = "t,event"
TRACE_HEADER = "t,ax,ay,az,vm,sx,sy,sz,timer,motor,white,blue,red,option"
DEVICE_LOG_HEADER = "t,kind,arg"
SNAPSHOTS_HEADER = "t,motor,white,blue,red,option,timer"

_EVENT_KINDS = (RESET, VIB_START, VIB_END)
_BUTTONS = (SELECT, RED_TOGGLE, POWER)


class ParseError(ValueError):
    """A validation failure at a specific line of the input text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _float_str(x: float) -> str:
    """Shortest decimal that reparses to the same double."""
    if x == 0.0:
        return "0"
    return repr(float(x))


def _g9(x: float) -> str:
    """9 significant digits, the precision used for derived outputs."""
    if x == 0.0:
        return "0"
    return format(float(x), ".9g")


def _bool01(value: bool) -> str:
    return "1" if value else "0"


def _parse_float(token: str, line: int, what: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"{what}: not a number: {token!r}", line) from None
    if not math.isfinite(value):
        raise ParseError(f"{what}: must be finite, got {token!r}", line)
    return value


def _parse_int(token: str, line: int, what: str) -> int:
    try:
        return int(token, 10)
    except ValueError:
        raise ParseError(f"{what}: not an integer: {token!r}", line) from None


def _parse_bool(token: str, line: int, what: str) -> bool:
    if token == "true":
        return True
    if token == "false":
        return False
    raise ParseError(f"{what}: expected true or false, got {token!r}", line)


def _parse_bool01(token: str, line: int, what: str) -> bool:
    if token == "1":
        return True
    if token == "0":
        return False
    raise ParseError(f"{what}: expected 0 or 1, got {token!r}", line)


def _csv_rows(text: str, header: str) -> list[tuple[int, list[str]]]:
    """Split CSV text into (line number, fields) rows after checking the header."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError(f"empty input, expected header {header!r}", 1)
    if lines[0].rstrip("\r") != header:
        raise ParseError(f"expected header {header!r}, got {lines[0]!r}", 1)
    n_fields = header.count(",") + 1
    rows = []
    for i, raw in enumerate(lines[1:], start=2):
        line = raw.rstrip("\r")
        if line == "":
            raise ParseError("blank line in data", i)
        fields = line.split(",")
        if len(fields) != n_fields:
            raise ParseError(f"expected {n_fields} fields, got {len(fields)}", i)
        rows.append((i, [f.strip() for f in fields]))
    return rows


# --------------------------------------------------------------------------
# Raw sample streams


def parse_samples(text: str, sample_rate_hz: float = 100.0) -> list[RawSample]:
    """Parse a raw sample CSV, checking monotone timestamps on the sample grid."""
    dt = 1.0 / sample_rate_hz
    samples: list[RawSample] = []
    prev_t: float | None = None
    for i, fields in _csv_rows(text, SAMPLES_HEADER):
        t = _parse_float(fields[0], i, "t")
        ax = _parse_float(fields[1], i, "ax")
        ay = _parse_float(fields[2], i, "ay")
        az = _parse_float(fields[3], i, "az")
        if prev_t is not None:
            step = t - prev_t
            if step <= 0:
                raise ParseError(f"non-monotone timestamp {t} after {prev_t}", i)
            if abs(step - dt) > 1e-9:
                raise ParseError(
                    f"sample spacing {step} s does not match {sample_rate_hz} Hz", i
                )
        prev_t = t
        samples.append(RawSample(t, ax, ay, az))
    return samples


def serialize_samples(samples: Iterable[RawSample]) -> str:
    lines = [SAMPLES_HEADER]
    for s in samples:
        lines.append(
            f"{_float_str(s.t)},{_float_str(s.ax)},{_float_str(s.ay)},{_float_str(s.az)}"
        )
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# Counts output


def parse_counts(text: str) -> list[tuple[float, float, float, float, float]]:
    rows = []
    for i, fields in _csv_rows(text, COUNTS_HEADER):
        values = tuple(
            _parse_float(fields[j], i, COUNTS_HEADER.split(",")[j]) for j in range(5)
        )
        rows.append(values)
    return rows


def serialize_counts(rows: Iterable[Sequence[float]]) -> str:
    lines = [COUNTS_HEADER]
    for row in rows:
        lines.append(",".join(_g9(v) for v in row))
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# Detector event traces


def parse_events(text: str) -> list[DetectorEvent]:
    events = []
    for i, fields in _csv_rows(text, EVENTS_HEADER):
        t = _parse_float(fields[0], i, "t")
        kind = fields[1]
        if kind not in _EVENT_KINDS:
            raise ParseError(
                f"event must be one of {', '.join(_EVENT_KINDS)}, got {kind!r}", i
            )
        events.append(DetectorEvent(t, kind))
    return events


def serialize_events(events: Iterable[DetectorEvent]) -> str:
    lines = [EVENTS_HEADER]
    for e in events:
        lines.append(f"{_g9(e.t)},{e.kind}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# Wide simulation traces


def serialize_trace(trace: SimulationTrace) -> str:
    lines = [TRACE_HEADER]
    for i in range(len(trace)):
        lines.append(
            ",".join(
                (
                    _g9(trace.t[i]),
                    _g9(trace.ax[i]),
                    _g9(trace.ay[i]),
                    _g9(trace.az[i]),
                    _g9(trace.vm[i]),
                    _g9(trace.sx[i]),
                    _g9(trace.sy[i]),
                    _g9(trace.sz[i]),
                    _g9(trace.timer[i]),
                    _bool01(bool(trace.motor[i])),
                    _bool01(bool(trace.white[i])),
                    _bool01(bool(trace.blue[i])),
                    _bool01(bool(trace.red[i])),
                    str(int(trace.option[i])),
                )
            )
        )
    return "\n".join(lines) + "\n"


def parse_trace(text: str) -> SimulationTrace:
    """Parse a wide trace CSV. The trace format carries no event list."""
    cols: list[list] = [[] for _ in range(14)]
    for i, fields in _csv_rows(text, TRACE_HEADER):
        for j in range(9):
            cols[j].append(_parse_float(fields[j], i, TRACE_HEADER.split(",")[j]))
        for j in range(9, 13):
            cols[j].append(_parse_bool01(fields[j], i, TRACE_HEADER.split(",")[j]))
        option = _parse_int(fields[13], i, "option")
        if not 0 <= option <= 2:
            raise ParseError(f"option must be 0..2, got {option}", i)
        cols[13].append(option)
    return SimulationTrace(
        t=np.asarray(cols[0], dtype=np.float64),
        ax=np.asarray(cols[1], dtype=np.float64),
        ay=np.asarray(cols[2], dtype=np.float64),
        az=np.asarray(cols[3], dtype=np.float64),
        vm=np.asarray(cols[4], dtype=np.float64),
        sx=np.asarray(cols[5], dtype=np.float64),
        sy=np.asarray(cols[6], dtype=np.float64),
        sz=np.asarray(cols[7], dtype=np.float64),
        timer=np.asarray(cols[8], dtype=np.float64),
        motor=np.asarray(cols[9], dtype=bool),
        white=np.asarray(cols[10], dtype=bool),
        blue=np.asarray(cols[11], dtype=bool),
        red=np.asarray(cols[12], dtype=bool),
        option=np.asarray(cols[13], dtype=np.int64),
        events=(),
    )


# --------------------------------------------------------------------------
# Device input logs and snapshot logs


def parse_device_log(text: str) -> list[tuple[float, str, float | str]]:
    records: list[tuple[float, str, float | str]] = []
    for i, fields in _csv_rows(text, DEVICE_LOG_HEADER):
        t = _parse_float(fields[0], i, "t")
        kind = fields[1]
        if kind == "sample":
            value = _parse_float(fields[2], i, "arg")
            if value < 0:
                raise ParseError(f"sample arg must be a nonnegative count, got {value}", i)
            records.append((t, kind, value))
        elif kind == "button":
            if fields[2] not in _BUTTONS:
                raise ParseError(
                    f"button must be one of {', '.join(_BUTTONS)}, got {fields[2]!r}", i
                )
            records.append((t, kind, fields[2]))
        else:
            raise ParseError(f"kind must be sample or button, got {kind!r}", i)
    return records


def serialize_device_log(records: Iterable[tuple[float, str, float | str]]) -> str:
    lines = [DEVICE_LOG_HEADER]
    for t, kind, arg in records:
        arg_str = _g9(arg) if kind == "sample" else str(arg)
        lines.append(f"{_g9(t)},{kind},{arg_str}")
    return "\n".join(lines) + "\n"


def parse_snapshots(text: str) -> list[DeviceSnapshot]:
    snaps = []
    for i, fields in _csv_rows(text, SNAPSHOTS_HEADER):
        t = _parse_float(fields[0], i, "t")
        motor = _parse_bool01(fields[1], i, "motor")
        white = _parse_bool01(fields[2], i, "white")
        blue = _parse_bool01(fields[3], i, "blue")
        red = _parse_bool01(fields[4], i, "red")
        option = _parse_int(fields[5], i, "option")
        if not 0 <= option <= 2:
            raise ParseError(f"option must be 0..2, got {option}", i)
        timer = _parse_float(fields[6], i, "timer")
        snaps.append(DeviceSnapshot(t, motor, white, blue, red, option, timer))
    return snaps


def serialize_snapshots(snapshots: Iterable[DeviceSnapshot]) -> str:
    lines = [SNAPSHOTS_HEADER]
    for s in snapshots:
        lines.append(
            f"{_g9(s.t)},{_bool01(s.motor)},{_bool01(s.white)},{_bool01(s.blue)},"
            f"{_bool01(s.red)},{s.option},{_g9(s.timer_seconds)}"
        )
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# Sectioned key-value reader


def _read_sections(text: str) -> list[tuple[int, str, list[tuple[int, str, str]]]]:
    sections: list[tuple[int, str, list[tuple[int, str, str]]]] = []
    current: list[tuple[int, str, str]] | None = None
    for i, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip()
            if not name:
                raise ParseError("empty section name", i)
            current = []
            sections.append((i, name, current))
            continue
        if current is None:
            raise ParseError(f"content before any section: {line!r}", i)
        key, sep, value = line.partition("=")
        if not sep:
            raise ParseError(f"expected 'key = value', got {line!r}", i)
        key = key.strip()
        value = value.strip()
        if not key or not value:
            raise ParseError(f"expected 'key = value', got {line!r}", i)
        current.append((i, key, value))
    return sections


def _as_dict(
    section_line: int, name: str, entries: list[tuple[int, str, str]], allowed: tuple[str, ...]
) -> dict[str, tuple[int, str]]:
    seen: dict[str, tuple[int, str]] = {}
    for i, key, value in entries:
        if key not in allowed:
            raise ParseError(f"unknown key {key!r} in [{name}]", i)
        if key in seen:
            raise ParseError(f"duplicate key {key!r} in [{name}]", i)
        seen[key] = (i, value)
    return seen


def _construct(factory, kwargs: dict, section_line: int):
    try:
        return factory(**kwargs)
    except ValueError as exc:
        raise ParseError(str(exc), section_line) from None


# --------------------------------------------------------------------------
# Scenario files


_SEGMENT_KEYS = {
    "rest": ("kind", "start", "end"),
    "sine": ("kind", "start", "end", "axis", "amplitude_g", "frequency_hz"),
    "burst": ("kind", "start", "end", "amplitude_g", "center_frequency_hz"),
    "ambient": ("kind", "start", "end", "amplitude_g", "frequency_hz"),
}


def _parse_segment(section_line: int, entries: list[tuple[int, str, str]]) -> Segment:
    by_key = {key: (i, value) for i, key, value in entries}
    if "kind" not in by_key:
        raise ParseError("segment is missing the kind key", section_line)
    kind_line, kind = by_key["kind"]
    if kind not in _SEGMENT_KEYS:
        raise ParseError(
            f"segment kind must be one of {', '.join(sorted(_SEGMENT_KEYS))}, got {kind!r}",
            kind_line,
        )
    allowed = _SEGMENT_KEYS[kind]
    fields = _as_dict(section_line, "segment", entries, allowed)
    missing = [k for k in allowed if k not in fields]
    if missing:
        raise ParseError(f"segment kind {kind!r} is missing {', '.join(missing)}", section_line)

    def num(key: str) -> float:
        i, value = fields[key]
        return _parse_float(value, i, key)

    if kind == "rest":
        return _construct(Rest, dict(start=num("start"), end=num("end")), section_line)
    if kind == "sine":
        axis_line, axis = fields["axis"]
        if axis not in ("x", "y", "z"):
            raise ParseError(f"axis must be x, y or z, got {axis!r}", axis_line)
        return _construct(
            SineMovement,
            dict(
                start=num("start"),
                end=num("end"),
                axis=axis,
                amplitude_g=num("amplitude_g"),
                frequency_hz=num("frequency_hz"),
            ),
            section_line,
        )
    if kind == "burst":
        return _construct(
            BurstMovement,
            dict(
                start=num("start"),
                end=num("end"),
                amplitude_g=num("amplitude_g"),
                center_frequency_hz=num("center_frequency_hz"),
            ),
            section_line,
        )
    return _construct(
        AmbientVibration,
        dict(
            start=num("start"),
            end=num("end"),
            amplitude_g=num("amplitude_g"),
            frequency_hz=num("frequency_hz"),
        ),
        section_line,
    )


def parse_scenario(text: str) -> Scenario:
    sections = _read_sections(text)
    scenario_fields: dict[str, tuple[int, str]] | None = None
    scenario_line = 1
    segments: list[Segment] = []
    feedback = MotorFeedback()
    feedback_seen = False
    presses: list[ButtonPress] = []

    for line, name, entries in sections:
        if name == "scenario":
            if scenario_fields is not None:
                raise ParseError("duplicate [scenario] section", line)
            scenario_line = line
            scenario_fields = _as_dict(
                line, name, entries, ("duration_seconds", "seed", "noise_sigma_g")
            )
        elif name == "segment":
            segments.append(_parse_segment(line, entries))
        elif name == "motor_feedback":
            if feedback_seen:
                raise ParseError("duplicate [motor_feedback] section", line)
            feedback_seen = True
            fields = _as_dict(line, name, entries, ("enabled", "amplitude_g", "frequency_hz"))
            kwargs = {}
            if "enabled" in fields:
                kwargs["enabled"] = _parse_bool(fields["enabled"][1], fields["enabled"][0], "enabled")
            if "amplitude_g" in fields:
                kwargs["amplitude_g"] = _parse_float(
                    fields["amplitude_g"][1], fields["amplitude_g"][0], "amplitude_g"
                )
            if "frequency_hz" in fields:
                kwargs["frequency_hz"] = _parse_float(
                    fields["frequency_hz"][1], fields["frequency_hz"][0], "frequency_hz"
                )
            feedback = _construct(MotorFeedback, kwargs, line)
        elif name == "button":
            fields = _as_dict(line, name, entries, ("t", "button"))
            if "t" not in fields or "button" not in fields:
                raise ParseError("button section needs t and button keys", line)
            t = _parse_float(fields["t"][1], fields["t"][0], "t")
            button = fields["button"][1]
            if button not in _BUTTONS:
                raise ParseError(
                    f"button must be one of {', '.join(_BUTTONS)}, got {button!r}",
                    fields["button"][0],
                )
            presses.append(ButtonPress(t, button))
        else:
            raise ParseError(f"unknown section [{name}]", line)

    if scenario_fields is None:
        raise ParseError("missing [scenario] section")
    if "duration_seconds" not in scenario_fields:
        raise ParseError("missing duration_seconds in [scenario]", scenario_line)
    duration = _parse_float(
        scenario_fields["duration_seconds"][1],
        scenario_fields["duration_seconds"][0],
        "duration_seconds",
    )
    seed = 0
    if "seed" in scenario_fields:
        seed = _parse_int(scenario_fields["seed"][1], scenario_fields["seed"][0], "seed")
    sigma = 0.003
    if "noise_sigma_g" in scenario_fields:
        sigma = _parse_float(
            scenario_fields["noise_sigma_g"][1],
            scenario_fields["noise_sigma_g"][0],
            "noise_sigma_g",
        )
    return _construct(
        Scenario,
        dict(
            duration_seconds=duration,
            seed=seed,
            segments=tuple(segments),
            motor_feedback=feedback,
            button_presses=tuple(presses),
            noise_sigma_g=sigma,
        ),
        scenario_line,
    )


def serialize_scenario(scenario: Scenario) -> str:
    out = [
        "[scenario]",
        f"duration_seconds = {_float_str(scenario.duration_seconds)}",
        f"seed = {scenario.seed}",
        f"noise_sigma_g = {_float_str(scenario.noise_sigma_g)}",
    ]
    for seg in scenario.segments:
        out.append("")
        out.append("[segment]")
        if isinstance(seg, Rest):
            out.append("kind = rest")
        elif isinstance(seg, SineMovement):
            out.append("kind = sine")
        elif isinstance(seg, BurstMovement):
            out.append("kind = burst")
        else:
            out.append("kind = ambient")
        out.append(f"start = {_float_str(seg.start)}")
        out.append(f"end = {_float_str(seg.end)}")
        if isinstance(seg, SineMovement):
            out.append(f"axis = {seg.axis}")
            out.append(f"amplitude_g = {_float_str(seg.amplitude_g)}")
            out.append(f"frequency_hz = {_float_str(seg.frequency_hz)}")
        elif isinstance(seg, BurstMovement):
            out.append(f"amplitude_g = {_float_str(seg.amplitude_g)}")
            out.append(f"center_frequency_hz = {_float_str(seg.center_frequency_hz)}")
        elif isinstance(seg, AmbientVibration):
            out.append(f"amplitude_g = {_float_str(seg.amplitude_g)}")
            out.append(f"frequency_hz = {_float_str(seg.frequency_hz)}")
    out.append("")
    out.append("[motor_feedback]")
    out.append(f"enabled = {'true' if scenario.motor_feedback.enabled else 'false'}")
    out.append(f"amplitude_g = {_float_str(scenario.motor_feedback.amplitude_g)}")
    out.append(f"frequency_hz = {_float_str(scenario.motor_feedback.frequency_hz)}")
    for press in scenario.button_presses:
        out.append("")
        out.append("[button]")
        out.append(f"t = {_float_str(press.t)}")
        out.append(f"button = {press.button}")
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# Configuration files


@dataclass(frozen=True, slots=True)
class ConfigFile:
    """Every tunable in one place; omitted fields keep their defaults."""

    filter_spec: FilterSpec = field(default_factory=lambda: FilterSpec(100.0, 0.305, 1.615))
    filter_order: int = 2
    counts: CountsConfig = field(default_factory=CountsConfig)
    detector: DetectorConfig = field(default_factory=DetectorConfig)
    device: DeviceConfig = field(default_factory=DeviceConfig)

    def __post_init__(self) -> None:
        if self.filter_spec.sample_rate_hz != self.counts.sample_rate_hz:
            raise ValueError(
                f"filter sample_rate_hz={self.filter_spec.sample_rate_hz} does not "
                f"match counts sample_rate_hz={self.counts.sample_rate_hz}"
            )
        if abs(self.detector.tick_seconds * self.counts.sample_rate_hz - 1.0) > 1e-9:
            raise ValueError(
                f"detector tick_seconds={self.detector.tick_seconds} does not match "
                f"the {self.counts.sample_rate_hz} Hz sample rate"
            )


_CONFIG_KEYS = {
    "filter": ("sample_rate_hz", "low_cutoff_hz", "high_cutoff_hz", "order"),
    "counts": (
        "deadband_g",
        "saturation_g",
        "scale_g_per_sec_per_count",
        "epoch_seconds",
        "sample_rate_hz",
    ),
    "detector": (
        "count_threshold",
        "inactivity_seconds",
        "vibration_seconds",
        "tick_seconds",
    ),
    "device": (
        "inactivity_options",
        "vibration_seconds",
        "red_led_enabled_default",
        "blue_flash_period_seconds",
    ),
}


def parse_config(text: str) -> ConfigFile:
    """Parse a configuration file; an empty file yields all defaults."""
    sections = _read_sections(text)
    values: dict[str, dict[str, tuple[int, str]]] = {}
    lines: dict[str, int] = {}
    for line, name, entries in sections:
        if name not in _CONFIG_KEYS:
            raise ParseError(f"unknown section [{name}]", line)
        if name in values:
            raise ParseError(f"duplicate section [{name}]", line)
        values[name] = _as_dict(line, name, entries, _CONFIG_KEYS[name])
        lines[name] = line

    def number(section: str, key: str, default: float) -> float:
        if section in values and key in values[section]:
            i, token = values[section][key]
            return _parse_float(token, i, key)
        return default

    filter_order = 2
    if "filter" in values and "order" in values["filter"]:
        i, token = values["filter"]["order"]
        filter_order = _parse_int(token, i, "order")

    filter_spec = _construct(
        FilterSpec,
        dict(
            sample_rate_hz=number("filter", "sample_rate_hz", 100.0),
            low_cutoff_hz=number("filter", "low_cutoff_hz", 0.305),
            high_cutoff_hz=number("filter", "high_cutoff_hz", 1.615),
        ),
        lines.get("filter", 1),
    )
    counts = _construct(
        CountsConfig,
        dict(
            deadband_g=number("counts", "deadband_g", 0.068),
            saturation_g=number("counts", "saturation_g", 2.13),
            scale_g_per_sec_per_count=number("counts", "scale_g_per_sec_per_count", 0.01664),
            epoch_seconds=number("counts", "epoch_seconds", 1.0),
            sample_rate_hz=number("counts", "sample_rate_hz", 100.0),
        ),
        lines.get("counts", 1),
    )
    detector = _construct(
        DetectorConfig,
        dict(
            count_threshold=number("detector", "count_threshold", 125.0),
            inactivity_seconds=number("detector", "inactivity_seconds", 10.0),
            vibration_seconds=number("detector", "vibration_seconds", 5.0),
            tick_seconds=number("detector", "tick_seconds", 0.01),
        ),
        lines.get("detector", 1),
    )

    options = (10.0, 30.0, 60.0)
    if "device" in values and "inactivity_options" in values["device"]:
        i, token = values["device"]["inactivity_options"]
        parts = [p.strip() for p in token.split(",")]
        if len(parts) != 3:
            raise ParseError(
                f"inactivity_options needs exactly three comma-separated values, got {token!r}",
                i,
            )
        options = tuple(_parse_float(p, i, "inactivity_options") for p in parts)
    red_default = False
    if "device" in values and "red_led_enabled_default" in values["device"]:
        i, token = values["device"]["red_led_enabled_default"]
        red_default = _parse_bool(token, i, "red_led_enabled_default")
    device = _construct(
        DeviceConfig,
        dict(
            inactivity_options=options,
            vibration_seconds=number("device", "vibration_seconds", 5.0),
            red_led_enabled_default=red_default,
            blue_flash_period_seconds=number("device", "blue_flash_period_seconds", 0.25),
        ),
        lines.get("device", 1),
    )

    if filter_order < 2 or filter_order % 2 != 0:
        raise ParseError(
            f"order must be an even integer >= 2, got {filter_order}",
            lines.get("filter", 1),
        )
    return _construct(
        ConfigFile,
        dict(
            filter_spec=filter_spec,
            filter_order=filter_order,
            counts=counts,
            detector=detector,
            device=device,
        ),
        1,
    )


def serialize_config(config: ConfigFile) -> str:
    options = ", ".join(_float_str(x) for x in config.device.inactivity_options)
    out = [
        "[filter]",
        f"sample_rate_hz = {_float_str(config.filter_spec.sample_rate_hz)}",
        f"low_cutoff_hz = {_float_str(config.filter_spec.low_cutoff_hz)}",
        f"high_cutoff_hz = {_float_str(config.filter_spec.high_cutoff_hz)}",
        f"order = {config.filter_order}",
        "",
        "[counts]",
        f"deadband_g = {_float_str(config.counts.deadband_g)}",
        f"saturation_g = {_float_str(config.counts.saturation_g)}",
        f"scale_g_per_sec_per_count = {_float_str(config.counts.scale_g_per_sec_per_count)}",
        f"epoch_seconds = {_float_str(config.counts.epoch_seconds)}",
        f"sample_rate_hz = {_float_str(config.counts.sample_rate_hz)}",
        "",
        "[detector]",
        f"count_threshold = {_float_str(config.detector.count_threshold)}",
        f"inactivity_seconds = {_float_str(config.detector.inactivity_seconds)}",
        f"vibration_seconds = {_float_str(config.detector.vibration_seconds)}",
        f"tick_seconds = {_float_str(config.detector.tick_seconds)}",
        "",
        "[device]",
        f"inactivity_options = {options}",
        f"vibration_seconds = {_float_str(config.device.vibration_seconds)}",
        f"red_led_enabled_default = {'true' if config.device.red_led_enabled_default else 'false'}",
        f"blue_flash_period_seconds = {_float_str(config.device.blue_flash_period_seconds)}",
    ]
    return "\n".join(out) + "\n"
