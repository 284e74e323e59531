"""Watch-level behavior around the inactivity detector.

Three buttons: one cycles through the three preprogrammed inactivity
durations, one toggles the red vibration-indicator LED, one powers the watch
off. Three LEDs: white is lit whenever the watch is on, blue flashes once,
twice or thrice after a selection to show which duration is active, and red
flashes while the motor vibrates (only when enabled).

Power-off is absorbing for a device instance: the motor and every LED turn
off and nothing reacts anymore; powering back on is modeled as constructing
a fresh device.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Literal

from .detector import (
    VIB_START,
    DetectorConfig,
    DetectorEvent,
    DetectorState,
    detector_tick,
    timer_seconds,
)

__all__ = [
    "SELECT",
    "RED_TOGGLE",
    "POWER",
    "Button",
    "DeviceConfig",
    "DeviceSnapshot",
    "Device",
    "replay_event_log",
]

Button = Literal["select", "red", "power"]
SELECT: Button = "select"
RED_TOGGLE: Button = "red"
POWER: Button = "power"

_BUTTONS = (SELECT, RED_TOGGLE, POWER)


@dataclass(frozen=True, slots=True)
class DeviceConfig:
    inactivity_options: tuple[float, float, float] = (10.0, 30.0, 60.0)
    vibration_seconds: float = 5.0
    red_led_enabled_default: bool = False
    blue_flash_period_seconds: float = 0.25

    def __post_init__(self) -> None:
        options = tuple(float(x) for x in self.inactivity_options)
        if len(options) != 3:
            raise ValueError(
                f"exactly three inactivity options are required, got {len(options)}"
            )
        if any(x <= 0 for x in options):
            raise ValueError(f"inactivity options must be positive, got {options}")
        object.__setattr__(self, "inactivity_options", options)
        if self.vibration_seconds <= 0:
            raise ValueError("vibration_seconds must be positive")
        if self.blue_flash_period_seconds <= 0:
            raise ValueError("blue_flash_period_seconds must be positive")


@dataclass(frozen=True, slots=True)
class DeviceSnapshot:
    """Externally visible device state after one tick."""

    t: float
    motor: bool
    white: bool
    blue: bool
    red: bool
    option: int
    timer_seconds: float


def _flash_on(t: float, anchor: float, period: float) -> bool:
    # Square wave: on for the first half of each period from the anchor.
    dt = t - anchor
    return dt >= 0.0 and (dt % period) < period / 2.0


class Device:
    """One simulated watch: detector plus power, buttons and LEDs.

    Feed it one VM count per tick through `tick`; button presses may be
    interleaved at any time. Detector events accumulate on `events`.
    """

    def __init__(
        self,
        config: DeviceConfig | None = None,
        detector_config: DetectorConfig | None = None,
    ):
        self.config = config or DeviceConfig()
        base = detector_config or DetectorConfig()
        # Threshold and tick size come from the detector config; the active
        # inactivity duration always follows the selected option, and the
        # vibration time is the device's.
        self._base = base
        self.power = True
        self.selected_option = 0
        self.red_led_enabled = self.config.red_led_enabled_default
        self.events: list[DetectorEvent] = []
        self._state = DetectorState()
        self._detector_cfg = self._make_detector_config()
        self._vib_anchor = 0.0
        self._blue_anchor: float | None = None
        self._blue_flashes = 0

    def _make_detector_config(self) -> DetectorConfig:
        return DetectorConfig(
            count_threshold=self._base.count_threshold,
            inactivity_seconds=self.config.inactivity_options[self.selected_option],
            vibration_seconds=self.config.vibration_seconds,
            tick_seconds=self._base.tick_seconds,
        )

    @property
    def detector_config(self) -> DetectorConfig:
        """Detector configuration currently in force."""
        return self._detector_cfg

    @property
    def detector_state(self) -> DetectorState:
        return self._state

    def press_button(self, button: Button, t: float) -> None:
        """Apply one button press at time t. All presses are no-ops while off."""
        if button not in _BUTTONS:
            raise ValueError(f"unknown button {button!r}")
        if not self.power:
            return
        if button == SELECT:
            self.selected_option = (self.selected_option + 1) % 3
            self._detector_cfg = self._make_detector_config()
            # Switching options must not fire an alert instantly.
            self._state = replace(self._state, last_reset_tick=self._state.tick_index)
            self._blue_anchor = t
            self._blue_flashes = self.selected_option + 1
        elif button == RED_TOGGLE:
            self.red_led_enabled = not self.red_led_enabled
        else:  # POWER
            self.power = False

    def tick(self, vm_count: float, t: float) -> DeviceSnapshot:
        """Advance one tick; returns the LED/motor snapshot after it."""
        if not self.power:
            return DeviceSnapshot(t, False, False, False, False, self.selected_option, 0.0)
        self._state, output = detector_tick(self._state, self._detector_cfg, vm_count, t)
        for event in output.events:
            self.events.append(event)
            if event.kind == VIB_START:
                self._vib_anchor = event.t
        period = self.config.blue_flash_period_seconds
        blue = False
        if self._blue_anchor is not None:
            if t - self._blue_anchor >= self._blue_flashes * period:
                self._blue_anchor = None
            else:
                blue = _flash_on(t, self._blue_anchor, period)
        red = (
            self.red_led_enabled
            and output.motor_on
            and _flash_on(t, self._vib_anchor, period)
        )
        return DeviceSnapshot(
            t=t,
            motor=output.motor_on,
            white=True,
            blue=blue,
            red=red,
            option=self.selected_option,
            timer_seconds=timer_seconds(self._state, self._detector_cfg),
        )


def replay_event_log(
    device: Device, records: Iterable[tuple[float, str, float | str]]
) -> list[DeviceSnapshot]:
    """Drive a device from a timed input log.

    Each record is (t, kind, arg) with kind "sample" (arg: a VM count, one
    snapshot row is produced) or "button" (arg: a button name, no row).
    """
    snapshots: list[DeviceSnapshot] = []
    for t, kind, arg in records:
        if kind == "sample":
            snapshots.append(device.tick(float(arg), t))
        elif kind == "button":
            device.press_button(str(arg), t)
        else:
            raise ValueError(f"unknown input-log kind {kind!r}")
    return snapshots
