import numpy as np
import pytest

from stillwatch import (
    POWER,
    RED_TOGGLE,
    SELECT,
    VIB_END,
    VIB_START,
    DetectorConfig,
    Device,
    DeviceConfig,
    InactivityDetector,
    replay_event_log,
)
from stillwatch import io as formats

TICK = 0.01


def run_quiet(device: Device, n: int, start_tick: int = 0, presses=()):
    """Tick a device over a zero-vm stream with optional (tick, button) presses."""
    pending = sorted(presses)
    snaps = []
    for k in range(start_tick, start_tick + n):
        while pending and pending[0][0] == k:
            device.press_button(pending.pop(0)[1], k * TICK)
        snaps.append(device.tick(0.0, k * TICK))
    return snaps


def rising_edges(flags):
    flags = np.asarray(flags, dtype=bool)
    return int(np.count_nonzero(flags[1:] & ~flags[:-1]) + (1 if flags[0] else 0))


class TestSelect:
    def test_cycles_through_options(self):
        device = Device()
        assert device.selected_option == 0
        for expected in (1, 2, 0, 1):
            device.press_button(SELECT, 0.0)
            assert device.selected_option == expected

    def test_selection_sets_detector_inactivity(self):
        device = Device(DeviceConfig(inactivity_options=(10.0, 30.0, 60.0)))
        assert device.detector_config.inactivity_seconds == 10.0
        device.press_button(SELECT, 0.0)
        assert device.detector_config.inactivity_seconds == 30.0

    def test_selection_keeps_threshold_and_vibration(self):
        device = Device(detector_config=DetectorConfig(count_threshold=200.0))
        before = device.detector_config
        device.press_button(SELECT, 0.0)
        after = device.detector_config
        assert after.count_threshold == before.count_threshold
        assert after.vibration_seconds == before.vibration_seconds
        assert after.tick_seconds == before.tick_seconds

    def test_wrap_around_flashes_once(self):
        # from option 2, selecting wraps to option 0 and flashes once
        device = Device()
        device.press_button(SELECT, 0.0)
        device.press_button(SELECT, 0.0)
        assert device.selected_option == 2
        snaps = run_quiet(device, 200, presses=[(0, SELECT)])
        assert device.selected_option == 0
        assert rising_edges([s.blue for s in snaps]) == 1

    @pytest.mark.parametrize("presses,expected_flashes", [(1, 2), (2, 3), (3, 1)])
    def test_blue_flash_count_signals_selection(self, presses, expected_flashes):
        # setup presses at t=0 flash too; their schedule is long gone by t=2
        device = Device()
        for _ in range(presses - 1):
            device.press_button(SELECT, 0.0)
        snaps = run_quiet(device, 400, presses=[(200, SELECT)])
        blue = [s.blue for s in snaps]
        assert not any(blue[100:200])  # dark between setup and the press
        assert rising_edges(blue[200:]) == expected_flashes

    def test_blue_flash_schedule(self):
        # press at t=2.0 with period 0.25: on during [2+0.25j, 2+0.25j+0.125)
        device = Device()
        snaps = run_quiet(device, 400, presses=[(200, SELECT)])
        n_flashes = 2
        period = device.config.blue_flash_period_seconds
        for snap in snaps:
            dt = snap.t - 2.0
            expected = 0.0 <= dt < n_flashes * period and (dt % period) < period / 2
            assert snap.blue == expected

    def test_select_resets_timer(self):
        # selecting option 1 (30 s) at t=3 delays the alert to t=33
        device = Device()
        snaps = run_quiet(device, 3600, presses=[(300, SELECT)])
        starts = [e.t for e in device.events if e.kind == VIB_START]
        assert starts == [pytest.approx(33.0)]
        assert snaps[300].timer_seconds == 0.0


class TestRedLed:
    def test_red_flashes_only_during_vibration_when_enabled(self):
        device = Device(DeviceConfig(red_led_enabled_default=True))
        snaps = run_quiet(device, 3200)
        period = device.config.blue_flash_period_seconds
        starts = sorted(e.t for e in device.events if e.kind == VIB_START)
        assert starts == [pytest.approx(10.0), pytest.approx(25.0)]
        for snap in snaps:
            if not snap.motor:
                assert not snap.red
            else:
                anchor = max(t for t in starts if t <= snap.t)
                assert snap.red == (((snap.t - anchor) % period) < period / 2)
        # bursts exist in both vibration windows
        red = np.array([s.red for s in snaps])
        t = np.array([s.t for s in snaps])
        assert red[(t >= 10.0) & (t < 15.0)].any()
        assert red[(t >= 25.0) & (t < 30.0)].any()
        assert not red[(t < 10.0) | ((t >= 15.0) & (t < 25.0))].any()

    def test_red_disabled_by_default(self):
        device = Device()
        snaps = run_quiet(device, 1600)
        assert any(s.motor for s in snaps)
        assert not any(s.red for s in snaps)

    def test_toggle_mid_vibration(self):
        device = Device()
        snaps = run_quiet(device, 1600, presses=[(1200, RED_TOGGLE)])
        red = np.array([s.red for s in snaps])
        motor = np.array([s.motor for s in snaps])
        assert not red[:1200].any()
        assert red[1200:1500].any()
        assert not red[~motor].any()


class TestPower:
    def test_white_led_tracks_power(self):
        device = Device()
        snaps = run_quiet(device, 100)
        assert all(s.white for s in snaps)
        device.press_button(POWER, 1.0)
        snaps = run_quiet(device, 100, start_tick=100)
        assert not any(s.white for s in snaps)

    def test_power_off_is_absorbing(self):
        device = Device()
        run_quiet(device, 1100)  # vibrating now
        device.press_button(POWER, 11.0)
        snap = device.tick(0.0, 11.0)
        assert snap == snap.__class__(11.0, False, False, False, False, 0, 0.0)
        events_before = list(device.events)
        # nothing reacts anymore, including further presses
        device.press_button(POWER, 11.01)
        device.press_button(SELECT, 11.02)
        device.press_button(RED_TOGGLE, 11.03)
        snaps = run_quiet(device, 500, start_tick=1101)
        assert device.selected_option == 0
        assert all(not (s.motor or s.white or s.blue or s.red) for s in snaps)
        assert device.events == events_before

    def test_unknown_button_rejected(self):
        with pytest.raises(ValueError):
            Device().press_button("mystery", 0.0)


class TestAgainstBareDetector:
    def test_device_forwards_vm_to_detector(self):
        rng = np.random.default_rng(41)
        vms = rng.uniform(0.0, 300.0, 4000)
        device = Device()
        for k, value in enumerate(vms):
            device.tick(float(value), k * TICK)
        bare = InactivityDetector(device.detector_config)
        events = []
        for k, value in enumerate(vms):
            events.extend(bare.tick(float(value), k * TICK).events)
        assert device.events == events


class TestReplay:
    def test_replay_reproduces_snapshot_log(self):
        rng = np.random.default_rng(42)
        records: list[tuple[float, str, float | str]] = []
        k = 0
        for _ in range(2000):
            if rng.uniform() < 0.002:
                records.append((k * TICK, "button", str(rng.choice([SELECT, RED_TOGGLE]))))
            records.append((k * TICK, "sample", float(rng.uniform(0, 200))))
            k += 1
        first = formats.serialize_snapshots(replay_event_log(Device(), records))
        second = formats.serialize_snapshots(replay_event_log(Device(), records))
        assert first == second

    def test_replay_rejects_unknown_kind(self):
        with pytest.raises(ValueError):
            replay_event_log(Device(), [(0.0, "bogus", 1.0)])
