"""Seven-note sonification of per-day excited counts."""
from __future__ import annotations

import wave
from dataclasses import dataclass
from typing import BinaryIO

import numpy as np

from .automaton import run
from .grid import GridSpec

FREQUENCIES = (240, 270, 288, 320, 360, 405, 432)
NOTE_NAMES = ("Do", "Re", "Mi", "Fa", "So", "La", "Ti")

SAMPLE_RATE = 44100
PEAK = 0.8
FULL_SCALE = 32767
FADE_SECONDS = 0.010


@dataclass(frozen=True)
class Note:
    day: int
    excited_count: int

    @property
    def pitch_class(self) -> int:
        return self.excited_count % 7

    @property
    def frequency(self) -> int:
        return FREQUENCIES[self.pitch_class]

    @property
    def name(self) -> str:
        return NOTE_NAMES[self.pitch_class]

    def as_dict(self) -> dict:
        return {
            "day": self.day,
            "count": self.excited_count,
            "pitch_class": self.pitch_class,
            "note": self.name,
            "frequency": self.frequency,
        }


NoteSequence = list[Note]


def note_sequence(spec: GridSpec, first_day: int = 1, last_day: int = 5) -> NoteSequence:
    if first_day < 0 or last_day < first_day:
        raise ValueError("need 0 <= first_day <= last_day")
    states = run(spec, last_day)
    return [Note(s.day, s.count) for s in states[first_day:]]


def envelope(n_samples: int, rate: int = SAMPLE_RATE) -> np.ndarray:
    """Linear fade-in/out gain per sample: min(1, t/F, (N-1-t)/F), F = 10 ms."""
    fade = rate * FADE_SECONDS
    t = np.arange(n_samples, dtype=np.float64)
    return np.minimum(1.0, np.minimum(t / fade, (n_samples - 1 - t) / fade))


def synthesize(seq: NoteSequence, note_duration_s: float, rate: int = SAMPLE_RATE) -> np.ndarray:
    """int16 samples for the whole sequence, notes back to back."""
    if note_duration_s <= 0:
        raise ValueError("note duration must be positive")
    n = int(round(note_duration_s * rate))
    if not seq:
        return np.zeros(0, dtype=np.int16)
    t = np.arange(n, dtype=np.float64)
    gain = envelope(n, rate) * PEAK * FULL_SCALE
    chunks = [np.rint(gain * np.sin(2 * np.pi * note.frequency * t / rate)) for note in seq]
    return np.concatenate(chunks).astype(np.int16)


def render_wav(seq: NoteSequence, note_duration_s: float, destination: BinaryIO) -> int:
    """Write mono 16-bit 44.1 kHz PCM to *destination*; returns bytes written."""
    samples = synthesize(seq, note_duration_s)
    data = samples.astype("<i2").tobytes()
    with wave.open(destination, "wb") as w:
        w.setnchannels(1)
        w.setsampwidth(2)
        w.setframerate(SAMPLE_RATE)
        w.setnframes(len(samples))
        w.writeframesraw(data)
    return 44 + len(data)
