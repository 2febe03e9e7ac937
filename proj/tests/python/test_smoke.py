import numpy as np
import pytest

import noiserect

CONFIG = """
[run]
seed = 7
[schedule]
T = 100
[sampler]
K = 10
[video]
L = 4
height = 8
width = 8
[denoiser]
bias_norm = 0.1
[reference]
kind = sample
seed = 101
"""


def test_generate_shapes_and_determinism():
    a = noiserect.generate(CONFIG)
    b = noiserect.generate(CONFIG)
    assert a["video"].shape == (4, 1, 8, 8)
    assert a["reference"].shape == (1, 8, 8)
    np.testing.assert_array_equal(a["video"], b["video"])
    assert a["manifest"] == b["manifest"]
    assert a["manifest"]["status"] == "ok"
    assert a["manifest"]["video_hash"].startswith("fnv1a64:")
    assert np.isfinite(a["metrics"]["mean_cosine"])


def test_generate_rejects_bad_window():
    with pytest.raises(ValueError, match="tau"):
        noiserect.generate(CONFIG + "[rectifier]\ntau_start = 0.8\ntau_end = 0.2\n")


def test_generate_rejects_unknown_key():
    with pytest.raises(ValueError, match="seeed"):
        noiserect.generate(CONFIG + "[run]\nseeed = 3\n")


def test_rectify_restores_frame0():
    rng = np.random.default_rng(0)
    predicted = rng.standard_normal((5, 1, 2, 3))
    initial = rng.standard_normal((5, 1, 2, 3))
    omega = rng.uniform(size=5)
    out = noiserect.rectify(predicted, initial, omega)
    assert out.shape == predicted.shape
    np.testing.assert_allclose(out[0], initial[0], atol=1e-12)
    # weight 0 restores every frame's own noise
    out0 = noiserect.rectify(predicted, initial, np.zeros(5))
    np.testing.assert_allclose(out0, initial, atol=1e-12)


def test_omega_ramp_values():
    assert noiserect.omega_ramp(5, 0.5) == pytest.approx([1.0, 0.875, 0.75, 0.625, 0.5])
    with pytest.raises(ValueError):
        noiserect.omega_ramp(3, 1.5)


def test_evaluate_static_video():
    ref = np.arange(12, dtype=float).reshape(1, 3, 4) + 1.0
    video = np.stack([ref, ref])
    report = noiserect.evaluate(video, ref)
    assert report["mean_cosine"] == pytest.approx(1.0)
    assert report["mean_mse"] == pytest.approx(0.0)
    assert report["motion_intensity"] == pytest.approx(0.0)
    assert len(report["frame_cosine"]) == 2


def test_latent_file_round_trip(tmp_path):
    video = np.arange(24, dtype=np.float32).astype(float).reshape(2, 1, 3, 4)
    path = tmp_path / "clip.vlt1"
    noiserect.write_latent(str(path), video)
    back = noiserect.read_latent(str(path))
    np.testing.assert_array_equal(back, video)
    assert path.read_bytes().startswith(b"VLT1 2 12 1 3 4\n")


def test_read_latent_missing_file(tmp_path):
    with pytest.raises(OSError):
        noiserect.read_latent(str(tmp_path / "absent.vlt1"))
