#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "noiserect/commands.hpp"
#include "noiserect/config.hpp"
#include "noiserect/metrics.hpp"
#include "noiserect/rectifier.hpp"
#include "noiserect/vlt_io.hpp"

namespace py = pybind11;
using namespace noiserect;

namespace {

VideoLatent video_from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() != 4) {
        throw Error::shape("expected a (frames, channels, height, width) array, got ndim " +
                           std::to_string(arr.ndim()));
    }
    const LatentDims dims{static_cast<int>(arr.shape(1)), static_cast<int>(arr.shape(2)),
                          static_cast<int>(arr.shape(3))};
    VideoLatent video(static_cast<int>(arr.shape(0)), dims);
    std::copy(arr.data(), arr.data() + arr.size(), video.data().begin());
    return video;
}

py::array_t<double> video_to_array(const VideoLatent& video) {
    const LatentDims& d = video.dims();
    py::array_t<double> arr({video.frame_count(), d.channels, d.height, d.width});
    std::copy(video.data().begin(), video.data().end(), arr.mutable_data());
    return arr;
}

ImageLatent image_from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() != 3) {
        throw Error::shape("expected a (channels, height, width) array, got ndim " +
                           std::to_string(arr.ndim()));
    }
    const LatentDims dims{static_cast<int>(arr.shape(0)), static_cast<int>(arr.shape(1)),
                          static_cast<int>(arr.shape(2))};
    return ImageLatent(std::vector<double>(arr.data(), arr.data() + arr.size()), dims);
}

py::array_t<double> image_to_array(const ImageLatent& image) {
    const LatentDims& d = image.dims();
    py::array_t<double> arr({d.channels, d.height, d.width});
    std::copy(image.data().begin(), image.data().end(), arr.mutable_data());
    return arr;
}

py::dict metrics_to_dict(const MetricReport& report) {
    py::dict out;
    out["frame_cosine"] = report.frame_cosine;
    out["frame_mse"] = report.frame_mse;
    out["mean_cosine"] = report.mean_cosine;
    out["mean_mse"] = report.mean_mse;
    out["temporal_coherence"] = report.temporal_coherence;
    out["motion_intensity"] = report.motion_intensity;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Noising and rectified denoising over latent video tensors";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            switch (e.category()) {
                case ErrorCategory::io:
                    PyErr_SetString(PyExc_OSError, e.what());
                    return;
                case ErrorCategory::numeric:
                    PyErr_SetString(PyExc_ArithmeticError, e.what());
                    return;
                default:
                    PyErr_SetString(PyExc_ValueError, e.what());
                    return;
            }
        }
    });

    m.def(
        "generate",
        [](const std::string& config_text) {
            KvFile kv = KvFile::parse(config_text, "<config>");
            const RunConfig cfg = parse_run_config(kv);
            kv.finish();
            const GenerateOutcome out = run_from_config(cfg);
            py::dict result;
            result["video"] = video_to_array(out.video);
            result["reference"] = image_to_array(out.reference);
            result["metrics"] = metrics_to_dict(out.metrics);
            py::dict manifest;
            for (const auto& [key, value] : out.manifest.entries()) manifest[key.c_str()] = value;
            result["manifest"] = manifest;
            return result;
        },
        py::arg("config_text"),
        "Run one configured generation in memory. Takes the same key=value\n"
        "text the CLI reads and returns video, reference, metrics and the\n"
        "run manifest.");

    m.def(
        "rectify",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& predicted,
           const py::array_t<double, py::array::c_style | py::array::forcecast>& initial,
           const std::vector<double>& omega) {
            return video_to_array(
                noiserect::rectify(video_from_array(predicted), video_from_array(initial), omega));
        },
        py::arg("predicted"), py::arg("initial"), py::arg("omega"),
        "Blend each frame's prediction gap with the first frame's gap.\n"
        "Weight 0 restores that frame's initial noise exactly; weight 1\n"
        "copies the first frame's gap.");

    m.def("omega_ramp", &omega_ramp, py::arg("frame_count"), py::arg("omega_min"),
          "Per-frame weights falling linearly from 1 to omega_min.");

    m.def(
        "evaluate",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& video,
           const py::array_t<double, py::array::c_style | py::array::forcecast>& reference) {
            return metrics_to_dict(
                compute_metrics(video_from_array(video), image_from_array(reference)));
        },
        py::arg("video"), py::arg("reference"),
        "Fidelity and motion metrics of a video against a reference frame.");

    m.def(
        "read_latent",
        [](const std::string& path) { return video_to_array(read_vlt1(path)); }, py::arg("path"),
        "Load a latent video tensor file as a (frames, channels, height, width) array.");

    m.def(
        "write_latent",
        [](const std::string& path,
           const py::array_t<double, py::array::c_style | py::array::forcecast>& video) {
            write_vlt1(path, video_from_array(video));
        },
        py::arg("path"), py::arg("video"),
        "Write a (frames, channels, height, width) array as a latent tensor file.\n"
        "Values are stored as little-endian float32.");

    m.attr("__version__") = "0.1.0";
}
