// Core value types shared across the pipeline.
//
// Coordinate convention (vehicle frame): y forward, x lateral with left
// positive, z up, ground near z = 0. All distances in meters, timestamps in
// nanoseconds.

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace windrow {

struct Point3 {
    float x = 0.0f;  // lateral, left positive
    float y = 0.0f;  // forward
    float z = 0.0f;  // up

    friend bool operator==(const Point3&, const Point3&) = default;
};

inline bool is_finite(const Point3& p) {
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

// One sensor, one instant. Immutable by convention after construction;
// safe to share across threads.
struct PointCloudFrame {
    std::vector<Point3> points;
    std::int64_t timestamp_ns = 0;
    std::string sensor_id;

    [[nodiscard]] std::size_t size() const { return points.size(); }
    [[nodiscard]] bool empty() const { return points.empty(); }
};

struct SequenceEntry {
    std::int64_t t_ns = 0;
    std::string file;    // frame path, resolved relative to the manifest
    std::string sensor;
};

// Ordered recording index. Timestamps are strictly monotonic; the nominal
// rate is metadata (replay schedules off the timestamps themselves) and may
// be absent for bare single-entry manifests.
struct FrameSequence {
    std::vector<SequenceEntry> entries;
    std::optional<double> nominal_rate_hz;
    std::string sensor_id;

    void validate() const {
        for (std::size_t i = 1; i < entries.size(); ++i) {
            if (entries[i].t_ns <= entries[i - 1].t_ns) {
                throw std::runtime_error(
                    "sequence timestamps not strictly increasing at entry " +
                    std::to_string(i));
            }
        }
        if (nominal_rate_hz && *nominal_rate_hz <= 0.0) {
            throw std::invalid_argument("nominal_rate_hz must be > 0");
        }
    }
};

struct PreprocessConfig {
    double range_max = 20.0;           // keep points within this Euclidean range
    int outlier_neighbors = 8;         // k for the statistical outlier filter
    double outlier_std_ratio = 1.0;    // threshold = mean + ratio * std
    double min_height_prefilter = 0.10;  // drop points below this z; 0 disables

    void validate() const {
        if (!(range_max > 0.0)) throw std::invalid_argument("range_max must be > 0");
        if (outlier_neighbors < 1) throw std::invalid_argument("outlier_neighbors must be >= 1");
        if (!(outlier_std_ratio > 0.0)) throw std::invalid_argument("outlier_std_ratio must be > 0");
        if (!(min_height_prefilter >= 0.0)) throw std::invalid_argument("min_height_prefilter must be >= 0");
    }
};

// Sanity floor applied everywhere points enter the pipeline: anything this
// far below the nominal ground plane is a reflection or calibration artifact.
inline constexpr double kGroundSanityFloorZ = -0.5;

}  // namespace windrow
