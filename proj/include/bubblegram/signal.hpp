#pragma once

#include <cstddef>
#include <vector>

namespace bubblegram {

/// Uniformly sampled real time series. Sample i sits at start_time + i/sample_rate.
struct Signal {
    std::vector<double> samples;
    double sample_rate = 0.0; // Hz
    double start_time = 0.0;  // s

    std::size_t size() const { return samples.size(); }

    double time_at(std::size_t i) const {
        return start_time + static_cast<double>(i) / sample_rate;
    }

    /// One past the last sample, in seconds.
    double end_time() const {
        return start_time + static_cast<double>(samples.size()) / sample_rate;
    }

    double duration() const {
        return static_cast<double>(samples.size()) / sample_rate;
    }

    std::vector<double> sample_times() const {
        std::vector<double> t(samples.size());
        for (std::size_t i = 0; i < samples.size(); ++i) t[i] = time_at(i);
        return t;
    }
};

} // namespace bubblegram
